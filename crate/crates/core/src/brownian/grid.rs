use rand::Rng;
use rand_distr::StandardNormal;

use crate::combinat::AlphabetDistribution;

/// `M × n` Brownian increments on the grid `t = c/n`, rows in sorted
/// (block) order.
#[derive(Debug, Clone)]
pub struct IncrementGrid {
    m: usize,
    n: usize,
    /// Row-major, `increments[r * n + c]`.
    increments: Vec<f64>,
    dist: AlphabetDistribution,
}

impl IncrementGrid {
    /// Wraps explicit increments (row-major, rows in sorted order).
    pub fn from_increments(dist: &AlphabetDistribution, n: usize, increments: Vec<f64>) -> Self {
        assert_eq!(increments.len(), dist.m() * n, "grid must be M × n");
        Self {
            m: dist.m(),
            n,
            increments,
            dist: dist.clone(),
        }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dist(&self) -> &AlphabetDistribution {
        &self.dist
    }

    pub fn increment(&self, row: usize, col: usize) -> f64 {
        self.increments[row * self.n + col]
    }

    pub fn row(&self, row: usize) -> &[f64] {
        &self.increments[row * self.n..(row + 1) * self.n]
    }

    /// `B̂^{τ(row+1)}(1)`.
    pub fn endpoint(&self, row: usize) -> f64 {
        self.row(row).iter().sum()
    }

    /// Partial sums `B(0), B(1/n), …, B(1)` of one row.
    pub fn path(&self, row: usize) -> Vec<f64> {
        std::iter::once(0.0)
            .chain(self.row(row).iter().scan(0.0, |acc, &x| {
                *acc += x;
                Some(*acc)
            }))
            .collect()
    }
}

/// Each column is `ΔB_r = (√q_r g_r − q_r Σ_l √q_l g_l)/√n` for iid
/// standard normals `g`, which has covariance `(diag(q) − q qᵀ)/n`.
pub fn sample_increment_grid<R: Rng + ?Sized>(dist: &AlphabetDistribution, n: usize, rng: &mut R) -> IncrementGrid {
    let q = dist.sorted_probs();
    let w: Vec<f64> = q.iter().map(|p| p.sqrt()).collect();
    let m = q.len();
    let scale = 1.0 / (n as f64).sqrt();
    let mut increments = vec![0.0; m * n];
    let mut g = vec![0.0; m];
    for c in 0..n {
        for gi in g.iter_mut() {
            *gi = rng.sample(StandardNormal);
        }
        let s: f64 = w.iter().zip(&g).map(|(a, b)| a * b).sum();
        for r in 0..m {
            increments[r * n + c] = (w[r] * g[r] - q[r] * s) * scale;
        }
    }
    IncrementGrid {
        m,
        n,
        increments,
        dist: dist.clone(),
    }
}
