//! Eigenvalue densities of the block GUE and of its traceless restriction.

use super::BlockSpec;
use crate::combinat::AlphabetDistribution;
use crate::exactdist::ln_factorial;

/// Points with `|Σ √q_j x_j|` above this are off the constraint hyperplane.
pub const HYPERPLANE_TOLERANCE: f64 = 1e-9;

/// `ln ∏_k ∏_{j<d_k} j!`.
fn ln_superfactorials(dims: &[usize]) -> f64 {
    dims.iter()
        .map(|&d| (0..d as u64).map(ln_factorial).sum::<f64>())
        .sum()
}

/// `∏_k Δ_k(x)²` if `x` is non-increasing inside every block, else `None`.
fn ordered_vandermonde_sq(x: &[f64], blocks: &BlockSpec) -> Option<f64> {
    let mut v = 1.0;
    for (&s, &d) in blocks.offsets().iter().zip(blocks.dims()) {
        let block = &x[s..s + d];
        if block.windows(2).any(|w| w[0] < w[1]) {
            return None;
        }
        for i in 0..d {
            for j in i + 1..d {
                v *= (block[i] - block[j]).powi(2);
            }
        }
    }
    Some(v)
}

/// Density of the within-block ordered spectrum of the direct-sum GUE with
/// block sizes `blocks`, with respect to Lebesgue measure on `ℝ^M`.
pub fn block_gue_density(x: &[f64], blocks: &BlockSpec) -> f64 {
    if x.len() != blocks.total() {
        return 0.0;
    }
    let Some(v) = ordered_vandermonde_sq(x, blocks) else {
        return 0.0;
    };
    let m = x.len() as f64;
    let ln_c = -0.5 * m * (2.0 * std::f64::consts::PI).ln() - ln_superfactorials(blocks.dims());
    let sq: f64 = x.iter().map(|t| t * t).sum();
    v * (ln_c - 0.5 * sq).exp()
}

/// Density of the ordered traceless spectrum `ξ₀` with respect to surface
/// measure on the hyperplane `Σ √q_j x_j = 0`:
/// `c_M ∏_k Δ_k(x)² e^{−|x|²/2}`, `c_M = (2π)^{−(M−1)/2} / ∏_k ∏_{j<d_k} j!`.
/// Points off the ordered hyperplane region get density 0.
pub fn eigen_shape_density(x: &[f64], dist: &AlphabetDistribution) -> f64 {
    if x.len() != dist.m() {
        return 0.0;
    }
    let constraint: f64 = dist.sorted_probs().iter().zip(x).map(|(p, t)| p.sqrt() * t).sum();
    if constraint.abs() > HYPERPLANE_TOLERANCE {
        return 0.0;
    }
    let blocks = super::sample::blocks_of(dist);
    let Some(v) = ordered_vandermonde_sq(x, &blocks) else {
        return 0.0;
    };
    let m = x.len() as f64;
    let ln_c = -0.5 * (m - 1.0) * (2.0 * std::f64::consts::PI).ln() - ln_superfactorials(blocks.dims());
    let sq: f64 = x.iter().map(|t| t * t).sum();
    v * (ln_c - 0.5 * sq).exp()
}

/// Orthonormal basis of the hyperplane orthogonal to the unit vector `w`.
fn hyperplane_basis(w: &[f64]) -> Vec<Vec<f64>> {
    let m = w.len();
    let mut basis: Vec<Vec<f64>> = Vec::with_capacity(m.saturating_sub(1));
    for e in 0..m {
        let mut v: Vec<f64> = (0..m).map(|i| f64::from(u8::from(i == e))).collect();
        for u in std::iter::once(w).chain(basis.iter().map(Vec::as_slice)) {
            let dot: f64 = v.iter().zip(u).map(|(a, b)| a * b).sum();
            for (vi, ui) in v.iter_mut().zip(u) {
                *vi -= dot * ui;
            }
        }
        let norm = v.iter().map(|t| t * t).sum::<f64>().sqrt();
        if norm > 1e-6 {
            basis.push(v.into_iter().map(|t| t / norm).collect());
        }
        if basis.len() + 1 == m {
            break;
        }
    }
    basis
}

/// Trapezoid-rule integral of [`eigen_shape_density`] over the hyperplane,
/// on the cube `[−half_width, half_width]^{M−1}` of hyperplane coordinates
/// with `points` nodes per axis. Intended for `M ≤ 3`.
pub fn hyperplane_integral(dist: &AlphabetDistribution, half_width: f64, points: usize) -> f64 {
    let m = dist.m();
    if m == 1 {
        return eigen_shape_density(&[0.0], dist);
    }
    let w: Vec<f64> = dist.sorted_probs().iter().map(|p| p.sqrt()).collect();
    let basis = hyperplane_basis(&w);
    let dim = basis.len();
    let h = 2.0 * half_width / (points - 1) as f64;
    let mut idx = vec![0usize; dim];
    let mut total = 0.0;
    loop {
        let mut x = vec![0.0; m];
        let mut weight = 1.0;
        for (a, &i) in idx.iter().enumerate() {
            let s = -half_width + i as f64 * h;
            if i == 0 || i == points - 1 {
                weight *= 0.5;
            }
            for (xj, bj) in x.iter_mut().zip(&basis[a]) {
                *xj += s * bj;
            }
        }
        // project out rounding drift off the hyperplane
        let drift: f64 = w.iter().zip(&x).map(|(a, b)| a * b).sum();
        for (xj, wj) in x.iter_mut().zip(&w) {
            *xj -= drift * wj;
        }
        total += weight * eigen_shape_density(&x, dist);

        let mut a = 0;
        while a < dim {
            idx[a] += 1;
            if idx[a] < points {
                break;
            }
            idx[a] = 0;
            a += 1;
        }
        if a == dim {
            break;
        }
    }
    total * h.powi(dim as i32)
}
