//! `L̂^l_M = Σ_{j≤m_k} B̂^{τ(j)}(1) + sup_J Σ …`, the sup taken over grid
//! subdivisions of the block rows.
//!
//! On the grid, `l' = l − m_k` paths move through the `d_k` rows of block
//! `k`. At each column every path sits in exactly one row and collects that
//! row's increment; rows are non-decreasing in time along a path and
//! strictly increasing across paths at every column. A path may spend zero
//! columns in a row, so start and end rows are free.

use std::collections::HashMap;
use std::fmt::Write as _;

use rand::Rng;

use super::{sample_increment_grid, IncrementGrid};
use crate::combinat::AlphabetDistribution;
use crate::{Error, Result};

/// Largest number of subdivisions the brute-force oracle enumerates.
pub const BRUTE_FORCE_LIMIT: u128 = 1_000_000;

/// Largest number of DP states `C(d_k, l')`.
const DP_STATE_LIMIT: u128 = 1_000_000;

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// Block `k`, offset `m_k`, size `d_k` and path count `l' = l − m_k` for
/// 1-based `l`.
fn block_layout(dist: &AlphabetDistribution, l: usize) -> Result<(usize, usize, usize)> {
    let m = dist.m();
    if l == 0 || l > m {
        return Err(Error::Config(format!("l = {l} outside 1..={m}")));
    }
    let k = dist.block_of(l - 1);
    let offset = dist.offsets()[k];
    Ok((offset, dist.mults()[k], l - offset))
}

fn full_rows(grid: &IncrementGrid, offset: usize) -> f64 {
    (0..offset).map(|r| grid.endpoint(r)).sum()
}

/// Strictly increasing `paths`-tuples from `0..rows`, in lexicographic order.
fn strict_tuples(rows: usize, paths: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, rows: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for r in start..=rows - left {
            cur.push(r);
            go(r + 1, rows, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, rows, paths, &mut Vec::new(), &mut out);
    out
}

/// Supremum over `paths` non-crossing paths in `rows` block rows starting
/// at grid row `offset`, by a column sweep over states (row of each path).
fn block_sup_dp(grid: &IncrementGrid, offset: usize, rows: usize, paths: usize) -> Result<f64> {
    let count = binomial(rows as u128, paths as u128);
    if count > DP_STATE_LIMIT {
        return Err(Error::InstanceTooLarge {
            what: "lhat DP states",
            size: count,
            limit: DP_STATE_LIMIT,
        });
    }
    let states = strict_tuples(rows, paths);
    let index: HashMap<&[usize], usize> = states.iter().enumerate().map(|(i, s)| (s.as_slice(), i)).collect();
    // lower[s][i]: state i with coordinate s lowered by one, if still strict
    let lower: Vec<Vec<Option<usize>>> = (0..paths)
        .map(|s| {
            states
                .iter()
                .map(|b| {
                    if b[s] == 0 || (s > 0 && b[s] - 1 == b[s - 1]) {
                        return None;
                    }
                    let mut a = b.clone();
                    a[s] -= 1;
                    Some(index[a.as_slice()])
                })
                .collect()
        })
        .collect();

    let mut value = vec![0.0f64; states.len()];
    for c in 0..grid.n() {
        // componentwise-dominated max; lexicographic order visits b − e_s
        // before b
        for s in (0..paths).rev() {
            for i in 0..states.len() {
                if let Some(j) = lower[s][i] {
                    if value[j] > value[i] {
                        value[i] = value[j];
                    }
                }
            }
        }
        for (v, b) in value.iter_mut().zip(&states) {
            *v += b.iter().map(|&r| grid.increment(offset + r, c)).sum::<f64>();
        }
    }
    Ok(value.into_iter().fold(f64::NEG_INFINITY, f64::max))
}

/// `L̂^l_M` on a grid (1-based `l`), by dynamic programming.
pub fn lhat(grid: &IncrementGrid, l: usize) -> Result<f64> {
    let (offset, rows, paths) = block_layout(grid.dist(), l)?;
    Ok(full_rows(grid, offset) + block_sup_dp(grid, offset, rows, paths)?)
}

/// A grid subdivision for `paths` paths through `rows` rows: path `i`
/// (0-based) sits in block row `i + j` on columns `[t[i][j−1], t[i][j])`,
/// with `t[i][−1] = 0` and `t[i][rows − paths] = n`. Each `t[i]` is
/// non-decreasing and `t[i+1][j] ≤ t[i][j]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdivisionIndex {
    pub rows: usize,
    pub n: usize,
    pub t: Vec<Vec<usize>>,
}

impl SubdivisionIndex {
    pub fn is_valid(&self) -> bool {
        let paths = self.t.len();
        let switches = self.rows.saturating_sub(paths);
        self.t.iter().all(|ti| {
            ti.len() == switches && ti.windows(2).all(|w| w[0] <= w[1]) && ti.iter().all(|&x| x <= self.n)
        }) && self.t.windows(2).all(|w| w[1].iter().zip(&w[0]).all(|(a, b)| a <= b))
    }

    /// Sum of increments collected, given row partial sums `prefix[r]`.
    fn value(&self, prefix: &[Vec<f64>]) -> f64 {
        let mut total = 0.0;
        for (i, ti) in self.t.iter().enumerate() {
            let mut start = 0;
            for (j, &end) in ti.iter().chain(std::iter::once(&self.n)).enumerate() {
                let p = &prefix[i + j];
                total += p[end] - p[start];
                start = end;
            }
        }
        total
    }
}

/// Enumerates every [`SubdivisionIndex`] (oracle for [`lhat`]).
fn for_each_subdivision(rows: usize, paths: usize, n: usize, mut f: impl FnMut(&SubdivisionIndex)) {
    let switches = rows - paths;
    let mut sub = SubdivisionIndex {
        rows,
        n,
        t: vec![vec![0; switches]; paths],
    };
    fn fill(sub: &mut SubdivisionIndex, i: usize, j: usize, switches: usize, f: &mut dyn FnMut(&SubdivisionIndex)) {
        if i == sub.t.len() {
            f(sub);
            return;
        }
        if j == switches {
            fill(sub, i + 1, 0, switches, f);
            return;
        }
        let lo = if j == 0 { 0 } else { sub.t[i][j - 1] };
        let hi = if i == 0 { sub.n } else { sub.t[i - 1][j] };
        for x in lo..=hi {
            sub.t[i][j] = x;
            fill(sub, i, j + 1, switches, f);
        }
    }
    fill(&mut sub, 0, 0, switches, &mut f);
}

/// `L̂^l_M` by exhaustive enumeration of grid subdivisions.
pub fn lhat_brute(grid: &IncrementGrid, l: usize) -> Result<f64> {
    let (offset, rows, paths) = block_layout(grid.dist(), l)?;
    let switches = (rows - paths) as u128;
    let per_path = binomial(grid.n() as u128 + switches, switches);
    let bound = (0..paths).fold(1u128, |acc, _| acc.saturating_mul(per_path));
    if bound > BRUTE_FORCE_LIMIT {
        return Err(Error::BruteForceTooLarge {
            count: bound,
            limit: BRUTE_FORCE_LIMIT,
        });
    }
    let prefix: Vec<Vec<f64>> = (0..rows).map(|r| grid.path(offset + r)).collect();
    let mut best = f64::NEG_INFINITY;
    for_each_subdivision(rows, paths, grid.n(), |s| best = best.max(s.value(&prefix)));
    Ok(full_rows(grid, offset) + best)
}

/// `(L̂¹, L̂² − L̂¹, …, L̂^M − L̂^{M−1})` on one freshly sampled grid.
pub fn lhat_shape_sample<R: Rng + ?Sized>(dist: &AlphabetDistribution, n: usize, rng: &mut R) -> Result<Vec<f64>> {
    let grid = sample_increment_grid(dist, n, rng);
    let mut prev = 0.0;
    (1..=dist.m())
        .map(|l| {
            let v = lhat(&grid, l)?;
            let diff = v - prev;
            prev = v;
            Ok(diff)
        })
        .collect()
}

/// CSV `sample_id,coord_1..coord_M`.
pub fn lhat_samples_to_csv(samples: &[Vec<f64>]) -> String {
    let m = samples.first().map_or(0, Vec::len);
    let mut out = String::from("sample_id");
    for i in 1..=m {
        let _ = write!(out, ",coord_{i}");
    }
    out.push('\n');
    for (id, s) in samples.iter().enumerate() {
        let _ = write!(out, "{id}");
        for x in s {
            let _ = write!(out, ",{x}");
        }
        out.push('\n');
    }
    out
}
