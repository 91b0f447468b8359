//! Samplers for GUE, block GUE, the generalized traceless transform and the
//! tridiagonal model.

use num::complex::Complex64;
use rand::Rng;
use rand_distr::{Distribution, Gamma, StandardNormal};

use super::{eigvals, BlockSpec, HermitianMatrix, Spectrum, TridiagonalModel};
use crate::combinat::AlphabetDistribution;
use crate::{Error, Result};

/// Chi variates with at most this many degrees of freedom are drawn as a
/// root sum of squares; larger ones go through a gamma sampler.
const CHI_DIRECT_LIMIT: usize = 32;

fn normal<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.sample(StandardNormal)
}

fn fill_gue<R: Rng + ?Sized>(m: &mut HermitianMatrix, start: usize, len: usize, rng: &mut R) {
    let half = std::f64::consts::FRAC_1_SQRT_2;
    for i in 0..len {
        m.set(start + i, start + i, Complex64::new(normal(rng), 0.0));
        for j in 0..i {
            let z = Complex64::new(half * normal(rng), half * normal(rng));
            m.set(start + i, start + j, z);
        }
    }
}

/// `n×n` GUE: diagonal `N(0,1)`, off-diagonal real and imaginary parts
/// `N(0,1/2)`.
pub fn sample_gue<R: Rng + ?Sized>(n: usize, rng: &mut R) -> HermitianMatrix {
    let mut m = HermitianMatrix::zeros(n);
    fill_gue(&mut m, 0, n, rng);
    m
}

/// Block-diagonal direct sum of independent GUE blocks.
pub fn sample_block_gue<R: Rng + ?Sized>(blocks: &BlockSpec, rng: &mut R) -> HermitianMatrix {
    let mut m = HermitianMatrix::zeros(blocks.total());
    for (&start, &d) in blocks.offsets().iter().zip(blocks.dims()) {
        fill_gue(&mut m, start, d, rng);
    }
    m
}

/// Block layout of the distinct probabilities of `dist`.
pub(crate) fn blocks_of(dist: &AlphabetDistribution) -> BlockSpec {
    BlockSpec::new(dist.mults().to_vec()).expect("multiplicities are positive")
}

fn sqrt_sorted(dist: &AlphabetDistribution) -> Vec<f64> {
    dist.sorted_probs().iter().map(|p| p.sqrt()).collect()
}

/// `X⁰_ii = X_ii − √q_i Σ_l √q_l X_ll`, off-diagonal untouched, where `q`
/// is the sorted probability vector. `x` must be block diagonal with block
/// sizes equal to the multiplicities of `dist`.
pub fn traceless_transform(x: &HermitianMatrix, dist: &AlphabetDistribution) -> Result<HermitianMatrix> {
    if x.dim() != dist.m() {
        return Err(Error::BlockMismatch(format!(
            "matrix of size {} for an alphabet of size {}",
            x.dim(),
            dist.m()
        )));
    }
    let blocks = blocks_of(dist);
    let leak = x.off_block_max(&blocks);
    if leak != 0.0 {
        return Err(Error::BlockMismatch(format!(
            "entry of modulus {leak} outside blocks {:?}",
            blocks.dims()
        )));
    }
    let w = sqrt_sorted(dist);
    let diag = x.diagonal();
    let s: f64 = w.iter().zip(&diag).map(|(a, b)| a * b).sum();
    let mut out = x.clone();
    for i in 0..x.dim() {
        out.set(i, i, Complex64::new(diag[i] - w[i] * s, 0.0));
    }
    Ok(out)
}

/// `Z_i = √q_i g` with one shared standard normal `g`, coordinates in
/// sorted (block) order.
pub fn sample_degenerate_gaussian<R: Rng + ?Sized>(dist: &AlphabetDistribution, rng: &mut R) -> Vec<f64> {
    let g = normal(rng);
    sqrt_sorted(dist).into_iter().map(|w| w * g).collect()
}

/// Covariance `Σ⁰ = I − √q √qᵀ` of the traceless diagonal.
pub fn traceless_covariance(dist: &AlphabetDistribution) -> Vec<Vec<f64>> {
    let w = sqrt_sorted(dist);
    let m = w.len();
    (0..m)
        .map(|i| (0..m).map(|j| f64::from(u8::from(i == j)) - w[i] * w[j]).collect())
        .collect()
}

/// Chi variate with `dof` degrees of freedom (`0` gives `0`).
pub fn sample_chi<R: Rng + ?Sized>(dof: usize, rng: &mut R) -> f64 {
    if dof == 0 {
        0.0
    } else if dof <= CHI_DIRECT_LIMIT {
        (0..dof).map(|_| normal(rng).powi(2)).sum::<f64>().sqrt()
    } else {
        let gamma = Gamma::new(dof as f64 / 2.0, 2.0).expect("positive shape");
        gamma.sample(rng).sqrt()
    }
}

/// Tridiagonal model with the same spectral law as `m×m` GUE: diagonal
/// `N(0,1)` and `offdiag[k] = χ_{2(m−1−k)}/√2`, so the band carries
/// `m−1, …, 1` complex degrees of freedom from top to bottom.
pub fn sample_tridiagonal_gue<R: Rng + ?Sized>(m: usize, rng: &mut R) -> TridiagonalModel {
    let diag = (0..m).map(|_| normal(rng)).collect();
    let offdiag = (0..m.saturating_sub(1))
        .map(|k| sample_chi(2 * (m - 1 - k), rng) * std::f64::consts::FRAC_1_SQRT_2)
        .collect();
    TridiagonalModel { diag, offdiag }
}

/// Eigenvalues of each diagonal block, non-increasing within blocks.
pub fn block_eigenvalues(x: &HermitianMatrix, blocks: &BlockSpec) -> Result<Spectrum> {
    if blocks.total() != x.dim() {
        return Err(Error::BlockMismatch(format!(
            "blocks {:?} for a matrix of size {}",
            blocks.dims(),
            x.dim()
        )));
    }
    let mut values = Vec::with_capacity(x.dim());
    for (&start, &d) in blocks.offsets().iter().zip(blocks.dims()) {
        if d == 1 {
            values.push(x.get(start, start).re);
        } else {
            values.extend(eigvals(&x.principal(start, d))?.values);
        }
    }
    Spectrum::ordered(values, blocks.clone())
}

/// One draw of the block-GUE spectrum `ξ` together with its traceless
/// shift `ξ₀`.
#[derive(Debug, Clone)]
pub struct BlockSpectrumSample {
    pub xi: Spectrum,
    /// `ξ₀ⁱ = ξⁱ − √q_i Σ_l √q_l X_ll`.
    pub xi0: Spectrum,
    /// `Σ_l √q_l X_ll`.
    pub diag_sum: f64,
    /// `ξ₀` recomputed as `ξⁱ − √q_i Σ_l √q_l ξˡ`.
    pub xi0_from_eigenvalues: Vec<f64>,
}

impl BlockSpectrumSample {
    /// Largest coordinate gap between the two shift formulas.
    pub fn shift_discrepancy(&self) -> f64 {
        self.xi0
            .values
            .iter()
            .zip(&self.xi0_from_eigenvalues)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// `|Σ √q_l ξ₀ˡ|`, which vanishes identically.
    pub fn weighted_sum(&self, dist: &AlphabetDistribution) -> f64 {
        sqrt_sorted(dist)
            .iter()
            .zip(&self.xi0.values)
            .map(|(w, x)| w * x)
            .sum::<f64>()
            .abs()
    }
}

/// Samples `X` from the block GUE with block sizes the multiplicities of
/// `dist` and returns its ordered spectrum with both forms of the shift.
pub fn ordered_block_spectrum<R: Rng + ?Sized>(
    dist: &AlphabetDistribution,
    rng: &mut R,
) -> Result<BlockSpectrumSample> {
    let blocks = blocks_of(dist);
    let x = sample_block_gue(&blocks, rng);
    let xi = block_eigenvalues(&x, &blocks)?;
    let w = sqrt_sorted(dist);
    let diag_sum: f64 = w.iter().zip(x.diagonal()).map(|(a, b)| a * b).sum();
    let eig_sum: f64 = w.iter().zip(&xi.values).map(|(a, b)| a * b).sum();
    let shifted: Vec<f64> = xi.values.iter().zip(&w).map(|(v, wi)| v - wi * diag_sum).collect();
    let xi0_from_eigenvalues = xi.values.iter().zip(&w).map(|(v, wi)| v - wi * eig_sum).collect();
    // equal weights inside a block, so the shift keeps the ordering
    let xi0 = Spectrum {
        values: shifted,
        blocks: blocks.clone(),
        ordered_within_blocks: true,
    };
    Ok(BlockSpectrumSample {
        xi,
        xi0,
        diag_sum,
        xi0_from_eigenvalues,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rng::seeded;

    fn dist(p: &[f64]) -> AlphabetDistribution {
        AlphabetDistribution::new(p).unwrap()
    }

    #[test]
    fn gue_moments() {
        let mut rng = seeded(1);
        let n = 100_000;
        let (mut s1, mut s2, mut off) = (0.0, 0.0, 0.0);
        for _ in 0..n {
            let g = sample_gue(2, &mut rng);
            let d = g.get(0, 0).re;
            s1 += d;
            s2 += d * d;
            off += g.get(0, 1).norm_sqr();
        }
        let nf = n as f64;
        assert!((s1 / nf).abs() < 0.02);
        assert!((s2 / nf - 1.0).abs() < 0.02);
        assert!((off / nf - 1.0).abs() < 0.02);
    }

    #[test]
    fn gue_is_seeded() {
        assert_eq!(sample_gue(5, &mut seeded(3)), sample_gue(5, &mut seeded(3)));
    }

    #[test]
    fn block_gue_structure() {
        let mut rng = seeded(2);
        let blocks = BlockSpec::new(vec![2, 1]).unwrap();
        for _ in 0..100 {
            let x = sample_block_gue(&blocks, &mut rng);
            assert_eq!(x.get(0, 2), Complex64::new(0.0, 0.0));
            assert_eq!(x.get(1, 2), Complex64::new(0.0, 0.0));
            assert_eq!(x.off_block_max(&blocks), 0.0);
        }
        let diag = sample_block_gue(&BlockSpec::new(vec![1, 1, 1]).unwrap(), &mut rng);
        for i in 0..3 {
            for j in 0..3 {
                if i != j {
                    assert_eq!(diag.get(i, j).norm(), 0.0);
                }
            }
        }
    }

    #[test]
    fn traceless_transform_cases() {
        let mut rng = seeded(4);
        let one = dist(&[1.0]);
        let x = sample_gue(1, &mut rng);
        assert!(traceless_transform(&x, &one).unwrap().max_abs() < 1e-15);

        let u = AlphabetDistribution::uniform(4);
        let x = sample_gue(4, &mut rng);
        let t = traceless_transform(&x, &u).unwrap();
        let tr = x.trace();
        for i in 0..4 {
            assert!((t.get(i, i).re - (x.get(i, i).re - tr / 4.0)).abs() < 1e-12);
            for j in 0..4 {
                if i != j {
                    assert_eq!(t.get(i, j), x.get(i, j));
                }
            }
        }

        let d = dist(&[0.2, 0.5, 0.3]);
        let x = sample_block_gue(&blocks_of(&d), &mut rng);
        let t = traceless_transform(&x, &d).unwrap();
        let w = sqrt_sorted(&d);
        let s: f64 = (0..3).map(|i| w[i] * t.get(i, i).re).sum();
        assert!(s.abs() < 1e-12);

        let dense = sample_gue(3, &mut rng);
        assert!(matches!(traceless_transform(&dense, &d), Err(Error::BlockMismatch(_))));
    }

    #[test]
    fn degenerate_gaussian_is_rank_one() {
        let d = dist(&[0.5, 0.3, 0.2]);
        let mut rng = seeded(5);
        let q = d.sorted_probs();
        let n = 100_000;
        let mut c12 = 0.0;
        let mut sq1 = 0.0;
        for _ in 0..n {
            let z = sample_degenerate_gaussian(&d, &mut rng);
            let g = z[0] / q[0].sqrt();
            for i in 1..3 {
                assert!((z[i] / q[i].sqrt() - g).abs() < 1e-12);
            }
            c12 += z[0] * z[1];
            sq1 += (z[0] * z[1]).powi(2);
        }
        let nf = n as f64;
        let mean = c12 / nf;
        let sigma = ((sq1 / nf - mean * mean) / nf).sqrt();
        assert!((mean - (q[0] * q[1]).sqrt()).abs() < 3.0 * sigma);
    }

    #[test]
    fn covariance_is_projection() {
        for p in [vec![1.0], vec![0.5, 0.5], vec![0.5, 0.3, 0.2], vec![0.1, 0.2, 0.3, 0.4]] {
            let s = traceless_covariance(&dist(&p));
            let m = s.len();
            for i in 0..m {
                for j in 0..m {
                    let ss: f64 = (0..m).map(|k| s[i][k] * s[k][j]).sum();
                    assert!((ss - s[i][j]).abs() < 1e-12);
                }
            }
        }
    }

    #[test]
    fn chi_moments() {
        let mut rng = seeded(6);
        let n = 50_000;
        for dof in [1usize, 3, 40] {
            let mean: f64 = (0..n).map(|_| sample_chi(dof, &mut rng).powi(2)).sum::<f64>() / n as f64;
            // χ² has variance 2k
            let tol = 5.0 * (2.0 * dof as f64 / n as f64).sqrt();
            assert!((mean - dof as f64).abs() < tol, "dof {dof}: {mean}");
        }
        assert_eq!(sample_chi(0, &mut rng), 0.0);
    }

    #[test]
    fn tridiagonal_last_offdiag_has_unit_mean_square() {
        let mut rng = seeded(7);
        let n = 20_000;
        let m = 6;
        let mean: f64 = (0..n)
            .map(|_| sample_tridiagonal_gue(m, &mut rng).offdiag[m - 2].powi(2))
            .sum::<f64>()
            / n as f64;
        assert!((mean - 1.0).abs() < 0.05);
        let one = sample_tridiagonal_gue(1, &mut rng);
        assert_eq!(one.diag.len(), 1);
        assert!(one.offdiag.is_empty());
    }

    #[test]
    fn shift_identities_hold_per_draw() {
        let mut rng = seeded(8);
        for p in [vec![1.0], vec![0.5, 0.5], vec![0.5, 0.3, 0.2], vec![0.4, 0.4, 0.2]] {
            let d = dist(&p);
            for _ in 0..2000 {
                let s = ordered_block_spectrum(&d, &mut rng).unwrap();
                assert!(s.shift_discrepancy() < 1e-9);
                assert!(s.weighted_sum(&d) < 1e-9);
                assert!(s.xi.is_ordered() && s.xi0.is_ordered());
                if p.len() == 1 {
                    assert!(s.xi0.values[0].abs() < 1e-12);
                }
                if p == [0.5, 0.5] {
                    assert!((s.xi0.values[0] + s.xi0.values[1]).abs() < 1e-12);
                }
            }
        }
    }
}
