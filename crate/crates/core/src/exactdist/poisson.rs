use std::ops::RangeInclusive;

use num::{BigRational, ToPrimitive, Zero};

use super::{schur_repeated_det, shape_pmf, shape_pmf_exact, Pmf, PmfMeta};
use crate::combinat::{AlphabetDistribution, Partition};
use crate::{Error, Result};

/// Largest Poisson tail mass a truncated Poissonization may drop.
pub const TAIL_LIMIT: f64 = 1e-10;

pub fn ln_factorial(n: u64) -> f64 {
    (2..=n).map(|k| (k as f64).ln()).sum()
}

/// `⌈α + 12√α + 20⌉`
pub fn default_n_max(alpha: f64) -> usize {
    (alpha + 12.0 * alpha.sqrt() + 20.0).ceil() as usize
}

/// Chernoff bound on `P(X > n_max)` for `X ~ Poisson(α)`:
/// `e^{−α} (eα/k)^k` with `k = n_max + 1`, valid for `k > α`.
pub fn poisson_tail_bound(alpha: f64, n_max: usize) -> f64 {
    let k = (n_max + 1) as f64;
    if k <= alpha {
        return 1.0;
    }
    (-alpha + k - k * (k / alpha).ln()).exp().min(1.0)
}

/// Generalized Charlier weight of `shape`:
///
/// `∏_{i<j} (λ_i − λ_j + j − i) · ∏_j 1/(λ_j + M − j)! · s_λ(p) · e^{−α} α^{|λ|}`
///
/// The combinatorial prefactor is evaluated in log space.
pub fn charlier_pmf(shape: &Partition, alpha: f64, dist: &AlphabetDistribution) -> Result<f64> {
    let m = dist.m();
    if shape.len() > m {
        return Ok(0.0);
    }
    let lambda = shape.padded(m);
    let mut log_weight = -alpha + shape.size() as f64 * alpha.ln();
    for i in 0..m {
        for j in i + 1..m {
            log_weight += ((lambda[i] as f64) - (lambda[j] as f64) + (j - i) as f64).ln();
        }
        log_weight -= ln_factorial(lambda[i] as u64 + (m - 1 - i) as u64);
    }
    let s = schur_repeated_det(shape, dist)?.value;
    Ok(log_weight.exp() * s)
}

/// Poisson(α) mixture of the fixed-`N` shape measures for `N ≤ n_max`.
///
/// Fails with [`Error::TailNotNegligible`] when the dropped Poisson tail
/// can exceed [`TAIL_LIMIT`].
pub fn poissonize_pmf(dist: &AlphabetDistribution, alpha: f64, n_max: usize) -> Result<Pmf> {
    let bound = poisson_tail_bound(alpha, n_max);
    if bound > TAIL_LIMIT {
        return Err(Error::TailNotNegligible {
            n_max,
            bound,
            limit: TAIL_LIMIT,
        });
    }
    let mut support = Vec::new();
    let mut mass = Vec::new();
    let mut weight = (-alpha).exp();
    for n in 0..=n_max {
        if n > 0 {
            weight *= alpha / n as f64;
        }
        let fixed = shape_pmf(dist, n)?;
        for (shape, x) in fixed.iter() {
            support.push(shape.clone());
            mass.push(weight * x);
        }
    }
    Ok(Pmf::new(
        support,
        mass,
        PmfMeta {
            m: dist.m(),
            alpha: Some(alpha),
            probs: dist.probs().to_vec(),
            tail_bound: Some(bound),
            ..Default::default()
        },
    ))
}

/// Result of the de-Poissonization monotonicity check for one threshold
/// vector.
#[derive(Debug, Clone, PartialEq)]
pub struct DePoissonReport {
    pub thresholds: Vec<u32>,
    pub n_values: Vec<usize>,
    /// `P_{M,N}(λ_i ≤ n_i for all i)` per `N` (float view of the exact
    /// values in rational mode).
    pub probabilities: Vec<f64>,
    pub exact: Option<Vec<BigRational>>,
    /// Values of `N` where the probability increased from `N − 1`.
    pub violations: Vec<usize>,
    pub monotone: bool,
    /// Smallest `C` with `P^{α_N} − C/N² ≤ P_{M,N} ≤ P^{β_N} + C/N²` over
    /// the `N` where `β_N = N − 3√(N ln N) > 0`, `α_N = N + 3√(N ln N)`.
    /// Reported, not asserted.
    pub fitted_c: Option<f64>,
}

fn fits(shape: &Partition, thresholds: &[u32]) -> bool {
    (1..=thresholds.len().max(shape.len()))
        .all(|i| shape.part(i) <= thresholds.get(i - 1).copied().unwrap_or(0))
}

/// `P_{M,N}(λ ≤ thresholds)` in floating point.
fn box_probability(dist: &AlphabetDistribution, n: usize, thresholds: &[u32]) -> Result<f64> {
    let capacity: u32 = thresholds.iter().sum();
    if n as u32 > capacity {
        return Ok(0.0);
    }
    let pmf = shape_pmf(dist, n)?;
    Ok(pmf.iter().filter(|(s, _)| fits(s, thresholds)).map(|(_, x)| x).sum())
}

/// Poissonized `P^α(λ ≤ thresholds)`, truncated at [`default_n_max`].
fn poissonized_box_probability(dist: &AlphabetDistribution, alpha: f64, thresholds: &[u32]) -> Result<f64> {
    let n_max = default_n_max(alpha).min(thresholds.iter().sum::<u32>() as usize);
    let mut weight = (-alpha).exp();
    let mut total = 0.0;
    for n in 0..=n_max {
        if n > 0 {
            weight *= alpha / n as f64;
        }
        total += weight * box_probability(dist, n, thresholds)?;
    }
    Ok(total)
}

/// Checks that `N ↦ P_{M,N}(λ_1 ≤ n_1, …, λ_M ≤ n_M)` is non-increasing
/// over `n_range`, exactly when `exact` is set, and fits the constant of
/// the Poissonization sandwich.
pub fn depoisson_monotonicity_check(
    dist: &AlphabetDistribution,
    n_range: RangeInclusive<usize>,
    thresholds: &[u32],
    exact: bool,
) -> Result<DePoissonReport> {
    if thresholds.len() != dist.m() {
        return Err(Error::Config(format!(
            "{} thresholds for an alphabet of size {}",
            thresholds.len(),
            dist.m()
        )));
    }
    let n_values: Vec<usize> = n_range.collect();
    let (probabilities, exact_values) = if exact {
        let values = n_values
            .iter()
            .map(|&n| {
                let pmf = shape_pmf_exact(dist, n)?;
                Ok(pmf
                    .support
                    .iter()
                    .zip(&pmf.mass)
                    .filter(|(s, _)| fits(s, thresholds))
                    .fold(BigRational::zero(), |acc, (_, x)| acc + x))
            })
            .collect::<Result<Vec<_>>>()?;
        (values.iter().map(|x| x.to_f64().unwrap()).collect(), Some(values))
    } else {
        let values = n_values
            .iter()
            .map(|&n| box_probability(dist, n, thresholds))
            .collect::<Result<Vec<f64>>>()?;
        (values, None)
    };

    let violations: Vec<usize> = (1..n_values.len())
        .filter(|&i| match &exact_values {
            Some(v) => v[i] > v[i - 1],
            None => probabilities[i] > probabilities[i - 1] + 1e-12,
        })
        .map(|i| n_values[i])
        .collect();

    let mut fitted_c: Option<f64> = None;
    for (&n, &p) in n_values.iter().zip(&probabilities) {
        let spread = 3.0 * (n as f64 * (n as f64).ln()).sqrt();
        let beta = n as f64 - spread;
        if n < 2 || beta <= 0.0 {
            continue;
        }
        let upper = poissonized_box_probability(dist, beta, thresholds)?;
        let lower = poissonized_box_probability(dist, n as f64 + spread, thresholds)?;
        let gap = (lower - p).max(p - upper).max(0.0);
        let c = gap * (n * n) as f64;
        fitted_c = Some(fitted_c.map_or(c, |prev: f64| prev.max(c)));
    }

    Ok(DePoissonReport {
        thresholds: thresholds.to_vec(),
        n_values,
        probabilities,
        exact: exact_values,
        monotone: violations.is_empty(),
        violations,
        fitted_c,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    fn poisson(alpha: f64, n: u64) -> f64 {
        (-alpha + n as f64 * alpha.ln() - ln_factorial(n)).exp()
    }

    #[test]
    fn single_letter_is_poisson() {
        let d = AlphabetDistribution::new(&[1.0]).unwrap();
        for n in 0..20 {
            let c = charlier_pmf(&part(&[n]), 2.0, &d).unwrap();
            assert!((c - poisson(2.0, n as u64)).abs() < 1e-15);
        }
        let pmf = poissonize_pmf(&d, 2.0, default_n_max(2.0)).unwrap();
        for (shape, x) in pmf.iter() {
            assert!((x - poisson(2.0, shape.size() as u64)).abs() < 1e-15);
        }
    }

    #[test]
    fn empty_shape_mass() {
        let d = AlphabetDistribution::new(&[0.5, 0.5]).unwrap();
        let c = charlier_pmf(&Partition::empty(), 2.0, &d).unwrap();
        assert!((c - (-2.0f64).exp()).abs() < 1e-15);
        let pmf = poissonize_pmf(&d, 2.0, default_n_max(2.0)).unwrap();
        assert!((pmf.get(&Partition::empty()) - (-2.0f64).exp()).abs() < 1e-15);
        assert!((pmf.get(&part(&[1])) - 2.0 * (-2.0f64).exp()).abs() < 1e-15);
    }

    #[test]
    fn charlier_is_the_poissonization() {
        for probs in [&[0.5, 0.5][..], &[0.7, 0.3], &[0.5, 0.3, 0.2], &[0.4, 0.4, 0.2]] {
            let d = AlphabetDistribution::new(probs).unwrap();
            for alpha in [1.0, 5.0] {
                let pmf = poissonize_pmf(&d, alpha, default_n_max(alpha)).unwrap();
                for (shape, x) in pmf.iter() {
                    let c = charlier_pmf(shape, alpha, &d).unwrap();
                    assert!((x - c).abs() < 1e-8, "{probs:?} α={alpha} {shape}");
                }
            }
        }
    }

    #[test]
    fn charlier_sums_to_one() {
        let d = AlphabetDistribution::new(&[0.6, 0.4]).unwrap();
        let alpha = 5.0;
        let total: f64 = (0..=default_n_max(alpha) as u32)
            .flat_map(|n| crate::combinat::partitions(n, 2))
            .collect::<Vec<_>>()
            .iter()
            .map(|s| charlier_pmf(s, alpha, &d).unwrap())
            .sum();
        assert!((total - 1.0).abs() < 1e-8);
    }

    #[test]
    fn tail_guard() {
        let d = AlphabetDistribution::new(&[0.5, 0.5]).unwrap();
        assert!(matches!(
            poissonize_pmf(&d, 20.0, 25),
            Err(Error::TailNotNegligible { .. })
        ));
        assert!(poisson_tail_bound(20.0, default_n_max(20.0)) < TAIL_LIMIT);
        assert_eq!(poisson_tail_bound(20.0, 10), 1.0);
    }

    #[test]
    fn monotone_box_probabilities() {
        let d = AlphabetDistribution::new(&[0.5, 0.5]).unwrap();
        let r = depoisson_monotonicity_check(&d, 1..=8, &[2, 1], true).unwrap();
        assert!(r.monotone, "{:?}", r.probabilities);
        assert!(r.probabilities.windows(2).all(|w| w[1] <= w[0]));
        // β_N > 0 needs N ≥ 38
        assert!(r.fitted_c.is_none());
        let long = depoisson_monotonicity_check(&d, 30..=45, &[30, 20], false).unwrap();
        assert!(long.monotone);
        assert!(long.fitted_c.unwrap().is_finite());

        let full = depoisson_monotonicity_check(&d, 1..=8, &[8, 8], true).unwrap();
        assert!(full.probabilities.iter().all(|&p| (p - 1.0).abs() < 1e-15));

        let none = depoisson_monotonicity_check(&d, 1..=8, &[0, 0], false).unwrap();
        assert!(none.probabilities.iter().all(|&p| p == 0.0));
        assert!(none.monotone);
    }

    #[test]
    fn threshold_length_checked() {
        let d = AlphabetDistribution::new(&[0.5, 0.5]).unwrap();
        assert!(depoisson_monotonicity_check(&d, 1..=3, &[1], false).is_err());
    }
}
