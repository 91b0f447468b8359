//! Word-enumeration oracle for the shape distribution.

use std::collections::BTreeMap;

use num::{BigRational, One, Zero};

use super::{AlphabetDistribution, Partition, ShapeInserter};
use crate::{Error, Result};

/// Largest `M^n` accepted by [`exhaustive_shape_pmf`].
pub const FLOAT_ENUMERATION_LIMIT: u128 = 10_000_000;
/// Largest `M^n` accepted by [`exhaustive_shape_pmf_exact`].
pub const EXACT_ENUMERATION_LIMIT: u128 = 100_000;

#[derive(Debug, Clone, Copy, Default)]
struct KahanSum {
    sum: f64,
    carry: f64,
}

impl KahanSum {
    fn add(&mut self, x: f64) {
        let y = x - self.carry;
        let t = self.sum + y;
        self.carry = (t - self.sum) - y;
        self.sum = t;
    }
}

fn word_count(m: usize, n: usize, limit: u128) -> Result<u128> {
    let count = (m as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    if count > limit {
        return Err(Error::InstanceTooLarge {
            what: "exhaustive word enumeration",
            size: count,
            limit,
        });
    }
    Ok(count)
}

/// Visits every word in `[M]^n` (letters 0-based) in odometer order.
fn for_each_word(m: usize, n: usize, mut f: impl FnMut(&[u32])) {
    let mut letters = vec![0u32; n];
    loop {
        f(&letters);
        let mut i = 0;
        loop {
            if i == n {
                return;
            }
            letters[i] += 1;
            if (letters[i] as usize) < m {
                break;
            }
            letters[i] = 0;
            i += 1;
        }
    }
}

fn shape_of(letters: &[u32], m: usize) -> Partition {
    let mut ins = ShapeInserter::new(m);
    for &x in letters {
        ins.insert(x + 1);
    }
    ins.shape()
}

/// Distribution of the RSK shape of an iid word of length `n`, by running
/// RSK on all `M^n` words and adding up `∏ p_{letter}`.
pub fn exhaustive_shape_pmf(dist: &AlphabetDistribution, n: usize) -> Result<BTreeMap<Partition, f64>> {
    let m = dist.m();
    word_count(m, n, FLOAT_ENUMERATION_LIMIT)?;
    let mut acc: BTreeMap<Partition, KahanSum> = BTreeMap::new();
    let probs = dist.probs();
    for_each_word(m, n, |letters| {
        let weight: f64 = letters.iter().map(|&x| probs[x as usize]).product();
        acc.entry(shape_of(letters, m)).or_default().add(weight);
    });
    Ok(acc.into_iter().map(|(k, v)| (k, v.sum)).collect())
}

/// Rational-arithmetic version of [`exhaustive_shape_pmf`].
pub fn exhaustive_shape_pmf_exact(
    dist: &AlphabetDistribution,
    n: usize,
) -> Result<BTreeMap<Partition, BigRational>> {
    let m = dist.m();
    word_count(m, n, EXACT_ENUMERATION_LIMIT)?;
    let mut acc: BTreeMap<Partition, BigRational> = BTreeMap::new();
    let probs = dist.exact_probs();
    for_each_word(m, n, |letters| {
        let weight = letters
            .iter()
            .fold(BigRational::one(), |w, &x| w * &probs[x as usize]);
        *acc.entry(shape_of(letters, m)).or_insert_with(BigRational::zero) += weight;
    });
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn uniform_pair_of_length_two() {
        let d = AlphabetDistribution::new(&[0.5, 0.5]).unwrap();
        let pmf = exhaustive_shape_pmf(&d, 2).unwrap();
        assert_eq!(pmf.len(), 2);
        assert!((pmf[&part(&[2])] - 0.75).abs() < 1e-15);
        assert!((pmf[&part(&[1, 1])] - 0.25).abs() < 1e-15);
    }

    #[test]
    fn skewed_pair_of_length_two() {
        let d = AlphabetDistribution::new(&[0.7, 0.3]).unwrap();
        let pmf = exhaustive_shape_pmf(&d, 2).unwrap();
        assert!((pmf[&part(&[1, 1])] - 0.21).abs() < 1e-15);
        assert!((pmf[&part(&[2])] - 0.79).abs() < 1e-15);
    }

    #[test]
    fn single_letter() {
        let d = AlphabetDistribution::new(&[1.0]).unwrap();
        let pmf = exhaustive_shape_pmf(&d, 4).unwrap();
        assert_eq!(pmf.len(), 1);
        assert_eq!(pmf[&part(&[4])], 1.0);
    }

    #[test]
    fn empty_word_has_empty_shape() {
        let d = AlphabetDistribution::new(&[0.2, 0.8]).unwrap();
        let pmf = exhaustive_shape_pmf(&d, 0).unwrap();
        assert_eq!(pmf[&Partition::empty()], 1.0);
    }

    #[test]
    fn sums_to_one() {
        let d = AlphabetDistribution::new(&[0.5, 0.3, 0.2]).unwrap();
        let pmf = exhaustive_shape_pmf(&d, 7).unwrap();
        let total: f64 = pmf.values().sum();
        assert!((total - 1.0).abs() < 1e-12);
    }

    #[test]
    fn exact_mode_sums_to_one_exactly() {
        let d = AlphabetDistribution::new(&[0.4, 0.4, 0.2]).unwrap();
        let pmf = exhaustive_shape_pmf_exact(&d, 5).unwrap();
        let total: BigRational = pmf.values().cloned().sum();
        assert!(total.is_one());
    }

    #[test]
    fn size_guard() {
        let d = AlphabetDistribution::uniform(10);
        assert!(matches!(
            exhaustive_shape_pmf(&d, 8),
            Err(Error::InstanceTooLarge { .. })
        ));
        assert!(matches!(
            exhaustive_shape_pmf_exact(&d, 6),
            Err(Error::InstanceTooLarge { .. })
        ));
    }
}
