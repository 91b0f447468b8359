//! Kolmogorov–Smirnov distances and sample moments.

use serde::Serialize;

use crate::{Error, Result};

fn sorted(a: &[f64]) -> Vec<f64> {
    let mut v = a.to_vec();
    v.sort_by(f64::total_cmp);
    v
}

fn check_len(a: &[f64]) -> Result<()> {
    if a.len() < 2 {
        return Err(Error::EmptySample { needed: 2, got: a.len() });
    }
    Ok(())
}

/// Two-sample KS distance `sup_x |F_a(x) − F_b(x)|`.
pub fn ks_two_sample(a: &[f64], b: &[f64]) -> Result<f64> {
    check_len(a)?;
    check_len(b)?;
    let (a, b) = (sorted(a), sorted(b));
    let (na, nb) = (a.len() as f64, b.len() as f64);
    let (mut i, mut j) = (0, 0);
    let mut d: f64 = 0.0;
    while i < a.len() && j < b.len() {
        let x = a[i].min(b[j]);
        while i < a.len() && a[i] <= x {
            i += 1;
        }
        while j < b.len() && b[j] <= x {
            j += 1;
        }
        d = d.max((i as f64 / na - j as f64 / nb).abs());
    }
    Ok(d)
}

/// One-sample KS distance against a continuous CDF.
pub fn ks_one_sample(a: &[f64], cdf: impl Fn(f64) -> f64) -> Result<f64> {
    check_len(a)?;
    let a = sorted(a);
    let n = a.len() as f64;
    let mut d: f64 = 0.0;
    let mut i = 0;
    while i < a.len() {
        let x = a[i];
        let below = i as f64 / n;
        while i < a.len() && a[i] == x {
            i += 1;
        }
        let f = cdf(x);
        d = d.max((f - below).abs()).max((i as f64 / n - f).abs());
    }
    Ok(d)
}

/// Either a second sample or a reference CDF.
pub enum KsTarget<'a> {
    Sample(&'a [f64]),
    Cdf(&'a dyn Fn(f64) -> f64),
}

pub fn ks_statistic(a: &[f64], b: KsTarget<'_>) -> Result<f64> {
    match b {
        KsTarget::Sample(b) => ks_two_sample(a, b),
        KsTarget::Cdf(f) => ks_one_sample(a, f),
    }
}

/// Mean, variance, skewness and excess kurtosis.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Moments {
    pub count: usize,
    pub mean: f64,
    pub variance: f64,
    pub skewness: f64,
    pub excess_kurtosis: f64,
}

pub fn moments(a: &[f64]) -> Moments {
    let n = a.len().max(1) as f64;
    let mean = a.iter().sum::<f64>() / n;
    let central = |k: i32| a.iter().map(|x| (x - mean).powi(k)).sum::<f64>() / n;
    let variance = central(2);
    let (skewness, excess_kurtosis) = if variance > 0.0 {
        (central(3) / variance.powf(1.5), central(4) / (variance * variance) - 3.0)
    } else {
        (0.0, 0.0)
    };
    Moments {
        count: a.len(),
        mean,
        variance,
        skewness,
        excess_kurtosis,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rmt::semicircle_cdf;
    use crate::rng::seeded;
    use rand::Rng;
    use rand_distr::StandardNormal;

    #[test]
    fn identical_samples() {
        let a = [0.3, -1.0, 2.0, 0.3];
        assert_eq!(ks_two_sample(&a, &a).unwrap(), 0.0);
    }

    #[test]
    fn point_mass_against_semicircle() {
        let a = [0.0; 10];
        assert!((ks_one_sample(&a, semicircle_cdf).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn disjoint_samples() {
        assert_eq!(ks_two_sample(&[0.0, 1.0], &[2.0, 3.0]).unwrap(), 1.0);
        assert!((ks_two_sample(&[0.0, 2.0], &[1.0, 3.0]).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn too_few_samples() {
        assert!(matches!(ks_two_sample(&[1.0], &[1.0, 2.0]), Err(Error::EmptySample { .. })));
        assert!(ks_one_sample(&[], |x| x).is_err());
    }

    #[test]
    fn independent_normals_are_close() {
        let mut rng = seeded(9);
        let a: Vec<f64> = (0..10_000).map(|_| rng.sample(StandardNormal)).collect();
        let b: Vec<f64> = (0..10_000).map(|_| rng.sample(StandardNormal)).collect();
        assert!(ks_two_sample(&a, &b).unwrap() <= 0.03);
    }

    #[test]
    fn moments_of_known_sample() {
        let m = moments(&[1.0, 2.0, 3.0, 4.0]);
        assert_eq!(m.mean, 2.5);
        assert_eq!(m.variance, 1.25);
        assert!(m.skewness.abs() < 1e-15);
    }
}
