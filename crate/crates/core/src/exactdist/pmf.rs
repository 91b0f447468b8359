use std::collections::HashMap;
use std::fmt::Write as _;

use num::{BigRational, ToPrimitive};

use super::{schur_repeated_det, schur_repeated_det_exact, syt_count};
use crate::combinat::{partitions, AlphabetDistribution, Partition};
use crate::{Error, Result};

/// Largest number of partitions a pmf may be built on.
pub const MAX_SUPPORT: usize = 100_000;

#[derive(Debug, Clone, PartialEq, Default)]
pub struct PmfMeta {
    pub m: usize,
    /// Word length for fixed-`N` measures.
    pub n: Option<usize>,
    /// Poisson mean for Poissonized measures.
    pub alpha: Option<f64>,
    pub probs: Vec<f64>,
    /// Upper bound on the mass lost to truncation, if any.
    pub tail_bound: Option<f64>,
}

/// Probability mass function on partitions.
#[derive(Debug, Clone, PartialEq)]
pub struct Pmf {
    pub support: Vec<Partition>,
    pub mass: Vec<f64>,
    pub meta: PmfMeta,
}

impl Pmf {
    pub fn new(support: Vec<Partition>, mass: Vec<f64>, meta: PmfMeta) -> Self {
        assert_eq!(support.len(), mass.len());
        Self { support, mass, meta }
    }

    pub fn total(&self) -> f64 {
        self.mass.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Partition, f64)> {
        self.support.iter().zip(self.mass.iter().copied())
    }

    /// Lookup table from partition to mass.
    pub fn to_map(&self) -> HashMap<Partition, f64> {
        self.iter().map(|(p, x)| (p.clone(), x)).collect()
    }

    /// Mass of `shape`, zero off the support.
    pub fn get(&self, shape: &Partition) -> f64 {
        self.iter().find(|(p, _)| *p == shape).map_or(0.0, |(_, x)| x)
    }

    /// CSV with header `lambda_1,…,lambda_M,prob`, one row per atom.
    pub fn to_csv(&self) -> String {
        let m = self
            .meta
            .m
            .max(self.support.iter().map(Partition::len).max().unwrap_or(0));
        let mut out = String::new();
        for i in 1..=m {
            write!(out, "lambda_{i},").unwrap();
        }
        out.push_str("prob\n");
        for (p, x) in self.iter() {
            for part in p.padded(m) {
                write!(out, "{part},").unwrap();
            }
            writeln!(out, "{x}").unwrap();
        }
        out
    }

    /// Parses the output of [`to_csv`](Self::to_csv). A header line is
    /// optional; the alphabet size is the number of columns minus one.
    pub fn from_csv(text: &str) -> Result<Self> {
        let mut support = Vec::new();
        let mut mass = Vec::new();
        let mut m = 0;
        for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
            if line.starts_with("lambda") {
                continue;
            }
            let fields: Vec<&str> = line.split(',').map(str::trim).collect();
            if fields.len() < 2 {
                return Err(Error::Parse(format!("pmf row {line:?} has fewer than two fields")));
            }
            m = fields.len() - 1;
            let parts = fields[..m]
                .iter()
                .map(|f| f.parse::<u32>().map_err(|e| Error::Parse(format!("part {f:?}: {e}"))))
                .collect::<Result<Vec<_>>>()?;
            let prob = fields[m]
                .parse::<f64>()
                .map_err(|e| Error::Parse(format!("prob {:?}: {e}", fields[m])))?;
            support.push(Partition::new(parts)?);
            mass.push(prob);
        }
        Ok(Self::new(support, mass, PmfMeta { m, ..Default::default() }))
    }
}

/// Exact counterpart of [`Pmf`] with rational masses.
#[derive(Debug, Clone, PartialEq)]
pub struct ExactPmf {
    pub support: Vec<Partition>,
    pub mass: Vec<BigRational>,
    pub m: usize,
    pub n: usize,
}

impl ExactPmf {
    pub fn to_float(&self, probs: &[f64]) -> Pmf {
        Pmf::new(
            self.support.clone(),
            self.mass.iter().map(|x| x.to_f64().unwrap()).collect(),
            PmfMeta {
                m: self.m,
                n: Some(self.n),
                probs: probs.to_vec(),
                ..Default::default()
            },
        )
    }
}

fn support(dist: &AlphabetDistribution, n: usize) -> Result<Vec<Partition>> {
    let support = partitions(n as u32, dist.m());
    if support.len() > MAX_SUPPORT {
        return Err(Error::InstanceTooLarge {
            what: "partition support",
            size: support.len() as u128,
            limit: MAX_SUPPORT as u128,
        });
    }
    Ok(support)
}

/// Push-forward of the iid word measure under the RSK shape map:
/// `P_{M,N}(λ) = s_λ(p) f^λ` on partitions of `n` with at most `M` parts.
pub fn shape_pmf(dist: &AlphabetDistribution, n: usize) -> Result<Pmf> {
    let support = support(dist, n)?;
    let mass = support
        .iter()
        .map(|shape| {
            let s = schur_repeated_det(shape, dist)?.value;
            let f = syt_count(shape, dist.m(), n)?.to_f64().unwrap_or(f64::INFINITY);
            Ok(s * f)
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Pmf::new(
        support,
        mass,
        PmfMeta {
            m: dist.m(),
            n: Some(n),
            probs: dist.probs().to_vec(),
            ..Default::default()
        },
    ))
}

pub fn shape_pmf_exact(dist: &AlphabetDistribution, n: usize) -> Result<ExactPmf> {
    let support = support(dist, n)?;
    let mass = support
        .iter()
        .map(|shape| {
            let s = schur_repeated_det_exact(shape, dist)?;
            let f = syt_count(shape, dist.m(), n)?;
            Ok(s * BigRational::from(num::BigInt::from(f)))
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(ExactPmf {
        support,
        mass,
        m: dist.m(),
        n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::{exhaustive_shape_pmf, exhaustive_shape_pmf_exact};
    use num::One;

    fn part(p: &[u32]) -> Partition {
        Partition::new(p.to_vec()).unwrap()
    }

    #[test]
    fn small_examples() {
        let d = AlphabetDistribution::new(&[0.5, 0.5]).unwrap();
        let pmf = shape_pmf(&d, 2).unwrap();
        assert!((pmf.get(&part(&[2])) - 0.75).abs() < 1e-14);
        assert!((pmf.get(&part(&[1, 1])) - 0.25).abs() < 1e-14);

        let d = AlphabetDistribution::new(&[0.7, 0.3]).unwrap();
        let pmf = shape_pmf(&d, 2).unwrap();
        assert!((pmf.get(&part(&[2])) - 0.79).abs() < 1e-14);
        assert!((pmf.get(&part(&[1, 1])) - 0.21).abs() < 1e-14);

        let d = AlphabetDistribution::new(&[1.0]).unwrap();
        let pmf = shape_pmf(&d, 5).unwrap();
        assert_eq!(pmf.len(), 1);
        assert!((pmf.get(&part(&[5])) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn matches_word_enumeration() {
        for probs in [&[0.6, 0.4][..], &[0.5, 0.3, 0.2], &[0.4, 0.4, 0.2], &[0.1, 0.2, 0.3, 0.4], &[0.25; 4]] {
            let d = AlphabetDistribution::new(probs).unwrap();
            let max_n = match d.m() {
                2 => 12,
                3 => 9,
                _ => 7,
            };
            for n in 0..=max_n {
                let pmf = shape_pmf(&d, n).unwrap();
                let oracle = exhaustive_shape_pmf(&d, n).unwrap();
                assert!((pmf.total() - 1.0).abs() < 1e-10, "{probs:?} n={n}");
                for (shape, x) in pmf.iter() {
                    let y = oracle.get(shape).copied().unwrap_or(0.0);
                    assert!((x - y).abs() < 1e-10, "{probs:?} {shape}: {x} vs {y}");
                }
                assert_eq!(oracle.len(), pmf.iter().filter(|(_, x)| *x > 0.0).count());
            }
        }
    }

    #[test]
    fn exact_matches_exact_enumeration() {
        let d = AlphabetDistribution::new(&[0.4, 0.4, 0.2]).unwrap();
        for n in 0..=6 {
            let pmf = shape_pmf_exact(&d, n).unwrap();
            let oracle = exhaustive_shape_pmf_exact(&d, n).unwrap();
            let total: BigRational = pmf.mass.iter().cloned().sum();
            assert!(total.is_one());
            for (shape, x) in pmf.support.iter().zip(&pmf.mass) {
                assert_eq!(Some(x), oracle.get(shape));
            }
        }
    }

    #[test]
    fn large_n_still_normalized() {
        let d = AlphabetDistribution::new(&[0.3, 0.25, 0.2, 0.15, 0.1]).unwrap();
        let pmf = shape_pmf(&d, 40).unwrap();
        assert!((pmf.total() - 1.0).abs() < 1e-8, "total {}", pmf.total());
        assert!(pmf.mass.iter().all(|&x| x > -1e-12));
    }

    #[test]
    fn csv_round_trip() {
        let d = AlphabetDistribution::new(&[0.5, 0.3, 0.2]).unwrap();
        let pmf = shape_pmf(&d, 4).unwrap();
        let csv = pmf.to_csv();
        assert!(csv.starts_with("lambda_1,lambda_2,lambda_3,prob\n"));
        assert!(csv.contains("\n2,1,1,"));
        let back = Pmf::from_csv(&csv).unwrap();
        assert_eq!(back.support, pmf.support);
        assert_eq!(back.mass, pmf.mass);
        assert_eq!(back.meta.m, 3);
        assert!(Pmf::from_csv("1,x\n").is_err());
    }
}
