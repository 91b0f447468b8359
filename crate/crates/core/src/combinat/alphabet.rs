use num::{BigInt, BigRational, One, ToPrimitive, Zero};

use crate::{Error, Result};

/// Maximum deviation of `Σ p_i` from 1 accepted before renormalizing.
pub const SUM_TOLERANCE: f64 = 1e-9;

/// Letter probabilities `p_1..p_M` together with their block structure.
///
/// Letters are `1..=M`. Internally every index is 0-based: `tau[j]` is the
/// 0-based letter with the `j`-th largest probability, and block `k` covers
/// sorted positions `offsets[k] .. offsets[k] + mults[k]`.
///
/// Each probability is also held as an exact rational (read off the
/// shortest decimal representation of the input float), which is what the
/// block grouping and the rational code paths use.
#[derive(Debug, Clone, PartialEq)]
pub struct AlphabetDistribution {
    probs: Vec<f64>,
    exact: Vec<BigRational>,
    tau: Vec<usize>,
    rank: Vec<usize>,
    distinct: Vec<f64>,
    distinct_exact: Vec<BigRational>,
    mults: Vec<usize>,
    offsets: Vec<usize>,
}

/// Exact rational of the shortest round-trip decimal form of `x`.
fn decimal_rational(x: f64) -> BigRational {
    let text = format!("{x}");
    let (int_part, frac_part) = text.split_once('.').unwrap_or((&text, ""));
    let digits = format!("{int_part}{frac_part}");
    let numer: BigInt = digits.parse().expect("f64 display is decimal");
    let denom = num::pow(BigInt::from(10u32), frac_part.len());
    BigRational::new(numer, denom)
}

impl AlphabetDistribution {
    /// Builds the block structure from float probabilities.
    ///
    /// Inputs must be positive and sum to 1 within [`SUM_TOLERANCE`]; they
    /// are then renormalized. Ties in the ordering keep the original index
    /// order.
    pub fn new(probs: &[f64]) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        for (index, &value) in probs.iter().enumerate() {
            if !(value > 0.0) || !value.is_finite() {
                return Err(Error::NonPositiveProbability { index, value });
            }
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > SUM_TOLERANCE {
            return Err(Error::SumNotOne { sum });
        }
        let exact: Vec<BigRational> = probs.iter().map(|&p| decimal_rational(p)).collect();
        Self::from_parts(probs.iter().map(|p| p / sum).collect(), exact)
    }

    /// Builds the block structure from exact rational probabilities, which
    /// must sum to exactly 1.
    pub fn from_rationals(probs: &[BigRational]) -> Result<Self> {
        if probs.is_empty() {
            return Err(Error::EmptyAlphabet);
        }
        for (index, p) in probs.iter().enumerate() {
            if *p <= BigRational::zero() {
                return Err(Error::NonPositiveProbability {
                    index,
                    value: p.to_f64().unwrap_or(f64::NAN),
                });
            }
        }
        let sum: BigRational = probs.iter().cloned().sum();
        if !sum.is_one() {
            return Err(Error::SumNotOne {
                sum: sum.to_f64().unwrap_or(f64::NAN),
            });
        }
        let floats = probs.iter().map(|p| p.to_f64().unwrap()).collect();
        Self::from_parts(floats, probs.to_vec())
    }

    pub fn uniform(m: usize) -> Self {
        let p = BigRational::new(BigInt::one(), BigInt::from(m));
        Self::from_rationals(&vec![p; m]).expect("uniform alphabet is valid")
    }

    fn from_parts(probs: Vec<f64>, exact: Vec<BigRational>) -> Result<Self> {
        let total: BigRational = exact.iter().cloned().sum();
        let exact: Vec<BigRational> = exact.into_iter().map(|p| p / &total).collect();

        let m = probs.len();
        let mut tau: Vec<usize> = (0..m).collect();
        // stable: ties keep ascending original index
        tau.sort_by(|&a, &b| exact[b].cmp(&exact[a]));
        let mut rank = vec![0; m];
        for (pos, &letter) in tau.iter().enumerate() {
            rank[letter] = pos;
        }

        let mut distinct = Vec::new();
        let mut distinct_exact: Vec<BigRational> = Vec::new();
        let mut mults = Vec::new();
        let mut offsets = Vec::new();
        for (pos, &letter) in tau.iter().enumerate() {
            if distinct_exact.last() == Some(&exact[letter]) {
                *mults.last_mut().unwrap() += 1;
            } else {
                distinct.push(probs[letter]);
                distinct_exact.push(exact[letter].clone());
                mults.push(1);
                offsets.push(pos);
            }
        }
        Ok(Self {
            probs,
            exact,
            tau,
            rank,
            distinct,
            distinct_exact,
            mults,
            offsets,
        })
    }

    /// Alphabet size `M`.
    pub fn m(&self) -> usize {
        self.probs.len()
    }

    /// Number of distinct probabilities `K`.
    pub fn k(&self) -> usize {
        self.distinct.len()
    }

    /// Probabilities in letter order.
    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn exact_probs(&self) -> &[BigRational] {
        &self.exact
    }

    /// 0-based permutation putting the probabilities in non-increasing order.
    pub fn tau(&self) -> &[usize] {
        &self.tau
    }

    /// Inverse of [`tau`](Self::tau): sorted position of each 0-based letter.
    pub fn rank(&self) -> &[usize] {
        &self.rank
    }

    pub fn distinct(&self) -> &[f64] {
        &self.distinct
    }

    pub fn distinct_exact(&self) -> &[BigRational] {
        &self.distinct_exact
    }

    pub fn mults(&self) -> &[usize] {
        &self.mults
    }

    pub fn offsets(&self) -> &[usize] {
        &self.offsets
    }

    /// `p_{τ(1)} ≥ … ≥ p_{τ(M)}`.
    pub fn sorted_probs(&self) -> Vec<f64> {
        self.tau.iter().map(|&i| self.probs[i]).collect()
    }

    pub fn sorted_exact(&self) -> Vec<BigRational> {
        self.tau.iter().map(|&i| self.exact[i].clone()).collect()
    }

    /// Block index containing 0-based sorted position `pos`.
    pub fn block_of(&self, pos: usize) -> usize {
        self.offsets.partition_point(|&o| o <= pos) - 1
    }

    /// Largest probability `p_max = p^{(1)}`.
    pub fn p_max(&self) -> f64 {
        self.distinct[0]
    }

    pub fn is_uniform(&self) -> bool {
        self.k() == 1
    }
}
