use std::fmt;
use std::str::FromStr;

use rand::distr::weighted::WeightedIndex;
use rand::distr::Distribution;

use super::AlphabetDistribution;
use crate::rng::Rng;
use crate::{Error, Result};

/// A word of length `N` over the letters `1..=m`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Word {
    letters: Vec<u32>,
    m: usize,
}

impl Word {
    pub fn new(letters: Vec<u32>, m: usize) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|&&x| x == 0 || x as usize > m) {
            return Err(Error::InvalidWord(format!("letter {bad} outside 1..={m}")));
        }
        Ok(Self { letters, m })
    }

    pub fn letters(&self) -> &[u32] {
        &self.letters
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Parses comma-separated letters over an alphabet of size `m`.
    pub fn parse(text: &str, m: usize) -> Result<Self> {
        let text = text.trim();
        if text.is_empty() {
            return Self::new(Vec::new(), m);
        }
        let letters = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("letter {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(letters, m)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, x) in self.letters.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

impl FromStr for Word {
    type Err = Error;

    /// Parses comma-separated letters, taking the alphabet size to be the
    /// largest letter.
    fn from_str(s: &str) -> Result<Self> {
        let w = Self::parse(s, u32::MAX as usize)?;
        let m = w.letters.iter().copied().max().unwrap_or(1) as usize;
        Ok(Self { m, ..w })
    }
}

/// Draws `n` iid letters with `P(letter = j) = p_j`.
pub fn sample_word(dist: &AlphabetDistribution, n: usize, rng: &mut Rng) -> Word {
    let letters = sample_letters(dist, n, rng);
    Word {
        letters,
        m: dist.m(),
    }
}

pub(crate) fn sample_letters(dist: &AlphabetDistribution, n: usize, rng: &mut Rng) -> Vec<u32> {
    if dist.m() == 1 {
        return vec![1; n];
    }
    let index = WeightedIndex::new(dist.probs()).expect("probabilities are positive");
    (0..n).map(|_| index.sample(rng) as u32 + 1).collect()
}
