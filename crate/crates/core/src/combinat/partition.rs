use std::fmt;

use crate::{Error, Result};

/// Weakly decreasing sequence of nonnegative integers.
///
/// Trailing zeros are stripped on construction so that `(2,1)` and
/// `(2,1,0)` compare equal; use [`padded`](Self::padded) to get a fixed
/// length.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition {
    parts: Vec<u32>,
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Nonzero parts.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// `λ_i` with 1-based `i`; zero past the last part.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i - 1).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `m` (`m ≥ len`).
    pub fn padded(&self, m: usize) -> Vec<u32> {
        let mut v = self.parts.clone();
        v.resize(m.max(v.len()), 0);
        v
    }

    /// Parses comma-separated parts, optionally in parentheses.
    pub fn parse(text: &str) -> Result<Self> {
        let text = text.trim();
        let text = text
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .unwrap_or(text)
            .trim();
        if text.is_empty() {
            return Ok(Self::empty());
        }
        let parts = text
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|e| Error::Parse(format!("part {t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(parts)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, x) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
        }
        f.write_str(")")
    }
}

/// All partitions of `n` with at most `max_parts` nonzero parts, in
/// reverse lexicographic order.
pub fn partitions(n: u32, max_parts: usize) -> Vec<Partition> {
    fn rec(remaining: u32, cap: u32, slots: usize, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if slots == 0 {
            return;
        }
        for part in (1..=remaining.min(cap)).rev() {
            // the remaining slots must be able to hold what is left
            if (part as u64) * (slots as u64) < remaining as u64 {
                break;
            }
            cur.push(part);
            rec(remaining - part, part, slots - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, max_parts, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn strips_trailing_zeros() {
        let a = Partition::new(vec![2, 1, 0, 0]).unwrap();
        let b = Partition::new(vec![2, 1]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.padded(4), vec![2, 1, 0, 0]);
        assert_eq!(a.size(), 3);
        assert_eq!(a.part(3), 0);
    }

    #[test]
    fn rejects_increasing() {
        assert!(Partition::new(vec![1, 2]).is_err());
    }

    #[test]
    fn partition_counts() {
        // p(n) for n = 0..10
        let expected = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42];
        for (n, &c) in expected.iter().enumerate() {
            assert_eq!(partitions(n as u32, n.max(1)).len(), c, "n = {n}");
        }
        // at most 2 parts: floor(n/2) + 1
        assert_eq!(partitions(9, 2).len(), 5);
        assert_eq!(partitions(0, 0).len(), 1);
        assert_eq!(partitions(3, 0).len(), 0);
    }

    #[test]
    fn display_and_parse() {
        let p = Partition::parse("3,1,0").unwrap();
        assert_eq!(p.to_string(), "(3,1)");
        assert!(Partition::parse("").unwrap().is_empty());
    }
}
