//! Greene sums `G^l(M, N)`: the largest number of ones of the word's
//! indicator matrix covered by `l` vertex-disjoint up/right lattice paths.
//!
//! The grid has columns `1..=N` (positions) and rows `1..=M` (letters), with
//! a one at `(i, W(i))`. Paths start anywhere in column 1 and end anywhere
//! in column `N`; being vertex-disjoint they stay ordered bottom to top.

use super::Word;
use crate::{Error, Result};

/// Largest `M·N` accepted by the path-family enumeration.
pub const BRUTE_FORCE_CELLS: usize = 64;
/// Largest alphabet accepted by the column-front DP.
pub const DP_MAX_M: usize = 6;
/// Longest word accepted by the column-front DP.
pub const DP_MAX_N: usize = 200;

fn check_level(word: &Word, l: usize) -> Result<()> {
    if l == 0 || l > word.m() {
        return Err(Error::Config(format!("path count l = {l} must lie in 1..={}", word.m())));
    }
    Ok(())
}

/// Strictly increasing `l`-subsets of `0..m`.
fn increasing_tuples(m: usize, l: usize) -> Vec<Vec<u8>> {
    fn rec(start: usize, m: usize, l: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == l {
            out.push(cur.clone());
            return;
        }
        for r in start..m {
            cur.push(r as u8);
            rec(r + 1, m, l, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, m, l, &mut Vec::new(), &mut out);
    out
}

/// Column-front DP.
///
/// The state after column `i` is the tuple of rows at which the `l` paths
/// leave that column. Within column `i + 1` path `s` occupies the vertical
/// interval from its entry row (the previous exit row) to its new exit row;
/// intervals of distinct paths must not overlap.
pub fn greene_sums(word: &Word, l: usize) -> Result<usize> {
    check_level(word, l)?;
    let (m, n) = (word.m(), word.len());
    if m > DP_MAX_M || n > DP_MAX_N {
        return Err(Error::InstanceTooLarge {
            what: "greene_sums DP",
            size: (m * n) as u128,
            limit: (DP_MAX_M * DP_MAX_N) as u128,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let states = increasing_tuples(m, l);

    // transitions[b] lists entry states a compatible with exit state b
    let compatible = |a: &[u8], b: &[u8]| {
        (0..l).all(|s| a[s] <= b[s] && (s + 1 == l || b[s] < a[s + 1]))
    };
    let transitions: Vec<Vec<usize>> = states
        .iter()
        .map(|b| {
            (0..states.len())
                .filter(|&ai| compatible(&states[ai], b))
                .collect()
        })
        .collect();

    // entry rows into column 1 are free
    let mut value = vec![0usize; states.len()];
    for &letter in word.letters() {
        let row = letter as u8 - 1;
        value = states
            .iter()
            .zip(&transitions)
            .map(|(b, from)| {
                from.iter()
                    .map(|&ai| {
                        let a = &states[ai];
                        let hit = (0..l).any(|s| a[s] <= row && row <= b[s]);
                        value[ai] + hit as usize
                    })
                    .max()
                    .expect("b is compatible with itself")
            })
            .collect();
    }
    Ok(value.into_iter().max().expect("at least one state"))
}

/// Exhaustive enumeration of path families, each path a bitmask over the
/// `M·N ≤ 64` grid cells.
pub fn greene_sums_brute(word: &Word, l: usize) -> Result<usize> {
    check_level(word, l)?;
    let (m, n) = (word.m(), word.len());
    if m * n > BRUTE_FORCE_CELLS {
        return Err(Error::InstanceTooLarge {
            what: "greene_sums path enumeration",
            size: (m * n) as u128,
            limit: BRUTE_FORCE_CELLS as u128,
        });
    }
    if n == 0 {
        return Ok(0);
    }
    let ones: u64 = word
        .letters()
        .iter()
        .enumerate()
        .fold(0, |acc, (col, &x)| acc | 1u64 << (col * m + x as usize - 1));

    // every up/right path from column 0 to column n-1, keyed by start row
    fn paths(col: usize, row: usize, m: usize, n: usize, mask: u64, out: &mut Vec<u64>) {
        let mask = mask | 1u64 << (col * m + row);
        if col == n - 1 {
            out.push(mask);
        } else {
            paths(col + 1, row, m, n, mask, out);
        }
        if row + 1 < m {
            paths(col, row + 1, m, n, mask, out);
        }
    }
    let by_start: Vec<Vec<u64>> = (0..m)
        .map(|a| {
            let mut out = Vec::new();
            paths(0, a, m, n, 0, &mut out);
            out
        })
        .collect();

    // start rows strictly increase with the path index
    fn best(left: usize, min_start: usize, used: u64, ones: u64, by_start: &[Vec<u64>]) -> Option<usize> {
        if left == 0 {
            return Some((used & ones).count_ones() as usize);
        }
        (min_start..by_start.len())
            .flat_map(|a| by_start[a].iter())
            .filter(|&&p| p & used == 0)
            .filter_map(|&p| {
                let a = (p & (1u64 << by_start.len()) - 1).trailing_zeros() as usize;
                best(left - 1, a + 1, used | p, ones, by_start)
            })
            .max()
    }
    Ok(best(l, 0, 0, ones, &by_start).expect("horizontal paths are always disjoint"))
}

/// Greene sum by path enumeration when `M·N ≤ 64`, else by the DP.
pub fn greene_sums_oracle(word: &Word, l: usize) -> Result<usize> {
    if word.m() * word.len() <= BRUTE_FORCE_CELLS {
        greene_sums_brute(word, l)
    } else {
        greene_sums(word, l)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::rsk;
    use proptest::prelude::*;

    fn word(letters: &[u32], m: usize) -> Word {
        Word::new(letters.to_vec(), m).unwrap()
    }

    #[test]
    fn small_word() {
        let w = word(&[2, 1, 2, 2], 2);
        assert_eq!(greene_sums_brute(&w, 1).unwrap(), 3);
        assert_eq!(greene_sums_brute(&w, 2).unwrap(), 4);
        assert_eq!(greene_sums(&w, 1).unwrap(), 3);
        assert_eq!(greene_sums(&w, 2).unwrap(), 4);
    }

    #[test]
    fn all_rows_cover_everything() {
        let w = word(&[3, 1, 2, 3, 3, 1], 3);
        assert_eq!(greene_sums(&w, 3).unwrap(), 6);
        assert_eq!(greene_sums_oracle(&w, 3).unwrap(), 6);
    }

    #[test]
    fn guards() {
        let w = word(&[1; 40], 2);
        assert!(matches!(greene_sums_brute(&w, 1), Err(Error::InstanceTooLarge { .. })));
        assert_eq!(greene_sums_oracle(&w, 1).unwrap(), 40);
        assert!(greene_sums(&w, 0).is_err());
        assert!(greene_sums(&w, 3).is_err());
        let long = word(&[1; 201], 2);
        assert!(matches!(greene_sums(&long, 1), Err(Error::InstanceTooLarge { .. })));
    }

    #[test]
    fn exhaustive_binary_words() {
        for n in 0..=8u32 {
            for code in 0u32..1 << n {
                let letters: Vec<u32> = (0..n).map(|i| (code >> i & 1) + 1).collect();
                let w = word(&letters, 2);
                let shape = rsk(&w).shape;
                for l in 1..=2 {
                    let expect: u32 = (1..=l).map(|i| shape.part(i)).sum();
                    assert_eq!(greene_sums_brute(&w, l).unwrap() as u32, expect, "{w} l={l}");
                    assert_eq!(greene_sums(&w, l).unwrap() as u32, expect, "{w} l={l}");
                }
            }
        }
    }

    proptest! {
        #[test]
        fn dp_matches_path_enumeration(letters in prop::collection::vec(1u32..=4, 0..12), l in 1usize..=4) {
            let w = word(&letters, 4);
            prop_assert_eq!(greene_sums(&w, l).unwrap(), greene_sums_brute(&w, l).unwrap());
        }

        #[test]
        fn dp_matches_rsk_on_longer_words(letters in prop::collection::vec(1u32..=6, 0..120), l in 1usize..=6) {
            let w = word(&letters, 6);
            let shape = rsk(&w).shape;
            let expect: u32 = (1..=l).map(|i| shape.part(i)).sum();
            prop_assert_eq!(greene_sums(&w, l).unwrap() as u32, expect);
        }
    }
}
