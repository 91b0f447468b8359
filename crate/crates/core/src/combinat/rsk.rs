use super::{Partition, Word};

/// Output of RSK row insertion: the insertion tableau `P` (semi-standard,
/// filled with letters) and the recording tableau `Q` (standard, filled
/// with positions `1..=N`).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TableauPair {
    pub p_tableau: Vec<Vec<u32>>,
    pub q_tableau: Vec<Vec<u32>>,
    pub shape: Partition,
}

impl TableauPair {
    /// Checks the tableau invariants: equal shapes, `P` rows weakly
    /// increasing, `Q` rows strictly increasing, strictly increasing columns
    /// in both, and `Q` standard.
    pub fn is_valid(&self) -> bool {
        let shape_of = |t: &Vec<Vec<u32>>| t.iter().map(|r| r.len() as u32).collect::<Vec<_>>();
        if shape_of(&self.p_tableau) != self.shape.parts()
            || shape_of(&self.q_tableau) != self.shape.parts()
        {
            return false;
        }
        let rows_ok = |t: &Vec<Vec<u32>>, strict: bool| {
            t.iter().all(|r| {
                r.windows(2)
                    .all(|w| if strict { w[0] < w[1] } else { w[0] <= w[1] })
            })
        };
        let cols_ok = |t: &Vec<Vec<u32>>| {
            t.windows(2)
                .all(|rows| rows[1].iter().zip(&rows[0]).all(|(below, above)| below > above))
        };
        if !rows_ok(&self.p_tableau, false) || !rows_ok(&self.q_tableau, true) {
            return false;
        }
        if !cols_ok(&self.p_tableau) || !cols_ok(&self.q_tableau) {
            return false;
        }
        let n = self.shape.size() as usize;
        let mut seen = vec![false; n];
        for &x in self.q_tableau.iter().flatten() {
            if x == 0 || x as usize > n || seen[x as usize - 1] {
                return false;
            }
            seen[x as usize - 1] = true;
        }
        true
    }
}

/// Robinson–Schensted row insertion of a word.
///
/// Inserting `x` into a row bumps the leftmost entry strictly greater than
/// `x`, so rows of `P` are weakly increasing and `λ_1` is the length of the
/// longest weakly increasing subsequence.
pub fn rsk(word: &Word) -> TableauPair {
    let mut p: Vec<Vec<u32>> = Vec::new();
    let mut q: Vec<Vec<u32>> = Vec::new();
    for (pos, &letter) in word.letters().iter().enumerate() {
        let mut x = letter;
        let mut row = 0;
        loop {
            if row == p.len() {
                p.push(vec![x]);
                q.push(vec![pos as u32 + 1]);
                break;
            }
            let r = &mut p[row];
            let at = r.partition_point(|&y| y <= x);
            if at == r.len() {
                r.push(x);
                q[row].push(pos as u32 + 1);
                break;
            }
            x = std::mem::replace(&mut r[at], x);
            row += 1;
        }
    }
    let shape = Partition::new(p.iter().map(|r| r.len() as u32).collect())
        .expect("row lengths of a tableau are weakly decreasing");
    TableauPair {
        p_tableau: p,
        q_tableau: q,
        shape,
    }
}

/// Shape-only RSK for words over a small alphabet.
///
/// Each row of `P` is kept as a vector of letter counts, so an insertion
/// costs `O(M)` per row regardless of the word length. Used by the Monte
/// Carlo loops where only `λ` matters.
#[derive(Debug, Clone)]
pub struct ShapeInserter {
    m: usize,
    counts: Vec<Vec<u32>>,
    lengths: Vec<u32>,
}

impl ShapeInserter {
    pub fn new(m: usize) -> Self {
        Self {
            m,
            counts: vec![vec![0; m]; m],
            lengths: vec![0; m],
        }
    }

    /// Inserts a 1-based letter.
    pub fn insert(&mut self, letter: u32) {
        let mut x = letter as usize - 1;
        for row in 0..self.m {
            let counts = &mut self.counts[row];
            let bumped = (x + 1..self.m).find(|&y| counts[y] > 0);
            counts[x] += 1;
            match bumped {
                Some(y) => {
                    counts[y] -= 1;
                    x = y;
                }
                None => {
                    self.lengths[row] += 1;
                    return;
                }
            }
        }
        unreachable!("a column of P cannot exceed the alphabet size");
    }

    /// Row lengths `λ_1..λ_M` (zeros included).
    pub fn lengths(&self) -> &[u32] {
        &self.lengths
    }

    pub fn shape(&self) -> Partition {
        Partition::new(self.lengths.clone()).expect("row lengths are weakly decreasing")
    }
}

/// Shape of the RSK tableaux of `letters` over the alphabet `1..=m`.
pub fn rsk_shape(letters: &[u32], m: usize) -> Partition {
    let mut ins = ShapeInserter::new(m);
    for &x in letters {
        ins.insert(x);
    }
    ins.shape()
}

/// Length of the longest weakly increasing subsequence (patience sorting).
pub fn longest_weakly_increasing(letters: &[u32]) -> usize {
    let mut tops: Vec<u32> = Vec::new();
    for &x in letters {
        let at = tops.partition_point(|&y| y <= x);
        if at == tops.len() {
            tops.push(x);
        } else {
            tops[at] = x;
        }
    }
    tops.len()
}
