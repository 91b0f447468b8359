use std::fmt::Write as _;

use num::complex::Complex64;

use crate::{Error, Result};

/// Absolute tolerance (scaled by `max(1, max |a_ij|)`) for the Hermitian
/// check.
pub const HERMITIAN_TOLERANCE: f64 = 1e-12;

/// Block sizes `d_1..d_K` of a block-diagonal matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockSpec {
    dims: Vec<usize>,
}

impl BlockSpec {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() || dims.contains(&0) {
            return Err(Error::BlockMismatch(format!("block sizes {dims:?} must be positive")));
        }
        Ok(Self { dims })
    }

    pub fn single(n: usize) -> Self {
        Self { dims: vec![n] }
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Total dimension `M = Σ d_k`.
    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Offsets `m_k = Σ_{j<k} d_j`.
    pub fn offsets(&self) -> Vec<usize> {
        self.dims
            .iter()
            .scan(0, |acc, &d| {
                let start = *acc;
                *acc += d;
                Some(start)
            })
            .collect()
    }

    /// Block index of each row.
    pub fn block_of_rows(&self) -> Vec<usize> {
        self.dims
            .iter()
            .enumerate()
            .flat_map(|(k, &d)| std::iter::repeat_n(k, d))
            .collect()
    }
}

/// Dense complex Hermitian matrix stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct HermitianMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl HermitianMatrix {
    pub fn zeros(n: usize) -> Self {
        Self {
            n,
            data: vec![Complex64::new(0.0, 0.0); n * n],
        }
    }

    /// Validates Hermitian symmetry and a real diagonal.
    pub fn from_row_major(n: usize, data: Vec<Complex64>) -> Result<Self> {
        if data.len() != n * n {
            return Err(Error::Parse(format!("expected {} entries, got {}", n * n, data.len())));
        }
        let m = Self { n, data };
        m.check_hermitian()?;
        Ok(m)
    }

    pub fn from_real_rows(rows: &[Vec<f64>]) -> Result<Self> {
        let n = rows.len();
        let data = rows
            .iter()
            .flat_map(|r| r.iter().map(|&x| Complex64::new(x, 0.0)))
            .collect();
        Self::from_row_major(n, data)
    }

    #[cfg(test)]
    pub(crate) fn from_row_major_unchecked(n: usize, data: Vec<Complex64>) -> Self {
        Self { n, data }
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Complex64 {
        self.data[i * self.n + j]
    }

    /// Sets `a_ij` and `a_ji = conj(a_ij)`.
    pub fn set(&mut self, i: usize, j: usize, value: Complex64) {
        let value = if i == j { Complex64::new(value.re, 0.0) } else { value };
        self.data[i * self.n + j] = value;
        self.data[j * self.n + i] = value.conj();
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn check_hermitian(&self) -> Result<()> {
        let tol = HERMITIAN_TOLERANCE * self.max_abs().max(1.0);
        for i in 0..self.n {
            for j in i..self.n {
                let deviation = (self.get(i, j) - self.get(j, i).conj()).norm();
                if deviation > tol || !deviation.is_finite() {
                    return Err(Error::NotHermitian {
                        row: i,
                        col: j,
                        deviation,
                    });
                }
            }
        }
        Ok(())
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.get(i, i).re).sum()
    }

    pub fn frobenius_sq(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn diagonal(&self) -> Vec<f64> {
        (0..self.n).map(|i| self.get(i, i).re).collect()
    }

    /// Principal submatrix on rows and columns `start..start + len`.
    pub fn principal(&self, start: usize, len: usize) -> Self {
        let mut out = Self::zeros(len);
        for i in 0..len {
            for j in 0..len {
                out.data[i * len + j] = self.get(start + i, start + j);
            }
        }
        out
    }

    /// Largest modulus of an entry outside the diagonal blocks of `blocks`.
    pub fn off_block_max(&self, blocks: &BlockSpec) -> f64 {
        let owner = blocks.block_of_rows();
        let mut worst: f64 = 0.0;
        for i in 0..self.n {
            for j in 0..self.n {
                if owner[i] != owner[j] {
                    worst = worst.max(self.get(i, j).norm());
                }
            }
        }
        worst
    }

    /// Text form: `n` on the first line, then `n²` lines of `re im`,
    /// row-major.
    pub fn to_text(&self) -> String {
        let mut out = format!("{}\n", self.n);
        for z in &self.data {
            writeln!(out, "{:e} {:e}", z.re, z.im).unwrap();
        }
        out
    }

    pub fn from_text(text: &str) -> Result<Self> {
        let mut tokens = text.split_whitespace();
        let n: usize = tokens
            .next()
            .ok_or_else(|| Error::Parse("empty matrix text".into()))?
            .parse()
            .map_err(|e| Error::Parse(format!("dimension: {e}")))?;
        let values = tokens
            .map(|t| t.parse::<f64>().map_err(|e| Error::Parse(format!("entry {t:?}: {e}"))))
            .collect::<Result<Vec<f64>>>()?;
        if values.len() != 2 * n * n {
            return Err(Error::Parse(format!(
                "expected {} numbers after the dimension, got {}",
                2 * n * n,
                values.len()
            )));
        }
        let data = values.chunks(2).map(|c| Complex64::new(c[0], c[1])).collect();
        Self::from_row_major(n, data)
    }
}
