//! Complex Householder reduction to a real symmetric tridiagonal matrix,
//! followed by implicit-shift QL.

use num::complex::Complex64;

use super::{HermitianMatrix, Spectrum};
use crate::{Error, Result};

/// Iteration cap per eigenvalue for the QL sweep.
pub const MAX_QL_ITERATIONS: usize = 50;

/// Real symmetric tridiagonal matrix with a nonnegative off-diagonal.
#[derive(Debug, Clone, PartialEq)]
pub struct TridiagonalModel {
    pub diag: Vec<f64>,
    pub offdiag: Vec<f64>,
}

impl TridiagonalModel {
    pub fn dim(&self) -> usize {
        self.diag.len()
    }

    pub fn to_matrix(&self) -> HermitianMatrix {
        let n = self.dim();
        let mut m = HermitianMatrix::zeros(n);
        for i in 0..n {
            m.set(i, i, Complex64::new(self.diag[i], 0.0));
            if i + 1 < n {
                m.set(i + 1, i, Complex64::new(self.offdiag[i], 0.0));
            }
        }
        m
    }

    pub fn trace(&self) -> f64 {
        self.diag.iter().sum()
    }

    pub fn frobenius_sq(&self) -> f64 {
        self.diag.iter().map(|x| x * x).sum::<f64>()
            + 2.0 * self.offdiag.iter().map(|x| x * x).sum::<f64>()
    }

    /// Geršgorin discs `[a_kk − r_k, a_kk + r_k]`, `r_k` the sum of the
    /// neighbouring off-diagonal entries.
    pub fn gershgorin_intervals(&self) -> Vec<(f64, f64)> {
        let n = self.dim();
        (0..n)
            .map(|k| {
                let left = if k > 0 { self.offdiag[k - 1].abs() } else { 0.0 };
                let right = if k + 1 < n { self.offdiag[k].abs() } else { 0.0 };
                (self.diag[k] - left - right, self.diag[k] + left + right)
            })
            .collect()
    }
}

/// Dense complex `n×n` matrix, row-major.
type CMatrix = Vec<Complex64>;

fn reduce(x: &HermitianMatrix, want_unitary: bool) -> Result<(TridiagonalModel, Option<CMatrix>)> {
    x.check_hermitian()?;
    let n = x.dim();
    let mut a: CMatrix = x.as_slice().to_vec();
    let zero = Complex64::new(0.0, 0.0);
    let mut q: Option<CMatrix> = want_unitary.then(|| {
        let mut id = vec![zero; n * n];
        for i in 0..n {
            id[i * n + i] = Complex64::new(1.0, 0.0);
        }
        id
    });

    for k in 0..n.saturating_sub(2) {
        let len = n - k - 1;
        let col: Vec<Complex64> = (0..len).map(|i| a[(k + 1 + i) * n + k]).collect();
        let tail: f64 = col[1..].iter().map(|z| z.norm_sqr()).sum();
        if tail == 0.0 {
            continue;
        }
        let norm = (col[0].norm_sqr() + tail).sqrt();
        let phase = if col[0].norm() > 0.0 {
            col[0] / col[0].norm()
        } else {
            Complex64::new(1.0, 0.0)
        };
        let alpha = -phase * norm;
        let mut v = col;
        v[0] -= alpha;
        let vnorm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        for z in &mut v {
            *z /= vnorm;
        }

        // trailing block B ← H B H with H = I − 2vv*
        let base = k + 1;
        let p: Vec<Complex64> = (0..len)
            .map(|i| (0..len).map(|j| a[(base + i) * n + base + j] * v[j]).sum())
            .collect();
        let c: Complex64 = v.iter().zip(&p).map(|(vi, pi)| vi.conj() * pi).sum();
        let w: Vec<Complex64> = p.iter().zip(&v).map(|(pi, vi)| pi - c.re * vi).collect();
        for i in 0..len {
            for j in 0..len {
                a[(base + i) * n + base + j] -= 2.0 * (v[i] * w[j].conj() + w[i] * v[j].conj());
            }
        }
        a[(base) * n + k] = alpha;
        a[k * n + base] = alpha.conj();
        for i in 1..len {
            a[(base + i) * n + k] = zero;
            a[k * n + base + i] = zero;
        }

        if let Some(q) = q.as_mut() {
            // Q ← Q H on columns base..n
            for row in 0..n {
                let dot: Complex64 = (0..len).map(|j| q[row * n + base + j] * v[j]).sum();
                for j in 0..len {
                    q[row * n + base + j] -= 2.0 * dot * v[j].conj();
                }
            }
        }
    }

    // diagonal similarity D making the off-diagonal real and nonnegative
    let diag: Vec<f64> = (0..n).map(|i| a[i * n + i].re).collect();
    let mut offdiag = Vec::with_capacity(n.saturating_sub(1));
    let mut phase = Complex64::new(1.0, 0.0);
    let mut phases = vec![phase; n];
    for k in 0..n.saturating_sub(1) {
        let e = a[(k + 1) * n + k];
        offdiag.push(e.norm());
        if e.norm() > 0.0 {
            phase *= e / e.norm();
        }
        phases[k + 1] = phase;
    }
    if let Some(q) = q.as_mut() {
        for row in 0..n {
            for col in 0..n {
                q[row * n + col] *= phases[col];
            }
        }
    }
    Ok((TridiagonalModel { diag, offdiag }, q))
}

/// Unitary reduction to a real tridiagonal matrix with nonnegative
/// off-diagonal entries.
pub fn householder_tridiagonalize(x: &HermitianMatrix) -> Result<TridiagonalModel> {
    reduce(x, false).map(|(t, _)| t)
}

/// As [`householder_tridiagonalize`], also returning the unitary `U`
/// (row-major) with `U* X U = T`.
pub fn tridiagonalize_with_unitary(x: &HermitianMatrix) -> Result<(TridiagonalModel, Vec<Complex64>)> {
    reduce(x, true).map(|(t, q)| (t, q.expect("requested")))
}

/// Implicit QL with Wilkinson-type shifts on a symmetric tridiagonal
/// matrix. Overwrites `d` with the (unsorted) eigenvalues; if `z` is given
/// (row-major `n×n`), its columns are rotated alongside.
fn tql(d: &mut [f64], offdiag: &[f64], mut z: Option<&mut [f64]>) -> Result<()> {
    let n = d.len();
    if n <= 1 {
        return Ok(());
    }
    let mut e = offdiag.to_vec();
    e.push(0.0);
    for l in 0..n {
        let mut iterations = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iterations += 1;
            if iterations > MAX_QL_ITERATIONS {
                return Err(Error::NoConvergence {
                    index: l,
                    iterations: MAX_QL_ITERATIONS,
                });
            }
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            for i in (l..m).rev() {
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
                if let Some(z) = z.as_deref_mut() {
                    for k in 0..n {
                        let f = z[k * n + i + 1];
                        z[k * n + i + 1] = s * z[k * n + i] + c * f;
                        z[k * n + i] = c * z[k * n + i] - s * f;
                    }
                }
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    Ok(())
}

/// Eigenvalues of a tridiagonal model, ascending.
pub fn eigvals_tridiagonal(t: &TridiagonalModel) -> Result<Vec<f64>> {
    let mut d = t.diag.clone();
    tql(&mut d, &t.offdiag, None)?;
    d.sort_by(f64::total_cmp);
    Ok(d)
}

/// All eigenvalues of a Hermitian matrix, ascending.
pub fn eigvals(x: &HermitianMatrix) -> Result<Spectrum> {
    let t = householder_tridiagonalize(x)?;
    Ok(Spectrum::unordered(eigvals_tridiagonal(&t)?))
}

/// Eigenvalues (ascending) with orthonormal eigenvectors.
#[derive(Debug, Clone)]
pub struct Eigen {
    pub values: Vec<f64>,
    /// Column `j` (row-major storage) is the eigenvector of `values[j]`.
    pub vectors: Vec<Complex64>,
}

impl Eigen {
    pub fn vector(&self, j: usize) -> Vec<Complex64> {
        let n = self.values.len();
        (0..n).map(|i| self.vectors[i * n + j]).collect()
    }

    /// `‖(X − λ_j I) v_j‖₂`
    pub fn residual(&self, x: &HermitianMatrix, j: usize) -> f64 {
        let n = x.dim();
        let v = self.vector(j);
        (0..n)
            .map(|i| {
                let xv: Complex64 = (0..n).map(|k| x.get(i, k) * v[k]).sum();
                (xv - self.values[j] * v[i]).norm_sqr()
            })
            .sum::<f64>()
            .sqrt()
    }
}

pub fn eigh(x: &HermitianMatrix) -> Result<Eigen> {
    let n = x.dim();
    let (t, u) = tridiagonalize_with_unitary(x)?;
    let mut d = t.diag.clone();
    let mut z = vec![0.0; n * n];
    for i in 0..n {
        z[i * n + i] = 1.0;
    }
    tql(&mut d, &t.offdiag, Some(&mut z))?;
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| d[a].total_cmp(&d[b]));
    let values = order.iter().map(|&j| d[j]).collect();
    let mut vectors = vec![Complex64::new(0.0, 0.0); n * n];
    for (out_col, &j) in order.iter().enumerate() {
        for row in 0..n {
            vectors[row * n + out_col] = (0..n).map(|k| u[row * n + k] * z[k * n + j]).sum();
        }
    }
    Ok(Eigen { values, vectors })
}
