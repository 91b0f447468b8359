//! Independent eigenvalue oracle for small Hermitian matrices: the
//! characteristic polynomial by Faddeev–LeVerrier and its real roots by
//! Newton's method with deflation.

use num::complex::Complex64;

use crate::rmt::HermitianMatrix;

/// Coefficients `c_0..c_n` (`c_n = 1`) of `det(tI − X)`.
pub fn char_poly(x: &HermitianMatrix) -> Vec<f64> {
    let n = x.dim();
    let zero = Complex64::new(0.0, 0.0);
    let mut c = vec![0.0; n + 1];
    c[n] = 1.0;
    let mut mk = vec![zero; n * n];
    for k in 1..=n {
        // M_k = X M_{k−1} + c_{n−k+1} I,  c_{n−k} = −tr(X M_k)/k
        let mut next = vec![zero; n * n];
        for i in 0..n {
            for j in 0..n {
                next[i * n + j] = (0..n).map(|l| x.get(i, l) * mk[l * n + j]).sum();
            }
            next[i * n + i] += c[n - k + 1];
        }
        mk = next;
        let tr: Complex64 = (0..n)
            .map(|i| (0..n).map(|l| x.get(i, l) * mk[l * n + i]).sum::<Complex64>())
            .sum();
        c[n - k] = -tr.re / k as f64;
    }
    c
}

fn horner(c: &[f64], t: f64) -> (f64, f64) {
    let mut p = 0.0;
    let mut dp = 0.0;
    for &a in c.iter().rev() {
        dp = dp * t + p;
        p = p * t + a;
    }
    (p, dp)
}

/// Roots, ascending, of a monic polynomial with only real roots. Newton
/// from above a Cauchy bound converges monotonically to the largest root;
/// each root is polished on the undeflated polynomial before deflating.
pub fn real_roots(c: &[f64]) -> Vec<f64> {
    let mut poly = c.to_vec();
    let mut roots = Vec::new();
    while poly.len() > 1 {
        let bound = 1.0 + poly[..poly.len() - 1].iter().map(|a| a.abs()).fold(0.0, f64::max);
        let mut t = bound;
        for _ in 0..10_000 {
            let (p, dp) = horner(&poly, t);
            if dp == 0.0 {
                break;
            }
            let step = p / dp;
            t -= step;
            if step.abs() <= 1e-15 * t.abs().max(1.0) {
                break;
            }
        }
        for _ in 0..5 {
            let (p, dp) = horner(c, t);
            if dp != 0.0 {
                t -= p / dp;
            }
        }
        roots.push(t);
        let d = poly.len() - 1;
        let mut q = vec![0.0; d];
        q[d - 1] = poly[d];
        for i in (1..d).rev() {
            q[i - 1] = poly[i] + t * q[i];
        }
        poly = q;
    }
    roots.sort_by(f64::total_cmp);
    roots
}

/// Roots of the characteristic polynomial of a `3×3` Hermitian matrix by
/// the trigonometric cubic formula, ascending.
pub fn cubic_roots(x: &HermitianMatrix) -> Vec<f64> {
    let c = char_poly(x);
    let (b, cc, d) = (c[2], c[1], c[0]);
    let p = cc - b * b / 3.0;
    let q = 2.0 * b.powi(3) / 27.0 - b * cc / 3.0 + d;
    if p.abs() < 1e-300 {
        return vec![-b / 3.0; 3];
    }
    let r = 2.0 * (-p / 3.0).sqrt();
    let arg = (3.0 * q / (2.0 * p) * (-3.0 / p).sqrt()).clamp(-1.0, 1.0);
    let phi = arg.acos() / 3.0;
    let mut roots: Vec<f64> = (0..3)
        .map(|k| r * (phi - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos() - b / 3.0)
        .collect();
    roots.sort_by(f64::total_cmp);
    roots
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn known_polynomial() {
        // (t − 1)(t + 2)(t − 3)
        let roots = real_roots(&[6.0, -5.0, -2.0, 1.0]);
        for (a, b) in roots.iter().zip([-2.0, 1.0, 3.0]) {
            assert!((a - b).abs() < 1e-12);
        }
    }

    #[test]
    fn diagonal_matrix() {
        let x = HermitianMatrix::from_real_rows(&[vec![2.0, 0.0, 0.0], vec![0.0, -1.0, 0.0], vec![0.0, 0.0, 0.5]])
            .unwrap();
        assert_eq!(char_poly(&x).len(), 4);
        for (a, b) in cubic_roots(&x).iter().zip([-1.0, 0.5, 2.0]) {
            assert!((a - b).abs() < 1e-12);
        }
    }
}
