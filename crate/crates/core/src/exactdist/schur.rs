use num::{BigInt, BigRational, Num, One, ToPrimitive, Zero};

use crate::combinat::{AlphabetDistribution, Partition};
use crate::{Error, Result};

/// Distinct probabilities closer than this are rejected by the float
/// determinant route.
pub const SEPARATION_GAP: f64 = 1e-9;

const SSYT_MAX_SIZE: u32 = 12;
const SSYT_MAX_M: usize = 4;
const PERMUTATION_MAX_M: usize = 8;

#[derive(Debug, Clone, PartialEq)]
pub struct SchurValue {
    pub value: f64,
    pub shape: Partition,
    pub probs: Vec<f64>,
}

fn pow_signed<T: Num + Clone>(x: &T, e: i64) -> T {
    let p = num::pow(x.clone(), e.unsigned_abs() as usize);
    if e < 0 {
        T::one() / p
    } else {
        p
    }
}

/// Sum over all semi-standard fillings of `shape` with entries in
/// `0..weights.len()` of `∏ weights[entry]`.
fn ssyt_sum<T: Num + Clone>(shape: &Partition, weights: &[T]) -> T {
    let m = weights.len();
    let rows = shape.parts();
    if rows.len() > m {
        return T::zero();
    }
    let cells: Vec<(usize, usize)> = rows
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<usize>> = rows.iter().map(|&len| vec![0; len as usize]).collect();

    fn rec<T: Num + Clone>(
        at: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        weights: &[T],
        acc: T,
    ) -> T {
        let Some(&(r, c)) = cells.get(at) else {
            return acc;
        };
        let lo_row = if c > 0 { grid[r][c - 1] } else { 0 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 0 };
        let mut total = T::zero();
        for x in lo_row.max(lo_col)..weights.len() {
            grid[r][c] = x;
            total = total + rec(at + 1, cells, grid, weights, acc.clone() * weights[x].clone());
        }
        total
    }
    rec(0, &cells, &mut grid, weights, T::one())
}

fn check_ssyt_guard(shape: &Partition, m: usize) -> Result<()> {
    if shape.size() > SSYT_MAX_SIZE || m > SSYT_MAX_M {
        return Err(Error::InstanceTooLarge {
            what: "semi-standard tableau enumeration",
            size: shape.size().max(m as u32) as u128,
            limit: SSYT_MAX_SIZE as u128,
        });
    }
    Ok(())
}

/// `s_λ(p) = Σ_T ∏_i p_i^{#i in T}` over semi-standard tableaux `T`.
pub fn schur_ssyt(shape: &Partition, probs: &[f64]) -> Result<SchurValue> {
    check_ssyt_guard(shape, probs.len())?;
    Ok(SchurValue {
        value: ssyt_sum(shape, probs),
        shape: shape.clone(),
        probs: probs.to_vec(),
    })
}

pub fn schur_ssyt_exact(shape: &Partition, probs: &[BigRational]) -> Result<BigRational> {
    check_ssyt_guard(shape, probs.len())?;
    Ok(ssyt_sum(shape, probs))
}

/// Exponents of the alternant: `h_j = λ_j + M − j` per row and, per sorted
/// position `i`, the number `r_i` of later positions in the same block.
///
/// Entry `(j, i)` of the alternant is `q_i^{h_j − r_i} · h_j^{r_i}` for the
/// sorted probabilities `q`.
fn alternant_exponents(shape: &Partition, dist: &AlphabetDistribution) -> (Vec<i64>, Vec<i64>) {
    let m = dist.m();
    let lambda = shape.padded(m);
    let h = (0..m).map(|j| lambda[j] as i64 + (m - 1 - j) as i64).collect();
    let r = (0..m)
        .map(|pos| {
            let k = dist.block_of(pos);
            (dist.offsets()[k] + dist.mults()[k] - 1 - pos) as i64
        })
        .collect();
    (h, r)
}

fn alternant<T: Num + Clone>(
    shape: &Partition,
    dist: &AlphabetDistribution,
    sorted: &[T],
    from_int: impl Fn(i64) -> T,
) -> Vec<Vec<T>> {
    let (h, r) = alternant_exponents(shape, dist);
    h.iter()
        .map(|&hj| {
            sorted
                .iter()
                .zip(&r)
                .map(|(q, &ri)| {
                    if ri > 0 && hj == 0 {
                        T::zero()
                    } else {
                        pow_signed(q, hj - ri) * num::pow(from_int(hj), ri as usize)
                    }
                })
                .collect()
        })
        .collect()
}

/// `∏_k 0!·1!⋯(d_k − 1)!`
fn superfactorial_product(dist: &AlphabetDistribution) -> BigInt {
    dist.mults()
        .iter()
        .flat_map(|&d| 0..d)
        .map(|j| (1..=j as u64).fold(BigInt::one(), |a, x| a * x))
        .product()
}

fn gap_product<T: Num + Clone>(distinct: &[T], mults: &[usize]) -> T {
    let mut out = T::one();
    for k in 0..distinct.len() {
        for l in k + 1..distinct.len() {
            let diff = distinct[k].clone() - distinct[l].clone();
            out = out * num::pow(diff, mults[k] * mults[l]);
        }
    }
    out
}

fn det_lu(mut a: Vec<Vec<f64>>) -> f64 {
    let n = a.len();
    let mut det = 1.0;
    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&x, &y| a[x][col].abs().total_cmp(&a[y][col].abs()))
            .unwrap();
        if a[pivot][col] == 0.0 {
            return 0.0;
        }
        if pivot != col {
            a.swap(pivot, col);
            det = -det;
        }
        det *= a[col][col];
        for row in col + 1..n {
            let factor = a[row][col] / a[col][col];
            if factor != 0.0 {
                for c in col..n {
                    a[row][c] -= factor * a[col][c];
                }
            }
        }
    }
    det
}

/// Alternating sum over all permutations (Heap's algorithm).
fn det_permutations(a: &[Vec<BigRational>]) -> BigRational {
    let n = a.len();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut counters = vec![0usize; n];
    let mut sign = 1i32;
    let term = |perm: &[usize]| -> BigRational {
        let mut t = BigRational::one();
        for (col, &row) in perm.iter().enumerate() {
            let e = &a[row][col];
            if e.is_zero() {
                return BigRational::zero();
            }
            t *= e;
        }
        t
    };
    let mut total = term(&perm);
    let mut i = 1;
    while i < n {
        if counters[i] < i {
            let j = if i % 2 == 0 { 0 } else { counters[i] };
            perm.swap(j, i);
            sign = -sign;
            let t = term(&perm);
            if sign > 0 {
                total += t;
            } else {
                total -= t;
            }
            counters[i] += 1;
            i = 1;
        } else {
            counters[i] = 0;
            i += 1;
        }
    }
    total
}

/// Schur function at the τ-sorted probabilities with repeated values,
/// evaluated as a confluent alternant divided by
/// `∏_k 0!⋯(d_k−1)! · ∏_{k<l} (p^{(k)} − p^{(l)})^{d_k d_l}`.
///
/// The float route evaluates the alternant by LU with partial pivoting.
pub fn schur_repeated_det(shape: &Partition, dist: &AlphabetDistribution) -> Result<SchurValue> {
    let m = dist.m();
    let sorted = dist.sorted_probs();
    let value = if shape.len() > m {
        0.0
    } else {
        for w in dist.distinct().windows(2) {
            if (w[0] - w[1]).abs() <= SEPARATION_GAP {
                return Err(Error::DegenerateSeparation {
                    a: w[0],
                    b: w[1],
                    gap: SEPARATION_GAP,
                });
            }
        }
        let matrix = alternant(shape, dist, &sorted, |x| x as f64);
        let denom = superfactorial_product(dist).to_f64().unwrap()
            * gap_product(dist.distinct(), dist.mults());
        det_lu(matrix) / denom
    };
    Ok(SchurValue {
        value,
        shape: shape.clone(),
        probs: sorted,
    })
}

/// Rational route: the alternating sum is evaluated term by term over the
/// `M!` permutations, `M ≤ 8`.
pub fn schur_repeated_det_exact(shape: &Partition, dist: &AlphabetDistribution) -> Result<BigRational> {
    let m = dist.m();
    if shape.len() > m {
        return Ok(BigRational::zero());
    }
    if m > PERMUTATION_MAX_M {
        return Err(Error::InstanceTooLarge {
            what: "permutation alternating sum",
            size: m as u128,
            limit: PERMUTATION_MAX_M as u128,
        });
    }
    let matrix = alternant(shape, dist, &dist.sorted_exact(), |x| BigRational::from(BigInt::from(x)));
    let denom = BigRational::from(superfactorial_product(dist))
        * gap_product(dist.distinct_exact(), dist.mults());
    Ok(det_permutations(&matrix) / denom)
}
