use num::{BigInt, BigUint, One, ToPrimitive};

use crate::combinat::Partition;
use crate::{Error, Result};

fn factorial(n: u64) -> BigUint {
    (2..=n).fold(BigUint::one(), |acc, k| acc * k)
}

/// Number of standard Young tableaux of shape `λ` (with `|λ| = n` and at
/// most `m` rows):
///
/// `f^λ = N! ∏_{i<j} (λ_i − λ_j + j − i) / ∏_j (λ_j + M − j)!`
pub fn syt_count(shape: &Partition, m: usize, n: usize) -> Result<BigUint> {
    if shape.len() > m {
        return Err(Error::ShapeTooLong {
            parts: shape.len(),
            m,
        });
    }
    if shape.size() as usize != n {
        return Err(Error::InvalidPartition(format!(
            "{shape} has size {}, expected {n}",
            shape.size()
        )));
    }
    let lambda = shape.padded(m);
    let mut numer = BigInt::from(factorial(n as u64));
    for i in 0..m {
        for j in i + 1..m {
            numer *= lambda[i] as i64 - lambda[j] as i64 + (j - i) as i64;
        }
    }
    let denom = (0..m).fold(BigUint::one(), |acc, j| {
        acc * factorial(lambda[j] as u64 + (m - 1 - j) as u64)
    });
    let numer = numer.to_biguint().expect("product of positive factors");
    debug_assert!((&numer % &denom) == BigUint::from(0u32));
    Ok(numer / denom)
}

pub fn syt_count_f64(shape: &Partition, m: usize, n: usize) -> Result<f64> {
    Ok(syt_count(shape, m, n)?.to_f64().unwrap_or(f64::INFINITY))
}
