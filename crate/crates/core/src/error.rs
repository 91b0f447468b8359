use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("probability at index {index} is not positive: {value}")]
    NonPositiveProbability { index: usize, value: f64 },

    #[error("probabilities sum to {sum}, expected 1")]
    SumNotOne { sum: f64 },

    #[error("empty probability vector")]
    EmptyAlphabet,

    #[error("instance too large for {what}: {size} exceeds limit {limit}")]
    InstanceTooLarge {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    #[error("brute-force oracle too large: {count} candidates exceed limit {limit}")]
    BruteForceTooLarge { count: u128, limit: u128 },

    #[error("shape has {parts} nonzero parts, more than the alphabet size {m}")]
    ShapeTooLong { parts: usize, m: usize },

    #[error("distinct probabilities {a} and {b} are closer than {gap}; merge them into one block")]
    DegenerateSeparation { a: f64, b: f64, gap: f64 },

    #[error("Poisson tail beyond n_max = {n_max} is {bound:e}, above {limit:e}")]
    TailNotNegligible { n_max: usize, bound: f64, limit: f64 },

    #[error("matrix block structure does not match the alphabet: {0}")]
    BlockMismatch(String),

    #[error("matrix is not Hermitian: |a_ij - conj(a_ji)| = {deviation:e} at ({row}, {col})")]
    NotHermitian { row: usize, col: usize, deviation: f64 },

    #[error("QL iteration did not converge for eigenvalue {index} after {iterations} iterations")]
    NoConvergence { index: usize, iterations: usize },

    #[error("sample set needs at least {needed} values, got {got}")]
    EmptySample { needed: usize, got: usize },

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("invalid word: {0}")]
    InvalidWord(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
