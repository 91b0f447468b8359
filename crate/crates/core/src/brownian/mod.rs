//! Discretized Brownian motion with the word covariance and its
//! last-passage functionals `L̂^l_M`.

mod grid;
mod lhat;

pub use grid::{sample_increment_grid, IncrementGrid};
pub use lhat::{
    lhat, lhat_brute, lhat_samples_to_csv, lhat_shape_sample, SubdivisionIndex, BRUTE_FORCE_LIMIT,
};
