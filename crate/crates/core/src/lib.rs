//! Random words, Young tableaux and the spectra of block-diagonal and
//! generalized traceless GUE ensembles.
//!
//! The crate is organised around five modules:
//!
//! * [`combinat`]: alphabets, random words, RSK row insertion and Greene sums.
//! * [`exactdist`]: exact shape distributions (`f^λ`, Schur functions,
//!   the push-forward measure, the generalized Charlier ensemble).
//! * [`rmt`]: GUE samplers, the traceless transform, a Householder + QL
//!   Hermitian eigensolver and eigenvalue densities.
//! * [`brownian`]: Brownian increment grids with the word covariance and
//!   the last-passage functionals built on them.
//! * [`harness`]: Kolmogorov–Smirnov statistics, experiment configs and
//!   the Monte Carlo comparisons driven by the `tableaux-lab` binary.

pub mod brownian;
pub mod combinat;
pub mod error;
pub mod exactdist;
pub mod harness;
pub mod rmt;
pub mod rng;

pub use error::{Error, Result};
