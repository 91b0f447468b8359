//! Exact finite-`N` shape distributions.
//!
//! `P_{M,N}(λ) = s_λ(p) · f^λ`, where `f^λ` counts standard tableaux and
//! `s_λ(p)` is the Schur function evaluated at the τ-sorted probabilities.
//! Its Poissonization is the generalized Charlier ensemble.

mod pmf;
mod poisson;
mod schur;
mod syt;

pub use pmf::{shape_pmf, shape_pmf_exact, ExactPmf, Pmf, PmfMeta, MAX_SUPPORT};
pub use poisson::{
    charlier_pmf, default_n_max, depoisson_monotonicity_check, ln_factorial, poisson_tail_bound,
    poissonize_pmf, DePoissonReport, TAIL_LIMIT,
};
pub use schur::{
    schur_repeated_det, schur_repeated_det_exact, schur_ssyt, schur_ssyt_exact, SchurValue,
    SEPARATION_GAP,
};
pub use syt::{syt_count, syt_count_f64};
