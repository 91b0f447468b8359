//! Experiment runner: sampling, KS and moment comparisons, configuration
//! and CSV/JSON output.

pub mod checks;
mod config;
mod experiments;
pub mod oracle;
mod report;
pub mod samples;
mod stats;

pub use config::{Experiment, ExperimentConfig, Tolerances};
pub use experiments::{
    run, run_brownian_compare, run_exact_checks, run_limit_shape, run_poissonize, run_scaling,
    run_spectrum_compare, samples_to_csv,
};
pub use report::{ComparisonReport, CoordinateComparison, Criterion, RunOutput};
pub use stats::{ks_one_sample, ks_statistic, ks_two_sample, moments, KsTarget, Moments};
