use std::fmt;
use std::path::Path;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::combinat::AlphabetDistribution;
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Experiment {
    LimitShape,
    SpectrumCompare,
    Poissonize,
    Scaling,
    ExactChecks,
    BrownianCompare,
}

impl Experiment {
    pub const ALL: [Experiment; 6] = [
        Experiment::LimitShape,
        Experiment::SpectrumCompare,
        Experiment::Poissonize,
        Experiment::Scaling,
        Experiment::ExactChecks,
        Experiment::BrownianCompare,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Experiment::LimitShape => "limit-shape",
            Experiment::SpectrumCompare => "spectrum-compare",
            Experiment::Poissonize => "poissonize",
            Experiment::Scaling => "scaling",
            Experiment::ExactChecks => "exact-checks",
            Experiment::BrownianCompare => "brownian-compare",
        }
    }
}

impl fmt::Display for Experiment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Experiment {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|e| e.name() == s)
            .ok_or_else(|| Error::Config(format!("unknown experiment {s:?}")))
    }
}

/// Pass/fail thresholds. Defaults are the acceptance values.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct Tolerances {
    /// Atomwise gap between the closed-form pmf and word enumeration.
    pub exact_atom: f64,
    /// Relative gap between the determinant and tableau-sum Schur values.
    pub schur_relative: f64,
    /// Atomwise gap between the Poissonized pmf and the Charlier weights.
    pub charlier_atom: f64,
    /// Eigenvalue gap against the characteristic-polynomial roots.
    pub eigen_absolute: f64,
    pub ks_tridiagonal: f64,
    /// Per-draw agreement of the two shift formulas and the weighted sum.
    pub shift: f64,
    pub ks_decomposition: f64,
    /// Covariance band in standard errors.
    pub covariance_sigmas: f64,
    pub density_normalization: f64,
    pub ks_limit_shape: f64,
    pub ks_poissonize: f64,
    /// Relative band for the mean of `λ₁` around `αp_max + 2√(d₁αp_max)`.
    pub poisson_mean_relative: f64,
    pub brute_force: f64,
    pub ks_brownian: f64,
    /// KS between lhat samples at `grid_n/2` and `grid_n`.
    pub ks_refinement: f64,
    pub scaled_max_low: f64,
    pub scaled_max_high: f64,
    pub ks_semicircle: f64,
    pub ks_stabilization: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self {
            exact_atom: 1e-10,
            schur_relative: 1e-9,
            charlier_atom: 1e-8,
            eigen_absolute: 1e-9,
            ks_tridiagonal: 0.02,
            shift: 1e-9,
            ks_decomposition: 0.015,
            covariance_sigmas: 3.0,
            density_normalization: 1e-3,
            ks_limit_shape: 0.05,
            ks_poissonize: 0.06,
            poisson_mean_relative: 0.10,
            brute_force: 1e-12,
            ks_brownian: 0.05,
            ks_refinement: 0.03,
            scaled_max_low: 1.85,
            scaled_max_high: 2.05,
            ks_semicircle: 0.06,
            ks_stabilization: 0.1,
        }
    }
}

fn default_grid_n() -> usize {
    2000
}
fn default_d1_values() -> Vec<usize> {
    vec![10, 50, 200]
}
fn default_scaling_n() -> usize {
    100_000
}
fn default_scaling_samples() -> usize {
    2000
}
fn default_concentration_n() -> usize {
    10_000
}
fn default_matrix_m() -> usize {
    200
}
fn default_matrix_trials() -> usize {
    50
}
fn default_chi_m() -> usize {
    100
}
fn default_exact_alpha() -> f64 {
    5.0
}

/// Experiment configuration, read from JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ExperimentConfig {
    /// May be omitted when the experiment is given on the command line.
    #[serde(default)]
    pub experiment: Option<Experiment>,
    pub probs: Vec<f64>,
    /// Word length `N`.
    pub n_word: usize,
    pub samples: usize,
    #[serde(default = "default_grid_n")]
    pub grid_n: usize,
    /// Poisson mean for Poissonized runs.
    #[serde(default)]
    pub alpha: Option<f64>,
    #[serde(default)]
    pub seed: u64,
    /// Run the exact identities in rational arithmetic as well.
    #[serde(default)]
    pub exact_rational: bool,
    /// Alphabet sizes for the longest-increasing-subsequence scaling run.
    #[serde(default = "default_d1_values")]
    pub d1_values: Vec<usize>,
    /// Word length for the scaling run.
    #[serde(default = "default_scaling_n")]
    pub scaling_n: usize,
    #[serde(default = "default_scaling_samples")]
    pub scaling_samples: usize,
    /// Word length for the concentration check.
    #[serde(default = "default_concentration_n")]
    pub concentration_n: usize,
    /// GUE size and trial count for the top-eigenvalue statistics.
    #[serde(default = "default_matrix_m")]
    pub matrix_m: usize,
    #[serde(default = "default_matrix_trials")]
    pub matrix_trials: usize,
    /// `M` for the Monte Carlo `E[max χ²_k]/M`.
    #[serde(default = "default_chi_m")]
    pub chi_m: usize,
    /// Poisson mean for the atomwise Charlier check.
    #[serde(default = "default_exact_alpha")]
    pub exact_alpha: f64,
    #[serde(default)]
    pub tolerances: Tolerances,
}

impl ExperimentConfig {
    /// A configuration with every optional field at its default.
    pub fn new(experiment: Experiment, probs: Vec<f64>, n_word: usize, samples: usize, seed: u64) -> Self {
        Self {
            experiment: Some(experiment),
            probs,
            n_word,
            samples,
            grid_n: default_grid_n(),
            alpha: None,
            seed,
            exact_rational: false,
            d1_values: default_d1_values(),
            scaling_n: default_scaling_n(),
            scaling_samples: default_scaling_samples(),
            concentration_n: default_concentration_n(),
            matrix_m: default_matrix_m(),
            matrix_trials: default_matrix_trials(),
            chi_m: default_chi_m(),
            exact_alpha: default_exact_alpha(),
            tolerances: Tolerances::default(),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let cfg: Self = serde_json::from_str(text)?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn load(path: &Path) -> Result<Self> {
        Self::from_json(&std::fs::read_to_string(path)?)
    }

    pub fn validate(&self) -> Result<()> {
        AlphabetDistribution::new(&self.probs)?;
        if self.samples < 2 {
            return Err(Error::Config(format!("samples = {} but at least 2 are needed", self.samples)));
        }
        if self.grid_n == 0 {
            return Err(Error::Config("grid_n must be positive".into()));
        }
        if let Some(a) = self.alpha {
            if !(a > 0.0 && a.is_finite()) {
                return Err(Error::Config(format!("alpha = {a} must be positive")));
            }
        }
        if self.d1_values.contains(&0) {
            return Err(Error::Config("d1_values must be positive".into()));
        }
        Ok(())
    }

    pub fn dist(&self) -> Result<AlphabetDistribution> {
        AlphabetDistribution::new(&self.probs)
    }
}
