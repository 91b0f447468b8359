//! Top-eigenvalue and semicircle statistics of GUE.

use rayon::prelude::*;
use serde::Serialize;

use super::{eigvals, sample_chi, sample_gue};
use crate::rng::substream;
use crate::Result;

const STREAM_MATRICES: u64 = 0x5ca1;
const STREAM_CHI: u64 = 0xc41;

/// Minimum number of Monte Carlo draws of `max_k χ²_k`.
const CHI_TRIALS_MIN: usize = 2000;

/// Semicircle CDF `∫_{−2}^x √(4−t²)/(2π) dt`.
pub fn semicircle_cdf(x: f64) -> f64 {
    if x <= -2.0 {
        0.0
    } else if x >= 2.0 {
        1.0
    } else {
        0.5 + x * (4.0 - x * x).sqrt() / (4.0 * std::f64::consts::PI) + (x / 2.0).asin() / std::f64::consts::PI
    }
}

/// `1 + 2√(2 ln M / M)`.
pub fn chi_square_max_bound(m: usize) -> f64 {
    let m = m as f64;
    1.0 + 2.0 * (2.0 * m.ln() / m).sqrt()
}

#[derive(Debug, Clone, Serialize)]
pub struct ScalingReport {
    pub m: usize,
    pub trials: usize,
    /// `ξ_max/√M` per trial.
    pub scaled_max: Vec<f64>,
    pub mean_scaled_max: f64,
    /// Largest per-trial KS distance between the spectral measure of
    /// `X/√M` and the semicircle law.
    pub semicircle_ks: f64,
    pub semicircle_ks_mean: f64,
    pub chi_trials: usize,
    /// Monte Carlo `E[max_{k≤M} χ²_k]/M` over independent `χ²_k`.
    pub chi_max_mean: f64,
    pub chi_bound: f64,
}

fn ks_to_semicircle(sorted: &[f64]) -> f64 {
    let n = sorted.len() as f64;
    sorted
        .iter()
        .enumerate()
        .map(|(i, &x)| {
            let f = semicircle_cdf(x);
            (f - i as f64 / n).abs().max(((i + 1) as f64 / n - f).abs())
        })
        .fold(0.0, f64::max)
}

/// Runs `trials` independent `M×M` GUE draws (one substream per trial).
pub fn scaling_stats(m: usize, trials: usize, seed: u64) -> Result<ScalingReport> {
    let root = (m as f64).sqrt();
    let per_trial = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = substream(seed, STREAM_MATRICES, t as u64);
            let spec = eigvals(&sample_gue(m, &mut rng))?;
            let scaled: Vec<f64> = spec.values.iter().map(|v| v / root).collect();
            Ok((spec.max() / root, ks_to_semicircle(&scaled)))
        })
        .collect::<Result<Vec<(f64, f64)>>>()?;
    let scaled_max: Vec<f64> = per_trial.iter().map(|p| p.0).collect();
    let ks: Vec<f64> = per_trial.iter().map(|p| p.1).collect();

    let chi_trials = trials.max(CHI_TRIALS_MIN);
    let chi_max: Vec<f64> = (0..chi_trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = substream(seed, STREAM_CHI, t as u64);
            (1..=m).map(|k| sample_chi(k, &mut rng).powi(2)).fold(0.0, f64::max)
        })
        .collect();
    let chi_sum: f64 = chi_max.iter().sum();

    let nt = trials.max(1) as f64;
    Ok(ScalingReport {
        m,
        trials,
        mean_scaled_max: scaled_max.iter().sum::<f64>() / nt,
        scaled_max,
        semicircle_ks: ks.iter().copied().fold(0.0, f64::max),
        semicircle_ks_mean: ks.iter().sum::<f64>() / nt,
        chi_trials,
        chi_max_mean: chi_sum / chi_trials as f64 / m as f64,
        chi_bound: chi_square_max_bound(m),
    })
}
