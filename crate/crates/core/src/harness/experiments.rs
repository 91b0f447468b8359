//! The six experiments behind the command line.

use std::fmt::Write as _;

use super::checks;
use super::report::{ComparisonReport, CoordinateComparison, Criterion, RunOutput};
use super::samples::{self, column, stream};
use super::stats::ks_two_sample;
use super::{Experiment, ExperimentConfig};
use crate::combinat::{sample_letters, Word};
use crate::exactdist::{poissonize_pmf, shape_pmf};
use crate::rmt::{ordered_block_spectrum, sample_block_gue, BlockSpec};
use crate::rng::substream;
use crate::{Error, Result};

/// Largest number of example words written to `words.csv`.
const WORD_EXAMPLES: usize = 20;

/// CSV `sample_id,coord_1..coord_M`.
pub fn samples_to_csv(samples: &[Vec<f64>]) -> String {
    crate::brownian::lhat_samples_to_csv(samples)
}

fn words_csv(cfg: &ExperimentConfig) -> Result<String> {
    let d = cfg.dist()?;
    let mut out = String::new();
    for i in 0..cfg.samples.min(WORD_EXAMPLES) {
        let letters = sample_letters(&d, cfg.n_word, &mut substream(cfg.seed, stream::WORDS, i as u64));
        let _ = writeln!(out, "{}", Word::new(letters, d.m())?);
    }
    Ok(out)
}

fn first_spectrum_csv(cfg: &ExperimentConfig) -> Result<(String, String)> {
    let d = cfg.dist()?;
    let s = ordered_block_spectrum(&d, &mut substream(cfg.seed, stream::TRACELESS, 0))?;
    Ok((s.xi.to_csv(), s.xi0.to_csv()))
}

pub fn run_limit_shape(cfg: &ExperimentConfig) -> Result<RunOutput> {
    let mut report = ComparisonReport::new(cfg, Experiment::LimitShape.name());
    let o = checks::limit_shape(&cfg.probs, cfg.n_word, cfg.samples, cfg.seed, cfg.tolerances.ks_limit_shape)?;
    report.sample_counts.insert("words".into(), o.shapes.len());
    report.sample_counts.insert("traceless_spectra".into(), o.xi0.len());
    report.comparisons = o.comparisons;
    report.push(o.ks);
    report.push(o.sum_identity);
    let (_, xi0) = first_spectrum_csv(cfg)?;
    Ok(RunOutput {
        report,
        files: vec![
            ("words.csv".into(), words_csv(cfg)?),
            ("word_shapes.csv".into(), samples_to_csv(&o.shapes)),
            ("xi0_samples.csv".into(), samples_to_csv(&o.xi0)),
            ("xi0_spectrum.csv".into(), xi0),
        ],
    })
}

pub fn run_spectrum_compare(cfg: &ExperimentConfig) -> Result<RunOutput> {
    let mut report = ComparisonReport::new(cfg, Experiment::SpectrumCompare.name());
    let t = &cfg.tolerances;
    report.push(checks::shift_identities(std::slice::from_ref(&cfg.probs), cfg.samples, cfg.seed, t.shift)?);
    let (c, comps) = checks::gaussian_decomposition(&cfg.probs, cfg.samples, cfg.seed, t.ks_decomposition)?;
    report.push(c);
    report.comparisons = comps;
    report.push(checks::traceless_diagonal_covariance(
        &cfg.probs,
        cfg.samples,
        cfg.seed,
        t.covariance_sigmas,
    )?);
    if cfg.probs.len() <= 3 {
        report.push(checks::density_normalization(std::slice::from_ref(&cfg.probs), t.density_normalization)?);
    }
    report.sample_counts.insert("draws".into(), cfg.samples);
    let d = cfg.dist()?;
    let x = sample_block_gue(&BlockSpec::new(d.mults().to_vec())?, &mut substream(cfg.seed, stream::BLOCK, 0));
    let (xi, xi0) = first_spectrum_csv(cfg)?;
    Ok(RunOutput {
        report,
        files: vec![
            ("xi_spectrum.csv".into(), xi),
            ("xi0_spectrum.csv".into(), xi0),
            ("block_gue_matrix.txt".into(), x.to_text()),
        ],
    })
}

pub fn run_poissonize(cfg: &ExperimentConfig) -> Result<RunOutput> {
    let alpha = cfg
        .alpha
        .ok_or_else(|| Error::Config("the poissonize experiment needs alpha".into()))?;
    let mut report = ComparisonReport::new(cfg, Experiment::Poissonize.name());
    let t = &cfg.tolerances;
    let d = cfg.dist()?;
    let q = d.sorted_probs();
    let raw = samples::poissonized_shapes(&d, alpha, cfg.samples, cfg.seed);
    let shapes: Vec<Vec<f64>> = raw.iter().map(|s| samples::scaled_shape(s, &q, alpha)).collect();
    let xi = samples::block_spectra(&d, cfg.samples, cfg.seed, stream::BLOCK)?;
    for i in 0..d.m() {
        let (a, b) = (column(&shapes, i), column(&xi, i));
        report
            .comparisons
            .push(CoordinateComparison::new("poissonized shape vs xi", i + 1, ks_two_sample(&a, &b)?, &a, &b));
    }
    let worst = report.comparisons.iter().map(|c| c.ks).fold(0.0, f64::max);
    report.push(Criterion::at_most(
        "poissonized limit shape",
        worst,
        t.ks_poissonize,
        format!("alpha={alpha}, {} samples, max per-coordinate KS", cfg.samples),
    ));

    let d1 = d.mults()[0] as f64;
    let pmax = d.p_max();
    let target = alpha * pmax + 2.0 * (d1 * alpha * pmax).sqrt();
    let mean = raw.iter().map(|s| s[0] as f64).sum::<f64>() / raw.len() as f64;
    report.push(Criterion::at_most(
        "poissonized first-row centering",
        (mean - target).abs() / target,
        t.poisson_mean_relative,
        format!("mean lambda_1 {mean:.3} vs {target:.3}, relative gap"),
    ));

    let mut files = vec![
        ("poissonized_shapes.csv".into(), samples_to_csv(&shapes)),
        ("xi_samples.csv".into(), samples_to_csv(&xi)),
    ];
    if d.m() <= 3 {
        report.push(checks::poissonization(&[cfg.exact_alpha], std::slice::from_ref(&cfg.probs), t.charlier_atom)?);
        let pmf = poissonize_pmf(&d, cfg.exact_alpha, crate::exactdist::default_n_max(cfg.exact_alpha))?;
        files.push(("poissonized_pmf.csv".into(), pmf.to_csv()));
    } else {
        report.note("charlier_check", "skipped: alphabet larger than 3");
    }
    report.sample_counts.insert("words".into(), raw.len());
    report.sample_counts.insert("block_spectra".into(), xi.len());
    Ok(RunOutput { report, files })
}

pub fn run_scaling(cfg: &ExperimentConfig) -> Result<RunOutput> {
    let mut report = ComparisonReport::new(cfg, Experiment::Scaling.name());
    let t = &cfg.tolerances;
    let (c, pair_ks, sets) =
        checks::stabilization(&cfg.d1_values, cfg.scaling_n, cfg.scaling_samples, cfg.seed, t.ks_stabilization)?;
    report.push(c);
    report.note("stabilization_pair_ks", &pair_ks);
    for (d1, set) in cfg.d1_values.iter().zip(&sets) {
        report.note(&format!("scaled_li_moments_d1_{d1}"), super::stats::moments(set));
    }
    for c in checks::top_eigenvalue_scaling(
        cfg.matrix_m,
        cfg.matrix_trials,
        cfg.chi_m,
        cfg.seed,
        t.scaled_max_low,
        t.scaled_max_high,
        t.ks_semicircle,
    )? {
        report.push(c);
    }
    report.push(checks::concentration(&cfg.probs, cfg.concentration_n, cfg.samples, cfg.seed)?);
    report.sample_counts.insert("li_words_per_d1".into(), cfg.scaling_samples);
    let rows: Vec<Vec<f64>> = (0..cfg.scaling_samples)
        .map(|i| sets.iter().map(|s| s[i]).collect())
        .collect();
    Ok(RunOutput {
        report,
        files: vec![("scaled_li.csv".into(), samples_to_csv(&rows))],
    })
}

pub fn run_exact_checks(cfg: &ExperimentConfig) -> Result<RunOutput> {
    let mut report = ComparisonReport::new(cfg, Experiment::ExactChecks.name());
    let t = &cfg.tolerances;
    let m = cfg.probs.len();
    let cases = vec![(cfg.probs.clone(), cfg.n_word)];
    report.push(checks::push_forward(&cases, t.exact_atom)?);
    if cfg.exact_rational {
        report.push(checks::push_forward_exact(&cases)?);
    }
    report.push(checks::schur_formula(
        std::slice::from_ref(&cfg.probs),
        cfg.n_word.min(8) as u32,
        t.schur_relative,
    )?);
    if m <= 3 {
        report.push(checks::poissonization(&[cfg.exact_alpha], std::slice::from_ref(&cfg.probs), t.charlier_atom)?);
        let (c, fitted) = checks::depoisson_monotonicity(&cfg.probs, cfg.n_word, 4, cfg.exact_rational)?;
        report.push(c);
        report.note("depoisson_fitted_c", fitted);
    } else {
        report.note("poissonization_checks", "skipped: alphabet larger than 3");
    }
    report.push(checks::greene_identity(8, cfg.samples, &[m.max(1)], cfg.n_word.clamp(1, 12), cfg.seed)?);
    report.push(checks::eigensolver_roots(cfg.samples, cfg.seed, t.eigen_absolute)?);
    report.push(checks::eigensolver_invariants(&[5, 10, 20, 50], 5, cfg.seed, t.eigen_absolute)?);
    let pmf = shape_pmf(&cfg.dist()?, cfg.n_word)?;
    Ok(RunOutput {
        report,
        files: vec![("shape_pmf.csv".into(), pmf.to_csv())],
    })
}

pub fn run_brownian_compare(cfg: &ExperimentConfig) -> Result<RunOutput> {
    let mut report = ComparisonReport::new(cfg, Experiment::BrownianCompare.name());
    let t = &cfg.tolerances;
    let d = cfg.dist()?;
    if d.mults().iter().all(|&k| k <= 3) {
        report.push(checks::brownian_dp_vs_brute(
            std::slice::from_ref(&cfg.probs),
            12,
            5,
            cfg.seed,
            t.brute_force,
        )?);
    } else {
        report.note("brute_force_check", "skipped: a block has more than 3 letters");
    }
    let (c, comps, lh) = checks::brownian_vs_spectrum(&cfg.probs, cfg.grid_n, cfg.samples, cfg.seed, t.ks_brownian)?;
    report.push(c);
    report.comparisons = comps;

    // word side at √N scaling
    let q = d.sorted_probs();
    let n = cfg.n_word as f64;
    let words: Vec<Vec<f64>> = samples::word_shapes(&d, cfg.n_word, cfg.samples, cfg.seed)
        .iter()
        .map(|s| s.iter().zip(&q).map(|(&l, p)| (l as f64 - n * p) / n.sqrt()).collect())
        .collect();
    let mut worst: f64 = 0.0;
    for i in 0..d.m() {
        let (a, b) = (column(&lh, i), column(&words, i));
        let ks = ks_two_sample(&a, &b)?;
        worst = worst.max(ks);
        report
            .comparisons
            .push(CoordinateComparison::new("lhat vs word shape / sqrt(N)", i + 1, ks, &a, &b));
    }
    report.push(Criterion::at_most(
        "brownian functional vs word shapes",
        worst,
        t.ks_brownian,
        format!("N={}, n={}, max per-coordinate KS", cfg.n_word, cfg.grid_n),
    ));

    let coarse_n = (cfg.grid_n / 2).max(1);
    let coarse = samples::lhat_samples(&d, coarse_n, cfg.samples, cfg.seed, stream::GRIDS_COARSE)?;
    let mut worst: f64 = 0.0;
    for i in 0..d.m() {
        worst = worst.max(ks_two_sample(&column(&coarse, i), &column(&lh, i))?);
    }
    report.push(Criterion::at_most(
        "grid refinement stability",
        worst,
        t.ks_refinement,
        format!("n={coarse_n} vs n={}, max per-coordinate KS", cfg.grid_n),
    ));
    report.sample_counts.insert("grids".into(), lh.len());
    report.sample_counts.insert("words".into(), words.len());
    Ok(RunOutput {
        report,
        files: vec![
            ("lhat_samples.csv".into(), samples_to_csv(&lh)),
            ("word_shapes_sqrt_n.csv".into(), samples_to_csv(&words)),
        ],
    })
}

/// Runs `experiment` on `cfg` (whose `experiment` field, if set, must agree).
pub fn run(experiment: Experiment, cfg: &ExperimentConfig) -> Result<RunOutput> {
    if let Some(e) = cfg.experiment {
        if e != experiment {
            return Err(Error::Config(format!("config is for {e}, asked to run {experiment}")));
        }
    }
    cfg.validate()?;
    match experiment {
        Experiment::LimitShape => run_limit_shape(cfg),
        Experiment::SpectrumCompare => run_spectrum_compare(cfg),
        Experiment::Poissonize => run_poissonize(cfg),
        Experiment::Scaling => run_scaling(cfg),
        Experiment::ExactChecks => run_exact_checks(cfg),
        Experiment::BrownianCompare => run_brownian_compare(cfg),
    }
}
