//! One function per verifiable identity or limit statement. Each returns
//! named [`Criterion`]s; the experiments and the acceptance suite compose
//! them.

use std::collections::{BTreeMap, BTreeSet};

use num::{BigRational, Zero};
use rand::Rng as _;

use super::report::{CoordinateComparison, Criterion};
use super::samples::{self, column, par_try_samples, stream};
use super::stats::ks_two_sample;
use crate::brownian::{lhat, lhat_brute, sample_increment_grid};
use crate::combinat::{
    exhaustive_shape_pmf, exhaustive_shape_pmf_exact, greene_sums_oracle, partitions, rsk_shape,
    AlphabetDistribution, Partition, Word,
};
use crate::exactdist::{
    charlier_pmf, default_n_max, depoisson_monotonicity_check, poissonize_pmf, schur_repeated_det, schur_ssyt,
    shape_pmf, shape_pmf_exact,
};
use crate::rmt::{
    eigvals, eigvals_tridiagonal, hyperplane_integral, householder_tridiagonalize, ordered_block_spectrum,
    sample_block_gue, sample_gue, sample_tridiagonal_gue, scaling_stats, traceless_covariance,
    traceless_transform, BlockSpec,
};
use crate::rng::substream;
use crate::Result;

use super::oracle::{char_poly, real_roots};

fn dist(p: &[f64]) -> Result<AlphabetDistribution> {
    AlphabetDistribution::new(p)
}

fn fmt_probs(p: &[f64]) -> String {
    let inner: Vec<String> = p.iter().map(|x| format!("{x}")).collect();
    format!("({})", inner.join(","))
}

/// Shape pmf from the closed form against word enumeration, every `N` in
/// `1..=n_max`, atomwise and in total mass.
pub fn push_forward(cases: &[(Vec<f64>, usize)], tol: f64) -> Result<Criterion> {
    let mut worst_atom: f64 = 0.0;
    let mut worst_total: f64 = 0.0;
    let mut atoms = 0;
    for (p, n_max) in cases {
        let d = dist(p)?;
        for n in 1..=*n_max {
            let pmf = shape_pmf(&d, n)?.to_map();
            let words = exhaustive_shape_pmf(&d, n)?;
            let keys: BTreeSet<&Partition> = pmf.keys().chain(words.keys()).collect();
            for k in keys {
                let a = pmf.get(k).copied().unwrap_or(0.0);
                let b = words.get(k).copied().unwrap_or(0.0);
                worst_atom = worst_atom.max((a - b).abs());
                atoms += 1;
            }
            worst_total = worst_total.max((pmf.values().sum::<f64>() - 1.0).abs());
        }
    }
    Ok(Criterion::at_most(
        "exact push-forward",
        worst_atom.max(worst_total),
        tol,
        format!("{atoms} atoms; max atom gap {worst_atom:.3e}, max |sum - 1| {worst_total:.3e}"),
    ))
}

/// As [`push_forward`] in rational arithmetic, requiring exact equality.
pub fn push_forward_exact(cases: &[(Vec<f64>, usize)]) -> Result<Criterion> {
    let mut mismatches = 0;
    let mut atoms = 0;
    for (p, n_max) in cases {
        let d = dist(p)?;
        for n in 1..=*n_max {
            let pmf = shape_pmf_exact(&d, n)?;
            let closed: BTreeMap<Partition, BigRational> = pmf
                .support
                .into_iter()
                .zip(pmf.mass)
                .filter(|(_, x)| !x.is_zero())
                .collect();
            let words = exhaustive_shape_pmf_exact(&d, n)?;
            atoms += closed.len();
            if closed != words {
                mismatches += 1;
            }
        }
    }
    Ok(Criterion::holds(
        "exact push-forward (rational)",
        mismatches == 0,
        format!("{atoms} atoms, {mismatches} mismatching word lengths"),
    ))
}

/// Repeated-variable determinant against the tableau sum for every
/// partition of size `≤ max_size`.
pub fn schur_formula(alphabets: &[Vec<f64>], max_size: u32, tol: f64) -> Result<Criterion> {
    let mut worst: f64 = 0.0;
    let mut count = 0;
    for p in alphabets {
        let d = dist(p)?;
        for size in 0..=max_size {
            for shape in partitions(size, size.max(1) as usize) {
                let det = schur_repeated_det(&shape, &d)?.value;
                let sum = schur_ssyt(&shape, d.probs())?.value;
                let err = if sum.abs() > 0.0 { (det - sum).abs() / sum.abs() } else { det.abs() };
                worst = worst.max(err);
                count += 1;
            }
        }
    }
    Ok(Criterion::at_most(
        "schur repeated-variable formula",
        worst,
        tol,
        format!("{count} (alphabet, partition) pairs, max relative error"),
    ))
}

/// Poissonized pmf against the Charlier weights, atomwise, plus total mass
/// of the Charlier weights over the truncated support.
pub fn poissonization(alphas: &[f64], alphabets: &[Vec<f64>], tol: f64) -> Result<Criterion> {
    let mut worst_atom: f64 = 0.0;
    let mut worst_total: f64 = 0.0;
    let mut atoms = 0;
    for p in alphabets {
        let d = dist(p)?;
        for &alpha in alphas {
            let pmf = poissonize_pmf(&d, alpha, default_n_max(alpha))?;
            let mut total = 0.0;
            for (shape, x) in pmf.iter() {
                let c = charlier_pmf(shape, alpha, &d)?;
                worst_atom = worst_atom.max((c - x).abs());
                total += c;
                atoms += 1;
            }
            worst_total = worst_total.max((total - 1.0).abs());
        }
    }
    Ok(Criterion::at_most(
        "poissonization identity",
        worst_atom.max(worst_total),
        tol,
        format!("{atoms} atoms; max atom gap {worst_atom:.3e}, max |sum - 1| {worst_total:.3e}"),
    ))
}

/// `N ↦ P_{M,N}(λ ≤ n)` non-increasing for every threshold vector with
/// entries `≤ max_threshold`.
pub fn depoisson_monotonicity(probs: &[f64], n_max: usize, max_threshold: u32, exact: bool) -> Result<(Criterion, Option<f64>)> {
    let d = dist(probs)?;
    let m = d.m();
    let mut thresholds = vec![0u32; m];
    let mut vectors = 0;
    let mut violations = Vec::new();
    let mut fitted: Option<f64> = None;
    loop {
        let r = depoisson_monotonicity_check(&d, 1..=n_max, &thresholds, exact)?;
        vectors += 1;
        if !r.monotone {
            violations.push(format!("{thresholds:?} at N={:?}", r.violations));
        }
        if let Some(c) = r.fitted_c {
            fitted = Some(fitted.map_or(c, |f: f64| f.max(c)));
        }
        let mut i = 0;
        while i < m {
            thresholds[i] += 1;
            if thresholds[i] <= max_threshold {
                break;
            }
            thresholds[i] = 0;
            i += 1;
        }
        if i == m {
            break;
        }
    }
    let mode = if exact { "rational" } else { "float" };
    let detail = if violations.is_empty() {
        format!("{vectors} threshold vectors, N=1..={n_max}, {mode}")
    } else {
        format!("violations: {}", violations.join("; "))
    };
    Ok((
        Criterion::holds("de-poissonization monotonicity", violations.is_empty(), detail),
        fitted,
    ))
}

fn greene_mismatch(letters: Vec<u32>, m: usize) -> Result<bool> {
    let shape = rsk_shape(&letters, m).padded(m);
    let word = Word::new(letters, m)?;
    let mut prefix = 0usize;
    for l in 1..=m {
        prefix += shape[l - 1] as usize;
        if greene_sums_oracle(&word, l)? != prefix {
            return Ok(true);
        }
    }
    Ok(false)
}

/// `λ₁ + … + λ_l = G^l` for every word over 2 letters of length
/// `≤ exhaustive_n`, and for `random` uniform words over each alphabet size
/// in `sizes` with length in `1..=random_n`.
pub fn greene_identity(exhaustive_n: usize, random: usize, sizes: &[usize], random_n: usize, seed: u64) -> Result<Criterion> {
    let mut bad = 0usize;
    let mut words = 0usize;
    for n in 1..=exhaustive_n {
        for code in 0..(1u64 << n) {
            let letters = (0..n).map(|i| ((code >> i) & 1) as u32 + 1).collect();
            bad += usize::from(greene_mismatch(letters, 2)?);
            words += 1;
        }
    }
    let flags = par_try_samples(random, seed, stream::GREENE, |rng| {
        let m = sizes[rng.random_range(0..sizes.len())];
        let n = rng.random_range(1..=random_n);
        let letters = (0..n).map(|_| rng.random_range(1..=m as u32)).collect();
        greene_mismatch(letters, m)
    })?;
    bad += flags.iter().filter(|&&f| f).count();
    words += random;
    Ok(Criterion::at_most(
        "greene identity",
        bad as f64,
        0.0,
        format!("{words} words checked, {bad} mismatches"),
    ))
}

/// Eigenvalues of `count` GUE samples of size 1..=4 against the roots of
/// the characteristic polynomial.
pub fn eigensolver_roots(count: usize, seed: u64, tol: f64) -> Result<Criterion> {
    let gaps = par_try_samples(count, seed, stream::EIGEN, |rng| {
        let n = rng.random_range(1..=4);
        let x = sample_gue(n, rng);
        let got = eigvals(&x)?.values;
        let want = real_roots(&char_poly(&x));
        let scale = x.frobenius_sq().sqrt().max(1.0);
        Ok(got.iter().zip(&want).map(|(a, b)| (a - b).abs() / scale).fold(0.0, f64::max))
    })?;
    let worst = gaps.iter().copied().fold(0.0, f64::max);
    Ok(Criterion::at_most(
        "eigensolver vs characteristic roots",
        worst,
        tol,
        format!("{count} matrices, n <= 4, gap relative to max(1, ||X||_F)"),
    ))
}

/// Trace and Frobenius norm conserved by the eigensolver, sizes up to 50.
pub fn eigensolver_invariants(sizes: &[usize], per_size: usize, seed: u64, tol: f64) -> Result<Criterion> {
    let mut worst: f64 = 0.0;
    for (si, &n) in sizes.iter().enumerate() {
        for t in 0..per_size {
            let mut rng = substream(seed, stream::MATRICES, (si * per_size + t) as u64);
            let x = sample_gue(n, &mut rng);
            let v = eigvals(&x)?.values;
            let tri = householder_tridiagonalize(&x)?;
            let f = x.frobenius_sq().max(1.0);
            worst = worst
                .max((v.iter().sum::<f64>() - x.trace()).abs() / f.sqrt())
                .max((v.iter().map(|a| a * a).sum::<f64>() - x.frobenius_sq()).abs() / f)
                .max((tri.trace() - x.trace()).abs() / f.sqrt());
        }
    }
    Ok(Criterion::at_most(
        "eigensolver trace/frobenius invariants",
        worst,
        tol,
        format!("sizes {sizes:?}, {per_size} each, relative error"),
    ))
}

/// Top eigenvalue of the tridiagonal model against dense GUE.
pub fn tridiagonal_law(m: usize, count: usize, seed: u64, tol: f64) -> Result<(Criterion, CoordinateComparison)> {
    let tri = par_try_samples(count, seed, stream::TRIDIAGONAL, |rng| {
        Ok(*eigvals_tridiagonal(&sample_tridiagonal_gue(m, rng))?.last().unwrap())
    })?;
    let dense = par_try_samples(count, seed, stream::DENSE, |rng| Ok(eigvals(&sample_gue(m, rng))?.max()))?;
    let ks = ks_two_sample(&tri, &dense)?;
    Ok((
        Criterion::at_most("tridiagonal law", ks, tol, format!("m={m}, {count} samples each, two-sample KS")),
        CoordinateComparison::new("tridiagonal vs dense top eigenvalue", 1, ks, &tri, &dense),
    ))
}

/// Per-draw agreement of the two forms of the traceless shift and the
/// weighted-zero constraint.
pub fn shift_identities(alphabets: &[Vec<f64>], draws: usize, seed: u64, tol: f64) -> Result<Criterion> {
    let mut worst: f64 = 0.0;
    let mut unordered = 0;
    for (a, p) in alphabets.iter().enumerate() {
        let d = dist(p)?;
        let per = par_try_samples(draws, seed ^ a as u64, stream::SHIFTS, |rng| {
            let s = ordered_block_spectrum(&d, rng)?;
            Ok((s.shift_discrepancy().max(s.weighted_sum(&d)), s.xi.is_ordered() && s.xi0.is_ordered()))
        })?;
        for (gap, ordered) in per {
            worst = worst.max(gap);
            unordered += usize::from(!ordered);
        }
    }
    let mut c = Criterion::at_most(
        "spectrum shift identities",
        worst,
        tol,
        format!("{} alphabets x {draws} draws, {unordered} unordered spectra", alphabets.len()),
    );
    c.passed &= unordered == 0;
    Ok(c)
}

/// Coordinatewise KS between `ξ` and `ξ₀ + Z`.
pub fn gaussian_decomposition(
    probs: &[f64],
    draws: usize,
    seed: u64,
    tol: f64,
) -> Result<(Criterion, Vec<CoordinateComparison>)> {
    let d = dist(probs)?;
    let xi = samples::block_spectra(&d, draws, seed, stream::BLOCK)?;
    let sum = samples::decomposed_spectra(&d, draws, seed)?;
    let mut comps = Vec::new();
    for i in 0..d.m() {
        let (a, b) = (column(&xi, i), column(&sum, i));
        comps.push(CoordinateComparison::new("xi vs xi0+Z", i + 1, ks_two_sample(&a, &b)?, &a, &b));
    }
    let worst = comps.iter().map(|c| c.ks).fold(0.0, f64::max);
    Ok((
        Criterion::at_most(
            format!("gaussian decomposition {}", fmt_probs(probs)),
            worst,
            tol,
            format!("{draws} draws, max per-coordinate KS"),
        ),
        comps,
    ))
}

/// Empirical covariance of the traceless diagonal against `I − √q√qᵀ`,
/// measured in standard errors.
pub fn traceless_diagonal_covariance(probs: &[f64], draws: usize, seed: u64, sigmas: f64) -> Result<Criterion> {
    let d = dist(probs)?;
    let m = d.m();
    let blocks = BlockSpec::new(d.mults().to_vec())?;
    let diags = par_try_samples(draws, seed, stream::DIAGONALS, |rng| {
        Ok(traceless_transform(&sample_block_gue(&blocks, rng), &d)?.diagonal())
    })?;
    let target = traceless_covariance(&d);
    let mut worst: f64 = 0.0;
    for i in 0..m {
        for j in 0..m {
            let prods: Vec<f64> = diags.iter().map(|x| x[i] * x[j]).collect();
            let n = prods.len() as f64;
            let mean = prods.iter().sum::<f64>() / n;
            let sd = (prods.iter().map(|x| (x - mean).powi(2)).sum::<f64>() / n).sqrt();
            let se = sd / n.sqrt();
            let gap = (mean - target[i][j]).abs();
            worst = worst.max(if se > 0.0 { gap / se } else if gap > 1e-12 { f64::INFINITY } else { 0.0 });
        }
    }
    Ok(Criterion::at_most(
        format!("traceless diagonal covariance {}", fmt_probs(probs)),
        worst,
        sigmas,
        format!("{draws} draws, max entry gap in standard errors"),
    ))
}

/// Hyperplane integral of the traceless eigenvalue density.
pub fn density_normalization(alphabets: &[Vec<f64>], tol: f64) -> Result<Criterion> {
    let mut worst: f64 = 0.0;
    let mut parts = Vec::new();
    for p in alphabets {
        let d = dist(p)?;
        let total = match d.m() {
            1 | 2 => hyperplane_integral(&d, 10.0, 4001),
            _ => hyperplane_integral(&d, 9.0, 301),
        };
        parts.push(format!("{}: {total:.8}", fmt_probs(p)));
        worst = worst.max((total - 1.0).abs());
    }
    Ok(Criterion::at_most("density normalization", worst, tol, parts.join(", ")))
}

/// Grid functional by DP against brute-force subdivision search.
pub fn brownian_dp_vs_brute(alphabets: &[Vec<f64>], n_max: usize, per_n: usize, seed: u64, tol: f64) -> Result<Criterion> {
    let mut worst: f64 = 0.0;
    let mut evaluations = 0;
    for (a, p) in alphabets.iter().enumerate() {
        let d = dist(p)?;
        for n in 1..=n_max {
            for t in 0..per_n {
                let idx = ((a * (n_max + 1) + n) * per_n + t) as u64;
                let grid = sample_increment_grid(&d, n, &mut substream(seed, stream::SMALL_GRIDS, idx));
                for l in 1..=d.m() {
                    worst = worst.max((lhat(&grid, l)? - lhat_brute(&grid, l)?).abs());
                    evaluations += 1;
                }
            }
        }
    }
    Ok(Criterion::at_most(
        "brownian DP vs brute force",
        worst,
        tol,
        format!("{evaluations} evaluations, grids n <= {n_max}"),
    ))
}

/// Brownian shape vectors against `√q_i ξ₀ⁱ`, coordinatewise.
pub fn brownian_vs_spectrum(
    probs: &[f64],
    grid_n: usize,
    count: usize,
    seed: u64,
    tol: f64,
) -> Result<(Criterion, Vec<CoordinateComparison>, Vec<Vec<f64>>)> {
    let d = dist(probs)?;
    let q = d.sorted_probs();
    let lh = samples::lhat_samples(&d, grid_n, count, seed, stream::GRIDS)?;
    let xi0 = samples::traceless_spectra(&d, count, seed, stream::TRACELESS)?;
    let mut comps = Vec::new();
    for i in 0..d.m() {
        let a = column(&lh, i);
        let b: Vec<f64> = xi0.iter().map(|x| q[i].sqrt() * x[i]).collect();
        comps.push(CoordinateComparison::new("lhat vs sqrt(p) xi0", i + 1, ks_two_sample(&a, &b)?, &a, &b));
    }
    let worst = comps.iter().map(|c| c.ks).fold(0.0, f64::max);
    Ok((
        Criterion::at_most(
            format!("brownian functional vs traceless spectrum {}", fmt_probs(probs)),
            worst,
            tol,
            format!("n={grid_n}, {count} samples, max per-coordinate KS"),
        ),
        comps,
        lh,
    ))
}

/// Scaled word shapes against `ξ₀`, coordinatewise, with the sum identity
/// `Σ √(Nq_i)·scaled_i = 0`.
pub struct LimitShapeOutcome {
    pub ks: Criterion,
    pub sum_identity: Criterion,
    pub comparisons: Vec<CoordinateComparison>,
    pub shapes: Vec<Vec<f64>>,
    pub xi0: Vec<Vec<f64>>,
}

pub fn limit_shape(probs: &[f64], n: usize, count: usize, seed: u64, tol: f64) -> Result<LimitShapeOutcome> {
    let d = dist(probs)?;
    let q = d.sorted_probs();
    let raw = samples::word_shapes(&d, n, count, seed);
    let shapes: Vec<Vec<f64>> = raw.iter().map(|s| samples::scaled_shape(s, &q, n as f64)).collect();
    let worst_sum = shapes
        .iter()
        .map(|s| s.iter().zip(&q).map(|(x, p)| x * (n as f64 * p).sqrt()).sum::<f64>().abs())
        .fold(0.0, f64::max);
    let xi0 = samples::traceless_spectra(&d, count, seed, stream::TRACELESS)?;
    let mut comps = Vec::new();
    for i in 0..d.m() {
        let (a, b) = (column(&shapes, i), column(&xi0, i));
        comps.push(CoordinateComparison::new("word shape vs xi0", i + 1, ks_two_sample(&a, &b)?, &a, &b));
    }
    let worst = comps.iter().map(|c| c.ks).fold(0.0, f64::max);
    Ok(LimitShapeOutcome {
        ks: Criterion::at_most(
            format!("limit shape {}", fmt_probs(probs)),
            worst,
            tol,
            format!("N={n}, {count} words vs {count} spectra, max per-coordinate KS"),
        ),
        sum_identity: Criterion::at_most(
            "scaled shape sum identity",
            worst_sum,
            1e-6,
            "max |sum_i sqrt(N q_i) scaled_i| per word",
        ),
        comparisons: comps,
        shapes,
        xi0,
    })
}

/// `ξ_max/√M`, semicircle KS and `E[max χ²_k]/M`.
pub fn top_eigenvalue_scaling(
    matrix_m: usize,
    trials: usize,
    chi_m: usize,
    seed: u64,
    low: f64,
    high: f64,
    ks_tol: f64,
) -> Result<Vec<Criterion>> {
    let r = scaling_stats(matrix_m, trials, seed)?;
    let chi = scaling_stats(chi_m, 1, seed ^ 0x9e37)?;
    Ok(vec![
        Criterion::within(
            "top eigenvalue mean",
            r.mean_scaled_max,
            low,
            high,
            format!("M={matrix_m}, {trials} trials, mean xi_max/sqrt(M)"),
        ),
        Criterion::at_most(
            "semicircle KS",
            r.semicircle_ks,
            ks_tol,
            format!("M={matrix_m}, worst of {trials} trials (mean {:.4})", r.semicircle_ks_mean),
        ),
        Criterion::at_most(
            "max chi-square bound",
            chi.chi_max_mean,
            chi.chi_bound,
            format!("M={chi_m}, {} Monte Carlo draws", chi.chi_trials),
        ),
    ])
}

/// `P(|λ₁ − mean| ≥ t√N) ≤ 2e^{−t²/2}` for `t ∈ {1, 2, 3}`.
pub fn concentration(probs: &[f64], n: usize, count: usize, seed: u64) -> Result<Criterion> {
    let d = dist(probs)?;
    let l1 = samples::first_row_samples(&d, n, count, seed);
    let mean = l1.iter().sum::<f64>() / l1.len() as f64;
    let root = (n as f64).sqrt();
    let mut worst: f64 = 0.0;
    let mut parts = Vec::new();
    for t in [1.0, 2.0, 3.0] {
        let frac = l1.iter().filter(|&&x| (x - mean).abs() >= t * root).count() as f64 / l1.len() as f64;
        let bound = 2.0 * (-t * t / 2.0f64).exp();
        parts.push(format!("t={t}: {frac:.4} vs {bound:.4}"));
        worst = worst.max(frac / bound);
    }
    Ok(Criterion::at_most(
        "concentration of first row",
        worst,
        1.0,
        format!("N={n}, {count} words; ratio empirical/bound; {}", parts.join(", ")),
    ))
}

/// Two-sample KS between scaled `LI_N` of successive alphabet sizes.
pub fn stabilization(d1_values: &[usize], n: usize, count: usize, seed: u64, tol: f64) -> Result<(Criterion, Vec<f64>, Vec<Vec<f64>>)> {
    let sets: Vec<Vec<f64>> = d1_values.iter().map(|&d| samples::scaled_li_samples(d, n, count, seed)).collect();
    let mut pair_ks = Vec::new();
    for w in sets.windows(2) {
        pair_ks.push(ks_two_sample(&w[0], &w[1])?);
    }
    let last = pair_ks.last().copied().unwrap_or(0.0);
    let desc = d1_values.windows(2).zip(&pair_ks).map(|(w, k)| format!("{}->{}: {k:.4}", w[0], w[1])).collect::<Vec<_>>();
    Ok((
        Criterion::at_most(
            "LI stabilization proxy",
            last,
            tol,
            format!("N={n}, {count} words per d1; KS {}", desc.join(", ")),
        ),
        pair_ks,
        sets,
    ))
}
