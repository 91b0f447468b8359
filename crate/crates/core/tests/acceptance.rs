//! Acceptance suite: one line per criterion, nonzero exit if any gating
//! criterion fails. Thresholds, sample sizes and seeds are pinned here.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use tableaux_lab::harness::checks;
use tableaux_lab::harness::Criterion;
use tableaux_lab::Result;

const SEED: u64 = 20_240_601;

fn alphabets() -> Vec<Vec<f64>> {
    vec![vec![0.5, 0.5], vec![0.7, 0.3], vec![0.5, 0.3, 0.2], vec![0.4, 0.4, 0.2]]
}

struct Outcome {
    id: &'static str,
    criteria: Vec<Criterion>,
    elapsed: Duration,
    budget: Duration,
    gating: bool,
}

fn run(id: &'static str, budget_secs: u64, gating: bool, f: impl FnOnce() -> Result<Vec<Criterion>>) -> Outcome {
    let start = Instant::now();
    let criteria = match f() {
        Ok(c) => c,
        Err(e) => vec![Criterion::holds("error", false, e.to_string())],
    };
    Outcome {
        id,
        criteria,
        elapsed: start.elapsed(),
        budget: Duration::from_secs(budget_secs),
        gating,
    }
}

fn main() -> ExitCode {
    let outcomes = vec![
        run("1", 60, true, || {
            let cases = vec![
                (vec![0.5, 0.5], 8),
                (vec![0.7, 0.3], 8),
                (vec![0.5, 0.3, 0.2], 6),
                (vec![0.4, 0.4, 0.2], 6),
            ];
            Ok(vec![checks::push_forward(&cases, 1e-10)?])
        }),
        run("2", 60, true, || Ok(vec![checks::schur_formula(&alphabets(), 8, 1e-9)?])),
        run("3", 120, true, || Ok(vec![checks::poissonization(&[1.0, 5.0, 20.0], &alphabets(), 1e-8)?])),
        run("4", 60, true, || {
            Ok(vec![
                checks::depoisson_monotonicity(&[0.5, 0.5], 8, 4, true)?.0,
                checks::depoisson_monotonicity(&[0.7, 0.3], 8, 4, true)?.0,
            ])
        }),
        run("5", 120, true, || Ok(vec![checks::greene_identity(8, 10_000, &[3, 4], 12, SEED)?])),
        run("6", 60, true, || {
            Ok(vec![
                checks::eigensolver_roots(1000, SEED, 1e-9)?,
                checks::eigensolver_invariants(&[1, 2, 5, 10, 20, 50], 10, SEED, 1e-9)?,
            ])
        }),
        run("7", 120, true, || Ok(vec![checks::tridiagonal_law(50, 10_000, SEED, 0.02)?.0])),
        run("8", 60, true, || {
            let mut a = vec![vec![1.0]];
            a.extend(alphabets());
            Ok(vec![checks::shift_identities(&a, 100_000, SEED, 1e-9)?])
        }),
        run("9", 180, true, || {
            [vec![0.5, 0.5], vec![0.5, 0.3, 0.2], vec![0.4, 0.4, 0.2]]
                .iter()
                .map(|p| Ok(checks::gaussian_decomposition(p, 100_000, SEED, 0.015)?.0))
                .collect()
        }),
        run("10", 10, true, || {
            Ok(vec![checks::density_normalization(&[vec![0.5, 0.5], vec![0.7, 0.3]], 1e-3)?])
        }),
        run("11", 300, true, || {
            [vec![0.5, 0.5], vec![0.7, 0.3]]
                .iter()
                .map(|p| Ok(checks::limit_shape(p, 5000, 10_000, SEED, 0.05)?.ks))
                .collect()
        }),
        run("12", 300, true, || {
            let small = vec![vec![0.5, 0.5], vec![1.0 / 3.0; 3], vec![0.4, 0.4, 0.2], vec![0.1, 0.3, 0.3, 0.3]];
            Ok(vec![
                checks::brownian_dp_vs_brute(&small, 12, 5, SEED, 1e-12)?,
                checks::brownian_vs_spectrum(&[0.5, 0.5], 2000, 10_000, SEED, 0.05)?.0,
            ])
        }),
        run("13", 180, true, || checks::top_eigenvalue_scaling(200, 50, 100, SEED, 1.85, 2.05, 0.06)),
        run("14", 120, true, || Ok(vec![checks::concentration(&[0.5, 0.5], 10_000, 10_000, SEED)?])),
        run("proxy", 300, false, || Ok(vec![checks::stabilization(&[10, 50, 200], 100_000, 2000, SEED, 0.1)?.0])),
    ];

    let mut failed = 0;
    let mut reported = 0;
    for o in &outcomes {
        let in_time = o.elapsed <= o.budget;
        for c in &o.criteria {
            let ok = c.passed && in_time;
            let tag = match (ok, o.gating) {
                (true, _) => "PASS",
                (false, true) => "FAIL",
                (false, false) => "FAIL (reported, not gating)",
            };
            println!(
                "[{:>5}] {tag} {}: {:.6e} ({}) {} [{:.1}s, budget {}s]",
                o.id,
                c.name,
                c.value,
                c.condition,
                c.detail,
                o.elapsed.as_secs_f64(),
                o.budget.as_secs()
            );
            if !ok {
                if o.gating {
                    failed += 1;
                } else {
                    reported += 1;
                }
            }
        }
    }
    println!("acceptance: {failed} gating failures, {reported} non-gating failures");
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
