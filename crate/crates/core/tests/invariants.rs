use proptest::prelude::*;
use tableaux_lab::brownian::{lhat, sample_increment_grid, IncrementGrid};
use tableaux_lab::combinat::{rsk, sample_word, AlphabetDistribution, Partition, Word};
use tableaux_lab::exactdist::{shape_pmf, Pmf};
use tableaux_lab::harness::{Experiment, ExperimentConfig};
use tableaux_lab::rmt::{sample_gue, HermitianMatrix};
use tableaux_lab::rng::seeded;

fn longest_weakly_increasing_quadratic(w: &[u32]) -> usize {
    let mut best = vec![1usize; w.len()];
    for i in 0..w.len() {
        for j in 0..i {
            if w[j] <= w[i] {
                best[i] = best[i].max(best[j] + 1);
            }
        }
    }
    best.into_iter().max().unwrap_or(0)
}

#[test]
fn matrix_text_round_trip_is_exact() {
    let x = sample_gue(6, &mut seeded(1));
    let y = HermitianMatrix::from_text(&x.to_text()).unwrap();
    for i in 0..6 {
        for j in 0..6 {
            assert_eq!(x.get(i, j), y.get(i, j));
        }
    }
    assert!(HermitianMatrix::from_text("2\n1 0\n0 0\n").is_err());
    assert!(HermitianMatrix::from_text("2\n1 0\n0 1\n0 0\n1 0\n").is_err());
}

#[test]
fn pmf_csv_round_trip() {
    let d = AlphabetDistribution::new(&[0.5, 0.3, 0.2]).unwrap();
    let pmf = shape_pmf(&d, 7).unwrap();
    let back = Pmf::from_csv(&pmf.to_csv()).unwrap();
    assert_eq!(back.len(), pmf.len());
    for (shape, p) in pmf.iter() {
        assert_eq!(back.get(shape), p);
    }
}

#[test]
fn word_and_partition_text_round_trip() {
    let w = Word::new(vec![3, 1, 2, 2, 1], 3).unwrap();
    assert_eq!(Word::parse(&w.to_string(), 3).unwrap(), w);
    assert!(Word::parse("1,4", 3).is_err());
    let p = Partition::new(vec![4, 2, 2, 1]).unwrap();
    assert_eq!(Partition::parse(&p.to_string()).unwrap(), p);
}

#[test]
fn letter_frequencies_within_four_sigma() {
    let probs = [0.45, 0.3, 0.15, 0.1];
    let d = AlphabetDistribution::new(&probs).unwrap();
    let n = 100_000;
    let w = sample_word(&d, n, &mut seeded(2024));
    let mut counts = [0usize; 4];
    for &x in w.letters() {
        counts[x as usize - 1] += 1;
    }
    for (c, p) in counts.iter().zip(probs) {
        let sigma = (n as f64 * p * (1.0 - p)).sqrt();
        assert!((*c as f64 - n as f64 * p).abs() < 4.0 * sigma, "count {c} for p={p}");
    }
}

#[test]
fn config_defaults_and_overrides() {
    let cfg = ExperimentConfig::from_json(
        r#"{"experiment": "brownian-compare", "probs": [0.5, 0.5], "n_word": 10, "samples": 20,
            "tolerances": {"ks_brownian": 0.2}}"#,
    )
    .unwrap();
    assert_eq!(cfg.experiment, Some(Experiment::BrownianCompare));
    assert_eq!(cfg.seed, 0);
    assert_eq!(cfg.grid_n, 2000);
    assert_eq!(cfg.tolerances.ks_brownian, 0.2);
    assert_eq!(cfg.tolerances.ks_limit_shape, 0.05);
    assert!(ExperimentConfig::from_json(r#"{"probs": [0.5, 0.5], "n_word": 10}"#).is_err());
    assert!(ExperimentConfig::from_json(r#"{"probs": [0.5, 0.5], "n_word": 10, "samples": 1}"#).is_err());
    assert!(ExperimentConfig::from_json(
        r#"{"probs": [0.5, 0.5], "n_word": 10, "samples": 5, "tolerances": {"nope": 1}}"#
    )
    .is_err());
    for e in Experiment::ALL {
        assert_eq!(e.name().parse::<Experiment>().unwrap(), e);
    }
}

#[test]
fn lhat_one_is_a_single_jump_maximum() {
    let d = AlphabetDistribution::new(&[0.5, 0.5]).unwrap();
    for seed in 0..20 {
        let g = sample_increment_grid(&d, 50, &mut seeded(seed));
        let (a, b) = (g.path(0), g.path(1));
        let oracle = (0..=50).map(|t| a[t] + b[50] - b[t]).fold(f64::NEG_INFINITY, f64::max);
        assert!((lhat(&g, 1).unwrap() - oracle).abs() < 1e-12);
        let total = a[50] + b[50];
        assert!((lhat(&g, 2).unwrap() - total).abs() < 1e-12);
    }
}

#[test]
fn lhat_of_constant_increments() {
    let d = AlphabetDistribution::new(&[0.25, 0.25, 0.5]).unwrap();
    let n = 4;
    let grid = IncrementGrid::from_increments(&d, n, vec![1.0; 3 * n]);
    // every column contributes once per path
    assert!((lhat(&grid, 1).unwrap() - n as f64).abs() < 1e-12);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn rsk_first_row_is_longest_weakly_increasing(letters in prop::collection::vec(1u32..=4, 0..40)) {
        let w = Word::new(letters.clone(), 4).unwrap();
        let t = rsk(&w);
        prop_assert_eq!(t.shape.size() as usize, letters.len());
        prop_assert_eq!(t.shape.part(1) as usize, longest_weakly_increasing_quadratic(&letters));
        prop_assert!(t.is_valid());
    }
}
