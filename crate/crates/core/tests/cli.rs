use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use tempfile::TempDir;

fn write_config(dir: &Path, body: &str) -> PathBuf {
    let path = dir.join("config.json");
    fs::write(&path, body).unwrap();
    path
}

fn run_cli(experiment: &str, config: &Path, out: &Path, extra: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tableaux-lab"))
        .arg(experiment)
        .arg("--config")
        .arg(config)
        .arg("--out")
        .arg(out)
        .args(extra)
        .output()
        .unwrap()
}

fn report(out: &Path) -> Value {
    serde_json::from_str(&fs::read_to_string(out.join("report.json")).unwrap()).unwrap()
}

const EXACT: &str = r#"{"probs": [0.5, 0.3, 0.2], "n_word": 5, "samples": 50, "seed": 11}"#;

#[test]
fn exact_checks_pass_and_write_pmf() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(dir.path(), EXACT);
    let out = dir.path().join("out");
    let o = run_cli("exact-checks", &cfg, &out, &["--exact-rational"]);
    assert_eq!(o.status.code(), Some(0), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    let stdout = String::from_utf8(o.stdout).unwrap();
    assert!(stdout.lines().all(|l| l.starts_with("PASS ")));
    assert!(stdout.contains("rational"), "{stdout}");

    let r = report(&out);
    assert_eq!(r["passed"], Value::Bool(true));
    assert_eq!(r["failures"].as_array().unwrap().len(), 0);
    assert_eq!(r["seed"].as_u64(), Some(11));

    let pmf = fs::read_to_string(out.join("shape_pmf.csv")).unwrap();
    let mut lines = pmf.lines();
    assert_eq!(lines.next(), Some("lambda_1,lambda_2,lambda_3,prob"));
    let mut total = 0.0;
    for line in lines {
        let fields: Vec<&str> = line.split(',').collect();
        assert_eq!(fields.len(), 4);
        let parts: Vec<u32> = fields[..3].iter().map(|f| f.parse().unwrap()).collect();
        assert_eq!(parts.iter().sum::<u32>(), 5);
        assert!(parts.windows(2).all(|w| w[0] >= w[1]));
        total += fields[3].parse::<f64>().unwrap();
    }
    assert!((total - 1.0).abs() < 1e-10);
}

#[test]
fn failed_criterion_sets_exit_code_and_failure_list() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(
        dir.path(),
        r#"{"probs": [0.5, 0.5], "n_word": 200, "samples": 50, "seed": 3,
            "tolerances": {"ks_limit_shape": 0.0}}"#,
    );
    let out = dir.path().join("out");
    let o = run_cli("limit-shape", &cfg, &out, &[]);
    assert_eq!(o.status.code(), Some(1));
    let r = report(&out);
    assert_eq!(r["passed"], Value::Bool(false));
    let failures: Vec<&str> = r["failures"].as_array().unwrap().iter().map(|v| v.as_str().unwrap()).collect();
    assert!(!failures.is_empty());
    let failed_names: Vec<&str> = r["criteria"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["passed"] == Value::Bool(false))
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failures, failed_names);
    assert!(String::from_utf8_lossy(&o.stdout).contains("FAIL "));
}

#[test]
fn invalid_inputs_exit_with_code_two() {
    let dir = TempDir::new().unwrap();
    let out = dir.path().join("out");
    let bad_probs = write_config(dir.path(), r#"{"probs": [0.5, 0.6], "n_word": 5, "samples": 10}"#);
    assert_eq!(run_cli("exact-checks", &bad_probs, &out, &[]).status.code(), Some(2));

    let unknown = write_config(dir.path(), r#"{"probs": [0.5, 0.5], "n_word": 5, "samples": 10, "bogus": 1}"#);
    assert_eq!(run_cli("exact-checks", &unknown, &out, &[]).status.code(), Some(2));

    let no_alpha = write_config(dir.path(), r#"{"probs": [0.5, 0.5], "n_word": 5, "samples": 10}"#);
    assert_eq!(run_cli("poissonize", &no_alpha, &out, &[]).status.code(), Some(2));

    let missing = dir.path().join("missing.json");
    assert_eq!(run_cli("exact-checks", &missing, &out, &[]).status.code(), Some(2));
}

#[test]
fn seed_flag_overrides_config() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(dir.path(), EXACT);
    let out = dir.path().join("out");
    run_cli("exact-checks", &cfg, &out, &["--seed", "99"]);
    assert_eq!(report(&out)["seed"].as_u64(), Some(99));
}

#[test]
fn same_seed_gives_identical_files() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(dir.path(), r#"{"probs": [0.5, 0.3, 0.2], "n_word": 40, "samples": 200, "seed": 17}"#);
    let a = dir.path().join("a");
    let b = dir.path().join("b");
    let c = dir.path().join("c");
    run_cli("limit-shape", &cfg, &a, &[]);
    run_cli("limit-shape", &cfg, &b, &[]);
    run_cli("limit-shape", &cfg, &c, &["--seed", "18"]);
    for name in ["words.csv", "word_shapes.csv", "xi0_samples.csv", "xi0_spectrum.csv", "report.json"] {
        let fa = fs::read(a.join(name)).unwrap();
        assert_eq!(fa, fs::read(b.join(name)).unwrap(), "{name} differs between identical runs");
    }
    assert_ne!(
        fs::read(a.join("word_shapes.csv")).unwrap(),
        fs::read(c.join("word_shapes.csv")).unwrap()
    );
}

#[test]
fn output_formats() {
    let dir = TempDir::new().unwrap();
    let cfg = write_config(dir.path(), r#"{"probs": [0.4, 0.4, 0.2], "n_word": 30, "samples": 100, "seed": 5}"#);
    let out = dir.path().join("out");
    run_cli("limit-shape", &cfg, &out, &[]);

    let words = fs::read_to_string(out.join("words.csv")).unwrap();
    for line in words.lines() {
        let letters: Vec<u32> = line.split(',').map(|f| f.parse().unwrap()).collect();
        assert_eq!(letters.len(), 30);
        assert!(letters.iter().all(|&l| (1..=3).contains(&l)));
    }

    let shapes = fs::read_to_string(out.join("word_shapes.csv")).unwrap();
    let mut lines = shapes.lines();
    assert_eq!(lines.next(), Some("sample_id,coord_1,coord_2,coord_3"));
    assert_eq!(lines.count(), 100);

    let spectrum = fs::read_to_string(out.join("xi0_spectrum.csv")).unwrap();
    let mut lines = spectrum.lines();
    assert_eq!(lines.next(), Some("block,index,value"));
    let rows: Vec<(usize, usize)> = lines
        .map(|l| {
            let f: Vec<&str> = l.split(',').collect();
            f[2].parse::<f64>().unwrap();
            (f[0].parse().unwrap(), f[1].parse().unwrap())
        })
        .collect();
    assert_eq!(rows, vec![(1, 1), (1, 2), (2, 1)]);

    let out2 = dir.path().join("out2");
    run_cli("spectrum-compare", &cfg, &out2, &[]);
    let text = fs::read_to_string(out2.join("block_gue_matrix.txt")).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("3"));
    assert_eq!(lines.filter(|l| l.split_whitespace().count() == 2).count(), 9);
}
