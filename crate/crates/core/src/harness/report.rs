use std::collections::BTreeMap;
use std::path::Path;

use serde::Serialize;

use super::stats::{moments, Moments};
use super::ExperimentConfig;
use crate::Result;

/// One pass/fail check.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Criterion {
    pub name: String,
    /// Observed statistic.
    pub value: f64,
    /// Human-readable acceptance condition, e.g. `"<= 0.05"`.
    pub condition: String,
    pub passed: bool,
    pub detail: String,
}

impl Criterion {
    pub fn at_most(name: impl Into<String>, value: f64, limit: f64, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            value,
            condition: format!("<= {limit}"),
            passed: value <= limit,
            detail: detail.into(),
        }
    }

    pub fn within(name: impl Into<String>, value: f64, low: f64, high: f64, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            value,
            condition: format!("in [{low}, {high}]"),
            passed: (low..=high).contains(&value),
            detail: detail.into(),
        }
    }

    pub fn holds(name: impl Into<String>, ok: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.into(),
            value: f64::from(u8::from(ok)),
            condition: "holds".into(),
            passed: ok,
            detail: detail.into(),
        }
    }

    /// One line `PASS name: value (condition) detail`.
    pub fn line(&self) -> String {
        let tag = if self.passed { "PASS" } else { "FAIL" };
        let mut s = format!("{tag} {}: {:.6e} ({})", self.name, self.value, self.condition);
        if !self.detail.is_empty() {
            s.push_str(" ");
            s.push_str(&self.detail);
        }
        s
    }
}

/// Coordinate-wise comparison of two sample sets.
#[derive(Debug, Clone, Serialize)]
pub struct CoordinateComparison {
    pub label: String,
    /// 1-based coordinate.
    pub coordinate: usize,
    pub ks: f64,
    pub moments_a: Moments,
    pub moments_b: Moments,
}

impl CoordinateComparison {
    pub fn new(label: &str, coordinate: usize, ks: f64, a: &[f64], b: &[f64]) -> Self {
        Self {
            label: label.to_string(),
            coordinate,
            ks,
            moments_a: moments(a),
            moments_b: moments(b),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ComparisonReport {
    pub experiment: String,
    pub seed: u64,
    pub config: ExperimentConfig,
    pub sample_counts: BTreeMap<String, usize>,
    pub comparisons: Vec<CoordinateComparison>,
    pub criteria: Vec<Criterion>,
    /// Names of the failed criteria.
    pub failures: Vec<String>,
    pub passed: bool,
    /// Values reported but not asserted.
    pub notes: BTreeMap<String, serde_json::Value>,
}

impl ComparisonReport {
    pub fn new(config: &ExperimentConfig, experiment: &str) -> Self {
        Self {
            experiment: experiment.to_string(),
            seed: config.seed,
            config: config.clone(),
            sample_counts: BTreeMap::new(),
            comparisons: Vec::new(),
            criteria: Vec::new(),
            failures: Vec::new(),
            passed: true,
            notes: BTreeMap::new(),
        }
    }

    pub fn push(&mut self, c: Criterion) {
        if !c.passed {
            self.failures.push(c.name.clone());
            self.passed = false;
        }
        self.criteria.push(c);
    }

    pub fn note(&mut self, key: &str, value: impl Serialize) {
        self.notes.insert(key.to_string(), serde_json::to_value(value).unwrap_or(serde_json::Value::Null));
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)?)
    }
}

/// A report with the CSV files produced alongside it.
#[derive(Debug, Clone)]
pub struct RunOutput {
    pub report: ComparisonReport,
    /// `(file name, contents)`.
    pub files: Vec<(String, String)>,
}

impl RunOutput {
    /// Writes `report.json` and every CSV into `dir`.
    pub fn write_to(&self, dir: &Path) -> Result<()> {
        std::fs::create_dir_all(dir)?;
        std::fs::write(dir.join("report.json"), self.report.to_json()?)?;
        for (name, body) in &self.files {
            std::fs::write(dir.join(name), body)?;
        }
        Ok(())
    }
}
