use std::path::PathBuf;
use std::process::ExitCode;

use clap::Parser;
use tableaux_lab::harness::{run, Experiment, ExperimentConfig};

#[derive(Parser)]
#[command(name = "tableaux-lab", version, about = "Random words, Young tableaux and GUE spectra experiments")]
struct Cli {
    /// One of limit-shape, spectrum-compare, poissonize, scaling,
    /// exact-checks, brownian-compare.
    experiment: Experiment,
    /// JSON configuration file.
    #[arg(long)]
    config: PathBuf,
    /// Overrides the seed in the configuration.
    #[arg(long)]
    seed: Option<u64>,
    /// Output directory for report.json and CSV files.
    #[arg(long, default_value = "out")]
    out: PathBuf,
    /// Also run the exact identities in rational arithmetic.
    #[arg(long)]
    exact_rational: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut cfg = match ExperimentConfig::load(&cli.config) {
        Ok(c) => c,
        Err(e) => {
            eprintln!("error: {}: {e}", cli.config.display());
            return ExitCode::from(2);
        }
    };
    if let Some(seed) = cli.seed {
        cfg.seed = seed;
    }
    cfg.exact_rational |= cli.exact_rational;
    let output = match run(cli.experiment, &cfg) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    for c in &output.report.criteria {
        println!("{}", c.line());
    }
    if let Err(e) = output.write_to(&cli.out) {
        eprintln!("error: writing {}: {e}", cli.out.display());
        return ExitCode::from(2);
    }
    if output.report.passed {
        ExitCode::SUCCESS
    } else {
        eprintln!("failed: {}", output.report.failures.join(", "));
        ExitCode::FAILURE
    }
}
