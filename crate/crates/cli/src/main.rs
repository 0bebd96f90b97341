//! `feq` — runs a JSON-configured verification of sine/cosine-type
//! functional equation families and reports residuals.
//!
//! Exit code 0 iff every family passed at the tolerance.

use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::Parser;

use feq_core::config::{run_config, Config};

#[derive(Parser, Debug)]
#[command(name = "feq", about = "Functional equation family verifier")]
struct Args {
    /// JSON configuration file.
    #[arg(long)]
    config: PathBuf,

    /// Absolute residual tolerance; overrides the config value.
    #[arg(long)]
    tolerance: Option<f64>,

    /// Window half-width per free coordinate; overrides the config value.
    #[arg(long)]
    window: Option<i64>,

    /// Write the JSON report here in addition to the console table.
    #[arg(long)]
    report: Option<PathBuf>,
}

fn run(args: &Args) -> anyhow::Result<bool> {
    let text = std::fs::read_to_string(&args.config)
        .with_context(|| format!("reading {}", args.config.display()))?;
    let config = Config::from_json(&text)
        .with_context(|| format!("parsing {}", args.config.display()))?;
    let report = run_config(&config, args.tolerance, args.window)?;
    print!("{}", report.human_table());
    if let Some(path) = &args.report {
        let json = serde_json::to_string_pretty(&report)?;
        std::fs::write(path, json).with_context(|| format!("writing {}", path.display()))?;
    }
    Ok(report.pass)
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
