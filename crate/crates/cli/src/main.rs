//! `foilsim`: scans, Monte-Carlo runs and feasibility reports for a
//! parity-interferometer probe of a harmonically bound mirror foil.
//!
//! Exit codes: 0 success, 1 validation error, 2 assumption-check failure,
//! 3 I/O error.

mod commands;
mod config;
mod error;

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand};
use config::RawConfig;
use error::AppError;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "foilsim", version, about = "Symmetry-experiment toolkit: signal-ratio scans, photon Monte Carlo and mirror feasibility")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct CommonOpts {
    /// Configuration file (flat key-value format; see README)
    #[arg(long, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Master seed; overrides `[experiment] seed` from the config
    #[arg(long, value_name = "INT")]
    seed: Option<u64>,

    /// Output file
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Worker threads for the simulation (default: all cores)
    #[arg(long, value_name = "INT")]
    workers: Option<usize>,

    /// Proceed despite failed advisory assumption checks
    #[arg(long)]
    force: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Tabulate R_bound, the qualitative R curve and the scattering
    /// probabilities over a grid of the Lamb-Dicke parameter
    ScanEta(CommonOpts),
    /// Tabulate the required detector energy resolution against foil
    /// particle count for each probe wavelength
    ScanResolution(CommonOpts),
    /// Run the single-photon or multi-photon Monte-Carlo experiment
    Simulate(CommonOpts),
    /// Combined mirror feasibility report
    Feasibility(CommonOpts),
}

impl Command {
    fn opts(&self) -> &CommonOpts {
        match self {
            Command::ScanEta(o)
            | Command::ScanResolution(o)
            | Command::Simulate(o)
            | Command::Feasibility(o) => o,
        }
    }
}

fn load_config(opts: &CommonOpts) -> Result<RawConfig, AppError> {
    let mut cfg = match &opts.config {
        None => RawConfig::empty(),
        Some(path) => {
            let text = fs::read_to_string(path).map_err(|e| AppError::io(path, &e))?;
            RawConfig::parse(&text, &path.display().to_string())?
        }
    };
    if let Some(seed) = opts.seed {
        cfg.set("experiment", "seed", seed.to_string());
    }
    Ok(cfg)
}

fn require_out(opts: &CommonOpts) -> Result<&PathBuf, AppError> {
    opts.out
        .as_ref()
        .ok_or_else(|| AppError::validation("--out PATH is required for this command"))
}

fn dispatch(cli: Cli) -> Result<(), AppError> {
    let opts = cli.command.opts();
    let cfg = load_config(opts)?;
    match &cli.command {
        Command::ScanEta(o) => commands::cmd_scan_eta(&cfg, require_out(o)?),
        Command::ScanResolution(o) => commands::cmd_scan_resolution(&cfg, require_out(o)?),
        Command::Simulate(o) => {
            commands::cmd_simulate(&cfg, require_out(o)?, o.workers, o.force)
        }
        Command::Feasibility(o) => commands::cmd_feasibility(&cfg, o.out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version are not errors; anything else is a usage
            // (validation) failure
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match dispatch(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("foilsim: {err}");
            ExitCode::from(err.exit_code())
        }
    }
}
