//! Command-line interface of the sustainable lot-size solver.
//!
//! Reads a parameter file, runs one subcommand, and writes a CSV report to
//! standard output or to `--out`. Diagnostics go to standard error and any
//! failure exits nonzero.

mod config;
mod report;

use std::fs;
use std::io::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand};
use seoq_core::{build_segments, enumerate_combinations};

use crate::config::{dump_config, parse_config, FileConfig};
use crate::report::Fmt;

/// Lot-size optimization over a stepwise container-cost landscape.
#[derive(Debug, Parser)]
#[command(
    name = "seoq",
    version,
    about = "Sustainable lot-size solver and report generator",
    after_help = "The parameter file holds `name = value` lines using the canonical \
short keys (A, c, h, a, b, d, alpha, D, beta, v, gamma, gamma0, theta, epsilon, g, \
Ce, Cp, r, l) plus one `container = <capacity>,<available>` line per container \
type; `#` starts a comment. Reports are CSV with a header row."
)]
struct Cli {
    /// Parameter file to read (required; there is no default path).
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Write the report here instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    /// Percentage deltas applied by `sensitivity`.
    #[arg(
        long,
        global = true,
        value_name = "LIST",
        value_delimiter = ',',
        allow_hyphen_values = true,
        default_value = "-20,-10,0,10,20"
    )]
    deltas: Vec<f64>,

    /// Surplus-time values swept by `scenarios` (default: the configured `r`).
    #[arg(
        long = "r-list",
        global = true,
        value_name = "LIST",
        value_delimiter = ',',
        allow_hyphen_values = true
    )]
    r_list: Option<Vec<f64>>,

    /// Number of uniform grid steps sampled by `curve`.
    #[arg(long, global = true, value_name = "N", default_value_t = 2000)]
    grid: usize,

    /// Emit full-precision values instead of the fixed decimal widths.
    #[arg(long, global = true)]
    full_precision: bool,

    /// Echo the parsed configuration in canonical form and exit.
    #[arg(long, global = true)]
    dump_config: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, Subcommand)]
enum Command {
    /// Optimal continuous lot under the exact and expanded cost rates.
    Solve,
    /// Optimal whole-unit lot under the exact and expanded cost rates.
    SolveInt,
    /// Re-solve with unit cost, demand, and surplus shape scaled by --deltas.
    Sensitivity,
    /// Compare exact, expanded, and environmental optima across --r-list.
    Scenarios,
    /// Sample every cost function over a lot grid for plotting.
    Curve,
    /// Recover the surplus-storage shape parameters from the configured
    /// inputs.
    Calibrate,
}

fn main() {
    let cli = Cli::parse();
    if let Err(error) = run(&cli) {
        eprintln!("error: {error:#}");
        std::process::exit(1);
    }
}

fn run(cli: &Cli) -> anyhow::Result<()> {
    let path = cli
        .config
        .as_deref()
        .ok_or_else(|| anyhow!("missing required flag --config <PATH>"))?;
    let text = fs::read_to_string(path)
        .with_context(|| format!("cannot read `{}`", path.display()))?;
    let config: FileConfig =
        parse_config(&text).map_err(|error| anyhow!("{}: {error}", path.display()))?;

    if cli.dump_config {
        return write_output(cli.out.as_deref(), &dump_config(&config));
    }

    let p = &config.parameters;
    let segments = build_segments(&enumerate_combinations(&config.containers)?)?;
    let fmt = Fmt {
        full: cli.full_precision,
    };
    let csv = match cli.command {
        Command::Solve => report::solve_csv(p, &segments, &config.containers, &fmt)?,
        Command::SolveInt => report::solve_int_csv(p, &segments, &config.containers, &fmt)?,
        Command::Sensitivity => report::sensitivity_csv(p, &segments, &cli.deltas, &fmt)?,
        Command::Scenarios => {
            let default = [p.surplus_time_per_order];
            let surplus_times: &[f64] = cli.r_list.as_deref().unwrap_or(&default);
            report::scenarios_csv(p, &segments, surplus_times, &fmt)?
        }
        Command::Curve => report::curve_csv(p, &segments, cli.grid, &fmt)?,
        Command::Calibrate => report::calibrate_csv(p)?,
    };
    write_output(cli.out.as_deref(), &csv)
}

fn write_output(out: Option<&Path>, content: &str) -> anyhow::Result<()> {
    match out {
        Some(path) => fs::write(path, content)
            .with_context(|| format!("cannot write `{}`", path.display())),
        None => {
            let stdout = std::io::stdout();
            let mut handle = stdout.lock();
            handle
                .write_all(content.as_bytes())
                .and_then(|()| handle.flush())
                .context("cannot write to standard output")
        }
    }
}
