//! `mbk` — analyze planar normed geometry and angular measures.
//!
//! Subcommands: `analyze` (Auerbach/segment structure and the existence
//! gate), `measure` (construct the transported angular measure), `verify`
//! (check the angular-measure axioms and the quarter-turn property), and
//! `staircase` (staircase function and supported measure of a perfect set).
//!
//! Exit codes: 0 success/pass, 2 malformed input, 3 existence gate failed,
//! 4 verification failed.

mod commands;
mod svg;

use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "mbk", version, about = "Birkhoff orthogonality, Auerbach sets and angular measures for planar normed spaces")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Detect the Auerbach set, boundary segments, and run the existence gate.
    Analyze(AnalyzeArgs),
    /// Build the angular measure for a body that passes the existence gate.
    Measure(MeasureArgs),
    /// Verify a measure against the angular-measure axioms and the π/2 arc property.
    Verify(VerifyArgs),
    /// Build the staircase function and supported measure of a perfect set.
    Staircase(StaircaseArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// Body descriptor JSON file.
    #[arg(long)]
    body: PathBuf,
    /// Angular scan resolution (radians); defaults to a body-dependent value.
    #[arg(long)]
    resolution: Option<f64>,
    /// Angular tolerance for the mutual-orthogonality defect.
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    /// Override the construction depth of a cantor_bump body.
    #[arg(long)]
    depth: Option<u32>,
    /// Override the bump amplitude of a cantor_bump body.
    #[arg(long)]
    epsilon: Option<f64>,
    /// Output directory.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct MeasureArgs {
    #[arg(long)]
    body: PathBuf,
    #[arg(long)]
    resolution: Option<f64>,
    #[arg(long, default_value_t = 1e-8)]
    tol: f64,
    /// Source measure ν: `auto` (from the detected set), `uniform`, `cantor`,
    /// or `file:<csv>` with a two-column (x, F) CDF on [0, 1].
    #[arg(long, default_value = "auto")]
    nu: String,
    /// Cantor depth for `--nu cantor`.
    #[arg(long, default_value_t = 10)]
    depth: u32,
    /// Override the bump amplitude of a cantor_bump body.
    #[arg(long)]
    epsilon: Option<f64>,
    /// Rows in the exported CDF grid.
    #[arg(long, default_value_t = 4096)]
    grid: usize,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    body: PathBuf,
    /// Measure to verify: `uniform`, `arclength`, a sidecar JSON written by
    /// `measure`, or a (theta, G) CSV on [0, 2π].
    #[arg(long)]
    measure: String,
    #[arg(long, default_value_t = 1e-6)]
    tol: f64,
    /// Equally spaced boundary samples for the π/2 check.
    #[arg(long, default_value_t = 10_000)]
    samples: usize,
    #[arg(long)]
    resolution: Option<f64>,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct StaircaseArgs {
    /// Perfect-set descriptor JSON file.
    #[arg(long)]
    set: Option<PathBuf>,
    /// Shortcut for the middle-thirds Cantor set of the given depth.
    #[arg(long)]
    cantor_depth: Option<u32>,
    #[arg(long, default_value_t = 2048)]
    grid: usize,
    #[arg(long)]
    out: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.cmd {
        Cmd::Analyze(a) => {
            commands::analyze(&a.body, a.resolution, a.tol, a.depth, a.epsilon, &a.out)
        }
        Cmd::Measure(a) => commands::measure(
            &a.body,
            a.resolution,
            a.tol,
            &a.nu,
            a.depth,
            a.epsilon,
            a.grid,
            &a.out,
        ),
        Cmd::Verify(a) => {
            commands::verify(&a.body, &a.measure, a.tol, a.samples, a.resolution, &a.out)
        }
        Cmd::Staircase(a) => {
            commands::staircase(a.set.as_deref(), a.cantor_depth, a.grid, &a.out)
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message);
            ExitCode::from(e.code)
        }
    }
}
