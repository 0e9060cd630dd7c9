//! `rdi` — config-driven front end: invert prescribed spinor dynamics over
//! grids, verify the library's invariants, list the scenario catalog.

mod config;
mod invert;
mod listing;
mod scenario;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use rdi_core::CoreError;

use crate::config::Config;

/// Exit code for configuration errors (also used by argument parsing).
const EXIT_CONFIG: u8 = 2;
/// Exit code when the prescribed dynamics fails the Hermiticity gate.
const EXIT_NON_PHYSICAL: u8 = 3;
/// Exit code for internal numerical failures.
const EXIT_NUMERICAL: u8 = 4;

#[derive(Parser)]
#[command(name = "rdi", version, about = "Relativistic dynamical inversion")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invert the scenario over the configured grid; write CSV field maps
    /// and a JSON summary.
    Invert(RunArgs),
    /// Run the verification suite and report pass/fail per check.
    Verify(VerifyArgs),
    /// List the available scenarios and presets.
    Catalog {
        /// Emit the listing as JSON.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Args)]
struct RunArgs {
    /// Path to a TOML configuration file.
    #[arg(long, conflicts_with = "preset")]
    config: Option<PathBuf>,
    /// Name of a built-in preset (see `rdi catalog`).
    #[arg(long)]
    preset: Option<String>,
    /// Output directory; defaults to the current directory.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker thread count; falls back to RDI_THREADS, then to one thread
    /// per core.
    #[arg(long)]
    threads: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Path to a TOML configuration file (tolerances and check subset);
    /// the full suite with default tolerances runs when omitted.
    #[arg(long, conflicts_with = "preset")]
    config: Option<PathBuf>,
    /// Name of a built-in preset.
    #[arg(long)]
    preset: Option<String>,
    /// Directory for the JSON report; printed to stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Worker thread count; falls back to RDI_THREADS.
    #[arg(long)]
    threads: Option<usize>,
}

/// Command-level failures, each mapped to a distinct exit code.
#[derive(Debug)]
pub enum AppError {
    Config(String),
    NonPhysical(String),
    Numerical(String),
    Io(String),
}

impl AppError {
    fn exit_code(&self) -> u8 {
        match self {
            AppError::Config(_) => EXIT_CONFIG,
            AppError::NonPhysical(_) => EXIT_NON_PHYSICAL,
            AppError::Numerical(_) => EXIT_NUMERICAL,
            AppError::Io(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            AppError::Config(m)
            | AppError::NonPhysical(m)
            | AppError::Numerical(m)
            | AppError::Io(m) => m,
        }
    }
}

impl From<CoreError> for AppError {
    fn from(e: CoreError) -> Self {
        match e {
            CoreError::InvalidParameter(_)
            | CoreError::Syntax { .. }
            | CoreError::UnknownIdentifier { .. } => AppError::Config(e.to_string()),
            CoreError::NonPhysicalDynamics { .. } => AppError::NonPhysical(e.to_string()),
            CoreError::SingularState { .. }
            | CoreError::Domain { .. }
            | CoreError::ZeroDensity => AppError::Numerical(e.to_string()),
        }
    }
}

fn load_config(config: &Option<PathBuf>, preset: &Option<String>) -> Result<Config, AppError> {
    let text = match (config, preset) {
        (Some(path), None) => std::fs::read_to_string(path)
            .map_err(|e| AppError::Config(format!("cannot read {}: {e}", path.display())))?,
        (None, Some(name)) => config::preset_source(name)
            .ok_or_else(|| {
                AppError::Config(format!(
                    "unknown preset `{name}`; available: {}",
                    config::PRESET_NAMES.join(", ")
                ))
            })?
            .to_string(),
        _ => {
            return Err(AppError::Config(
                "exactly one of --config or --preset is required".into(),
            ))
        }
    };
    Config::parse(&text).map_err(AppError::Config)
}

/// Resolves the worker count: --threads, then RDI_THREADS, then default.
fn thread_pool(threads: Option<usize>) -> Result<rayon::ThreadPool, AppError> {
    let n = threads.or_else(|| {
        std::env::var("RDI_THREADS")
            .ok()
            .and_then(|s| s.parse().ok())
    });
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(n) = n {
        if n == 0 {
            return Err(AppError::Config("thread count must be >= 1".into()));
        }
        builder = builder.num_threads(n);
    }
    builder
        .build()
        .map_err(|e| AppError::Numerical(format!("thread pool: {e}")))
}

fn run(cli: Cli) -> Result<(), AppError> {
    match cli.command {
        Command::Invert(args) => {
            let cfg = load_config(&args.config, &args.preset)?;
            let out = args.out.unwrap_or_else(|| PathBuf::from("."));
            let pool = thread_pool(args.threads)?;
            invert::run(&cfg, &out, &pool)
        }
        Command::Verify(args) => {
            let cfg = match (&args.config, &args.preset) {
                (None, None) => None,
                _ => Some(load_config(&args.config, &args.preset)?),
            };
            let pool = thread_pool(args.threads)?;
            verify::run(cfg.as_ref(), args.out.as_deref(), &pool)
        }
        Command::Catalog { json } => {
            listing::print(json);
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {}", e.message());
            ExitCode::from(e.exit_code())
        }
    }
}
