//! `vacprop`: command-line driver for the nonequilibrium vacuum force
//! library.
//!
//! Subcommands read a single JSON scenario document (see the `scenario`
//! module for the schema) and write one result table as CSV or JSON:
//!
//! - `force <scenario.json>`: propulsive force, optionally swept over the
//!   body temperature or the body size,
//! - `friction <scenario.json>`: needle propulsion against Einstein-Hopf
//!   drag, with terminal velocity, relaxation time, and velocity history,
//! - `cool <scenario.json>`: cooldown trajectory and terminal velocity of a
//!   ball or shell,
//! - `validate [filter]`: independent cross-check registry,
//! - `presets [name]`: material presets and runnable example scenarios.
//!
//! Exit codes: 0 success; 1 I/O failure or failing validation checks; 2
//! schema violation (line-addressed when the JSON itself is malformed); 3
//! quadrature or cubature nonconvergence, reporting the offending
//! dimensionless frequency.
//!
//! Sweep points run concurrently; set `RAYON_NUM_THREADS` to pin the thread
//! count. Results are written in sweep order and all numbers are formatted
//! with fixed precision, so identical scenarios (and, for sampled
//! validation checks, identical `--seed` values) give byte-identical CSV.

mod checks;
mod output;
mod presets;
mod runner;
mod scenario;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use crate::output::Table;
use crate::scenario::Resolved;

/// CLI failure, carrying its exit code class.
#[derive(Debug)]
pub enum CliError {
    /// Scenario or argument violates the schema (exit 2).
    Schema(String),
    /// A quadrature refused to converge (exit 3).
    NonConvergence(String),
    /// Filesystem or pipe trouble (exit 1).
    Io(String),
    /// This many validation checks failed (exit 1).
    Failures(usize),
}

const LONG_ABOUT: &str = "\
Forces, friction, and cooling dynamics of two-material bodies out of thermal
equilibrium with the vacuum.

Units: scenario dimensions are centimeters; temperatures are kelvin (*_k,
converted at 1 K = 8.617e-5 eV) or electronvolts (*_ev). Figure conventions
round room temperature to T = 0.025 eV = 1/(40 eV^-1), which a literal
300 K converts to 0.025851 eV; give temperatures in eV to reproduce figure
numbers exactly. Forces are reported both in natural units (eV^2) and in
newtons (1 eV^2 = 8.01e-13 N); a negative force points from the dielectric
half toward the metal half.";

const AFTER_HELP: &str = "\
Exit codes:
  0  success
  1  I/O failure, or one or more validation checks failed
  2  schema violation (line-addressed for malformed JSON)
  3  nonconvergence (reports the offending omega * size)

Environment:
  RAYON_NUM_THREADS  thread count for concurrent sweep points

Determinism: identical scenario files give byte-identical CSV; sampled
validation checks are driven by --seed.";

/// Command-line interface.
#[derive(Debug, Parser)]
#[command(name = "vacprop", version, about = "Vacuum self-propulsion calculator")]
#[command(long_about = LONG_ABOUT, after_help = AFTER_HELP)]
struct Cli {
    /// Seed for the sampled validation checks (Monte Carlo, identity
    /// sampling).
    #[arg(long, global = true, default_value_t = 42)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

/// Subcommands.
#[derive(Debug, Subcommand)]
enum Command {
    /// Propulsive force for a scenario, optionally swept.
    Force {
        /// Scenario JSON document.
        scenario: PathBuf,
    },
    /// Needle propulsion against Einstein-Hopf drag: terminal velocity,
    /// relaxation time, velocity history.
    Friction {
        /// Scenario JSON document (needle geometry).
        scenario: PathBuf,
    },
    /// Cooldown trajectory and terminal velocity of a ball or shell.
    Cool {
        /// Scenario JSON document (janus_ball or spherical_shell geometry).
        scenario: PathBuf,
    },
    /// Run the independent cross-check registry.
    Validate {
        /// Substring filter on check names (e.g. "mirror").
        filter: Option<String>,
    },
    /// Print material presets and example scenarios.
    Presets {
        /// Print just this example scenario.
        name: Option<String>,
    },
}

fn run_table_command(
    path: &Path,
    run: fn(&Resolved) -> Result<Table, CliError>,
) -> Result<(), CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Io(format!("cannot read {}: {e}", path.display())))?;
    let resolved = scenario::parse(&text).map_err(|e| CliError::Schema(e.0))?;
    let table = run(&resolved)?;
    table
        .write(&resolved.output)
        .map_err(|e| CliError::Io(format!("cannot write output: {e}")))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match &cli.command {
        Command::Force { scenario } => run_table_command(scenario, runner::run_force),
        Command::Friction { scenario } => run_table_command(scenario, runner::run_friction),
        Command::Cool { scenario } => run_table_command(scenario, runner::run_cool),
        Command::Validate { filter } => checks::run_validate(filter.as_deref(), cli.seed),
        Command::Presets { name } => presets::run(name.as_deref()),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Io(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(1)
        }
        Err(CliError::Failures(n)) => {
            eprintln!("error: {n} validation check(s) failed");
            ExitCode::from(1)
        }
        Err(CliError::Schema(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
        Err(CliError::NonConvergence(message)) => {
            eprintln!("error: {message}");
            ExitCode::from(3)
        }
    }
}
