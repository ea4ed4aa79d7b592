//! Command-line front end for `sphere_search`: write inspection tours,
//! verify curves, run ratio sweeps, and check hemisphere covers.
//!
//! Exit codes: 0 when the checked property holds, 1 when it verifiably
//! fails, 2 for usage or input errors.

use std::ffi::OsString;
use std::io::Write;

use clap::{Parser, Subcommand};

pub mod commands;
pub mod error;
pub mod files;
pub mod sweep;

pub use commands::{
    cmd_cover, cmd_search, cmd_sweep, cmd_tour, cmd_verify, CoverArgs, Outcome, SearchArgs,
    SweepArgs, TourArgs, VerifyArgs,
};
pub use error::CliError;
pub use files::{CurveFile, PoleFile};
pub use sweep::{run_sweep, SweepConfig, SweepResult, SweepRow};

pub const THREADS_ENV: &str = "SPHERE_SEARCH_THREADS";

#[derive(Debug, Parser)]
#[command(
    name = "sphere-search",
    version,
    about = "Sphere inspection tours and hyperplane search"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Write the cross-polytope inspection tour as a curve file
    Tour(TourArgs),
    /// Check that a curve file inspects the unit sphere
    Verify(VerifyArgs),
    /// Simulate the doubling search on random hyperplanes and write CSV
    Sweep(SweepArgs),
    /// Check the simplex hemisphere cover, or refute a pole file
    Cover(CoverArgs),
    /// Simulate the doubling search for one hyperplane
    Search(SearchArgs),
}

pub fn execute(command: &Command, out: &mut dyn Write) -> Result<Outcome, CliError> {
    match command {
        Command::Tour(a) => cmd_tour(a, out),
        Command::Verify(a) => cmd_verify(a, out),
        Command::Sweep(a) => cmd_sweep(a, out),
        Command::Cover(a) => cmd_cover(a, out),
        Command::Search(a) => cmd_search(a, out),
    }
}

/// Parses `args` (including the program name), runs the command and
/// returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version requests are not errors.
            if e.exit_code() == 0 {
                let _ = write!(out, "{}", e.render());
                return 0;
            }
            let _ = write!(err, "{}", e.render());
            return 2;
        }
    };
    match execute(&cli.command, out) {
        Ok(outcome) => outcome.code(),
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            2
        }
    }
}

/// Thread count requested through `SPHERE_SEARCH_THREADS`, if any.
pub fn requested_threads(value: Option<&str>) -> Result<Option<usize>, CliError> {
    match value.map(str::trim) {
        None | Some("") => Ok(None),
        Some(v) => match v.parse::<usize>() {
            Ok(n) if n > 0 => Ok(Some(n)),
            _ => Err(CliError::usage(format!(
                "{THREADS_ENV} must be a positive integer, got {v:?}"
            ))),
        },
    }
}
