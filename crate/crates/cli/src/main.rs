//! `apdb`: build pattern databases, generate instances, solve them and
//! sample heuristic values.
//!
//! Exit codes: 0 success, 1 runtime failure (I/O and the like), 2 invalid
//! arguments or config, 3 a node or memory budget ran out.

mod args;
mod build;
mod config;
mod gen;
mod instances;
mod output;
mod sample;
mod solve;

use std::ffi::OsString;
use std::fmt;
use std::num::NonZeroUsize;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{CommandFactory, FromArgMatches, Parser, Subcommand};

#[derive(Parser, Debug)]
#[command(name = "apdb", version, about = "Additive pattern database benchmarks", args_override_self = true)]
struct Cli {
    /// Config file with one `[subcommand]` section of `key = value` options.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Build a pattern database and write it as an APDB file.
    BuildPdb(build::BuildArgs),
    /// Solve instances and print one row per instance plus a mean row.
    Solve(solve::SolveArgs),
    /// Summarize heuristic values over random states.
    SampleH(sample::SampleArgs),
    /// Write instances: tile or peg-digit lines, or a DIMACS graph.
    Gen(gen::GenArgs),
}

/// Bad option values, missing inputs, or a malformed config file.
#[derive(Debug)]
pub struct InvalidConfig(pub String);

impl fmt::Display for InvalidConfig {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for InvalidConfig {}

const INVALID: u8 = 2;
const BUDGET: u8 = 3;

pub fn require_file(path: &Path) -> Result<&Path, InvalidConfig> {
    if path.is_file() {
        Ok(path)
    } else {
        Err(InvalidConfig(format!("{} does not exist", path.display())))
    }
}

pub fn pool(jobs: NonZeroUsize) -> anyhow::Result<rayon::ThreadPool> {
    Ok(rayon::ThreadPoolBuilder::new().num_threads(jobs.get()).build()?)
}

fn exit_code(e: &anyhow::Error) -> u8 {
    use apdb_core::Error as E;
    for cause in e.chain() {
        if cause.is::<InvalidConfig>() {
            return INVALID;
        }
        if let Some(core) = cause.downcast_ref::<E>() {
            return match core {
                E::BudgetExceeded(_) => BUDGET,
                E::InvalidArgument(_) | E::InvalidState(_) | E::UnknownName { .. } | E::Parse { .. } => INVALID,
                _ => 1,
            };
        }
    }
    1
}

/// The value of `--config`, found before full parsing so the file can
/// supply required options.
fn config_path(argv: &[OsString]) -> Option<PathBuf> {
    let mut it = argv.iter().skip(1);
    while let Some(a) = it.next() {
        let a = a.to_str()?;
        if a == "--" {
            return None;
        }
        if a == "--config" {
            return it.next().map(PathBuf::from);
        }
        if let Some(p) = a.strip_prefix("--config=") {
            return Some(PathBuf::from(p));
        }
    }
    None
}

fn run(argv: Vec<OsString>) -> anyhow::Result<bool> {
    let cmd = Cli::command();
    let argv = match config_path(&argv) {
        Some(p) => config::splice(&cmd, argv, &p)?,
        None => argv,
    };
    let matches = cmd.try_get_matches_from(argv).map_err(|e| {
        let _ = e.print();
        ClapExit(e.exit_code())
    })?;
    let cli = Cli::from_arg_matches(&matches).map_err(|e| {
        let _ = e.print();
        ClapExit(e.exit_code())
    })?;
    match &cli.command {
        Cmd::BuildPdb(a) => build::run(a).map(|_| true),
        Cmd::Solve(a) => solve::run(a),
        Cmd::SampleH(a) => sample::run(a).map(|_| true),
        Cmd::Gen(a) => gen::run(a).map(|_| true),
    }
}

/// clap has already printed its message (help, version or a usage error).
#[derive(Debug)]
struct ClapExit(i32);

impl fmt::Display for ClapExit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "exit {}", self.0)
    }
}

impl std::error::Error for ClapExit {}

fn main() -> ExitCode {
    match run(std::env::args_os().collect()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => {
            eprintln!("apdb: some instances ran out of budget");
            ExitCode::from(BUDGET)
        }
        Err(e) => {
            if let Some(ClapExit(code)) = e.downcast_ref::<ClapExit>() {
                return ExitCode::from(if *code == 0 { 0 } else { INVALID });
            }
            eprintln!("apdb: {e:#}");
            ExitCode::from(exit_code(&e))
        }
    }
}
