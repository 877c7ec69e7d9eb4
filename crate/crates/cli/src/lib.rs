//! The `acspec` command line: spectra, fine partitions, the summary table,
//! counting formulas and relation consistency checks.

pub mod commands;
pub mod report;
pub mod table1;

use std::fmt;
use std::path::PathBuf;

use clap::{Parser, Subcommand};

use acspec_core::spectrum::{SpectrumKind, SpectrumOptions};
use acspec_core::Limits;

pub use commands::{Context, Outcome};
pub use report::{Format, ReportDocument, ReportEntry, Verdict};

pub mod exit {
    pub const OK: i32 = 0;
    pub const MISMATCH: i32 = 1;
    pub const UNKNOWN_ID: i32 = 2;
    pub const MALFORMED_FILE: i32 = 3;
    pub const CAP_EXCEEDED: i32 = 4;
    /// Bad arguments or values the library rejects.
    pub const USAGE: i32 = 5;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliError {
    pub code: i32,
    pub message: String,
}

impl CliError {
    pub fn unknown_id(m: impl Into<String>) -> Self {
        CliError { code: exit::UNKNOWN_ID, message: m.into() }
    }

    pub fn malformed_file(m: impl Into<String>) -> Self {
        CliError { code: exit::MALFORMED_FILE, message: m.into() }
    }

    pub fn cap_exceeded(m: impl Into<String>) -> Self {
        CliError { code: exit::CAP_EXCEEDED, message: m.into() }
    }

    pub fn usage(m: impl Into<String>) -> Self {
        CliError { code: exit::USAGE, message: m.into() }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for CliError {}

fn parse_kind(s: &str) -> Result<SpectrumKind, String> {
    s.parse().map_err(|e: acspec_core::Error| e.to_string())
}

#[derive(Debug, Parser)]
#[command(name = "acspec", version, about = "Associative and ac-spectra of binary operations")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Worker threads; results do not depend on it. Defaults to the core count.
    #[arg(long, global = true)]
    pub jobs: Option<usize>,
    /// Write the output here instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Leave per-entry timings out, for byte-stable output.
    #[arg(long, global = true)]
    pub no_timing: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Catalog ids with their kind and computed commutativity and associativity.
    List,
    /// Spectrum of a catalog groupoid or a JSON table file for n = 1..=n-max.
    Spectrum {
        groupoid: String,
        #[arg(long, default_value = "ac", value_parser = parse_kind)]
        kind: SpectrumKind,
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
    /// The fine spectrum: every class with its first term.
    Classes {
        groupoid: String,
        #[arg(long, default_value = "ac", value_parser = parse_kind)]
        kind: SpectrumKind,
        #[arg(long)]
        n: usize,
        /// List every member of every class.
        #[arg(long)]
        members: bool,
    },
    /// Every row of the summary table, both columns, checked against its formula.
    Table1 {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
    /// Evaluate a counting function, e.g. `formula ac_right_k 4 3`.
    Formula { name: String, args: Vec<u32> },
    /// Tree relations against groupoid spectra, plus the exponentiation spot check.
    Verify {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
        /// Seed for the exponentiation spot check.
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 100)]
        trials: usize,
    },
}

impl Cli {
    pub fn context(&self) -> Result<Context, CliError> {
        let jobs = match self.jobs {
            Some(0) => return Err(CliError::usage("--jobs must be at least 1")),
            Some(j) => j,
            None => std::thread::available_parallelism().map_or(1, |p| p.get()),
        };
        Ok(Context {
            format: self.format,
            timing: !self.no_timing,
            opts: SpectrumOptions { jobs, limits: Limits::from_env()?, representatives: false },
        })
    }
}

pub fn execute(cli: &Cli) -> Result<Outcome, CliError> {
    let ctx = cli.context()?;
    match &cli.command {
        Command::List => commands::cmd_list(&ctx),
        Command::Spectrum { groupoid, kind, n_max } => commands::cmd_spectrum(&ctx, groupoid, *kind, *n_max),
        Command::Classes { groupoid, kind, n, members } => commands::cmd_classes(&ctx, groupoid, *kind, *n, *members),
        Command::Table1 { n_max } => commands::cmd_table1(&ctx, *n_max),
        Command::Formula { name, args } => commands::cmd_formula(&ctx, name, args),
        Command::Verify { n_max, seed, trials } => commands::cmd_verify(&ctx, *n_max, *seed, *trials),
    }
}

/// Runs a parsed command line, writes its output, and returns the exit code.
pub fn run(cli: &Cli) -> i32 {
    let outcome = match execute(cli) {
        Ok(o) => o,
        Err(e) => {
            eprintln!("acspec: {e}");
            return e.code;
        }
    };
    match &cli.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &outcome.output) {
                eprintln!("acspec: cannot write {}: {e}", path.display());
                return exit::USAGE;
            }
        }
        None => print!("{}", outcome.output),
    }
    if outcome.mismatches > 0 {
        eprintln!("acspec: {} check(s) mismatched", outcome.mismatches);
        exit::MISMATCH
    } else {
        exit::OK
    }
}
