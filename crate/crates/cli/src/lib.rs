//! `detident` command-line front end.
//!
//! Exit codes: 0 when every check passes, 1 when an identity residual or an
//! engine comparison fails, 2 for input and usage errors. Diagnostics go to
//! the error stream only.

pub mod commands;
pub mod fuzz;
pub mod report;

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use crate::report::RunReport;

/// Matrices above this order skip the cofactor-expansion engine in `--engine all`
/// and in fuzz engine checks.
pub const LAPLACE_MAX_N: usize = 8;
/// Index sweeps in `verify` are exhaustive up to this order.
pub const EXHAUSTIVE_MAX_N: usize = 6;
/// Number of seeded index choices per identity in `verify` above `EXHAUSTIVE_MAX_N`.
pub const SAMPLED_SELECTIONS: usize = 64;

#[derive(Debug, Parser)]
#[command(name = "detident", version, about = "Exact determinants, minors, Pfaffians, and identity checks")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, clap::Args)]
pub struct Output {
    /// Emission format for matrices and reports on standard output.
    #[arg(long, value_enum, default_value_t = FormatArg::Text)]
    pub format: FormatArg,
    /// Also write the JSON report to this path.
    #[arg(long)]
    pub report: Option<PathBuf>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute a determinant with one or all engines.
    #[command(after_help = "With --engine all, cofactor expansion runs only for n <= 8.")]
    Det {
        /// Matrix file (text or JSON); `-` reads standard input.
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Engine::All)]
        engine: Engine,
        #[command(flatten)]
        output: Output,
    },
    /// Check determinant identities as exact-zero residuals.
    #[command(after_help = "Without index selections every choice is checked for n <= 6; \
        above that 64 seeded choices per identity are sampled (see --seed). Jacobi always checks \
        every ordered pair. `pluecker` reads an n×(n+r) file: the first n−r columns form the \
        shared block and the last 2r are the vectors.")]
    Verify {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = IdentityArg::All)]
        identity: IdentityArg,
        /// Ordered pair `i,j` for the Jacobi identity.
        #[arg(long, value_parser = parse_list)]
        pair: Option<IndexList>,
        /// Row indices, e.g. `1,2`.
        #[arg(long, value_parser = parse_list)]
        rows: Option<IndexList>,
        /// Column indices, e.g. `1,2,3,4`.
        #[arg(long, value_parser = parse_list)]
        cols: Option<IndexList>,
        /// Row count r for the generalized relation (default: every r with 2r <= n).
        #[arg(long)]
        r: Option<usize>,
        /// Seed for sampled sweeps.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Pfaffian of an antisymmetric matrix.
    Pfaffian {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = PfaffianCheck::None)]
        check: PfaffianCheck,
        #[command(flatten)]
        output: Output,
    },
    /// Emit the Pfaffian form of a determinant and check it.
    Embed {
        file: PathBuf,
        /// Also check the minor correspondences for every i, j.
        #[arg(long)]
        minors: bool,
        #[command(flatten)]
        output: Output,
    },
    /// Seeded random differential checks.
    #[command(after_help = fuzz::ALGORITHM_HELP)]
    Fuzz {
        #[arg(long)]
        seed: u64,
        /// Number of trials, at least 1.
        #[arg(long, default_value_t = 100)]
        trials: u64,
        /// Largest matrix order drawn, at least 2.
        #[arg(long, default_value_t = 6)]
        size_max: usize,
        /// Entries are drawn from [-bound, bound].
        #[arg(long, default_value_t = 9)]
        entry_bound: i64,
        /// Which checks to run; draws are the same for every choice.
        #[arg(long, value_enum, default_value_t = FuzzSelection::All)]
        identity: FuzzSelection,
        #[command(flatten)]
        output: Output,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FormatArg {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Engine {
    Laplace,
    Bareiss,
    Dodgson,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum IdentityArg {
    Jacobi,
    ThreeTerm,
    Generalized,
    Pluecker,
    All,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PfaffianCheck {
    None,
    Square,
    Recurrence,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FuzzSelection {
    All,
    Engines,
    Jacobi,
    ThreeTerm,
    Generalized,
    Pluecker,
    Pfaffian,
    Embed,
}

/// Comma-separated 1-based indices as given on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexList(pub Vec<usize>);

fn parse_list(s: &str) -> Result<IndexList, String> {
    if s.is_empty() {
        return Ok(IndexList(Vec::new()));
    }
    s.split(',')
        .map(|t| t.trim().parse::<usize>().map_err(|e| format!("{t:?}: {e}")))
        .collect::<Result<_, _>>()
        .map(IndexList)
}

/// Input or usage failure; always exit code 2.
#[derive(Debug)]
pub struct CliError(pub String);

impl From<detident::Error> for CliError {
    fn from(e: detident::Error) -> Self {
        CliError(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError(e.to_string())
    }
}

/// What a command writes to standard output, besides the report.
pub struct Outcome {
    pub report: RunReport,
    /// Emitted before the report in text mode.
    pub preamble: Option<String>,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(err, "{e}");
                2
            } else {
                let _ = write!(out, "{e}");
                0
            };
            return code;
        }
    };
    match execute(cli.command, out) {
        Ok(code) => code,
        Err(CliError(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            2
        }
    }
}

fn execute(command: Command, out: &mut dyn Write) -> Result<i32, CliError> {
    let (outcome, output) = match command {
        Command::Det { file, engine, output } => (commands::det(&file, engine)?, output),
        Command::Verify { file, identity, pair, rows, cols, r, seed, output } => {
            let selection = commands::VerifySelection {
                pair: pair.map(|l| l.0),
                rows: rows.map(|l| l.0),
                cols: cols.map(|l| l.0),
                r,
                seed,
            };
            (commands::verify(&file, identity, &selection)?, output)
        }
        Command::Pfaffian { file, check, output } => (commands::pfaffian(&file, check)?, output),
        Command::Embed { file, minors, output } => (commands::embed(&file, minors, output.format)?, output),
        Command::Fuzz { seed, trials, size_max, entry_bound, identity, output } => {
            let params = fuzz::FuzzParams { seed, trials, size_max, entry_bound, selection: identity };
            (fuzz::run_fuzz(&params)?, output)
        }
    };
    emit(&outcome, &output, out)
}

/// Writes the outcome to `out` (and to `--report`, if set) and returns the
/// exit code.
pub fn emit(outcome: &Outcome, output: &Output, out: &mut dyn Write) -> Result<i32, CliError> {
    let report = &outcome.report;
    if let Some(path) = &output.report {
        std::fs::write(path, report.to_json())
            .map_err(|e| CliError(format!("{}: {e}", path.display())))?;
    }
    match output.format {
        FormatArg::Text => {
            if let Some(pre) = &outcome.preamble {
                out.write_all(pre.as_bytes())?;
            }
            out.write_all(report.to_text().as_bytes())?;
        }
        FormatArg::Json => out.write_all(report.to_json().as_bytes())?,
    }
    Ok(report.exit_code())
}
