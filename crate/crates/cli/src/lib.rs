//! Command-line front end for `knotlie`.
//!
//! [`run`] parses arguments and returns the text for both output streams and
//! the exit code, so the binary is a thin wrapper and commands are testable
//! in process.

pub mod commands;
pub mod oracle;
pub mod selftest;

use clap::{Args, Parser, Subcommand, ValueEnum};
use knotlie::{Error, ErrorKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_SCOPE: i32 = 2;
pub const EXIT_DEGENERATE: i32 = 3;
pub const EXIT_SELFTEST: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Text,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Quotient {
    /// Conjugacy classes of the fiber group.
    None,
    /// Orbits of classes under t.
    Pi,
    /// First homology of the fiber.
    Homology,
}

#[derive(Parser, Debug)]
#[command(name = "knotlie", version, about = "Goldman-type Lie algebras of fibered knots")]
pub struct Cli {
    #[command(flatten)]
    pub config: RunConfig,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Clone, Debug)]
pub struct RunConfig {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Seed for randomized suites.
    #[arg(long, global = true, default_value_t = 1)]
    pub seed: u64,
    /// Consecutive length increases required to certify an orbit minimum.
    #[arg(long, global = true, default_value_t = 5, value_parser = clap::value_parser!(u64).range(1..))]
    pub orbit_bound: u64,
    /// Worker threads; 0 picks the number of cores.
    #[arg(long, global = true, default_value_t = 0)]
    pub jobs: usize,
}

impl Default for RunConfig {
    fn default() -> Self {
        RunConfig {
            format: Format::Text,
            seed: 1,
            orbit_bound: 5,
            jobs: 0,
        }
    }
}

/// A knot argument: a catalog name, a path to a JSON model, or a braid word.
#[derive(Args, Clone, Debug)]
pub struct KnotArg {
    /// `trefoil`, `figure8`, a `.json` model file, or a braid such as "s1 s1 s1".
    pub knot: String,
    /// Strand count for braid input (default: largest index + 1).
    #[arg(long)]
    pub strands: Option<usize>,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Components, genus, presentation size and Alexander polynomial.
    Knot(KnotArg),
    /// Alexander polynomial by Fox calculus.
    Alexander(KnotArg),
    /// Knot group presentation; with --cover, the leveled cover relators.
    Presentation {
        #[command(flatten)]
        knot: KnotArg,
        #[arg(long)]
        cover: bool,
    },
    /// Bracket of two words of the fiber group.
    Bracket {
        #[command(flatten)]
        knot: KnotArg,
        first: String,
        second: String,
        #[arg(long, value_enum, default_value_t = Quotient::None)]
        quotient: Quotient,
    },
    /// Brackets of all pairs of classes up to a length bound.
    Table {
        #[command(flatten)]
        knot: KnotArg,
        #[arg(long, default_value_t = 2)]
        max_len: usize,
        #[arg(long, value_enum, default_value_t = Quotient::None)]
        quotient: Quotient,
    },
    /// Runs the invariant suites.
    Selftest {
        /// Run only the named suites (repeatable); `--list` shows names.
        #[arg(long = "suite")]
        suites: Vec<String>,
        /// List suite names and exit.
        #[arg(long)]
        list: bool,
        /// Corrupts the bracket to check that the suites notice.
        #[arg(long, hide = true, value_enum)]
        mutation: Option<MutationArg>,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MutationArg {
    SignFlip,
}

/// Text for standard output and standard error, and the exit code.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Outcome {
    pub fn ok(stdout: String) -> Self {
        Outcome {
            stdout,
            stderr: String::new(),
            code: EXIT_OK,
        }
    }

    pub fn error(e: &Error) -> Self {
        let code = match e.kind() {
            ErrorKind::Usage => EXIT_USAGE,
            ErrorKind::Scope => EXIT_SCOPE,
            ErrorKind::Degenerate => EXIT_DEGENERATE,
        };
        Outcome {
            stdout: String::new(),
            stderr: format!("error[{}]: {e}\n", e.code()),
            code,
        }
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => Outcome::ok(text),
                _ => Outcome {
                    stdout: String::new(),
                    stderr: format!("error[E-USAGE]: {}", text.strip_prefix("error: ").unwrap_or(&text)),
                    code: EXIT_USAGE,
                },
            };
        }
    };
    execute(&cli.config, &cli.command)
}

pub fn execute(config: &RunConfig, command: &Command) -> Outcome {
    match commands::dispatch(config, command) {
        Ok(outcome) => outcome,
        Err(e) => Outcome::error(&e),
    }
}
