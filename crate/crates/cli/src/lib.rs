//! Front end for `poisson-norm`: problem-file loading, command dispatch and
//! report rendering. The binary is a thin wrapper around [`run`].

use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};
use poisson_norm::poisson::Verdict;
use poisson_norm::selftest::DEFAULT_SEED;

pub mod commands;
pub mod problem;
pub mod report;

pub use problem::{LoadError, Problem, ProblemFile};
pub use report::Report;

/// Exit status: all checks passed.
pub const EXIT_PASS: u8 = 0;
/// A mathematical check failed and a certificate was emitted.
pub const EXIT_FAIL: u8 = 1;
/// Malformed input.
pub const EXIT_INPUT: u8 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "poisson-norm",
    version,
    about = "Exact checks for Poisson algebras and their normalizations"
)]
pub struct Cli {
    /// Print a single JSON report instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Truncation order N of the series ring (dvr commands).
    #[arg(long, global = true, default_value_t = 8)]
    pub order: usize,

    /// Truncation order M in the auxiliary variable t (dvr exp).
    #[arg(long = "t-order", global = true, default_value_t = 4)]
    pub t_order: usize,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Skew symmetry, Jacobi identity and compatibility with the ideal.
    Check { file: PathBuf },
    /// Is the given ideal a Poisson ideal?
    Ideal {
        file: PathBuf,
        /// Comma-separated generators; defaults to every candidate ideal in the file.
        #[arg(long, allow_hyphen_values = true)]
        ideal: Option<String>,
    },
    /// `{a1/s1, a2/s2}` by the four-term formula and by the quotient rule.
    Localize {
        file: PathBuf,
        #[arg(allow_hyphen_values = true)]
        a1: String,
        #[arg(allow_hyphen_values = true)]
        s1: String,
        #[arg(allow_hyphen_values = true)]
        a2: String,
        #[arg(allow_hyphen_values = true)]
        s2: String,
    },
    /// Extend the bracket or the derivation to the normalization.
    Extend {
        file: PathBuf,
        #[arg(long, value_enum)]
        what: What,
    },
    /// Truncated series experiments.
    Dvr {
        #[command(subcommand)]
        command: DvrCommand,
    },
    /// Run the seeded property suites.
    Selftest {
        /// Run a single suite.
        #[arg(long)]
        suite: Option<String>,
        #[cfg(feature = "fault-injection")]
        #[arg(long, value_enum)]
        inject_fault: Option<FaultArg>,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum What {
    Bracket,
    Derivation,
}

#[cfg(feature = "fault-injection")]
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FaultArg {
    /// Corrupt the stored value of `{x_0, x_1}`.
    Skew,
}

#[derive(Debug, Subcommand)]
pub enum DvrCommand {
    /// `sigma = exp(t xi)` on a truncated series.
    Exp {
        /// Value of the derivation on the uniformizer.
        #[arg(long, allow_hyphen_values = true)]
        xi: String,
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Second element for the homomorphism checks (defaults to `a`).
        #[arg(long, allow_hyphen_values = true)]
        b: Option<String>,
        #[arg(long, default_value = "QQ")]
        field: String,
        #[arg(long, default_value = "pi")]
        uniformizer: String,
    },
    /// Adjust a lift `x` of a root of `P` so that `P(x)` is a uniformizer.
    Adjust {
        #[arg(long, allow_hyphen_values = true)]
        minpoly: String,
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        /// Residue field; defaults to QQ[alpha]/(P(alpha)) for squarefree P of degree >= 2.
        #[arg(long)]
        field: Option<String>,
        #[arg(long, default_value = "T")]
        variable: String,
        #[arg(long, default_value = "pi")]
        uniformizer: String,
    },
}

/// What the process should print and return.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: u8,
    pub stdout: String,
    pub stderr: String,
}

impl Output {
    fn input_error(message: impl std::fmt::Display) -> Self {
        Output { code: EXIT_INPUT, stdout: String::new(), stderr: format!("error: {message}\n") }
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<String>,
{
    let args: Vec<String> = args.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    Output { code: EXIT_PASS, stdout: rendered, stderr: String::new() }
                }
                _ => Output { code: EXIT_INPUT, stdout: String::new(), stderr: rendered },
            };
        }
    };
    let report = match commands::dispatch(&cli) {
        Ok(r) => r,
        Err(e) => return Output::input_error(e),
    };
    let code = match report.verdict {
        Verdict::Pass => EXIT_PASS,
        Verdict::Fail => EXIT_FAIL,
    };
    let stdout = if cli.json {
        let value = report.to_json(&args[1..], cli.seed);
        let mut s = serde_json::to_string_pretty(&value).expect("reports are plain JSON");
        s.push('\n');
        s
    } else {
        let mut s = report.text;
        s.push_str(&format!("verdict: {}\n", report.verdict));
        s
    };
    Output { code, stdout, stderr: String::new() }
}
