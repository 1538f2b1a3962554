//! Library half of the `betajacobi` command-line tool: argument types,
//! experiment runners, CSV/JSON output and the self-check suite.

pub mod args;
pub mod csvio;
pub mod experiments;
pub mod selfcheck;
pub mod summary;

use std::fmt;

/// Process exit status for a failed command.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExitKind {
    /// Bad parameters, unreadable or malformed input files.
    Parameter = 1,
    /// A numerical routine broke down.
    Numerical = 2,
    /// A distributional comparison exceeded its threshold.
    Comparison = 3,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Failure {
    pub kind: ExitKind,
    pub message: String,
}

impl Failure {
    pub fn parameter(message: impl Into<String>) -> Self {
        Self {
            kind: ExitKind::Parameter,
            message: message.into(),
        }
    }

    pub fn numerical(message: impl Into<String>) -> Self {
        Self {
            kind: ExitKind::Numerical,
            message: message.into(),
        }
    }

    pub fn comparison(message: impl Into<String>) -> Self {
        Self {
            kind: ExitKind::Comparison,
            message: message.into(),
        }
    }

    pub fn code(&self) -> i32 {
        self.kind as i32
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

impl std::error::Error for Failure {}

impl From<betajacobi::Error> for Failure {
    fn from(e: betajacobi::Error) -> Self {
        if e.is_parameter_error() {
            Failure::parameter(e.to_string())
        } else {
            Failure::numerical(e.to_string())
        }
    }
}

pub type CliResult<T> = Result<T, Failure>;

/// Parses and runs one command line, writing primary output to the file or
/// stdout named by `--out`.
pub fn run(args: args::Cli) -> CliResult<()> {
    experiments::dispatch(args.command)
}
