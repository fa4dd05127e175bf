//! The `iso` command line: argument parsing, dispatch and exit codes.
//!
//! Exit codes: 0 success, 1 usage error, 2 domain error, 3 failed verification.

pub mod commands;
pub mod format;
pub mod verify;

use std::ffi::OsString;
use std::fmt;

use clap::{Parser, ValueEnum};

#[derive(Parser, Debug)]
#[command(
    name = "iso",
    version,
    about = "Weighted isobaric polynomials, their Hessenberg forms and convolution roots"
)]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    #[command(subcommand)]
    pub command: commands::Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Domain(String),
}

impl CliError {
    pub fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 1,
            CliError::Domain(_) => 2,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) | CliError::Domain(m) => f.write_str(m),
        }
    }
}

impl From<isobaric_core::Error> for CliError {
    fn from(e: isobaric_core::Error) -> Self {
        CliError::Domain(e.to_string())
    }
}

/// What a run printed and how it ended.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: 1,
                    stdout: String::new(),
                    stderr: rendered,
                }
            } else {
                Outcome {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                }
            };
        }
    };
    match commands::execute(&cli.command, cli.format) {
        Ok(printed) => Outcome {
            code: if printed.verified { 0 } else { 3 },
            stdout: printed.text,
            stderr: String::new(),
        },
        Err(e) => Outcome {
            code: e.code(),
            stdout: String::new(),
            stderr: format!("error: {}\n", e),
        },
    }
}
