//! Command-line front end for `spectral-core`.
//!
//! [`execute`] runs one invocation end to end and reports the exit status
//! together with the text for stdout and stderr, so the binary is a thin
//! wrapper and tests can drive the same path in-process.

pub mod args;
pub mod commands;
pub mod parse;

use clap::error::ErrorKind;
use clap::Parser;

pub use args::Cli;
pub use commands::{run, Failure, FailureKind};

/// Result of one command-line invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Invocation {
    /// 0 on completion, 1 for malformed input, 2 for a violated hypothesis.
    pub status: u8,
    pub stdout: String,
    pub stderr: String,
}

/// Parse `argv` (including the program name) and run it.
pub fn execute<I, T>(argv: I) -> Invocation
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            let text = err.render().to_string();
            return match err.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Invocation {
                    status: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                _ => Invocation {
                    status: 1,
                    stdout: String::new(),
                    stderr: text,
                },
            };
        }
    };
    match run(&cli) {
        Ok(stdout) => Invocation {
            status: 0,
            stdout,
            stderr: String::new(),
        },
        Err(failure) => Invocation {
            status: failure.exit_code(),
            stdout: String::new(),
            stderr: format!("error: {failure}\n"),
        },
    }
}
