//! IO companion to the `polar-scs` library: JSON configuration schemas,
//! hand-editable file formats, and a reproducible parallel Monte-Carlo
//! harness. The `polar-scs` binary in this package is a thin front end over
//! these modules.

pub mod config;
pub mod files;
pub mod harness;

use std::fmt;

/// Everything that can go wrong outside the core library: malformed
/// configuration, file-format violations, or a core error surfaced while
/// running a job.
#[derive(Debug)]
pub enum CliError {
    /// A configuration value is structurally valid JSON but inconsistent.
    Config(String),
    /// A text-format violation, with a 1-based line number when known.
    File { line: Option<usize>, message: String },
    /// The core library refused an operation.
    Core(polar_scs::Error),
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Config(msg) => write!(f, "configuration error: {msg}"),
            CliError::File { line: Some(line), message } => {
                write!(f, "line {line}: {message}")
            }
            CliError::File { line: None, message } => write!(f, "{message}"),
            CliError::Core(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<polar_scs::Error> for CliError {
    fn from(e: polar_scs::Error) -> Self {
        CliError::Core(e)
    }
}
