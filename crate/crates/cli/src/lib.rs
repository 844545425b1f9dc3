//! Library side of the `tb` command-line tool.

pub mod cert;
pub mod commands;
pub mod format;
pub mod render;
pub mod source;

pub use commands::{run, Cli, Command};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}: {1}")]
    Io(String, #[source] std::io::Error),
    #[error("infeasible: {0}")]
    Infeasible(String),
    #[error("not found: {0}")]
    NotFound(String),
    #[error("rejected: {0}")]
    Rejected(String),
}

impl CliError {
    /// 1 for infeasible, missing or rejected results; 2 for bad invocations and inputs.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Parse(_) | CliError::Io(..) => 2,
            CliError::Infeasible(_) | CliError::NotFound(_) | CliError::Rejected(_) => 1,
        }
    }
}
