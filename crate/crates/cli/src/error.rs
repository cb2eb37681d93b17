use std::io;
use std::path::PathBuf;

use coherence_core::CoherenceError;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("invalid config: {0}")]
    Config(String),
    #[error(transparent)]
    Core(#[from] CoherenceError),
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{0}")]
    Check(String),
}

impl CliError {
    pub fn config(msg: impl Into<String>) -> Self {
        CliError::Config(msg.into())
    }

    pub fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => 2,
            CliError::Core(CoherenceError::InvalidParameter { .. }) => 2,
            CliError::Core(CoherenceError::ToleranceInfeasible { .. }) => 3,
            CliError::Core(_) => 1,
            CliError::Io { .. } => 4,
            CliError::Check(_) => 1,
        }
    }
}
