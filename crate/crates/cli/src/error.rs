use std::io;
use std::path::PathBuf;

use arp_core::ArpError;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, CliError>;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error("{path}: {message}")]
    Parse { path: PathBuf, message: String },

    #[error(transparent)]
    Core(#[from] ArpError),

    #[error("{path}: {source}")]
    Io { path: PathBuf, source: io::Error },
}

impl CliError {
    pub const USAGE: i32 = 2;
    pub const GUARD: i32 = 3;
    pub const PRECONDITION: i32 = 4;

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(ArpError::GuardExceeded { .. }) => Self::GUARD,
            CliError::Core(ArpError::NotCompleteReverseOrder(_)) => Self::PRECONDITION,
            CliError::Io { .. } => 1,
            _ => Self::USAGE,
        }
    }

    pub(crate) fn parse(path: impl Into<PathBuf>, message: impl ToString) -> Self {
        CliError::Parse {
            path: path.into(),
            message: message.to_string(),
        }
    }

    pub(crate) fn io(path: impl Into<PathBuf>, source: io::Error) -> Self {
        CliError::Io {
            path: path.into(),
            source,
        }
    }
}
