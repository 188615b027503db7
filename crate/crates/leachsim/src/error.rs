use std::path::PathBuf;

use thiserror::Error;

/// Errors surfaced by configuration, simulation, analysis, and file output.
#[derive(Debug, Error)]
pub enum Error {
    /// A configuration value or document is invalid. The message names the
    /// offending key or sweep cell.
    #[error("configuration error: {0}")]
    Config(String),

    /// An operation was called with arguments outside its domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Filesystem failure while reading or writing an artifact.
    #[error("i/o error on {}: {source}", path.display())]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    /// Process exit code the CLI maps this error to.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Config(_) | Error::Domain(_) => 1,
            Error::Io { .. } => 2,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
