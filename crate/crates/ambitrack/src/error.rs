//! Unified error type for the crate.
//!
//! Errors fall into three groups that the CLI maps onto distinct exit codes:
//! I/O and file-format problems, configuration problems (bad parameter
//! values, dimension mismatches, malformed scene descriptions), and internal
//! invariant violations that indicate a bug rather than bad input.

use std::path::PathBuf;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// Underlying I/O failure, annotated with the path involved.
    #[error("{path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },

    /// Structurally invalid or unsupported WAV data.
    #[error("{path}: {reason}")]
    Wav { path: PathBuf, reason: String },

    /// Invalid configuration: out-of-range parameter, dimension mismatch,
    /// malformed scene description, unknown key, and the like.
    #[error("configuration: {0}")]
    Config(String),
}

impl Error {
    /// Attach a path to a raw `std::io::Error`.
    pub fn io(path: impl Into<PathBuf>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub fn wav(path: impl Into<PathBuf>, reason: impl Into<String>) -> Self {
        Error::Wav {
            path: path.into(),
            reason: reason.into(),
        }
    }

    pub fn config(reason: impl Into<String>) -> Self {
        Error::Config(reason.into())
    }
}
