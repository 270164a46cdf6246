//! Std companion to `comax-core`: spectrum rendering, the verification
//! pipeline, the parallel integrality scanner and graph exports.

pub mod output;
pub mod scan;
pub mod verify;

use std::io;

use comax_core::DEFAULT_DENSE_LIMIT;

/// Environment variable overriding the dense oracle size cap.
pub const DENSE_LIMIT_VAR: &str = "COMAX_DENSE_LIMIT";

/// Default upper end of a scan range.
pub const DEFAULT_SCAN_LIMIT: u64 = 1_000_000;

/// Dense oracle cap from the environment, falling back to the library default.
pub fn dense_limit() -> Result<usize, CliError> {
    match std::env::var(DENSE_LIMIT_VAR) {
        Ok(v) => v.trim().parse().map_err(|_| {
            CliError::Usage(format!(
                "{DENSE_LIMIT_VAR} must be a non-negative integer (got {v:?})"
            ))
        }),
        Err(_) => Ok(DEFAULT_DENSE_LIMIT),
    }
}

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] comax_core::Error),
    #[error("{context}: {source}")]
    Io {
        context: String,
        #[source]
        source: io::Error,
    },
}

impl CliError {
    pub fn io(context: impl Into<String>, source: io::Error) -> Self {
        CliError::Io {
            context: context.into(),
            source,
        }
    }

    /// 2 for bad input, 3 for I/O failures.
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io { .. } => 3,
            CliError::Usage(_) => 2,
            CliError::Core(
                comax_core::Error::Inconsistent(_) | comax_core::Error::NegativeEigenvalue(_),
            ) => 1,
            CliError::Core(_) => 2,
        }
    }
}
