//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by library operations.
///
/// Verification *findings* (a theorem instance that fails to hold) are not
/// errors; they are reported through [`crate::report::StabilityReport`].
/// Errors mean the computation itself could not be carried out.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition on the arguments was violated.
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A configured resource cap was exceeded.
    #[error("resource cap exceeded: {0}")]
    ResourceLimit(String),

    /// An internal exactness check failed (e.g. a class sum that must be an
    /// integer was not). Always a bug, never a finding.
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),

    /// Cache or report I/O failed.
    #[error("io: {0}")]
    Io(#[from] std::io::Error),

    /// A cache file could not be parsed.
    #[error("cache format: {0}")]
    Format(#[from] serde_json::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
