//! Error type shared across the crate.

use thiserror::Error;

/// Errors produced by construction, evaluation, and I/O operations.
#[derive(Debug, Error)]
pub enum Error {
    /// A constructor argument violated its precondition.
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    /// An evaluation argument lay outside the operation's domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Jumpwise solving is defined only for uncompensated drivers.
    #[error("driver carries compensation drift; jumpwise solve requires compensate = false")]
    CompensatedDriver,

    /// A path failed its structural invariants.
    #[error("invalid path: {0}")]
    InvalidPath(String),

    /// The candidate volatility is unusable on the given path.
    #[error("invalid model: {0}")]
    InvalidModel(String),

    /// Two algebraically equal code paths disagreed beyond round-off.
    #[error("internal consistency check failed: {0}")]
    ConsistencyCheck(String),

    /// An estimator was given no usable data.
    #[error("no data: {0}")]
    NoData(String),

    /// File I/O failure, with the offending path.
    #[error("i/o error on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },

    /// A serialized artifact could not be parsed.
    #[error("parse error in {path}: {detail}")]
    Parse { path: String, detail: String },
}

impl Error {
    pub(crate) fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }

    pub(crate) fn parse(path: impl Into<String>, detail: impl Into<String>) -> Self {
        Error::Parse {
            path: path.into(),
            detail: detail.into(),
        }
    }
}
