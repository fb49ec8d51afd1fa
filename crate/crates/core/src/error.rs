use thiserror::Error;

/// Crate-wide error type. The variants mirror the CLI exit-code contract:
/// usage/domain errors, capacity (budget) errors, and verification failures
/// are distinguishable by the caller.
#[derive(Debug, Error)]
pub enum Error {
    /// The caller violated a precondition: bad parameters, mismatched
    /// moduli, malformed input.
    #[error("usage: {0}")]
    Usage(String),

    /// The operation has no result on this input (inversion of zero,
    /// characteristic obstruction).
    #[error("domain: {0}")]
    Domain(String),

    /// The instance exceeds a configured budget. Nothing was computed;
    /// there is no silent truncation.
    #[error("capacity: {what} needs {required}, budget is {budget}")]
    Capacity {
        what: String,
        required: u128,
        budget: u128,
    },

    /// An exactly checked clause failed; the message carries the witness.
    #[error("verification failed: {0}")]
    Verification(String),

    #[error("io on {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    pub fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub fn capacity(what: impl Into<String>, required: u128, budget: u128) -> Self {
        Error::Capacity {
            what: what.into(),
            required,
            budget,
        }
    }

    pub fn verification(msg: impl Into<String>) -> Self {
        Error::Verification(msg.into())
    }

    pub fn io(path: impl Into<String>, source: std::io::Error) -> Self {
        Error::Io {
            path: path.into(),
            source,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
