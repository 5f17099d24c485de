use std::path::PathBuf;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("{0} is not a prime power")]
    NotPrimePower(u64),

    #[error("order cap {cap} exceeded while building {what}")]
    CapExceeded { cap: usize, what: String },

    #[error("infeasible: {0}")]
    Infeasible(String),

    #[error("elements do not generate the group: {0}")]
    NotGenerating(String),

    #[error("element is not in the group table")]
    NotInGroup,

    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("degree mismatch: expected {expected}, found {found}")]
    DegreeMismatch { expected: usize, found: usize },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("invalid genus data: {0}")]
    Genus(String),

    #[error("cocycle inconsistency: {0}")]
    Cocycle(String),

    #[error("internal error: {0}")]
    Internal(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}

impl Error {
    /// Errors caused by size limits rather than bad input.
    pub fn is_feasibility(&self) -> bool {
        matches!(self, Error::CapExceeded { .. } | Error::Infeasible(_))
    }
}
