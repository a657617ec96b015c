use thiserror::Error;

use crate::decomposition::Violation;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("graph has a cycle through vertex `{vertex}`")]
    Cycle { vertex: String },

    #[error("invalid decomposition: {0}")]
    InvalidDecomposition(#[from] Violation),

    #[error("channel order is not a permutation of 0..{k}")]
    NotAPermutation { k: usize },

    #[error("graph and decomposition disagree: {0}")]
    Mismatch(String),

    #[error("{k} channels exceeds the exhaustive ordering cap of {cap}; use the greedy order")]
    TooManyChains { k: usize, cap: usize },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("{0}")]
    Io(String),
}

impl Error {
    /// Errors caused by a configured limit rather than by bad input.
    pub fn is_constraint(&self) -> bool {
        matches!(self, Error::TooManyChains { .. })
    }
}
