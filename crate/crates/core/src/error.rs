//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by the exact-computation layers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),

    #[error("images are not a bijection on 0..{degree}: {reason}")]
    NotAPermutation { degree: usize, reason: String },

    #[error("group order exceeds the materialization cap of {cap}")]
    CapExceeded { cap: usize },

    #[error("operation requires a transitive group")]
    Intransitive,

    #[error("{0} is not a subgroup of the ambient group")]
    NotASubgroup(String),

    #[error("unknown catalog group id `{0}`")]
    UnknownCatalogId(String),

    #[error("catalog data for `{id}` closes to order {got}, expected {expected}")]
    CatalogOrderMismatch {
        id: String,
        got: usize,
        expected: usize,
    },

    #[error("inconsistent branch data: {0}")]
    InconsistentBranchData(String),

    #[error("parse error: {0}")]
    Parse(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("inexact division: {0}")]
    InexactDivision(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("character table unavailable: {0}")]
    TableUnavailable(String),

    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
