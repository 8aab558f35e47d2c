use thiserror::Error;

use crate::covering::{CoverKind, CoverViolation};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("duplicate vertex id `{0}`")]
    DuplicateVertex(String),

    #[error("edge {edge} references undeclared vertex `{vertex}`")]
    DanglingEndpoint { edge: usize, vertex: String },

    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("invalid rotation at vertex `{vertex}`: {reason}")]
    InvalidRotation { vertex: String, reason: String },

    #[error("signature has {got} entries but the graph has {expected} edges")]
    SignatureLength { expected: usize, got: usize },

    #[error("graph is disconnected")]
    Disconnected,

    #[error("budget exceeded: {what} needs {estimate} items, limit is {limit}")]
    BudgetExceeded {
        what: &'static str,
        estimate: u128,
        limit: u64,
    },

    #[error("invalid cover map: {0}")]
    InvalidCover(CoverViolation),

    #[error("cover is {0}; only branched and unbranched covers are accepted here")]
    UnsupportedCover(CoverKind),

    #[error("embedding is not a sphere embedding (euler characteristic {euler_characteristic}, orientable: {orientable})")]
    NotSphere {
        euler_characteristic: i64,
        orientable: bool,
    },

    #[error("graph mismatch: {0}")]
    GraphMismatch(String),

    #[error("invalid voltage assignment: {0}")]
    InvalidVoltage(String),

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("internal consistency failure: {0}")]
    Inconsistent(String),

    #[error("malformed document: {0}")]
    Malformed(String),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn inconsistent(msg: impl Into<String>) -> Self {
        Error::Inconsistent(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }
}
