use thiserror::Error;

use crate::surface::ValidationReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid multibranched surface:\n{0}")]
    Invalid(ValidationReport),

    #[error("unknown sector `{0}`")]
    UnknownSector(String),

    #[error("integer overflow during {0}")]
    Overflow(&'static str),

    #[error("permutation system does not match surface: {0}")]
    PermutationMismatch(String),

    #[error("rotation system does not match graph: {0}")]
    RotationMismatch(String),

    #[error("search space of {size} exceeds limit {limit}; raise the limit or override the guard")]
    SearchTooLarge { size: String, limit: u64 },

    #[error("sample count must be at least 1")]
    EmptySample,

    #[error("graph is disconnected")]
    Disconnected,

    #[error("graph has no vertices")]
    EmptyGraph,

    #[error("isolated vertex `{0}`")]
    IsolatedVertex(String),

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
