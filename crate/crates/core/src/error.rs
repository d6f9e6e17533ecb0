use thiserror::Error;

/// Errors produced by the exact-arithmetic layers and the twist calculus.
#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid genus {0}: must be at least 2")]
    InvalidGenus(usize),

    #[error("genus mismatch: {left} vs {right}")]
    GenusMismatch { left: usize, right: usize },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("invalid matrix: {0}")]
    InvalidMatrix(String),

    #[error("invalid descriptor: {0}")]
    InvalidDescriptor(String),

    #[error("unknown point label {0}")]
    UnknownPoint(usize),

    #[error("q1 and q2 must be distinct")]
    SamePoint,

    #[error("subset must have even size")]
    OddSubset,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("twist family must be nonempty")]
    EmptyFamily,

    #[error("twist family contains a duplicate descriptor")]
    DuplicateDescriptor,
}

pub type Result<T> = std::result::Result<T, Error>;
