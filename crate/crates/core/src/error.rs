use thiserror::Error;

/// Errors raised by the geometry, tour, verification and search routines.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("non-finite coordinate at index {index}")]
    NonFinite { index: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("vector has zero dimension")]
    EmptyVector,

    #[error("vector is not unit length (norm {norm})")]
    NotUnit { norm: f64 },

    #[error("cannot normalize a zero vector")]
    ZeroVector,

    #[error("invalid curve: {0}")]
    InvalidCurve(String),

    #[error("dimension {dim} is below the minimum of {min}")]
    DimensionTooSmall { dim: usize, min: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("empty point set")]
    EmptySet,

    #[error("target hyperplane not reached within {phases} phases")]
    NoHit { phases: u32 },

    #[error("hyperplane in direction {index} is never reached by the strategy path")]
    PathNotCompetitive { index: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
