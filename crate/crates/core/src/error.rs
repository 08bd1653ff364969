use thiserror::Error;

use crate::rootsys::Family;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid rank {rank} for family {family}")]
    InvalidRank { family: Family, rank: usize },

    #[error("parse error: {0}")]
    Parse(String),

    #[error("vertex {0} is not black in this marking")]
    NotBlackVertex(usize),

    #[error("marking has no white vertex")]
    NoWhiteVertex,

    #[error("operation requires a classical type, got {0}")]
    NotClassical(String),

    #[error("operation requires an exceptional type, got {0}")]
    NotExceptional(String),

    #[error("fully white marking does not define a proper parabolic")]
    FullWhiteMarking,

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("argument out of range: {0}")]
    OutOfRange(String),

    #[error("the zero orbit has no boundary")]
    TrivialOrbit,

    #[error("degree budget is not in the forced all-quadrics case")]
    NotForcedQuadric,

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("{count} hypersurfaces cannot cut a complete intersection in P^{ambient}")]
    TooManyHypersurfaces { count: usize, ambient: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
