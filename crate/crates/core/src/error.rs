use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("configuration has no points")]
    Empty,
    #[error("point {index} has {found} coordinates, expected {expected}")]
    DimensionMismatch {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("points {first} and {second} coincide")]
    DuplicatePoint { first: usize, second: usize },
    #[error("points span an affine space of dimension {rank}, expected {dim}")]
    NotFullDimensional { rank: usize, dim: usize },
    #[error("{points} points exceed the supported maximum of {max}")]
    TooManyPoints { points: usize, max: usize },
    #[error("height vector has length {found}, expected {expected}")]
    HeightLength { expected: usize, found: usize },
    #[error("lifted point set is degenerate: its projection is not full-dimensional")]
    DegenerateLift,
    #[error("polytope is unbounded")]
    Unbounded,
    #[error("enumeration cap exceeded: {count} full-dimensional simplices, cap {cap}")]
    CapExceeded { count: usize, cap: usize },
    #[error("height function does not induce a coarse subdivision: {0}")]
    NotCoarse(String),
    #[error("internal consistency check failed: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
