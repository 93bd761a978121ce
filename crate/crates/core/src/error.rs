//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("not an exact rational: {0:?} (use integers or \"p/q\" strings)")]
    BadRational(String),

    #[error("malformed arrangement document: {0}")]
    BadDocument(String),

    #[error("hyperplane {0} has a zero coefficient vector")]
    ZeroForm(usize),

    #[error("hyperplanes {0} and {1} are proportional (same hyperplane listed twice)")]
    ProportionalForms(usize, usize),

    #[error("affine_dim must be at least 2, got {0}")]
    AmbientTooSmall(usize),

    #[error("hyperplane {0} has multiplicity {1}; multiplicities must be at least 1")]
    BadMultiplicity(usize, u32),

    #[error("hyperplane {index} has {got} coefficients, expected {expected}")]
    BadFormLength {
        index: usize,
        expected: usize,
        got: usize,
    },

    #[error("series must have constant term 1 to be inverted")]
    NonUnitConstantTerm,

    #[error("expected a homogeneous linear form with zero constant term")]
    NotLinear,

    #[error("polynomial is not homogeneous of degree {expected}")]
    DegreeMismatch { expected: usize },

    #[error("top cohomology has dimension {0}, expected 1 (invalid building set or construction bug)")]
    TopDimension(usize),

    #[error("(-c0)^(n-1) lies in the ideal; top-degree normalization is impossible")]
    DegenerateTopClass,

    #[error("inner multiplicity evaluated to {0}, which is not a nonnegative integer")]
    BadInnerMultiplicity(String),

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),

    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}
