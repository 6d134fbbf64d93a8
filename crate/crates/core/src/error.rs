use thiserror::Error;

/// Errors raised by the polynomial, decomposition and Diophantine layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,

    #[error("{0}: input must be a nonconstant polynomial")]
    ConstantPolynomial(&'static str),

    #[error("inner degree {inner} is not admissible for a polynomial of degree {degree}")]
    InvalidInnerDegree { degree: usize, inner: usize },

    #[error("degree {degree} exceeds the supported limit of {limit}")]
    DegreeLimit { degree: usize, limit: usize },

    #[error("decompositions do not describe the same polynomial")]
    DecompositionMismatch,

    #[error("invalid standard pair: {0}")]
    InvalidStandardPair(String),

    #[error("{0}")]
    IrrationalPower(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("family emission failed at index {index}: {reason}")]
    Emission { index: u64, reason: String },

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
