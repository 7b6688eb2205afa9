//! Crate-wide error type.
//!
//! Every fallible operation returns [`Error`]. Variants are grouped by the
//! layer that raises them; the geometric theorems themselves (Desargues
//! collinearity, section validity, lift existence) are *asserted*, not
//! reported, because a violation there means broken arithmetic, not bad input.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // field construction
    #[error("p = {0} is not prime")]
    NonPrimeP(u64),
    #[error("modulus is reducible over GF({p})")]
    ReducibleModulus { p: u64 },
    #[error("modulus degree mismatch: expected degree {expected}, got {got}")]
    DegreeMismatch { expected: u32, got: u32 },
    #[error("division by zero")]
    DivisionByZero,

    // geometry
    #[error("the zero vector has no projective point")]
    ZeroVector,
    #[error("objects belong to different spaces: {0}")]
    MixedSpaces(String),
    #[error("wrong dimension: {0}")]
    WrongDimension(String),

    // desargues constructions
    #[error("triangles are not in perspective from the given vertex")]
    NotInPerspective,
    #[error("degenerate configuration: {0}")]
    Degenerate(String),
    #[error("a compressor point lies on the section hyperplane")]
    CompressorMeetsHyperplane,
    #[error("bad apex line: {0}")]
    BadApexLine(String),

    // enumeration / CLI
    #[error("scale limit exceeded: {0}")]
    ScaleLimit(String),
    #[error("q = {0} is not a prime power >= 2")]
    InvalidOrder(u64),
    #[error("this operation requires PG(3,2)")]
    WrongSpace,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
