use thiserror::Error;

use crate::phase::PhaseVar;

/// Errors raised by the algebra, phase ring, spin model and oracle.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("signature mismatch: {left} vs {right}")]
    SignatureMismatch { left: String, right: String },

    #[error("unsupported signature: {0}")]
    UnsupportedSignature(String),

    #[error("grade {grade} out of range for a {dim}-dimensional algebra")]
    GradeOutOfRange { grade: usize, dim: usize },

    #[error("non-invertible: versor norm {0} is not a nonzero scalar")]
    NonInvertible(String),

    #[error("expected a unit vector, got norm {norm}")]
    NotUnit { norm: f64 },

    #[error("expected a grade-1 element of the Euclidean 3D algebra")]
    NotVector,

    #[error("harmonic cap {cap} exceeded for phase variable {var}")]
    HarmonicCap { var: PhaseVar, cap: u32 },

    #[error("no value assigned to phase variable {0}")]
    MissingPhase(PhaseVar),

    #[error("coefficient still depends on phase variables: {0}")]
    PhaseDependent(String),

    #[error("invalid Bell state index {mu} for variant {variant}")]
    InvalidBell { mu: u8, variant: String },

    #[error("frame index {0} out of range (expected 1..=3)")]
    InvalidFrameIndex(u8),

    #[error("improper map index {0} out of range (expected 0..=3)")]
    InvalidReflector(u8),

    #[error("spin axis does not match direction: {0}")]
    AxisMismatch(String),

    #[error("independent computation routes disagree by {0:e}")]
    RouteMismatch(f64),

    #[error("element lies outside the even subalgebra")]
    NotEven,

    #[error("negative modulus {0}")]
    NegativeModulus(f64),

    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

pub type Result<T> = std::result::Result<T, Error>;
