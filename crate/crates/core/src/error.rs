//! Error type shared across the crate.

use thiserror::Error;

/// Which evaluation produced a non-finite value.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EvalSource {
    /// The raw objective function.
    Objective,
    /// Inequality constraint with the given index.
    Constraint(usize),
}

#[derive(Debug, Error)]
pub enum Error {
    /// An argument was outside its documented domain.
    #[error("parameter out of domain: {0}")]
    ParameterDomain(String),

    /// Objective or constraint returned a non-finite value.
    #[error("non-finite value from {origin:?} at evaluation {fe}")]
    Evaluation { origin: EvalSource, fe: u64 },

    /// Benchmark name not in the catalog.
    #[error("unknown function `{0}`")]
    UnknownFunction(String),

    /// Vector length does not match the problem dimension.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// Malformed dataset input.
    #[error("ingestion error at line {line}: {message}")]
    Ingestion { line: usize, message: String },

    /// The ODE integration left the finite range.
    #[error("integration diverged at t = {t}")]
    Divergence { t: f64 },

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;
