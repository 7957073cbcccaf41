//! Multi-species cuckoo search (MSCS) and the standard cuckoo search (CS)
//! baseline, together with the benchmark functions and engineering case
//! studies used to validate them.
//!
//! The library is generic over the scalar type through [`scalar::Scalar`]
//! (`f32` or `f64`); the concrete aliases below fix `f64`, which is what the
//! CLI harness and the acceptance suite use.

pub mod benchmarks;
pub mod cases;
pub mod cs;
pub mod error;
pub mod matrix;
pub mod mscs;
pub mod problem;
pub mod rng;
pub mod scalar;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Default-precision aliases.
pub type Problem64 = problem::ObjectiveProblem<f64>;
pub type Trial64 = cs::TrialResult<f64>;
pub type Matrix64 = matrix::Matrix<f64>;
pub type Penalty64 = problem::PenaltyConfig<f64>;
