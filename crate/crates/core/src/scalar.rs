//! Scalar abstraction: the whole library is generic over the floating-point
//! type. `f64` is the default used by the CLI and the test suite; `f32` works
//! everywhere but meets looser tolerances.

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar usable for positions, fitness values and bounds.
///
/// Stochastic draws are produced internally in `f64` and narrowed with
/// [`Scalar::of`], so the underlying random sequence does not depend on the
/// scalar type.
pub trait Scalar:
    Float + FromPrimitive + core::fmt::Debug + core::fmt::Display + Send + Sync + 'static
{
    /// Convert an `f64` literal or draw into this scalar type.
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("f64 value representable in scalar type")
    }

    /// Widen to `f64` for reporting and mixed-precision internals.
    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn of_round_trips_for_f64() {
        assert_eq!(f64::of(0.6224), 0.6224);
        assert_eq!(0.6224f64.to_f64_lossy(), 0.6224);
    }

    #[test]
    fn f32_narrows() {
        let v = f32::of(1.0 / 3.0);
        assert!((v as f64 - 1.0 / 3.0).abs() < 1e-7);
    }
}
