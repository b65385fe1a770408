//! Scalar abstraction: all model arithmetic is generic over `Real`.

use std::fmt;

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar the whole crate is generic over: `f32` or `f64`.
pub trait Real: Float + FromPrimitive + fmt::Debug + fmt::Display + 'static {
    /// Convert an `f64` literal (tolerances, grid bounds, payoffs).
    fn of(v: f64) -> Self {
        Self::from_f64(v).expect("literal must be representable")
    }
}

impl Real for f32 {}
impl Real for f64 {}
