//! Scalar abstraction for the numeric core.
//!
//! Everything in this crate that is pure arithmetic is generic over [`Real`]
//! (f32 or f64). The crate root exports f64 aliases for the common types;
//! f64 is what the solvers, generators, and the CLI use.

use std::fmt::{Debug, Display};

use num_traits::{Float, FromPrimitive};

/// Floating-point scalar: f32 or f64.
pub trait Real: Float + FromPrimitive + Debug + Display + Default + Send + Sync + 'static {
    /// Converts an f64 constant into this scalar type.
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("constant representable in scalar type")
    }
}

impl Real for f32 {}
impl Real for f64 {}
