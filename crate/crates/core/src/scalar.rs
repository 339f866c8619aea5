//! Scalar abstraction shared by every algorithm in the crate.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

/// Floating point scalar the geometry and cover algorithms are generic over.
pub trait Scalar: Float + FloatConst + FromPrimitive + Debug + Display + Default + Send + Sync + 'static {
    /// Absolute tolerance for containment and equality tests.
    fn tolerance() -> Self;

    /// Converts an `f64` literal.
    #[inline]
    fn lit(v: f64) -> Self {
        Self::from_f64(v).expect("literal representable in scalar type")
    }

    #[inline]
    fn two() -> Self {
        Self::one() + Self::one()
    }

    #[inline]
    fn half() -> Self {
        Self::lit(0.5)
    }
}

impl Scalar for f64 {
    #[inline]
    fn tolerance() -> Self {
        1e-9
    }
}

impl Scalar for f32 {
    #[inline]
    fn tolerance() -> Self {
        1e-4
    }
}

/// Total order on scalars for sorting; NaN compares equal (inputs are finite).
#[inline]
pub(crate) fn cmp<S: Scalar>(a: &S, b: &S) -> std::cmp::Ordering {
    a.partial_cmp(b).unwrap_or(std::cmp::Ordering::Equal)
}
