//! Generic floating-point scalar used throughout the workspace.

use nalgebra as na;
use num_traits as nt;

/// Scalar trait for all numerical code: `f32` or `f64`.
///
/// `na::RealField` supplies the elementary functions and constants,
/// `nt::FromPrimitive`/`nt::ToPrimitive` the literal conversions.
pub trait Real:
    na::RealField + nt::FromPrimitive + nt::ToPrimitive + Copy + Default + std::fmt::LowerExp
{
}

impl Real for f32 {}
impl Real for f64 {}

/// Shorthand for embedding an `f64` literal into a generic scalar.
#[inline]
pub fn cst<R: Real>(x: f64) -> R {
    R::from_f64(x).expect("literal out of range for scalar type")
}
