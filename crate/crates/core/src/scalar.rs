use std::fmt::{Debug, Display, LowerExp};

use num_traits::{Float, FromPrimitive, NumAssign};

/// Real scalar type the whole library is generic over.
///
/// Implemented for `f32` and `f64`. Everything numeric (matrices, polynomials,
/// structure tensors, quaternions) is parameterised by a `Scalar`; the crate
/// root exposes `f64` aliases for the common case.
pub trait Scalar:
    'static + Float + FromPrimitive + NumAssign + Default + Debug + Display + LowerExp + Send + Sync
{
    /// Converts an `f64` literal. Panics only if the target type cannot
    /// represent finite `f64` values at all, which never happens for the
    /// provided implementations.
    #[inline]
    fn lit(x: f64) -> Self {
        Self::from_f64(x).expect("scalar literal out of range")
    }

    #[inline]
    fn from_usize_lossy(n: usize) -> Self {
        Self::from_usize(n).expect("usize not representable")
    }
}

impl Scalar for f32 {}
impl Scalar for f64 {}
