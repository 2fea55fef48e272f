//! Scalar abstraction: every numeric routine in this crate is generic over a
//! floating-point type so the same code runs in `f32` and `f64`.

use core::fmt::{Debug, Display, LowerExp};
use num_traits::{Float, FromPrimitive};

/// Floating-point scalar the library is generic over (`f32` or `f64`).
pub trait Scalar:
    Float + FromPrimitive + Debug + Display + LowerExp + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Float + FromPrimitive + Debug + Display + LowerExp + Send + Sync + 'static
{
}

/// Shorthand for lifting an `f64` literal into the working scalar type.
#[inline]
pub(crate) fn cst<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("literal not representable in scalar type")
}

/// Machine epsilon of the working scalar type.
#[inline]
pub(crate) fn eps<T: Scalar>() -> T {
    T::epsilon()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lifts_literals() {
        let x: f32 = cst(0.5);
        assert_eq!(x, 0.5_f32);
        let y: f64 = cst(1e-300);
        assert_eq!(y, 1e-300);
    }
}
