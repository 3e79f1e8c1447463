//! The exact scalar ring everything polynomial is generic over.

use std::fmt::{Debug, Display};

use num_integer::Integer;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// An exact integer ring usable as polynomial coefficients.
///
/// `BigInt` is the production choice. Fixed-width integers (`i64`, `i128`)
/// satisfy the bound too and are handy for fast property tests, but they
/// overflow on the coefficient growth of remainder sequences and search-range
/// cubics, so treat them as test scaffolding only.
pub trait Scalar:
    Clone + Integer + Signed + FromPrimitive + ToPrimitive + Debug + Display + Send + Sync + 'static
{
}

impl<T> Scalar for T where
    T: Clone
        + Integer
        + Signed
        + FromPrimitive
        + ToPrimitive
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}

/// Converts a small integer into the scalar ring.
pub(crate) fn lift<T: Scalar>(v: i64) -> T {
    T::from_i64(v).expect("scalar ring must represent every i64")
}
