//! Coefficient scalars for multivector arithmetic.
//!
//! The Clifford engine is generic over the coefficient ring so the same
//! product/involution code runs exactly (arbitrary-precision rationals) and
//! numerically (`f64`). Structure constants are `±1`, so the only operations a
//! coefficient must support are ring arithmetic, division (for inverses of
//! group elements) and a lossy conversion to `f64` for matrix extraction.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use std::fmt::{Debug, Display};
use std::ops::{Add, Div, Mul, Neg, Sub};

/// Coefficient ring for [`crate::clifford::Multivector`].
pub trait Coeff:
    Clone
    + PartialEq
    + Debug
    + Display
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
{
    /// Embeds a small integer (structure constants are `0, ±1, ±2`).
    fn from_int(n: i64) -> Self;
    /// Numeric value, used when extracting matrices of linear actions.
    fn to_f64(&self) -> f64;
    /// Whether the coefficient should be treated as zero. Exact types compare
    /// with zero; floating point uses a fixed denormal-scale threshold so that
    /// products of unit group elements stay clean.
    fn is_negligible(&self) -> bool {
        self.is_zero()
    }
}

impl Coeff for f64 {
    fn from_int(n: i64) -> Self {
        n as f64
    }
    fn to_f64(&self) -> f64 {
        *self
    }
    fn is_negligible(&self) -> bool {
        self.abs() < 1e-14
    }
}

impl Coeff for BigRational {
    fn from_int(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).expect("rational out of f64 range")
    }
}
