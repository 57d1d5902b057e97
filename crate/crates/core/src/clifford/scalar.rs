use std::fmt::Debug;

use crate::error::Result;

/// Commutative ring used for multivector coefficients.
///
/// Multiplication is fallible so that rings with a bounded representation
/// (the trigonometric polynomials of [`crate::phase`]) can report overflow
/// instead of silently truncating.
pub trait Scalar: Clone + Debug + PartialEq + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn from_f64(x: f64) -> Self;

    fn add(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn try_mul(&self, rhs: &Self) -> Result<Self>;
    fn scale(&self, k: f64) -> Self;

    /// True when every component is within `tol` of zero. `tol = 0.0`
    /// asks for structural zero.
    fn is_zero(&self, tol: f64) -> bool;

    fn sub(&self, rhs: &Self) -> Self {
        self.add(&rhs.neg())
    }

    fn approx_eq(&self, rhs: &Self, tol: f64) -> bool {
        self.sub(rhs).is_zero(tol)
    }
}

impl Scalar for f64 {
    #[inline]
    fn zero() -> Self {
        0.0
    }
    #[inline]
    fn one() -> Self {
        1.0
    }
    #[inline]
    fn from_f64(x: f64) -> Self {
        x
    }
    #[inline]
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    #[inline]
    fn neg(&self) -> Self {
        -self
    }
    #[inline]
    fn try_mul(&self, rhs: &Self) -> Result<Self> {
        Ok(self * rhs)
    }
    #[inline]
    fn scale(&self, k: f64) -> Self {
        self * k
    }
    #[inline]
    fn is_zero(&self, tol: f64) -> bool {
        self.abs() <= tol
    }
}
