//! Coefficient traits shared by every polynomial and series type.
//!
//! All exact computation runs over [`Rat`](crate::Rat); the same generic code
//! evaluates over `f64` or `Complex64` when a floating-point cross-check needs
//! it. Nested polynomial rings (`Poly<Poly<Rat>>` and deeper) implement the
//! traits recursively, which is what lets one resultant routine run over
//! Q[x], Q[x][t], and friends.

use num::complex::Complex64;
use num::{BigInt, BigRational, One, Zero};
use num_traits::FromPrimitive;
use std::fmt::Debug;
use std::ops::{Neg, Sub};

/// A commutative ring coefficient, with enough structure to detect units.
pub trait Coeff:
    Clone + PartialEq + Debug + Zero + One + Neg<Output = Self> + Sub<Output = Self> + FromPrimitive
{
    /// Multiplicative inverse, if this element is a unit of the ring.
    fn try_inv(&self) -> Option<Self>;
}

/// Exact division in an integral domain; callers must know the quotient exists.
///
/// This is the division the Bareiss elimination relies on. For nested
/// polynomial rings the leading-coefficient divisions are exact whenever the
/// overall division is, so the recursive implementation never truncates.
pub trait ExactDiv: Sized {
    /// Returns `self / d`, panicking if the division is not exact.
    fn exact_div(&self, d: &Self) -> Self;
}

impl Coeff for BigRational {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

impl Coeff for f64 {
    fn try_inv(&self) -> Option<Self> {
        if *self == 0.0 {
            None
        } else {
            Some(1.0 / self)
        }
    }
}

impl Coeff for Complex64 {
    fn try_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.inv())
        }
    }
}

impl ExactDiv for BigRational {
    fn exact_div(&self, d: &Self) -> Self {
        assert!(!d.is_zero(), "exact_div: division by zero");
        self / d
    }
}

/// Shorthand for a rational from an integer pair.
pub fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Shorthand for an integer rational.
pub fn rat_int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}
