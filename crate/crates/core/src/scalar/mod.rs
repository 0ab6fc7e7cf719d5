//! Exact scalar fields.
//!
//! Two scalar types are used throughout the crate: plain rationals (for the
//! `q = -1` instances) and [`CycScalar`], an element of the cyclotomic field
//! `Q(q) = Q[t]/(Φ_N(t))` where `q` is a primitive `N`th root of unity.
//! Everything is exact; [`CycScalar::embed_complex`] exists only to
//! cross-check results numerically.

mod cyclotomic;
pub(crate) mod poly;

use std::fmt::Debug;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub use cyclotomic::{cyclotomic_polynomial, euler_phi, CycScalar, CyclotomicField};

/// Arbitrary precision rational number, always stored in lowest terms.
pub type Rational = num_rational::BigRational;

/// The operations generic code needs from a coefficient field.
///
/// Units and `q` itself come from the surrounding algebra (see
/// [`crate::galois::CarrierAlgebra::q_pow`]), since a [`CycScalar`] cannot be
/// built without knowing its field.
pub trait Scalar: Clone + PartialEq + Debug + Send + Sync {
    fn plus(&self, other: &Self) -> Self;
    fn minus(&self, other: &Self) -> Self;
    fn times(&self, other: &Self) -> Self;
    fn negate(&self) -> Self;
    fn is_zero(&self) -> bool;
    /// `None` for zero.
    fn try_inverse(&self) -> Option<Self>;
}

impl Scalar for Rational {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn try_inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

impl Scalar for CycScalar {
    fn plus(&self, other: &Self) -> Self {
        self + other
    }
    fn minus(&self, other: &Self) -> Self {
        self - other
    }
    fn times(&self, other: &Self) -> Self {
        self * other
    }
    fn negate(&self) -> Self {
        -self
    }
    fn is_zero(&self) -> bool {
        CycScalar::is_zero(self)
    }
    fn try_inverse(&self) -> Option<Self> {
        self.invert().ok()
    }
}

pub fn rational(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn integer(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Text form of a rational: `3`, `-1/2`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub(crate) fn rational_abs_is_one(r: &Rational) -> bool {
    r.abs().is_one()
}
