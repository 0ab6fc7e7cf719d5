//! Quaternions as the extension `C[i]` of the complex numbers.
//!
//! The carrier is `C = {a + b·j}` with rational parts, the twist is complex
//! conjugation, `τ = i` with `τ² = -1`, `N = 2` and `q = -1`. A quaternion
//! `a0 + a1 i + a2 j + a3 k` decomposes as `z0 + i z1` with
//! `z0 = a0 + a2 j`, `z1 = a1 + a3 j`.

use num_traits::{One, Zero};

use crate::error::{AlgebraError, Result};
use crate::galois::{CarrierAlgebra, Coordinate, ExtElement, Extension, TauSign};
use crate::scalar::Rational;

/// `re + im·j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Complex {
    pub re: Rational,
    pub im: Rational,
}

impl Complex {
    pub fn new(re: Rational, im: Rational) -> Self {
        Self { re, im }
    }

    pub fn real(re: Rational) -> Self {
        Self::new(re, Rational::zero())
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }
}

/// The carrier algebra of the quaternion extension.
#[derive(Debug, Clone, Copy, Default)]
pub struct ComplexCarrier;

impl CarrierAlgebra for ComplexCarrier {
    type Scalar = Rational;
    type Elem = Complex;

    fn order(&self) -> usize {
        2
    }

    fn tau_sign(&self) -> TauSign {
        TauSign::Minus
    }

    fn q_pow(&self, k: i64) -> Rational {
        if k.rem_euclid(2) == 0 {
            Rational::one()
        } else {
            -Rational::one()
        }
    }

    fn zero(&self) -> Complex {
        Complex::real(Rational::zero())
    }

    fn one(&self) -> Complex {
        Complex::real(Rational::one())
    }

    fn add(&self, a: &Complex, b: &Complex) -> Complex {
        Complex::new(&a.re + &b.re, &a.im + &b.im)
    }

    fn neg(&self, a: &Complex) -> Complex {
        Complex::new(-&a.re, -&a.im)
    }

    fn mul(&self, a: &Complex, b: &Complex) -> Complex {
        Complex::new(
            &a.re * &b.re - &a.im * &b.im,
            &a.re * &b.im + &a.im * &b.re,
        )
    }

    fn scale(&self, s: &Rational, a: &Complex) -> Complex {
        Complex::new(s * &a.re, s * &a.im)
    }

    fn phi(&self, a: &Complex) -> Complex {
        a.conj()
    }

    fn try_invert(&self, a: &Complex) -> Option<Complex> {
        let norm = &a.re * &a.re + &a.im * &a.im;
        if norm.is_zero() {
            return None;
        }
        Some(Complex::new(&a.re / &norm, -&a.im / &norm))
    }
}

pub type QuaternionAlgebra = Extension<ComplexCarrier>;

pub fn algebra() -> QuaternionAlgebra {
    Extension::new(ComplexCarrier)
}

/// `a0 + a1 i + a2 j + a3 k` as `(z0, z1)`.
pub fn from_quaternion(a0: Rational, a1: Rational, a2: Rational, a3: Rational) -> ExtElement<Complex> {
    algebra()
        .element(vec![Complex::new(a0, a2), Complex::new(a1, a3)])
        .expect("two components")
}

/// Inverse of [`from_quaternion`]: `[a0, a1, a2, a3]`.
pub fn to_quaternion(q: &ExtElement<Complex>) -> [Rational; 4] {
    let (z0, z1) = (q.component(0), q.component(1));
    [z0.re.clone(), z1.re.clone(), z0.im.clone(), z1.im.clone()]
}

pub fn quaternion_differential(q: &ExtElement<Complex>) -> ExtElement<Complex> {
    algebra().differential(q)
}

/// The second right derivative of `u` with respect to the coordinate `x`.
///
/// Fails unless `x = a + b·j` has `b ≠ 0`.
pub fn second_derivative_check(u: &Complex, x: &Complex) -> Result<Complex> {
    let c = ComplexCarrier;
    let coord = Coordinate::new(&c, x.clone())?;
    let first = coord.derivative(&c, u);
    Ok(coord.derivative(&c, &first))
}

/// Writes `z = c̃ + d̃·x`, returning `(c̃, d̃)`; requires `b ≠ 0` for `x = a + b·j`.
pub fn linear_witness(z: &Complex, x: &Complex) -> Result<(Rational, Rational)> {
    if x.im.is_zero() {
        return Err(AlgebraError::NonInvertibleCoordinate);
    }
    let d = &z.im / &x.im;
    let c = &z.re - &x.re * &d;
    Ok((c, d))
}
