use std::fmt;
use std::sync::Arc;

use crate::error::{AlgebraError, Result};
use crate::galois::CarrierAlgebra;
use crate::scalar::{CycScalar, CyclotomicField};

/// A polynomial in `x` alone, `Σ β_l x^l` with `x^N = 1`.
#[derive(Clone, PartialEq, Eq)]
pub struct XPoly {
    coeffs: Vec<CycScalar>,
}

impl XPoly {
    /// Builds from exactly `N` coefficients of a single field of order `N`.
    pub fn from_coeffs(coeffs: Vec<CycScalar>) -> Result<Self> {
        let n = coeffs.len();
        if n < 2 {
            return Err(AlgebraError::InvalidOrder(n));
        }
        if let Some(bad) = coeffs.iter().find(|c| c.order() != n) {
            return Err(AlgebraError::OrderMismatch {
                left: n,
                right: bad.order(),
            });
        }
        Ok(Self { coeffs })
    }

    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        Self {
            coeffs: vec![field.zero(); field.order()],
        }
    }

    pub fn constant(c: CycScalar) -> Self {
        let mut out = Self::zero(c.field());
        out.coeffs[0] = c;
        out
    }

    /// `c·x^l`, exponent taken mod `N`.
    pub fn monomial(c: CycScalar, l: usize) -> Self {
        let mut out = Self::zero(c.field());
        let n = out.order();
        out.coeffs[l % n] = c;
        out
    }

    pub fn x(field: &Arc<CyclotomicField>) -> Self {
        Self::monomial(field.one(), 1)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        self.coeffs[0].field()
    }

    pub fn coeffs(&self) -> &[CycScalar] {
        &self.coeffs
    }

    pub fn coeff(&self, l: usize) -> &CycScalar {
        &self.coeffs[l]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(CycScalar::is_zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(AlgebraError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    /// Cyclic convolution, `x^N = 1`.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.order();
        let mut out = Self::zero(self.field());
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    let slot = &mut out.coeffs[(i + j) % n];
                    *slot = &*slot + &(a * b);
                }
            }
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, s: &CycScalar) -> Self {
        Self {
            coeffs: self.coeffs.iter().map(|c| s * c).collect(),
        }
    }

    /// `A_k`: substitutes `x → q^k x`, i.e. `β_l ↦ q^{kl} β_l`.
    pub fn phi_endomorphism(&self, k: i64) -> Self {
        let f = self.field().clone();
        Self {
            coeffs: self
                .coeffs
                .iter()
                .enumerate()
                .map(|(l, c)| c * &f.q_pow(k * l as i64))
                .collect(),
        }
    }

    /// Values at the `N` roots `x = q^j`, `j = 0..N`.
    pub fn evaluate_at_roots(&self) -> Vec<CycScalar> {
        let f = self.field().clone();
        (0..self.order() as i64)
            .map(|j| {
                self.coeffs
                    .iter()
                    .enumerate()
                    .fold(f.zero(), |acc, (l, c)| &acc + &(c * &f.q_pow(j * l as i64)))
            })
            .collect()
    }

    /// Inverse through evaluation at all `N` roots of `x^N - 1`, pointwise
    /// inversion and interpolation back by the inverse transform.
    pub fn x_invert(&self) -> Result<Self> {
        let f = self.field().clone();
        let n = self.order() as i64;
        let mut values = Vec::with_capacity(n as usize);
        for v in self.evaluate_at_roots() {
            values.push(v.invert().map_err(|_| AlgebraError::NotInvertible)?);
        }
        let inv_n = f.from_int(n).invert().expect("N is nonzero");
        let coeffs = (0..n)
            .map(|l| {
                let sum = values
                    .iter()
                    .enumerate()
                    .fold(f.zero(), |acc, (j, w)| &acc + &(w * &f.q_pow(-(j as i64) * l)));
                &sum * &inv_n
            })
            .collect();
        Ok(Self { coeffs })
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPoly<{}>({})", self.order(), crate::output::format_xpoly(self))
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::output::format_xpoly(self))
    }
}

/// The degree-zero subalgebra `A^0_q[x,y]` as a carrier, with `φ = A_1`.
#[derive(Debug, Clone)]
pub struct XAlgebra {
    field: Arc<CyclotomicField>,
}

impl XAlgebra {
    pub fn new(field: Arc<CyclotomicField>) -> Self {
        Self { field }
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn x(&self) -> XPoly {
        XPoly::x(&self.field)
    }

    pub fn monomial(&self, l: usize) -> XPoly {
        XPoly::monomial(self.field.one(), l)
    }
}

impl CarrierAlgebra for XAlgebra {
    type Scalar = CycScalar;
    type Elem = XPoly;

    fn order(&self) -> usize {
        self.field.order()
    }

    fn q_pow(&self, k: i64) -> CycScalar {
        self.field.q_pow(k)
    }

    fn zero(&self) -> XPoly {
        XPoly::zero(&self.field)
    }

    fn one(&self) -> XPoly {
        XPoly::constant(self.field.one())
    }

    fn add(&self, a: &XPoly, b: &XPoly) -> XPoly {
        a.checked_add(b).expect("x-polynomials of different orders")
    }

    fn neg(&self, a: &XPoly) -> XPoly {
        a.neg()
    }

    fn sub(&self, a: &XPoly, b: &XPoly) -> XPoly {
        a.checked_sub(b).expect("x-polynomials of different orders")
    }

    fn mul(&self, a: &XPoly, b: &XPoly) -> XPoly {
        a.checked_mul(b).expect("x-polynomials of different orders")
    }

    fn scale(&self, s: &CycScalar, a: &XPoly) -> XPoly {
        a.scale(s)
    }

    fn is_zero(&self, a: &XPoly) -> bool {
        a.is_zero()
    }

    fn phi(&self, a: &XPoly) -> XPoly {
        a.phi_endomorphism(1)
    }

    fn phi_pow(&self, a: &XPoly, k: usize) -> XPoly {
        a.phi_endomorphism(k as i64)
    }

    fn try_invert(&self, a: &XPoly) -> Option<XPoly> {
        a.x_invert().ok()
    }
}
