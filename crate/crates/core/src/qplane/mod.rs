//! The reduced quantum plane `A_q[x,y]`: `xy = q·yx`, `x^N = y^N = 1`.
//!
//! Elements are kept in the normal form `Σ β_{kl} y^k x^l`. The plane is the
//! extension of its `x`-subalgebra by `τ = y`, and row `k` of the coefficient
//! grid is exactly the component `u_k` of `Σ y^k u_k`.

mod matrix;
mod xpoly;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

pub use matrix::{rank, rep_matrices, represent, represent_by_products, RepMatrix};
pub use xpoly::{XAlgebra, XPoly};

use crate::error::{AlgebraError, Result};
use crate::galois::{ExtElement, Extension};
use crate::scalar::{CycScalar, CyclotomicField};

/// Normal-form element of the reduced quantum plane.
#[derive(Clone, PartialEq, Eq)]
pub struct PlaneElement {
    order: usize,
    /// Row-major, entry `k * N + l` is the coefficient of `y^k x^l`.
    coeffs: Vec<CycScalar>,
}

impl PlaneElement {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        let n = field.order();
        Self {
            order: n,
            coeffs: vec![field.zero(); n * n],
        }
    }

    /// `c·y^k x^l`, exponents taken mod `N`.
    pub fn monomial(c: CycScalar, k: usize, l: usize) -> Self {
        let mut out = Self::zero(c.field());
        let n = out.order;
        out.coeffs[(k % n) * n + l % n] = c;
        out
    }

    pub fn scalar(c: CycScalar) -> Self {
        Self::monomial(c, 0, 0)
    }

    /// From an `N × N` grid, `grid[k][l]` multiplying `y^k x^l`.
    pub fn from_grid(grid: Vec<Vec<CycScalar>>) -> Result<Self> {
        let n = grid.len();
        if n < 2 {
            return Err(AlgebraError::InvalidOrder(n));
        }
        let mut coeffs = Vec::with_capacity(n * n);
        for row in grid {
            if row.len() != n {
                return Err(AlgebraError::OrderMismatch { left: n, right: row.len() });
            }
            for c in row {
                if c.order() != n {
                    return Err(AlgebraError::OrderMismatch { left: n, right: c.order() });
                }
                coeffs.push(c);
            }
        }
        Ok(Self { order: n, coeffs })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        self.coeffs[0].field()
    }

    pub fn coeff(&self, k: usize, l: usize) -> &CycScalar {
        &self.coeffs[k * self.order + l]
    }

    /// Nonzero terms as `(k, l, β_{kl})`, in `(k, l)` order.
    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &CycScalar)> {
        let n = self.order;
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(move |(i, c)| (i / n, i % n, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(CycScalar::is_zero)
    }

    /// Row `k`: the `x`-polynomial `r` with `y^k r` the degree-`k` part.
    pub fn row(&self, k: usize) -> XPoly {
        let n = self.order;
        XPoly::from_coeffs(self.coeffs[k * n..(k + 1) * n].to_vec()).expect("row of a valid grid")
    }

    /// `y^k r` for `r` an `x`-polynomial.
    pub fn from_row(k: usize, r: &XPoly) -> Self {
        let n = r.order();
        let mut out = Self::zero(r.field());
        let k = k % n;
        out.coeffs[k * n..(k + 1) * n].clone_from_slice(r.coeffs());
        out
    }

    /// The degree of a nonzero homogeneous element, `None` otherwise.
    pub fn degree(&self) -> Option<usize> {
        let mut rows = (0..self.order).filter(|&k| !self.row(k).is_zero());
        match (rows.next(), rows.next()) {
            (Some(k), None) => Some(k),
            _ => None,
        }
    }

    /// The `x`-polynomial if the element has degree zero (or is zero).
    pub fn as_xpoly(&self) -> Option<XPoly> {
        (1..self.order)
            .all(|k| self.row(k).is_zero())
            .then(|| self.row(0))
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(AlgebraError::OrderMismatch {
                left: self.order,
                right: other.order,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect()))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.with(self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect()))
    }

    /// `(y^a x^b)(y^c x^d) = q^{bc} y^{a+c} x^{b+d}`, extended bilinearly.
    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.order;
        let field = self.field().clone();
        let mut out = Self::zero(&field);
        let rhs: Vec<_> = other.terms().collect();
        for (a, b, alpha) in self.terms() {
            for &(c, d, beta) in &rhs {
                let coeff = &(alpha * beta) * &field.q_pow((b * c) as i64);
                let slot = &mut out.coeffs[((a + c) % n) * n + (b + d) % n];
                *slot = &*slot + &coeff;
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &CycScalar) -> Self {
        self.with(self.coeffs.iter().map(|c| s * c).collect())
    }

    /// Square and multiply.
    pub fn pow(&self, mut e: u32) -> Self {
        let mut acc = Self::scalar(self.field().one());
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    fn with(&self, coeffs: Vec<CycScalar>) -> Self {
        Self {
            order: self.order,
            coeffs,
        }
    }
}

impl fmt::Display for PlaneElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::output::format_plane(self))
    }
}

impl fmt::Debug for PlaneElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PlaneElement<{}>({})", self.order, self)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&PlaneElement> for &PlaneElement {
            type Output = PlaneElement;
            /// # Panics
            /// If the operands have different orders.
            fn $method(self, rhs: &PlaneElement) -> PlaneElement {
                self.$checked(rhs).expect("plane elements of different orders")
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &PlaneElement {
    type Output = PlaneElement;
    fn neg(self) -> PlaneElement {
        self.with(self.coeffs.iter().map(|c| -c).collect())
    }
}

/// The reduced quantum plane of a fixed order.
#[derive(Debug, Clone)]
pub struct QuantumPlane {
    field: Arc<CyclotomicField>,
}

impl QuantumPlane {
    pub fn new(order: usize) -> Result<Self> {
        Ok(Self {
            field: CyclotomicField::new(order)?,
        })
    }

    pub fn order(&self) -> usize {
        self.field.order()
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn zero(&self) -> PlaneElement {
        PlaneElement::zero(&self.field)
    }

    pub fn one(&self) -> PlaneElement {
        PlaneElement::scalar(self.field.one())
    }

    pub fn x(&self) -> PlaneElement {
        PlaneElement::monomial(self.field.one(), 0, 1)
    }

    pub fn y(&self) -> PlaneElement {
        PlaneElement::monomial(self.field.one(), 1, 0)
    }

    pub fn q(&self) -> PlaneElement {
        PlaneElement::scalar(self.field.q())
    }

    /// The `x`-subalgebra with `φ = A_1`, the carrier of the plane seen as the extension by `y`.
    pub fn as_carrier(&self) -> XAlgebra {
        XAlgebra::new(self.field.clone())
    }

    pub fn extension(&self) -> Extension<XAlgebra> {
        Extension::new(self.as_carrier())
    }

    pub fn to_ext(&self, a: &PlaneElement) -> ExtElement<XPoly> {
        self.extension()
            .element((0..a.order()).map(|k| a.row(k)).collect())
            .expect("one row per degree")
    }

    pub fn from_ext(&self, xi: &ExtElement<XPoly>) -> PlaneElement {
        let field = &self.field;
        let mut out = PlaneElement::zero(field);
        let n = self.order();
        for (k, r) in xi.components().iter().enumerate() {
            out.coeffs[k * n..(k + 1) * n].clone_from_slice(r.coeffs());
        }
        out
    }

    /// `d = [y, ·]_q` on the whole plane.
    pub fn differential(&self, a: &PlaneElement) -> PlaneElement {
        self.from_ext(&self.extension().differential(&self.to_ext(a)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn xy_is_q_yx() {
        for n in 2..=6 {
            let p = QuantumPlane::new(n).unwrap();
            let xy = &p.x() * &p.y();
            let yx = &p.y() * &p.x();
            assert_eq!(xy, yx.scale(&p.field().q()));
            assert_eq!(xy, PlaneElement::monomial(p.field().q(), 1, 1));
        }
    }

    #[test]
    fn generators_have_order_n() {
        for n in 2..=6 {
            let p = QuantumPlane::new(n).unwrap();
            assert_eq!(p.x().pow(n as u32), p.one());
            assert_eq!(p.y().pow(n as u32), p.one());
            assert_eq!(&p.x().pow(n as u32 - 1) * &p.x(), p.one());
        }
    }

    #[test]
    fn yx_squared() {
        let p = QuantumPlane::new(4).unwrap();
        let yx = &p.y() * &p.x();
        assert_eq!(&yx * &yx, PlaneElement::monomial(p.field().q(), 2, 2));
    }

    #[test]
    fn mul_agrees_with_extension_product() {
        let p = QuantumPlane::new(3).unwrap();
        let f = p.field();
        let a = &(&p.x() + &p.y().scale(&f.q())) + &(&p.y() * &p.x().pow(2));
        let b = &(&p.y().pow(2) * &p.x()) - &p.one().scale(&f.from_int(3));
        let via_ext = p.from_ext(&p.extension().ext_mul(&p.to_ext(&a), &p.to_ext(&b)).unwrap());
        assert_eq!(&a * &b, via_ext);
    }

    #[test]
    fn grading() {
        let p = QuantumPlane::new(5).unwrap();
        assert_eq!(p.one().degree(), Some(0));
        assert_eq!((&p.y() * &p.x()).degree(), Some(1));
        assert_eq!((&p.y() + &p.x()).degree(), None);
        assert_eq!(p.zero().degree(), None);
        assert!(p.y().as_xpoly().is_none());
        assert!(p.x().as_xpoly().is_some());
    }

    #[test]
    fn order_mismatch() {
        let a = QuantumPlane::new(3).unwrap().x();
        let b = QuantumPlane::new(4).unwrap().x();
        assert_eq!(
            a.checked_mul(&b).unwrap_err(),
            AlgebraError::OrderMismatch { left: 3, right: 4 }
        );
    }
}
