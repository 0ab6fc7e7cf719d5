use std::sync::Arc;

use super::{build_families, covariant_operator, CovariantOperator, PolyFamilies};
use crate::error::Result;
use crate::galois::CarrierAlgebra;
use crate::qplane::{PlaneElement, XAlgebra, XPoly};
use crate::scalar::{CycScalar, CyclotomicField};

/// Calculus on the `x`-subalgebra of the quantum plane with coordinate `x`.
#[derive(Debug, Clone)]
pub struct PlaneCalculus {
    algebra: XAlgebra,
    families: PolyFamilies<XPoly>,
    /// `(1-q)⁻¹`
    inv_one_minus_q: CycScalar,
}

impl PlaneCalculus {
    pub fn new(field: Arc<CyclotomicField>) -> Result<Self> {
        let algebra = XAlgebra::new(field.clone());
        let families = build_families(&algebra, &algebra.x())?;
        let inv_one_minus_q = (&field.one() - &field.q()).invert()?;
        Ok(Self {
            algebra,
            families,
            inv_one_minus_q,
        })
    }

    pub fn algebra(&self) -> &XAlgebra {
        &self.algebra
    }

    pub fn families(&self) -> &PolyFamilies<XPoly> {
        &self.families
    }

    pub fn field(&self) -> &Arc<CyclotomicField> {
        self.algebra.field()
    }

    fn order(&self) -> usize {
        self.field().order()
    }

    /// `(Δ_q x)⁻¹ = (1-q)⁻¹ x^{N-1}`.
    fn delta_x_inv(&self) -> XPoly {
        XPoly::monomial(self.inv_one_minus_q.clone(), self.order() - 1)
    }

    /// `Δ_q r = r - A_1(r)`.
    pub fn delta_q(&self, r: &XPoly) -> XPoly {
        r.checked_sub(&r.phi_endomorphism(1)).expect("same order")
    }

    /// `∂r = (1-q)⁻¹ x^{N-1} Δ_q(r)`.
    pub fn partial(&self, r: &XPoly) -> XPoly {
        self.delta_x_inv().checked_mul(&self.delta_q(r)).expect("same order")
    }

    /// `Δ_q^(k)(r) = (Δ_q x)⁻¹ (q^{-k} r - q^k A_1(r))`.
    pub fn higher_delta(&self, k: i64, r: &XPoly) -> XPoly {
        let f = self.field();
        let inner = r
            .scale(&f.q_pow(-k))
            .checked_sub(&r.phi_endomorphism(1).scale(&f.q_pow(k)))
            .expect("same order");
        self.delta_x_inv().checked_mul(&inner).expect("same order")
    }

    /// `Δ_q^(k) = q^k ∂ + ((q^{-k} - q^k)/(1-q)) x⁻¹`.
    pub fn higher_delta_closed(&self, k: i64, r: &XPoly) -> XPoly {
        let f = self.field();
        let first = self.partial(r).scale(&f.q_pow(k));
        let second = self.phi_closed_form(k).checked_mul(r).expect("same order");
        first.checked_add(&second).expect("same order")
    }

    /// `(q^{-k} - q^k)/(1-q)`.
    pub fn delta_coefficient(&self, k: i64) -> CycScalar {
        let f = self.field();
        &(&f.q_pow(-k) - &f.q_pow(k)) * &self.inv_one_minus_q
    }

    /// `((q^{-k} - q^k)/(1-q)) x^{N-1}`, the closed form of `Φ_k`.
    pub fn phi_closed_form(&self, k: i64) -> XPoly {
        XPoly::monomial(self.delta_coefficient(k), self.order() - 1)
    }

    pub fn covariant(&self, k: usize) -> Result<CovariantOperator<CycScalar, XPoly>> {
        covariant_operator(&self.algebra, &self.families, k)
    }

    /// `a = Σ (dx)^k r_k`, returned as the nonzero `(k, r_k)`.
    pub fn dx_expansion(&self, a: &PlaneElement) -> Vec<(usize, XPoly)> {
        let c = &self.algebra;
        (0..self.order())
            .map(|k| (k, a.row(k)))
            .filter(|(_, u)| !u.is_zero())
            .map(|(k, u)| (k, c.mul(self.families.q_inv(k), &u)))
            .collect()
    }

    /// `Δ_q^(k)` as a standalone function.
    pub fn higher_delta_op(&self, k: i64) -> impl Fn(&XPoly) -> XPoly + '_ {
        move |r| self.higher_delta(k, r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qplane::QuantumPlane;

    fn calc(n: usize) -> PlaneCalculus {
        PlaneCalculus::new(CyclotomicField::new(n).unwrap()).unwrap()
    }

    #[test]
    fn partial_of_powers() {
        for n in 2..=6 {
            let p = calc(n);
            let f = p.field().clone();
            for k in 0..n {
                let xk = XPoly::monomial(f.one(), k);
                let expected = if k == 0 {
                    XPoly::zero(&f)
                } else {
                    XPoly::monomial(f.q_integer(k), k - 1)
                };
                assert_eq!(p.partial(&xk), expected, "N={n} k={k}");
            }
        }
    }

    #[test]
    fn partial_x_squared_order_three() {
        let p = calc(3);
        let f = p.field().clone();
        let r = p.partial(&XPoly::monomial(f.one(), 2));
        assert_eq!(r, XPoly::monomial(&f.one() + &f.q(), 1));
    }

    #[test]
    fn zeroth_higher_delta_is_partial() {
        let p = calc(4);
        let f = p.field().clone();
        let r = XPoly::from_coeffs(vec![f.one(), f.q(), f.from_int(-2), f.q_pow(3)]).unwrap();
        assert_eq!(p.higher_delta(0, &r), p.partial(&r));
        assert_eq!(p.higher_delta(0, &XPoly::x(&f)), p.algebra().one());
    }

    #[test]
    fn two_formulas_on_monomials() {
        for n in 2..=6 {
            let p = calc(n);
            let f = p.field().clone();
            for k in 0..n as i64 {
                for l in 0..n {
                    let m = XPoly::monomial(f.one(), l);
                    assert_eq!(p.higher_delta(k, &m), p.higher_delta_closed(k, &m));
                }
            }
        }
    }

    #[test]
    fn recurrence_matches_closed_form() {
        for n in 2..=6 {
            let p = calc(n);
            for k in 1..n {
                assert_eq!(p.families().phi(k), &p.phi_closed_form(k as i64), "N={n} k={k}");
            }
        }
    }

    #[test]
    fn d_of_x_squared_in_dx_basis() {
        let p = QuantumPlane::new(3).unwrap();
        let calc = PlaneCalculus::new(p.field().clone()).unwrap();
        let d = p.differential(&p.x().pow(2));
        let f = p.field();
        assert_eq!(calc.dx_expansion(&d), vec![(1, XPoly::monomial(&f.one() + &f.q(), 1))]);
    }
}
