//! Semi-commutative Galois extensions `A[τ]` of a carrier algebra `A`.
//!
//! An element is stored as its graded components `(u_0, …, u_{N-1})`,
//! meaning `ξ = Σ τ^k u_k`. Multiplication uses the commutation rule
//! `u τ = τ φ(u)` together with `τ^N = ±1`, and the inner derivation
//! `d = [τ, ·]_q` is the `N`-differential of the resulting graded
//! `q`-differential algebra.
//!
//! The second half of the module implements the first order calculus over
//! `A`: the difference operator `Δu = u - φ(u)`, the right derivative with
//! respect to a coordinate `x` and the change of coordinate.

use std::fmt::Debug;

use crate::error::{AlgebraError, Result};
use crate::scalar::Scalar;

/// The value of `τ^N`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TauSign {
    #[default]
    Plus,
    Minus,
}

/// The algebra `A` an extension is built over, together with its twist `φ`.
///
/// Implementations must guarantee that `phi` is a unital algebra
/// endomorphism with `phi^N = id`, and that `q_pow(1)` is a primitive `N`th
/// root of unity in the scalar field.
pub trait CarrierAlgebra {
    type Scalar: Scalar;
    type Elem: Clone + PartialEq + Debug;

    /// The grading modulus `N`.
    fn order(&self) -> usize;

    fn tau_sign(&self) -> TauSign {
        TauSign::Plus
    }

    /// `q^k`, any integer `k`.
    fn q_pow(&self, k: i64) -> Self::Scalar;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn scale(&self, s: &Self::Scalar, a: &Self::Elem) -> Self::Elem;
    fn phi(&self, a: &Self::Elem) -> Self::Elem;
    /// Partial inversion; `None` when `a` is not a unit.
    fn try_invert(&self, a: &Self::Elem) -> Option<Self::Elem>;

    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem {
        self.add(a, &self.neg(b))
    }

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    fn phi_pow(&self, a: &Self::Elem, k: usize) -> Self::Elem {
        (0..k % self.order()).fold(a.clone(), |acc, _| self.phi(&acc))
    }

    fn scalar_one(&self) -> Self::Scalar {
        self.q_pow(0)
    }
}

/// `Σ τ^k u_k`, one carrier element per degree.
#[derive(Debug, Clone, PartialEq)]
pub struct ExtElement<E> {
    components: Vec<E>,
}

impl<E> ExtElement<E> {
    pub fn components(&self) -> &[E] {
        &self.components
    }

    pub fn component(&self, k: usize) -> &E {
        &self.components[k]
    }

    pub fn into_components(self) -> Vec<E> {
        self.components
    }

    pub fn order(&self) -> usize {
        self.components.len()
    }
}

/// The extension `A[τ]` over a carrier.
#[derive(Debug, Clone)]
pub struct Extension<C> {
    carrier: C,
}

impl<C: CarrierAlgebra> Extension<C> {
    pub fn new(carrier: C) -> Self {
        Self { carrier }
    }

    pub fn carrier(&self) -> &C {
        &self.carrier
    }

    pub fn order(&self) -> usize {
        self.carrier.order()
    }

    /// Builds an element from exactly `N` components.
    pub fn element(&self, components: Vec<C::Elem>) -> Result<ExtElement<C::Elem>> {
        if components.len() != self.order() {
            return Err(AlgebraError::OrderMismatch {
                left: self.order(),
                right: components.len(),
            });
        }
        Ok(ExtElement { components })
    }

    pub fn zero(&self) -> ExtElement<C::Elem> {
        ExtElement {
            components: vec![self.carrier.zero(); self.order()],
        }
    }

    /// `τ^k u`, with `k` taken mod `N` (and the sign of `τ^N` applied).
    pub fn homogeneous(&self, k: usize, u: C::Elem) -> ExtElement<C::Elem> {
        let n = self.order();
        let mut out = self.zero();
        let wraps = (k / n) % 2 == 1;
        out.components[k % n] = if wraps && self.carrier.tau_sign() == TauSign::Minus {
            self.carrier.neg(&u)
        } else {
            u
        };
        out
    }

    /// `u ∈ A` as a degree-zero element.
    pub fn embed(&self, u: C::Elem) -> ExtElement<C::Elem> {
        self.homogeneous(0, u)
    }

    pub fn one(&self) -> ExtElement<C::Elem> {
        self.embed(self.carrier.one())
    }

    pub fn tau(&self) -> ExtElement<C::Elem> {
        self.homogeneous(1 % self.order(), self.carrier.one())
    }

    /// The degree of a nonzero homogeneous element; `None` for zero or mixed elements.
    pub fn degree(&self, a: &ExtElement<C::Elem>) -> Option<usize> {
        let mut nonzero = a
            .components
            .iter()
            .enumerate()
            .filter(|(_, u)| !self.carrier.is_zero(u))
            .map(|(k, _)| k);
        match (nonzero.next(), nonzero.next()) {
            (Some(k), None) => Some(k),
            _ => None,
        }
    }

    pub fn is_zero(&self, a: &ExtElement<C::Elem>) -> bool {
        a.components.iter().all(|u| self.carrier.is_zero(u))
    }

    fn check(&self, a: &ExtElement<C::Elem>) -> Result<()> {
        if a.components.len() == self.order() {
            Ok(())
        } else {
            Err(AlgebraError::OrderMismatch {
                left: self.order(),
                right: a.components.len(),
            })
        }
    }

    fn expect_order(&self, a: &ExtElement<C::Elem>) {
        assert_eq!(
            a.components.len(),
            self.order(),
            "extension element has the wrong number of components"
        );
    }

    pub fn add(&self, a: &ExtElement<C::Elem>, b: &ExtElement<C::Elem>) -> ExtElement<C::Elem> {
        self.expect_order(a);
        self.expect_order(b);
        ExtElement {
            components: a
                .components
                .iter()
                .zip(&b.components)
                .map(|(u, v)| self.carrier.add(u, v))
                .collect(),
        }
    }

    pub fn neg(&self, a: &ExtElement<C::Elem>) -> ExtElement<C::Elem> {
        ExtElement {
            components: a.components.iter().map(|u| self.carrier.neg(u)).collect(),
        }
    }

    pub fn sub(&self, a: &ExtElement<C::Elem>, b: &ExtElement<C::Elem>) -> ExtElement<C::Elem> {
        self.add(a, &self.neg(b))
    }

    pub fn scale(&self, s: &C::Scalar, a: &ExtElement<C::Elem>) -> ExtElement<C::Elem> {
        ExtElement {
            components: a.components.iter().map(|u| self.carrier.scale(s, u)).collect(),
        }
    }

    /// Right multiplication of every component by a carrier element: `ξ·w`.
    pub fn mul_right(&self, a: &ExtElement<C::Elem>, w: &C::Elem) -> ExtElement<C::Elem> {
        ExtElement {
            components: a.components.iter().map(|u| self.carrier.mul(u, w)).collect(),
        }
    }

    /// `(τ^a u)(τ^b v) = τ^{a+b} φ^b(u) v`, extended bilinearly.
    pub fn ext_mul(
        &self,
        a: &ExtElement<C::Elem>,
        b: &ExtElement<C::Elem>,
    ) -> Result<ExtElement<C::Elem>> {
        self.check(a)?;
        self.check(b)?;
        let c = &self.carrier;
        let n = self.order();
        let mut out = self.zero();
        for (i, u) in a.components.iter().enumerate() {
            if c.is_zero(u) {
                continue;
            }
            for (j, v) in b.components.iter().enumerate() {
                if c.is_zero(v) {
                    continue;
                }
                let mut term = c.mul(&c.phi_pow(u, j), v);
                if i + j >= n && c.tau_sign() == TauSign::Minus {
                    term = c.neg(&term);
                }
                let slot = &mut out.components[(i + j) % n];
                *slot = c.add(slot, &term);
            }
        }
        Ok(out)
    }

    /// Graded `q`-commutator `[v, u]_q = v u - q^{|v||u|} u v`, extended
    /// bilinearly over the homogeneous parts of both arguments.
    pub fn q_commutator(
        &self,
        v: &ExtElement<C::Elem>,
        u: &ExtElement<C::Elem>,
    ) -> Result<ExtElement<C::Elem>> {
        self.check(v)?;
        self.check(u)?;
        let c = &self.carrier;
        let mut out = self.zero();
        for (a, va) in v.components.iter().enumerate() {
            if c.is_zero(va) {
                continue;
            }
            let vh = self.homogeneous(a, va.clone());
            for (b, ub) in u.components.iter().enumerate() {
                if c.is_zero(ub) {
                    continue;
                }
                let uh = self.homogeneous(b, ub.clone());
                let vu = self.ext_mul(&vh, &uh)?;
                let uv = self.ext_mul(&uh, &vh)?;
                let twist = c.q_pow((a * b) as i64);
                out = self.add(&out, &self.sub(&vu, &self.scale(&twist, &uv)));
            }
        }
        Ok(out)
    }

    /// The `N`-differential, component-wise:
    /// `d(Σ τ^k u_k) = Σ τ^{k+1} (u_k - q^k φ(u_k))`.
    ///
    /// # Panics
    /// If `xi` does not have `N` components.
    pub fn differential(&self, xi: &ExtElement<C::Elem>) -> ExtElement<C::Elem> {
        self.expect_order(xi);
        let c = &self.carrier;
        let n = self.order();
        let mut out = self.zero();
        for (k, u) in xi.components.iter().enumerate() {
            if c.is_zero(u) {
                continue;
            }
            let mut image = c.sub(u, &c.scale(&c.q_pow(k as i64), &c.phi(u)));
            if k + 1 == n && c.tau_sign() == TauSign::Minus {
                image = c.neg(&image);
            }
            out.components[(k + 1) % n] = image;
        }
        out
    }

    /// `d` applied `times` times.
    pub fn differential_pow(&self, xi: &ExtElement<C::Elem>, times: usize) -> ExtElement<C::Elem> {
        (0..times).fold(xi.clone(), |acc, _| self.differential(&acc))
    }
}

/// `Δu = u - φ(u)`.
pub fn delta<C: CarrierAlgebra>(c: &C, u: &C::Elem) -> C::Elem {
    c.sub(u, &c.phi(u))
}

/// An element `x` of the carrier whose `Δx` is invertible, usable as a coordinate.
#[derive(Debug, Clone, PartialEq)]
pub struct Coordinate<E> {
    x: E,
    delta: E,
    delta_inv: E,
}

impl<E: Clone + PartialEq + Debug> Coordinate<E> {
    pub fn new<C: CarrierAlgebra<Elem = E>>(c: &C, x: E) -> Result<Self> {
        let delta = delta(c, &x);
        let delta_inv = c
            .try_invert(&delta)
            .ok_or(AlgebraError::NonInvertibleCoordinate)?;
        Ok(Self { x, delta, delta_inv })
    }

    pub fn x(&self) -> &E {
        &self.x
    }

    pub fn delta(&self) -> &E {
        &self.delta
    }

    pub fn delta_inv(&self) -> &E {
        &self.delta_inv
    }

    /// `du/dx = Δx⁻¹ Δu`.
    pub fn derivative<C: CarrierAlgebra<Elem = E>>(&self, c: &C, u: &E) -> E {
        c.mul(&self.delta_inv, &delta(c, u))
    }

    /// `u_{dx} = Δx⁻¹ φ(u) Δx`, the twist of `A` in the `dx` basis: `u·dx = dx·u_{dx}`.
    pub fn conjugate<C: CarrierAlgebra<Elem = E>>(&self, c: &C, u: &E) -> E {
        c.mul(&c.mul(&self.delta_inv, &c.phi(u)), &self.delta)
    }

    /// `dx = τ Δx`.
    pub fn dx<C: CarrierAlgebra<Elem = E>>(&self, ext: &Extension<C>) -> ExtElement<E> {
        ext.homogeneous(1 % ext.order(), self.delta.clone())
    }
}

pub fn right_derivative<C: CarrierAlgebra>(c: &C, u: &C::Elem, x: &C::Elem) -> Result<C::Elem> {
    Ok(Coordinate::new(c, x.clone())?.derivative(c, u))
}

pub fn conjugation_dx<C: CarrierAlgebra>(c: &C, u: &C::Elem, x: &C::Elem) -> Result<C::Elem> {
    Ok(Coordinate::new(c, x.clone())?.conjugate(c, u))
}

/// Returns `(y′_x, x′_y)` with `dy = dx·y′_x` and `x′_y = (y′_x)⁻¹`.
pub fn change_of_variable<C: CarrierAlgebra>(
    c: &C,
    y_new: &C::Elem,
    x_old: &C::Elem,
) -> Result<(C::Elem, C::Elem)> {
    let x = Coordinate::new(c, x_old.clone())?;
    // only checks that Δy is invertible
    Coordinate::new(c, y_new.clone())?;
    let y_x = x.derivative(c, y_new);
    let x_y = c
        .try_invert(&y_x)
        .ok_or(AlgebraError::NonInvertibleCoordinate)?;
    Ok((y_x, x_y))
}
