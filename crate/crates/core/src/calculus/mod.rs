//! Higher order calculus over a coordinate: differential `k`-forms, the
//! families `P_k`, `Q_k`, `Φ_k` and the operators acting on form coefficients.
//!
//! A `k`-form is stored as `τ^k u`. Its coefficient in the `(dx)^k` basis is
//! `r = Q_k⁻¹ u`, and `d` acts on that coefficient by `D^(k)`.

mod families;
mod plane;

pub use families::{build_families, identity_check, phi_by_recurrence, FamilyIdentities, PhiRecurrence, PolyFamilies};
pub use plane::PlaneCalculus;

use crate::error::{AlgebraError, Result};
use crate::galois::{CarrierAlgebra, Coordinate, Extension, TauSign};
use crate::scalar::Scalar;

/// `ω = τ^k u`.
#[derive(Debug, Clone, PartialEq)]
pub struct KForm<E> {
    order: usize,
    degree: usize,
    tau_coeff: E,
}

impl<E> KForm<E> {
    /// Degree is reduced mod `order`; no sign is applied.
    pub fn new(order: usize, degree: usize, tau_coeff: E) -> Self {
        Self {
            order,
            degree: degree % order,
            tau_coeff,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn tau_coeff(&self) -> &E {
        &self.tau_coeff
    }

    pub fn into_tau_coeff(self) -> E {
        self.tau_coeff
    }
}

fn wrap_sign<C: CarrierAlgebra>(c: &C, k: usize, u: C::Elem) -> C::Elem {
    if k >= c.order() && c.tau_sign() == TauSign::Minus {
        c.neg(&u)
    } else {
        u
    }
}

/// `(τ^a u)(τ^b v) = τ^{a+b} φ^b(u) v`.
pub fn form_mul<C: CarrierAlgebra>(c: &C, a: &KForm<C::Elem>, b: &KForm<C::Elem>) -> Result<KForm<C::Elem>> {
    if a.order != b.order || a.order != c.order() {
        return Err(AlgebraError::OrderMismatch {
            left: a.order,
            right: b.order,
        });
    }
    let u = c.mul(&c.phi_pow(&a.tau_coeff, b.degree), &b.tau_coeff);
    let k = a.degree + b.degree;
    Ok(KForm::new(a.order, k, wrap_sign(c, k, u)))
}

/// `d(τ^k u) = τ^{k+1}(u - q^k φ(u))`, computed by the extension's differential.
pub fn form_differential<C: CarrierAlgebra + Clone>(c: &C, w: &KForm<C::Elem>) -> KForm<C::Elem> {
    let ext = Extension::new(c.clone());
    let xi = ext.homogeneous(w.degree, w.tau_coeff.clone());
    let next = (w.degree + 1) % w.order;
    let image = ext.differential(&xi).component(next).clone();
    KForm::new(w.order, next, image)
}

/// `(dx)^k r` for `0 ≤ k ≤ N`; `k = N` wraps to degree zero.
pub fn from_dx_basis<C: CarrierAlgebra>(
    c: &C,
    fam: &PolyFamilies<C::Elem>,
    k: usize,
    r: &C::Elem,
) -> Result<KForm<C::Elem>> {
    let n = fam.order();
    if k > n {
        return Err(AlgebraError::DegreeOutOfRange { degree: k, min: 0, max: n });
    }
    Ok(KForm::new(n, k, wrap_sign(c, k, c.mul(fam.q(k), r))))
}

/// The coefficient `r` with `ω = (dx)^k r`, `k` the degree of `ω`.
pub fn to_dx_basis<C: CarrierAlgebra>(c: &C, fam: &PolyFamilies<C::Elem>, w: &KForm<C::Elem>) -> C::Elem {
    c.mul(fam.q_inv(w.degree), &w.tau_coeff)
}

/// `(dx)^k = τ^k Q_k`.
pub fn dx_power<C: CarrierAlgebra>(c: &C, fam: &PolyFamilies<C::Elem>, k: usize) -> Result<KForm<C::Elem>> {
    from_dx_basis(c, fam, k, &c.one())
}

/// `d^k x = τ^k P_k` for `1 ≤ k ≤ N`.
pub fn higher_differential_of_x<C: CarrierAlgebra>(
    c: &C,
    fam: &PolyFamilies<C::Elem>,
    k: usize,
) -> Result<KForm<C::Elem>> {
    let n = fam.order();
    if !(1..=n).contains(&k) {
        return Err(AlgebraError::DegreeOutOfRange { degree: k, min: 1, max: n });
    }
    Ok(KForm::new(n, k, wrap_sign(c, k, fam.p(k).clone())))
}

/// `u ↦ q^k u′_x + Φ_k u`, the action of `d` on `k`-form coefficients in the `(dx)^k` basis.
#[derive(Debug, Clone)]
pub struct CovariantOperator<S, E> {
    k: usize,
    twist: S,
    phi_k: E,
    coordinate: Coordinate<E>,
}

impl<S: Scalar, E: Clone + PartialEq + std::fmt::Debug> CovariantOperator<S, E> {
    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn phi_k(&self) -> &E {
        &self.phi_k
    }

    pub fn apply<C: CarrierAlgebra<Scalar = S, Elem = E>>(&self, c: &C, u: &E) -> E {
        let derivative = self.coordinate.derivative(c, u);
        c.add(&c.scale(&self.twist, &derivative), &c.mul(&self.phi_k, u))
    }

    pub fn as_fn<'a, C: CarrierAlgebra<Scalar = S, Elem = E>>(&'a self, c: &'a C) -> impl Fn(&E) -> E + 'a {
        move |u| self.apply(c, u)
    }
}

/// `D^(k)` for `1 ≤ k ≤ N - 1`.
pub fn covariant_operator<C: CarrierAlgebra>(
    c: &C,
    fam: &PolyFamilies<C::Elem>,
    k: usize,
) -> Result<CovariantOperator<C::Scalar, C::Elem>> {
    let n = fam.order();
    if !(1..n).contains(&k) {
        return Err(AlgebraError::DegreeOutOfRange {
            degree: k,
            min: 1,
            max: n - 1,
        });
    }
    Ok(CovariantOperator {
        k,
        twist: c.q_pow(k as i64),
        phi_k: fam.phi(k).clone(),
        coordinate: fam.coordinate().clone(),
    })
}

/// The `(dx)^{k+1}` coefficient of `d((dx)^k r)`: `r′_x` for `k = 0`, `D^(k) r` otherwise.
pub fn dx_differential<C: CarrierAlgebra>(
    c: &C,
    fam: &PolyFamilies<C::Elem>,
    k: usize,
    r: &C::Elem,
) -> Result<C::Elem> {
    if k == 0 {
        Ok(fam.coordinate().derivative(c, r))
    } else {
        Ok(covariant_operator(c, fam, k)?.apply(c, r))
    }
}

/// The scalar in front of `(dx)^k x^{1-k}` in the generator relation.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GeneratorCoefficient {
    /// `[k]_q / q^{k(k-1)/2}`
    QInteger,
    /// `[k]_q! / q^{k(k-1)/2}`
    QFactorial,
}

fn q_integer<C: CarrierAlgebra>(c: &C, k: usize) -> C::Scalar {
    (1..k).fold(c.q_pow(0), |acc, j| acc.plus(&c.q_pow(j as i64)))
}

impl GeneratorCoefficient {
    pub fn value<C: CarrierAlgebra>(self, c: &C, k: usize) -> C::Scalar {
        let numerator = match self {
            Self::QInteger => q_integer(c, k),
            Self::QFactorial => (1..=k).fold(c.q_pow(0), |acc, j| acc.times(&q_integer(c, j))),
        };
        let half = (k * k.saturating_sub(1) / 2) as i64;
        numerator.times(&c.q_pow(-half))
    }
}

/// `coefficient · (dx)^k x^{1-k}`, for `1 ≤ k ≤ N`.
pub fn generator_relation_rhs<C: CarrierAlgebra>(
    c: &C,
    fam: &PolyFamilies<C::Elem>,
    k: usize,
    coefficient: GeneratorCoefficient,
) -> Result<KForm<C::Elem>> {
    let n = fam.order();
    if !(1..=n).contains(&k) {
        return Err(AlgebraError::DegreeOutOfRange { degree: k, min: 1, max: n });
    }
    let x_inv = c.try_invert(fam.coordinate().x()).ok_or(AlgebraError::NotInvertible)?;
    let power = (1..k).fold(c.one(), |acc, _| c.mul(&acc, &x_inv));
    from_dx_basis(c, fam, k, &c.scale(&coefficient.value(c, k), &power))
}

/// `d^k x - coefficient·(dx)^k x^{1-k}` as a `τ^k` coefficient.
pub fn generator_relation_residual<C: CarrierAlgebra>(
    c: &C,
    fam: &PolyFamilies<C::Elem>,
    k: usize,
    coefficient: GeneratorCoefficient,
) -> Result<C::Elem> {
    let lhs = higher_differential_of_x(c, fam, k)?;
    let rhs = generator_relation_rhs(c, fam, k, coefficient)?;
    Ok(c.sub(lhs.tau_coeff(), rhs.tau_coeff()))
}
