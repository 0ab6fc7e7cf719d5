use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, ToPrimitive, Zero};

use super::{format_rational, poly, rational_abs_is_one, Rational};
use crate::error::{AlgebraError, Result};

/// Euler's totient, the degree of `Φ_n`.
pub fn euler_phi(n: usize) -> usize {
    (1..=n).filter(|&k| num_integer::gcd(k, n) == 1).count()
}

/// The `n`th cyclotomic polynomial, integer coefficients from the constant term up.
///
/// Computed as `t^n - 1` divided exactly by every `Φ_d` with `d | n`, `d < n`.
///
/// # Panics
/// If `n == 0`.
pub fn cyclotomic_polynomial(n: usize) -> Vec<BigInt> {
    assert!(n >= 1, "cyclotomic polynomial of order 0");
    let mut p = vec![BigInt::zero(); n + 1];
    p[0] = -BigInt::one();
    p[n] = BigInt::one();
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        p = poly::div_exact_monic(&p, &cyclotomic_polynomial(d))
            .expect("t^n - 1 is divisible by every Φ_d with d | n");
    }
    p
}

/// The field `Q(q) = Q[t]/(Φ_N)`.
///
/// Shared behind an [`Arc`] by every [`CycScalar`] of that order.
pub struct CyclotomicField {
    order: usize,
    modulus: Vec<Rational>,
    /// `t^i mod Φ_N` for `i < max(N, 2·deg - 1)`.
    powers: Vec<Vec<Rational>>,
}

impl CyclotomicField {
    pub fn new(order: usize) -> Result<Arc<Self>> {
        if order < 2 {
            return Err(AlgebraError::InvalidOrder(order));
        }
        let modulus: Vec<Rational> = cyclotomic_polynomial(order)
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        let degree = modulus.len() - 1;
        let count = order.max(2 * degree - 1);
        let mut powers = Vec::with_capacity(count);
        let mut cur = vec![Rational::zero(); degree];
        cur[0] = Rational::one();
        for _ in 0..count {
            powers.push(cur.clone());
            // multiply by t and reduce the overflowing top coefficient
            let top = cur.pop().unwrap();
            cur.insert(0, Rational::zero());
            if !top.is_zero() {
                for (c, m) in cur.iter_mut().zip(&modulus) {
                    *c -= &top * m;
                }
            }
        }
        Ok(Arc::new(Self {
            order,
            modulus,
            powers,
        }))
    }

    pub fn order(&self) -> usize {
        self.order
    }

    /// `deg Φ_N`, the dimension of the field over `Q`.
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }

    pub fn modulus(&self) -> &[Rational] {
        &self.modulus
    }

    pub fn zero(self: &Arc<Self>) -> CycScalar {
        CycScalar {
            field: Arc::clone(self),
            coeffs: vec![Rational::zero(); self.degree()],
        }
    }

    pub fn one(self: &Arc<Self>) -> CycScalar {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(self: &Arc<Self>, r: Rational) -> CycScalar {
        let mut s = self.zero();
        s.coeffs[0] = r;
        s
    }

    pub fn from_int(self: &Arc<Self>, n: i64) -> CycScalar {
        self.from_rational(Rational::from_integer(n.into()))
    }

    /// The generator `q`.
    pub fn q(self: &Arc<Self>) -> CycScalar {
        self.q_pow(1)
    }

    /// `q^k` for any integer `k`, using `q^N = 1`.
    pub fn q_pow(self: &Arc<Self>, k: i64) -> CycScalar {
        let e = k.rem_euclid(self.order as i64) as usize;
        CycScalar {
            field: Arc::clone(self),
            coeffs: self.powers[e].clone(),
        }
    }

    /// Reduces an arbitrary polynomial in `q` (constant term first) into the field.
    pub fn from_poly(self: &Arc<Self>, coeffs: &[Rational]) -> CycScalar {
        let mut out = self.zero();
        self.accumulate(&mut out.coeffs, coeffs);
        out
    }

    fn accumulate(&self, acc: &mut [Rational], coeffs: &[Rational]) {
        let d = self.degree();
        for (i, c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if i < d {
                acc[i] += c;
                continue;
            }
            // Φ_N divides t^N - 1
            let row = if i < self.powers.len() { i } else { i % self.order };
            for (a, p) in acc.iter_mut().zip(&self.powers[row]) {
                if !p.is_zero() {
                    *a += c * p;
                }
            }
        }
    }

    /// The `q`-integer `[k]_q = 1 + q + … + q^{k-1}`.
    pub fn q_integer(self: &Arc<Self>, k: usize) -> CycScalar {
        let mut s = self.zero();
        for j in 0..k {
            s = &s + &self.q_pow(j as i64);
        }
        s
    }

    /// `[k]_q! = [1]_q [2]_q … [k]_q`.
    pub fn q_factorial(self: &Arc<Self>, k: usize) -> CycScalar {
        (1..=k).fold(self.one(), |acc, j| &acc * &self.q_integer(j))
    }
}

impl fmt::Debug for CyclotomicField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Q(ζ_{})", self.order)
    }
}

/// An element of `Q(q)`, kept reduced modulo `Φ_N`.
#[derive(Clone)]
pub struct CycScalar {
    field: Arc<CyclotomicField>,
    coeffs: Vec<Rational>,
}

impl CycScalar {
    pub fn field(&self) -> &Arc<CyclotomicField> {
        &self.field
    }

    pub fn order(&self) -> usize {
        self.field.order
    }

    /// Coefficients of the canonical representative, `deg Φ_N` entries.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Zero::is_zero)
    }

    /// Returns the rational value if the element lies in `Q`.
    pub fn as_rational(&self) -> Option<&Rational> {
        self.coeffs[1..]
            .iter()
            .all(Zero::is_zero)
            .then(|| &self.coeffs[0])
    }

    pub(crate) fn nonzero_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field.order == other.field.order {
            Ok(())
        } else {
            Err(AlgebraError::OrderMismatch {
                left: self.field.order,
                right: other.field.order,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect();
        Ok(self.with(coeffs))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect();
        Ok(self.with(coeffs))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.field.zero());
        }
        let prod = poly::mul(&self.coeffs, &other.coeffs);
        Ok(self.field.from_poly(&prod))
    }

    pub fn scale(&self, r: &Rational) -> Self {
        self.with(self.coeffs.iter().map(|c| c * r).collect())
    }

    /// Multiplicative inverse, by extended Euclid against `Φ_N`.
    pub fn invert(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(AlgebraError::DivisionByZero);
        }
        // Φ_N is irreducible, so every nonzero residue is a unit.
        let inv = poly::inverse_mod(&self.coeffs, &self.field.modulus)
            .expect("nonzero residue modulo an irreducible polynomial is invertible");
        Ok(self.field.from_poly(&inv))
    }

    pub fn pow(&self, k: i64) -> Result<Self> {
        let base = if k < 0 { self.invert()? } else { self.clone() };
        let mut e = k.unsigned_abs();
        let mut acc = self.field.one();
        let mut sq = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &sq;
            }
            sq = &sq * &sq;
            e >>= 1;
        }
        Ok(acc)
    }

    /// Evaluates the residue polynomial at `q = exp(2πi/N)`.
    pub fn embed_complex(&self) -> Complex64 {
        let n = self.field.order as f64;
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let v = c.to_f64().unwrap_or(f64::NAN);
                Complex64::from_polar(v, 2.0 * std::f64::consts::PI * i as f64 / n)
            })
            .sum()
    }

    fn with(&self, coeffs: Vec<Rational>) -> Self {
        Self {
            field: Arc::clone(&self.field),
            coeffs,
        }
    }
}

impl PartialEq for CycScalar {
    fn eq(&self, other: &Self) -> bool {
        self.field.order == other.field.order && self.coeffs == other.coeffs
    }
}

impl Eq for CycScalar {}

/// Renders as a polynomial in `q`, lowest power first: `1+q`, `-1/2q^2`.
impl fmt::Display for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let term = if i == 0 {
                format_rational(c)
            } else {
                let power = if i == 1 { "q".to_string() } else { format!("q^{i}") };
                if rational_abs_is_one(c) {
                    if c.is_one() {
                        power
                    } else {
                        format!("-{power}")
                    }
                } else {
                    format!("{}{power}", format_rational(c))
                }
            };
            if !out.is_empty() && !term.starts_with('-') {
                out.push('+');
            }
            out.push_str(&term);
        }
        if out.is_empty() {
            out.push('0');
        }
        f.write_str(&out)
    }
}

impl fmt::Debug for CycScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CycScalar<{}>({})", self.field.order, self)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&CycScalar> for &CycScalar {
            type Output = CycScalar;
            /// # Panics
            /// If the operands belong to different fields.
            fn $method(self, rhs: &CycScalar) -> CycScalar {
                self.$checked(rhs).expect("cyclotomic scalars of different orders")
            }
        }
        impl $trait<CycScalar> for CycScalar {
            type Output = CycScalar;
            fn $method(self, rhs: CycScalar) -> CycScalar {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        self.with(self.coeffs.iter().map(|c| -c).collect())
    }
}

impl Neg for CycScalar {
    type Output = CycScalar;
    fn neg(self) -> CycScalar {
        -&self
    }
}
