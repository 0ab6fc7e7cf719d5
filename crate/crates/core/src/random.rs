//! Seeded samplers for the randomized identity checks.
//!
//! Coefficients are small rationals and elements are sparse, which keeps
//! exact arithmetic cheap while still hitting every monomial.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::galois::{CarrierAlgebra, Coordinate};
use crate::qplane::{PlaneElement, XAlgebra, XPoly};
use crate::quaternion::Complex;
use crate::scalar::{rational, CycScalar, CyclotomicField, Rational};

#[derive(Debug, Clone)]
pub struct Sampler {
    rng: ChaCha8Rng,
}

impl Sampler {
    pub fn new(seed: u64) -> Self {
        Self {
            rng: ChaCha8Rng::seed_from_u64(seed),
        }
    }

    pub fn index(&mut self, bound: usize) -> usize {
        self.rng.random_range(0..bound)
    }

    /// Nonzero `a/b` with `|a| ≤ 3`, `1 ≤ b ≤ 3`.
    pub fn rational(&mut self) -> Rational {
        let mut num = self.rng.random_range(-3..=3i64);
        if num == 0 {
            num = 1;
        }
        rational(num, self.rng.random_range(1..=3))
    }

    fn maybe_rational(&mut self, p: f64) -> Rational {
        if self.rng.random_bool(p) {
            self.rational()
        } else {
            rational(0, 1)
        }
    }

    pub fn cyc_scalar(&mut self, field: &Arc<CyclotomicField>) -> CycScalar {
        let coeffs: Vec<Rational> = (0..field.degree()).map(|_| self.maybe_rational(0.6)).collect();
        let c = field.from_poly(&coeffs);
        if c.is_zero() {
            field.from_rational(self.rational())
        } else {
            c
        }
    }

    /// Each coefficient is nonzero with probability `density`.
    pub fn xpoly(&mut self, field: &Arc<CyclotomicField>, density: f64) -> XPoly {
        let coeffs = (0..field.order())
            .map(|_| {
                if self.rng.random_bool(density) {
                    self.cyc_scalar(field)
                } else {
                    field.zero()
                }
            })
            .collect();
        XPoly::from_coeffs(coeffs).expect("one coefficient per power")
    }

    pub fn nonzero_xpoly(&mut self, field: &Arc<CyclotomicField>) -> XPoly {
        let r = self.xpoly(field, 0.5);
        if r.is_zero() {
            XPoly::monomial(self.cyc_scalar(field), self.index(field.order()))
        } else {
            r
        }
    }

    /// A general element with about `2N` nonzero terms.
    pub fn plane(&mut self, field: &Arc<CyclotomicField>) -> PlaneElement {
        let n = field.order();
        let density = (2.0 / n as f64).min(0.6);
        let grid = (0..n).map(|_| self.xpoly(field, density).coeffs().to_vec()).collect();
        PlaneElement::from_grid(grid).expect("square grid")
    }

    pub fn homogeneous_plane(&mut self, field: &Arc<CyclotomicField>, k: usize) -> PlaneElement {
        PlaneElement::from_row(k, &self.nonzero_xpoly(field))
    }

    /// An `x`-polynomial usable as a coordinate, by rejection.
    pub fn plane_coordinate(&mut self, c: &XAlgebra) -> Coordinate<XPoly> {
        loop {
            if let Ok(coord) = Coordinate::new(c, self.nonzero_xpoly(c.field())) {
                return coord;
            }
        }
    }

    pub fn complex(&mut self) -> Complex {
        Complex::new(self.maybe_rational(0.8), self.maybe_rational(0.8))
    }

    /// A complex number with nonzero `j` part, so that `Δx = 2·im·j` is a unit.
    pub fn complex_coordinate(&mut self) -> Complex {
        Complex::new(self.maybe_rational(0.8), self.rational())
    }

    pub fn quaternion(&mut self) -> [Rational; 4] {
        [
            self.maybe_rational(0.8),
            self.maybe_rational(0.8),
            self.maybe_rational(0.8),
            self.maybe_rational(0.8),
        ]
    }

    /// A unit of the carrier, by rejection.
    pub fn unit<C: CarrierAlgebra>(&mut self, c: &C, mut draw: impl FnMut(&mut Self) -> C::Elem) -> C::Elem {
        loop {
            let u = draw(self);
            if c.try_invert(&u).is_some() {
                return u;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_stream() {
        let f = CyclotomicField::new(5).unwrap();
        let mut a = Sampler::new(7);
        let mut b = Sampler::new(7);
        for _ in 0..10 {
            assert_eq!(a.plane(&f), b.plane(&f));
        }
    }

    #[test]
    fn coordinates_are_valid() {
        let c = XAlgebra::new(CyclotomicField::new(4).unwrap());
        let mut s = Sampler::new(1);
        for _ in 0..10 {
            let coord = s.plane_coordinate(&c);
            assert_eq!(c.mul(coord.delta(), coord.delta_inv()), c.one());
        }
    }
}
