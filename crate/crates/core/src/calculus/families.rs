use crate::error::Result;
use crate::galois::{CarrierAlgebra, Coordinate};

/// The coordinate-dependent elements `Q_k`, `P_k` and `Φ_k` for a coordinate `x`.
///
/// - `Q_1 = Δx`, `Q_{k+1} = φ(Q_k)·Δx`, so `(dx)^k = τ^k Q_k`
/// - `P_1 = Δx`, `P_{k+1} = P_k - q^k φ(P_k)`, so `d^k x = τ^k P_k`
/// - `Φ_1 = Q_2⁻¹ P_2`, `Φ_{k+1} = u_{dx}(Φ_k) + q^k Φ_1`, so `d((dx)^k) = (dx)^{k+1} Φ_k`
///
/// Immutable once built.
#[derive(Debug, Clone)]
pub struct PolyFamilies<E> {
    order: usize,
    coordinate: Coordinate<E>,
    /// `Q_0 = 1, Q_1, …, Q_N`
    qs: Vec<E>,
    /// inverses of `qs`
    q_invs: Vec<E>,
    /// `P_1, …, P_N`
    ps: Vec<E>,
    /// `Φ_1, …, Φ_{N-1}`
    phis: Vec<E>,
}

/// Which exponent the second term of the `Φ` recurrence carries.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PhiRecurrence {
    /// `Φ_{k+1} = u_{dx}(Φ_k) + q^k Φ_1`, the one compatible with `d((dx)^k) = (dx)^{k+1} Φ_k`.
    Consistent,
    /// `Φ_{k+1} = u_{dx}(Φ_k) + q^{k-1} Φ_1`. Kept only to demonstrate that it disagrees.
    ShiftedExponent,
}

pub fn build_families<C: CarrierAlgebra>(c: &C, x: &C::Elem) -> Result<PolyFamilies<C::Elem>> {
    let n = c.order();
    let coordinate = Coordinate::new(c, x.clone())?;
    let dx = coordinate.delta().clone();
    let dx_inv = coordinate.delta_inv().clone();

    let mut qs = vec![c.one(), dx.clone()];
    let mut q_invs = vec![c.one(), dx_inv.clone()];
    // (Q_k)⁻¹ = Δx⁻¹ φ(Δx)⁻¹ … φ^{k-1}(Δx)⁻¹, and φ^j(Δx)⁻¹ = φ^j(Δx⁻¹)
    let mut twisted_inv = dx_inv.clone();
    for _ in 2..=n {
        let prev = qs.last().unwrap();
        qs.push(c.mul(&c.phi(prev), &dx));
        twisted_inv = c.phi(&twisted_inv);
        q_invs.push(c.mul(q_invs.last().unwrap(), &twisted_inv));
    }

    let mut ps = vec![dx.clone()];
    for k in 1..n {
        let prev = ps.last().unwrap();
        ps.push(c.sub(prev, &c.scale(&c.q_pow(k as i64), &c.phi(prev))));
    }

    let mut fam = PolyFamilies {
        order: n,
        coordinate,
        qs,
        q_invs,
        ps,
        phis: Vec::new(),
    };
    fam.phis = phi_by_recurrence(c, &fam, PhiRecurrence::Consistent);
    Ok(fam)
}

/// `Φ_1 … Φ_{N-1}` from the recurrence seeded by `Φ_1 = Q_2⁻¹ P_2`.
pub fn phi_by_recurrence<C: CarrierAlgebra>(
    c: &C,
    fam: &PolyFamilies<C::Elem>,
    variant: PhiRecurrence,
) -> Vec<C::Elem> {
    let n = fam.order;
    let phi1 = c.mul(fam.q_inv(2), fam.p(2));
    let mut phis = vec![phi1.clone()];
    for k in 1..n.saturating_sub(1) {
        let exponent = match variant {
            PhiRecurrence::Consistent => k as i64,
            PhiRecurrence::ShiftedExponent => k as i64 - 1,
        };
        let next = c.add(
            &fam.coordinate.conjugate(c, phis.last().unwrap()),
            &c.scale(&c.q_pow(exponent), &phi1),
        );
        phis.push(next);
    }
    phis
}

impl<E: Clone> PolyFamilies<E> {
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coordinate(&self) -> &Coordinate<E> {
        &self.coordinate
    }

    /// `Q_k` for `0 ≤ k ≤ N`, with `Q_0 = 1`.
    pub fn q(&self, k: usize) -> &E {
        &self.qs[k]
    }

    /// `Q_k⁻¹` for `0 ≤ k ≤ N`.
    pub fn q_inv(&self, k: usize) -> &E {
        &self.q_invs[k]
    }

    /// `P_k` for `1 ≤ k ≤ N`.
    pub fn p(&self, k: usize) -> &E {
        assert!(k >= 1, "P_k starts at k = 1");
        &self.ps[k - 1]
    }

    /// `Φ_k` for `1 ≤ k ≤ N - 1`.
    pub fn phi(&self, k: usize) -> &E {
        assert!(k >= 1, "Φ_k starts at k = 1");
        &self.phis[k - 1]
    }

    pub fn qs(&self) -> &[E] {
        &self.qs[1..]
    }

    pub fn ps(&self) -> &[E] {
        &self.ps
    }

    pub fn phis(&self) -> &[E] {
        &self.phis
    }
}

/// Residuals of `P_N ≡ 0` and `Σ_j φ^j(P_{N-1}) ≡ 0`.
#[derive(Debug, Clone, PartialEq)]
pub struct FamilyIdentities<E> {
    pub p_top: E,
    pub orbit_sum: E,
    pub pass: bool,
}

pub fn identity_check<C: CarrierAlgebra>(c: &C, fam: &PolyFamilies<C::Elem>) -> FamilyIdentities<C::Elem> {
    let n = fam.order;
    let p_top = fam.p(n).clone();
    let below = fam.p(n - 1);
    let orbit_sum = (0..n).fold(c.zero(), |acc, j| c.add(&acc, &c.phi_pow(below, j)));
    let pass = c.is_zero(&p_top) && c.is_zero(&orbit_sum);
    FamilyIdentities { p_top, orbit_sum, pass }
}
