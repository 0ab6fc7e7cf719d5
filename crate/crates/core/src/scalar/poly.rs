//! Dense univariate polynomials over `Z` and `Q`, coefficients stored low degree first.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::Rational;

pub(crate) fn trim<T: Zero>(p: &mut Vec<T>) {
    while p.last().is_some_and(Zero::is_zero) {
        p.pop();
    }
}

/// Exact division of `num` by a monic integer polynomial `den`.
///
/// Returns `None` if the remainder is nonzero.
pub(crate) fn div_exact_monic(num: &[BigInt], den: &[BigInt]) -> Option<Vec<BigInt>> {
    debug_assert!(den.last().is_some_and(One::is_one));
    let mut rem = num.to_vec();
    trim(&mut rem);
    let dd = den.len() - 1;
    if rem.len() < den.len() {
        return if rem.is_empty() { Some(Vec::new()) } else { None };
    }
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dd].clone();
        if c.is_zero() {
            continue;
        }
        for (j, d) in den.iter().enumerate() {
            rem[i + j] -= &c * d;
        }
        quot[i] = c;
    }
    trim(&mut rem);
    rem.is_empty().then_some(quot)
}

pub(crate) fn mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    trim(&mut out);
    out
}

fn sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let n = a.len().max(b.len());
    let mut out: Vec<Rational> = (0..n)
        .map(|i| {
            let x = a.get(i).cloned().unwrap_or_else(Rational::zero);
            match b.get(i) {
                Some(y) => x - y,
                None => x,
            }
        })
        .collect();
    trim(&mut out);
    out
}

/// Polynomial long division over `Q`. `b` must be nonzero after trimming.
pub(crate) fn div_rem(a: &[Rational], b: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let mut r = a.to_vec();
    trim(&mut r);
    let mut b = b.to_vec();
    trim(&mut b);
    assert!(!b.is_empty(), "polynomial division by zero");
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let lead_inv = b.last().unwrap().recip();
    let db = b.len() - 1;
    let mut quot = vec![Rational::zero(); r.len() - db];
    for i in (0..quot.len()).rev() {
        let c = &r[i + db] * &lead_inv;
        if c.is_zero() {
            continue;
        }
        for (j, d) in b.iter().enumerate() {
            r[i + j] -= &c * d;
        }
        quot[i] = c;
    }
    trim(&mut r);
    trim(&mut quot);
    (quot, r)
}

/// Inverse of `a` modulo `m` via the extended Euclidean algorithm.
///
/// Returns `None` when `gcd(a, m)` is not a unit.
pub(crate) fn inverse_mod(a: &[Rational], m: &[Rational]) -> Option<Vec<Rational>> {
    // Invariant: s_i * a ≡ r_i (mod m).
    let (mut r0, mut r1) = (m.to_vec(), a.to_vec());
    trim(&mut r0);
    trim(&mut r1);
    let (mut s0, mut s1): (Vec<Rational>, Vec<Rational>) = (Vec::new(), vec![Rational::one()]);
    while !r1.is_empty() {
        let (quot, rem) = div_rem(&r0, &r1);
        let s2 = sub(&s0, &mul(&quot, &s1));
        r0 = std::mem::replace(&mut r1, rem);
        s0 = std::mem::replace(&mut s1, s2);
    }
    if r0.len() != 1 {
        return None;
    }
    let c = r0[0].recip();
    let mut inv: Vec<Rational> = s0.into_iter().map(|x| x * &c).collect();
    let (_, rem) = div_rem(&inv, m);
    inv = rem;
    Some(inv)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| Rational::from_integer(x.into())).collect()
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = q(&[1, 2, 0, 5, -3]);
        let b = q(&[2, 0, 1]);
        let (quot, rem) = div_rem(&a, &b);
        assert!(rem.len() < b.len());
        let mut back = mul(&quot, &b);
        back.resize(a.len(), Rational::zero());
        for (i, r) in rem.iter().enumerate() {
            back[i] += r;
        }
        assert_eq!(back, a);
    }

    #[test]
    fn inverse_mod_of_non_unit_is_none() {
        // t - 1 shares the root 1 with t^2 - 1
        assert!(inverse_mod(&q(&[-1, 1]), &q(&[-1, 0, 1])).is_none());
    }

    #[test]
    fn inverse_mod_simple() {
        // t * t ≡ -1 mod t^2 + 1, so t^{-1} = -t
        assert_eq!(inverse_mod(&q(&[0, 1]), &q(&[1, 0, 1])), Some(q(&[0, -1])));
    }
}
