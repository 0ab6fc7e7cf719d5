use proptest::prelude::*;

use qgalois::calculus::{
    dx_differential, form_differential, from_dx_basis, to_dx_basis, KForm, PlaneCalculus,
};
use qgalois::expr::{parse, render, Evaluator, Expr};
use qgalois::galois::CarrierAlgebra;
use qgalois::qplane::{PlaneElement, QuantumPlane};
use qgalois::quaternion;
use qgalois::random::Sampler;
use qgalois::scalar::{rational, CyclotomicField};

fn config() -> ProptestConfig {
    ProptestConfig::with_cases(48)
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn field_axioms(n in 2usize..=12, seed in any::<u64>()) {
        let f = CyclotomicField::new(n).unwrap();
        let mut s = Sampler::new(seed);
        let (a, b, c) = (s.cyc_scalar(&f), s.cyc_scalar(&f), s.cyc_scalar(&f));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a + &(-&a), f.zero());
        let inv = a.invert().unwrap();
        prop_assert!((&a * &inv).is_one());
    }

    #[test]
    fn plane_ring_laws(n in 2usize..=6, seed in any::<u64>()) {
        let p = QuantumPlane::new(n).unwrap();
        let mut s = Sampler::new(seed);
        let (a, b, c) = (s.plane(p.field()), s.plane(p.field()), s.plane(p.field()));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
        prop_assert_eq!(&p.one() * &a, a.clone());
    }

    #[test]
    fn differential_nilpotent_and_leibniz(n in 2usize..=6, seed in any::<u64>()) {
        let p = QuantumPlane::new(n).unwrap();
        let f = p.field().clone();
        let mut s = Sampler::new(seed);
        let a = s.plane(&f);
        let dn = (0..n).fold(a.clone(), |acc, _| p.differential(&acc));
        prop_assert!(dn.is_zero());
        let m = s.index(n);
        let u = s.homogeneous_plane(&f, m);
        let lhs = p.differential(&(&u * &a));
        let rhs = &(&p.differential(&u) * &a) + &(&u * &p.differential(&a)).scale(&f.q_pow(m as i64));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn form_basis_and_differential(n in 2usize..=6, seed in any::<u64>()) {
        let calc = PlaneCalculus::new(CyclotomicField::new(n).unwrap()).unwrap();
        let c = calc.algebra();
        let fam = calc.families();
        let mut s = Sampler::new(seed);
        let k = s.index(n);
        let u = s.xpoly(calc.field(), 0.6);
        let w = KForm::new(n, k, u.clone());
        let r = to_dx_basis(c, fam, &w);
        prop_assert_eq!(from_dx_basis(c, fam, k, &r).unwrap(), w.clone());
        let via_tau = form_differential(c, &w);
        let via_dx = from_dx_basis(c, fam, k + 1, &dx_differential(c, fam, k, &r).unwrap()).unwrap();
        prop_assert_eq!(&via_tau, &via_dx);
        let tilde = from_dx_basis(c, fam, k + 1, &calc.higher_delta(k as i64, &r)).unwrap();
        prop_assert_eq!(&via_tau, &tilde);
        let dn = (0..n).fold(w, |acc, _| form_differential(c, &acc));
        prop_assert!(c.is_zero(dn.tau_coeff()));
    }

    #[test]
    fn partial_is_right_derivative(n in 2usize..=6, seed in any::<u64>()) {
        let calc = PlaneCalculus::new(CyclotomicField::new(n).unwrap()).unwrap();
        let mut s = Sampler::new(seed);
        let w = s.xpoly(calc.field(), 0.7);
        let x = calc.families().coordinate();
        prop_assert_eq!(calc.partial(&w), x.derivative(calc.algebra(), &w));
        let k = s.index(n) as i64;
        prop_assert_eq!(calc.higher_delta(k, &w), calc.higher_delta_closed(k, &w));
    }

    #[test]
    fn quaternion_d_squared(seed in any::<u64>()) {
        let mut s = Sampler::new(seed);
        let [a0, a1, a2, a3] = s.quaternion();
        let h = quaternion::algebra();
        let q = quaternion::from_quaternion(a0, a1, a2, a3);
        prop_assert!(h.is_zero(&h.differential_pow(&q, 2)));
    }
}

fn leaf() -> impl Strategy<Value = Expr> {
    prop_oneof![
        (0i64..20, 1i64..5).prop_map(|(a, b)| Expr::Rational(rational(a, b))),
        Just(Expr::Q),
        Just(Expr::X),
        Just(Expr::Y),
    ]
}

fn expr_tree() -> impl Strategy<Value = Expr> {
    leaf().prop_recursive(4, 32, 4, |inner| {
        prop_oneof![
            inner.clone().prop_map(|e| Expr::Neg(Box::new(e))),
            prop::collection::vec(inner.clone(), 2..4).prop_map(Expr::Sum),
            prop::collection::vec(inner.clone(), 2..4).prop_map(Expr::Prod),
            (inner.clone(), 0u32..4).prop_map(|(e, k)| Expr::Pow(Box::new(e), k)),
            inner.clone().prop_map(|e| Expr::D(Box::new(e))),
            inner.clone().prop_map(|e| Expr::Partial(Box::new(e))),
            (1usize..4, inner).prop_map(|(k, e)| Expr::Dk(k, Box::new(e))),
        ]
    })
}

/// A random word in `x`, `y` with a rewritten copy: some `xy` becomes `q*y*x`
/// and some `x^N` or `y^N` factors are inserted.
fn rewritten_word(n: usize, seed: u64) -> (String, String) {
    let mut s = Sampler::new(seed);
    let len = 1 + s.index(8);
    let word: Vec<&str> = (0..len).map(|_| if s.index(2) == 0 { "x" } else { "y" }).collect();
    let mut rewritten: Vec<String> = word.iter().map(|w| w.to_string()).collect();
    for _ in 0..3 {
        let i = s.index(rewritten.len());
        match s.index(3) {
            0 => rewritten.insert(i, format!("x^{n}")),
            1 => rewritten.insert(i, format!("y^{n}")),
            _ => {
                if let Some(j) = (0..rewritten.len() - 1).find(|&j| rewritten[j] == "x" && rewritten[j + 1] == "y") {
                    rewritten.splice(j..j + 2, ["q".to_string(), "y".to_string(), "x".to_string()]);
                }
            }
        }
    }
    (word.join("*"), rewritten.join("*"))
}

proptest! {
    #![proptest_config(config())]

    #[test]
    fn parse_render_roundtrip(e in expr_tree()) {
        let text = render(&e);
        let parsed = parse(&text).unwrap();
        prop_assert_eq!(&parse(&render(&parsed)).unwrap(), &parsed);
        prop_assert_eq!(parsed, e);
    }

    #[test]
    fn eval_respects_relations(n in 2usize..=6, seed in any::<u64>()) {
        let ev = Evaluator::new(n).unwrap();
        let (original, rewritten) = rewritten_word(n, seed);
        let a = ev.eval(&parse(&original).unwrap()).unwrap();
        let b = ev.eval(&parse(&rewritten).unwrap()).unwrap();
        prop_assert_eq!(a, b, "{} vs {}", original, rewritten);
    }

    #[test]
    fn monomial_products(n in 2usize..=6, a in 0usize..6, b in 0usize..6, c in 0usize..6, d in 0usize..6) {
        let p = QuantumPlane::new(n).unwrap();
        let f = p.field();
        let lhs = &PlaneElement::monomial(f.one(), a, b) * &PlaneElement::monomial(f.one(), c, d);
        let expected = PlaneElement::monomial(f.q_pow((b * c) as i64), a + c, b + d);
        prop_assert_eq!(lhs, expected);
    }
}
