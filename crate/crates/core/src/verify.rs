//! Every identity the library relies on, checked exactly at a given order.
//!
//! Randomized checks draw from a [`Sampler`] seeded once per run, so a
//! report is reproducible from `(order, seed, cases)`.

use std::fmt;

use num_traits::Zero;
use serde_json::{json, Value};

use crate::calculus::{
    build_families, dx_differential, dx_power, form_differential, from_dx_basis, generator_relation_residual,
    identity_check, to_dx_basis, GeneratorCoefficient, KForm, PlaneCalculus, PolyFamilies,
};
use crate::error::Result;
use crate::galois::{CarrierAlgebra, Coordinate};
use crate::output::{matrix_json, plane_json, rational_json, scalar_json};
use crate::qplane::{rank, rep_matrices, represent, PlaneElement, QuantumPlane, RepMatrix, XPoly};
use crate::quaternion::{self, Complex, ComplexCarrier};
use crate::random::Sampler;
use crate::scalar::{format_rational, integer, CycScalar, Rational};

/// What was left over when an identity failed.
#[derive(Debug, Clone, PartialEq)]
pub enum Residual {
    Plane(PlaneElement),
    Scalar(CycScalar),
    Matrix(RepMatrix),
    Quaternion([Rational; 4]),
    Complex(Complex),
}

impl Residual {
    fn poly(r: XPoly) -> Self {
        Self::Plane(PlaneElement::from_row(0, &r))
    }

    pub fn to_json(&self) -> Value {
        match self {
            Self::Plane(a) => plane_json(a),
            Self::Scalar(c) => scalar_json(c),
            Self::Matrix(m) => matrix_json(m),
            Self::Quaternion(a) => Value::Array(a.iter().map(rational_json).collect()),
            Self::Complex(z) => Value::Array(vec![rational_json(&z.re), rational_json(&z.im)]),
        }
    }
}

impl fmt::Display for Residual {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Plane(a) => write!(f, "{a}"),
            Self::Scalar(c) => write!(f, "{c}"),
            Self::Matrix(m) => write!(f, "{}", crate::output::format_matrix(m).replace('\n', " ")),
            Self::Quaternion(a) => {
                let parts: Vec<String> = a.iter().map(format_rational).collect();
                write!(f, "({})", parts.join(", "))
            }
            Self::Complex(z) => write!(f, "{} + {}j", format_rational(&z.re), format_rational(&z.im)),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyRow {
    pub identity: String,
    pub pass: bool,
    /// The first nonzero residual, if any.
    pub residual: Option<Residual>,
}

impl VerifyRow {
    pub fn to_json(&self) -> Value {
        json!({
            "identity": self.identity,
            "pass": self.pass,
            "residual": self.residual.as_ref().map_or(Value::Null, Residual::to_json),
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct VerifyReport {
    pub order: usize,
    pub seed: u64,
    pub cases: usize,
    pub rows: Vec<VerifyRow>,
}

impl VerifyReport {
    pub fn all_pass(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn row(&self, identity: &str) -> Option<&VerifyRow> {
        self.rows.iter().find(|r| r.identity == identity)
    }

    pub fn to_json(&self) -> Value {
        json!({
            "cases": self.cases,
            "order": self.order,
            "pass": self.all_pass(),
            "rows": self.rows.iter().map(VerifyRow::to_json).collect::<Vec<_>>(),
            "seed": self.seed,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for r in &self.rows {
            let status = if r.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("{status} {}", r.identity));
            if let Some(res) = &r.residual {
                out.push_str(&format!("  residual: {res}"));
            }
            out.push('\n');
        }
        let failed = self.rows.iter().filter(|r| !r.pass).count();
        out.push_str(&format!(
            "order {}: {} of {} identities hold\n",
            self.order,
            self.rows.len() - failed,
            self.rows.len()
        ));
        out
    }
}

struct Rows(Vec<VerifyRow>);

impl Rows {
    /// Records the first failure among `results`; `None` means the case held.
    fn check(&mut self, identity: &str, results: impl IntoIterator<Item = Option<Residual>>) {
        let residual = results.into_iter().flatten().next();
        self.0.push(VerifyRow {
            identity: identity.to_string(),
            pass: residual.is_none(),
            residual,
        });
    }

    fn flag(&mut self, identity: &str, pass: bool) {
        self.0.push(VerifyRow {
            identity: identity.to_string(),
            pass,
            residual: None,
        });
    }
}

fn nonzero_plane(a: PlaneElement) -> Option<Residual> {
    (!a.is_zero()).then_some(Residual::Plane(a))
}

fn nonzero_poly(r: XPoly) -> Option<Residual> {
    (!r.is_zero()).then(|| Residual::poly(r))
}

fn nonzero_matrix(m: RepMatrix) -> Option<Residual> {
    (!m.is_zero()).then_some(Residual::Matrix(m))
}

fn form_residual(a: &KForm<XPoly>, b: &KForm<XPoly>) -> Option<Residual> {
    let n = a.order();
    let lhs = PlaneElement::from_row(a.degree(), a.tau_coeff());
    let rhs = PlaneElement::from_row(b.degree(), b.tau_coeff());
    debug_assert_eq!(n, b.order());
    nonzero_plane(&lhs - &rhs)
}

/// Runs every suite at order `order`. Randomized checks use `cases` samples each.
pub fn run(order: usize, seed: u64, cases: usize) -> Result<VerifyReport> {
    let plane = QuantumPlane::new(order)?;
    let mut rows = Rows(Vec::new());
    let mut s = Sampler::new(seed);
    scalar_suite(&plane, &mut rows);
    plane_suite(&plane, &mut rows, &mut s, cases);
    differential_suite(&plane, &mut rows, &mut s, cases);
    let calc = PlaneCalculus::new(plane.field().clone())?;
    families_suite(&calc, &mut rows, &mut s, cases)?;
    forms_suite(&calc, &mut rows, &mut s, cases)?;
    derivative_suite(&calc, &mut rows, &mut s, cases)?;
    matrix_suite(&plane, &mut rows, &mut s, cases);
    quaternion_suite(&mut rows, &mut s, cases)?;
    Ok(VerifyReport {
        order,
        seed,
        cases,
        rows: rows.0,
    })
}

fn scalar_suite(p: &QuantumPlane, rows: &mut Rows) {
    let f = p.field();
    let n = p.order();
    // powers by repeated multiplication, not through the reduced exponent table
    let powers: Vec<CycScalar> = (0..=n)
        .scan(f.one(), |acc, _| {
            let cur = acc.clone();
            *acc = &*acc * &f.q();
            Some(cur)
        })
        .collect();
    rows.check(
        "scalar.q_primitive",
        std::iter::once((!powers[n].is_one()).then(|| Residual::Scalar(powers[n].clone())))
            .chain((1..n).map(|k| powers[k].is_one().then(|| Residual::Scalar(powers[k].clone())))),
    );
    let top = f.q_integer(n);
    rows.check("scalar.q_integer_vanishes", [(!top.is_zero()).then_some(Residual::Scalar(top))]);
}

fn plane_suite(p: &QuantumPlane, rows: &mut Rows, s: &mut Sampler, cases: usize) {
    let f = p.field().clone();
    let n = p.order() as u32;
    let (x, y) = (p.x(), p.y());
    rows.check(
        "plane.relations",
        [
            nonzero_plane(&(&x * &y) - &(&y * &x).scale(&f.q())),
            nonzero_plane(&x.pow(n) - &p.one()),
            nonzero_plane(&y.pow(n) - &p.one()),
        ],
    );
    rows.check(
        "plane.associativity",
        (0..cases).map(|_| {
            let (a, b, c) = (s.plane(&f), s.plane(&f), s.plane(&f));
            nonzero_plane(&(&(&a * &b) * &c) - &(&a * &(&b * &c)))
        }),
    );
}

fn differential_suite(p: &QuantumPlane, rows: &mut Rows, s: &mut Sampler, cases: usize) {
    let f = p.field().clone();
    let n = p.order();
    let ext = p.extension();
    rows.check(
        "differential.inner",
        (0..cases).map(|_| {
            let a = s.plane(&f);
            let comm = ext.q_commutator(&ext.tau(), &p.to_ext(&a)).expect("same order");
            nonzero_plane(&p.differential(&a) - &p.from_ext(&comm))
        }),
    );
    rows.check(
        "differential.nilpotent",
        (0..cases).map(|_| {
            let a = s.plane(&f);
            nonzero_plane(p.from_ext(&ext.differential_pow(&p.to_ext(&a), n)))
        }),
    );
    let witness = p.from_ext(&ext.differential_pow(&p.to_ext(&p.x()), n - 1));
    rows.flag("differential.witness_nonzero", !witness.is_zero());
    rows.check(
        "differential.graded_leibniz",
        (0..cases).map(|_| {
            let m = s.index(n);
            let u = s.homogeneous_plane(&f, m);
            let v = s.plane(&f);
            let lhs = p.differential(&(&u * &v));
            let rhs = &(&p.differential(&u) * &v) + &(&u * &p.differential(&v)).scale(&f.q_pow(m as i64));
            nonzero_plane(&lhs - &rhs)
        }),
    );
}

fn families_suite(calc: &PlaneCalculus, rows: &mut Rows, s: &mut Sampler, cases: usize) -> Result<()> {
    let c = calc.algebra();
    let fam = calc.families();
    let n = fam.order();
    let mut coordinates = vec![fam.clone()];
    for _ in 0..cases.min(10) {
        coordinates.push(build_families(c, &s.plane_coordinate(c).x().clone())?);
    }
    let reports: Vec<_> = coordinates.iter().map(|f| identity_check(c, f)).collect();
    rows.check("families.p_top", reports.iter().map(|r| nonzero_poly(r.p_top.clone())));
    rows.check("families.orbit_sum", reports.iter().map(|r| nonzero_poly(r.orbit_sum.clone())));
    rows.check(
        "families.q_inverse",
        coordinates
            .iter()
            .flat_map(|f| (0..=n).map(move |k| c.sub(&c.mul(f.q(k), f.q_inv(k)), &c.one())))
            .map(nonzero_poly),
    );
    rows.check(
        "families.phi_closed_form",
        (1..n).map(|k| nonzero_poly(c.sub(fam.phi(k), &calc.phi_closed_form(k as i64)))),
    );
    rows.check(
        "families.phi_tau_basis",
        coordinates.iter().flat_map(|f| {
            (1..n).map(move |k| {
                let direct = form_differential(c, &dx_power(c, f, k).expect("k < N"));
                let expected = from_dx_basis(c, f, k + 1, f.phi(k)).expect("k + 1 ≤ N");
                form_residual(&direct, &expected)
            })
        }),
    );
    Ok(())
}

fn forms_suite(calc: &PlaneCalculus, rows: &mut Rows, s: &mut Sampler, cases: usize) -> Result<()> {
    let c = calc.algebra();
    let f = calc.field().clone();
    let n = f.order();
    let mut coordinates: Vec<PolyFamilies<XPoly>> = vec![calc.families().clone()];
    for _ in 0..3 {
        coordinates.push(build_families(c, &s.plane_coordinate(c).x().clone())?);
    }
    let mut draws = Vec::with_capacity(cases);
    for _ in 0..cases {
        let fam = s.index(coordinates.len());
        draws.push((fam, s.index(n), s.xpoly(&f, 0.6)));
    }
    rows.check(
        "forms.basis_roundtrip",
        draws.iter().map(|(i, k, u)| {
            let fam = &coordinates[*i];
            let w = KForm::new(n, *k, u.clone());
            let back = from_dx_basis(c, fam, *k, &to_dx_basis(c, fam, &w)).expect("k < N");
            form_residual(&w, &back)
        }),
    );
    rows.check(
        "forms.differential_agreement",
        draws.iter().map(|(i, k, r)| {
            let fam = &coordinates[*i];
            let via_tau = form_differential(c, &from_dx_basis(c, fam, *k, r).expect("k < N"));
            let coeff = dx_differential(c, fam, *k, r).expect("k < N");
            form_residual(&via_tau, &from_dx_basis(c, fam, k + 1, &coeff).expect("k + 1 ≤ N"))
        }),
    );
    let fam = calc.families();
    rows.check(
        "forms.tilde_r_law",
        draws.iter().map(|(_, k, r)| {
            let w = from_dx_basis(c, fam, *k, r).expect("k < N");
            let dw = form_differential(c, &w);
            let next = from_dx_basis(c, fam, k + 1, &calc.higher_delta(*k as i64, r)).expect("k + 1 ≤ N");
            form_residual(&dw, &next)
        }),
    );
    rows.check(
        "forms.nilpotent",
        draws.iter().map(|(_, k, u)| {
            let w = (0..n).fold(KForm::new(n, *k, u.clone()), |acc, _| form_differential(c, &acc));
            nonzero_poly(w.into_tau_coeff())
        }),
    );
    rows.check(
        "forms.generator_relation",
        (1..=n).map(|k| {
            let r = generator_relation_residual(c, fam, k, GeneratorCoefficient::QFactorial).expect("k in range");
            nonzero_poly(r)
        }),
    );
    Ok(())
}

fn derivative_suite(calc: &PlaneCalculus, rows: &mut Rows, s: &mut Sampler, cases: usize) -> Result<()> {
    let c = calc.algebra();
    let f = calc.field().clone();
    let n = f.order();
    rows.check(
        "derivative.partial_powers",
        (0..n).map(|k| {
            let expected = if k == 0 {
                XPoly::zero(&f)
            } else {
                XPoly::monomial(f.q_integer(k), k - 1)
            };
            nonzero_poly(c.sub(&calc.partial(&XPoly::monomial(f.one(), k)), &expected))
        }),
    );
    let x = calc.families().coordinate();
    let pairs: Vec<(XPoly, XPoly)> = (0..cases).map(|_| (s.xpoly(&f, 0.6), s.xpoly(&f, 0.6))).collect();
    rows.check(
        "derivative.partial_is_right_derivative",
        pairs.iter().map(|(w, _)| nonzero_poly(c.sub(&calc.partial(w), &x.derivative(c, w)))),
    );
    rows.check(
        "derivative.partial_twisted_leibniz",
        pairs.iter().map(|(w, v)| {
            let lhs = calc.partial(&c.mul(w, v));
            let rhs = c.add(&c.mul(&calc.partial(w), v), &c.mul(&w.phi_endomorphism(1), &calc.partial(v)));
            nonzero_poly(c.sub(&lhs, &rhs))
        }),
    );
    let coords: Vec<Coordinate<XPoly>> = (0..cases.min(10)).map(|_| s.plane_coordinate(c)).collect();
    rows.check(
        "derivative.right_derivative_leibniz",
        pairs.iter().enumerate().map(|(i, (u, v))| {
            let coord = &coords[i % coords.len()];
            let lhs = coord.derivative(c, &c.mul(u, v));
            let rhs = c.add(
                &c.mul(&coord.derivative(c, u), v),
                &c.mul(&coord.conjugate(c, u), &coord.derivative(c, v)),
            );
            nonzero_poly(c.sub(&lhs, &rhs))
        }),
    );
    let monomial_cases = (0..n as i64).flat_map(|k| (0..n).map(move |l| (k, l)));
    rows.check(
        "derivative.higher_delta_formulas",
        monomial_cases
            .map(|(k, l)| {
                let m = XPoly::monomial(f.one(), l);
                c.sub(&calc.higher_delta(k, &m), &calc.higher_delta_closed(k, &m))
            })
            .chain(pairs.iter().enumerate().map(|(i, (r, _))| {
                let k = (i % n) as i64;
                c.sub(&calc.higher_delta(k, r), &calc.higher_delta_closed(k, r))
            }))
            .map(nonzero_poly)
            .collect::<Vec<_>>(),
    );
    rows.check(
        "derivative.higher_delta_derivation",
        pairs.iter().enumerate().map(|(i, (r, r2))| {
            let k = (i % n) as i64;
            let lhs = calc.higher_delta(k, &c.mul(r, r2));
            let twisted = c.scale(&f.q_pow(k), &c.mul(&r.phi_endomorphism(1), &calc.partial(r2)));
            let rhs = c.add(&c.mul(&calc.higher_delta(k, r), r2), &twisted);
            nonzero_poly(c.sub(&lhs, &rhs))
        }),
    );
    Ok(())
}

fn matrix_suite(p: &QuantumPlane, rows: &mut Rows, s: &mut Sampler, cases: usize) {
    let f = p.field().clone();
    let n = p.order();
    let (x, y) = rep_matrices(&f);
    let identity = RepMatrix::identity(&f);
    let xy = x.checked_mul(&y).expect("same order");
    let yx = y.checked_mul(&x).expect("same order");
    rows.check(
        "matrix.commutation",
        [nonzero_matrix(xy.checked_sub(&yx.scale(&f.q())).expect("same order"))],
    );
    rows.check(
        "matrix.generator_orders",
        [
            nonzero_matrix(x.pow(n as u32).checked_sub(&identity).expect("same order")),
            nonzero_matrix(y.pow(n as u32).checked_sub(&identity).expect("same order")),
            nonzero_matrix(represent(&p.x()).checked_sub(&x).expect("same order")),
            nonzero_matrix(represent(&p.y()).checked_sub(&y).expect("same order")),
        ],
    );
    rows.check(
        "matrix.multiplicative",
        (0..cases).map(|_| {
            let (a, b) = (s.plane(&f), s.plane(&f));
            let lhs = represent(&(&a * &b));
            let rhs = represent(&a).checked_mul(&represent(&b)).expect("same order");
            nonzero_matrix(lhs.checked_sub(&rhs).expect("same order"))
        }),
    );
    let basis: Vec<_> = (0..n)
        .flat_map(|k| (0..n).map(move |l| (k, l)))
        .map(|(k, l)| represent(&PlaneElement::monomial(f.one(), k, l)).flatten())
        .collect();
    rows.flag("matrix.basis_independent", rank(&basis) == n * n);
}

fn quat_residual(a: [Rational; 4]) -> Option<Residual> {
    (!a.iter().all(Zero::is_zero)).then_some(Residual::Quaternion(a))
}

fn quaternion_suite(rows: &mut Rows, s: &mut Sampler, cases: usize) -> Result<()> {
    let h = quaternion::algebra();
    let c = ComplexCarrier;
    let unit = |idx: usize| {
        let mut a = [integer(0), integer(0), integer(0), integer(0)];
        a[idx] = integer(1);
        quaternion::from_quaternion(a[0].clone(), a[1].clone(), a[2].clone(), a[3].clone())
    };
    // entry (a, b) is (sign, index) of e_a e_b, with e_0 = 1, e_1 = i, e_2 = j, e_3 = k
    let table: [[(i64, usize); 4]; 4] = [
        [(1, 0), (1, 1), (1, 2), (1, 3)],
        [(1, 1), (-1, 0), (1, 3), (-1, 2)],
        [(1, 2), (-1, 3), (-1, 0), (1, 1)],
        [(1, 3), (1, 2), (-1, 1), (-1, 0)],
    ];
    let mut table_results = Vec::new();
    for (a, row) in table.iter().enumerate() {
        for (b, &(sign, idx)) in row.iter().enumerate() {
            let prod = h.ext_mul(&unit(a), &unit(b))?;
            let expect = h.scale(&integer(sign), &unit(idx));
            table_results.push(quat_residual(quaternion::to_quaternion(&h.sub(&prod, &expect))));
        }
    }
    rows.check("quaternion.multiplication_table", table_results);
    let draw = |s: &mut Sampler| {
        let [a0, a1, a2, a3] = s.quaternion();
        quaternion::from_quaternion(a0, a1, a2, a3)
    };
    rows.check(
        "quaternion.nilpotent",
        (0..cases).map(|_| {
            let a = draw(s);
            quat_residual(quaternion::to_quaternion(&h.differential_pow(&a, 2)))
        }),
    );
    rows.check(
        "quaternion.graded_leibniz",
        (0..cases).map(|_| {
            let m = s.index(2);
            let u = h.homogeneous(m, s.complex());
            let v = draw(s);
            let lhs = h.differential(&h.ext_mul(&u, &v).expect("order 2"));
            let first = h.ext_mul(&h.differential(&u), &v).expect("order 2");
            let second = h.ext_mul(&u, &h.differential(&v)).expect("order 2");
            let rhs = h.add(&first, &h.scale(&c.q_pow(m as i64), &second));
            quat_residual(quaternion::to_quaternion(&h.sub(&lhs, &rhs)))
        }),
    );
    let mut second = Vec::with_capacity(cases);
    let mut linear = Vec::with_capacity(cases);
    for _ in 0..cases {
        let u = s.complex();
        let x = s.complex_coordinate();
        let dd = quaternion::second_derivative_check(&u, &x)?;
        second.push((!c.is_zero(&dd)).then_some(Residual::Complex(dd)));
        let (ct, dt) = quaternion::linear_witness(&u, &x)?;
        let rebuilt = c.add(&Complex::real(ct), &c.scale(&dt, &x));
        let diff = c.sub(&rebuilt, &u);
        linear.push((!c.is_zero(&diff)).then_some(Residual::Complex(diff)));
    }
    rows.check("quaternion.second_derivative", second);
    rows.check("quaternion.linear_in_coordinate", linear);
    let mut fam_results = Vec::new();
    for _ in 0..cases.min(10) {
        let fam = build_families(&c, &s.complex_coordinate())?;
        let report = identity_check(&c, &fam);
        for e in [report.p_top, report.orbit_sum] {
            fam_results.push((!c.is_zero(&e)).then_some(Residual::Complex(e)));
        }
    }
    rows.check("quaternion.families", fam_results);
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders_pass() {
        for n in 2..=4 {
            let report = run(n, 0, 5).unwrap();
            let failed: Vec<_> = report.rows.iter().filter(|r| !r.pass).collect();
            assert!(failed.is_empty(), "N={n}: {failed:?}");
        }
    }

    #[test]
    fn reproducible() {
        assert_eq!(run(3, 9, 4).unwrap(), run(3, 9, 4).unwrap());
    }

    #[test]
    fn row_json_shape() {
        let report = run(2, 0, 1).unwrap();
        let v = report.rows[0].to_json();
        assert_eq!(v["residual"], Value::Null);
        assert!(v["pass"].as_bool().unwrap());
    }
}
