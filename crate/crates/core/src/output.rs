//! Text and JSON renderings shared by the CLI, the verifier and the FFI layer.
//!
//! Text mode prints `q` symbolically: `(1+q)x - qy^2x^3`. JSON mode writes a
//! cyclotomic scalar as the array of its `{num, den}` coefficients (constant
//! term first); numerators and denominators are JSON integers of unbounded
//! size. Objects are emitted with sorted keys so output is byte-stable.

use std::str::FromStr;

use num_complex::Complex64;
use serde_json::{json, Number, Value};

use crate::qplane::{PlaneElement, RepMatrix, XPoly};
use crate::scalar::{CycScalar, Rational};

fn monomial(k: usize, l: usize) -> String {
    let mut s = String::new();
    match k {
        0 => {}
        1 => s.push('y'),
        _ => s.push_str(&format!("y^{k}")),
    }
    match l {
        0 => {}
        1 => s.push('x'),
        _ => s.push_str(&format!("x^{l}")),
    }
    s
}

/// One term `c·m`; `alone` is true when it is the only term of its sum.
fn term(c: &CycScalar, mono: &str, alone: bool) -> String {
    let cs = c.to_string();
    let multi = c.nonzero_terms() > 1;
    if mono.is_empty() {
        return if multi && !alone { format!("({cs})") } else { cs };
    }
    if c.is_one() {
        mono.to_string()
    } else if (-c).is_one() {
        format!("-{mono}")
    } else if multi {
        format!("({cs}){mono}")
    } else {
        format!("{cs}{mono}")
    }
}

fn join_terms(terms: Vec<String>) -> String {
    let mut out = String::new();
    for t in terms {
        if out.is_empty() {
            out = t;
        } else if let Some(rest) = t.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&t);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn format_terms<'a>(terms: impl Iterator<Item = (usize, usize, &'a CycScalar)>) -> String {
    let items: Vec<_> = terms.collect();
    let alone = items.len() == 1;
    join_terms(
        items
            .into_iter()
            .map(|(k, l, c)| term(c, &monomial(k, l), alone))
            .collect(),
    )
}

pub fn format_xpoly(r: &XPoly) -> String {
    format_terms(
        r.coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(l, c)| (0, l, c)),
    )
}

pub fn format_plane(a: &PlaneElement) -> String {
    format_terms(a.terms())
}

/// `(dx)^k·r`; the wrapped top degree (`k == N`) and `k == 0` print `r` alone.
pub fn format_dx_form(k: usize, r: &XPoly) -> String {
    let body = format_xpoly(r);
    let prefix = match k {
        0 => return body,
        1 => "dx·".to_string(),
        _ => format!("(dx)^{k}·"),
    };
    let single = r.coeffs().iter().filter(|c| !c.is_zero()).count() <= 1;
    if single {
        format!("{prefix}{body}")
    } else {
        format!("{prefix}({body})")
    }
}

/// A sum of forms `Σ (dx)^k r_k`, skipping zero coefficients.
pub fn format_dx_forms(parts: &[(usize, XPoly)]) -> String {
    let shown: Vec<String> = parts
        .iter()
        .filter(|(_, r)| !r.is_zero())
        .map(|(k, r)| format_dx_form(*k, r))
        .collect();
    if shown.is_empty() {
        "0".to_string()
    } else {
        shown.join(" + ")
    }
}

pub fn format_complex(z: Complex64) -> String {
    // avoid printing -0.000000
    let clean = |v: f64| if v.abs() < 5e-13 { 0.0 } else { v };
    let (re, im) = (clean(z.re), clean(z.im));
    if im < 0.0 {
        format!("{re:.6}-{:.6}i", -im)
    } else {
        format!("{re:.6}+{im:.6}i")
    }
}

pub fn format_matrix(m: &RepMatrix) -> String {
    m.rows()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

pub fn format_matrix_approx(m: &RepMatrix) -> String {
    m.rows()
        .map(|row| {
            let cells: Vec<String> = row.iter().map(|c| format_complex(c.embed_complex())).collect();
            format!("[{}]", cells.join(", "))
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn big_number(s: String) -> Value {
    Value::Number(Number::from_str(&s).expect("integer literal"))
}

pub fn rational_json(r: &Rational) -> Value {
    json!({
        "den": big_number(r.denom().to_string()),
        "num": big_number(r.numer().to_string()),
    })
}

pub fn scalar_json(c: &CycScalar) -> Value {
    Value::Array(c.coeffs().iter().map(rational_json).collect())
}

pub fn xpoly_json(r: &XPoly) -> Value {
    Value::Array(r.coeffs().iter().map(scalar_json).collect())
}

pub fn plane_json(a: &PlaneElement) -> Value {
    let n = a.order();
    let rows: Vec<Value> = (0..n).map(|k| xpoly_json(&a.row(k))).collect();
    json!({ "coeffs": rows, "order": n })
}

pub fn matrix_json(m: &RepMatrix) -> Value {
    let rows: Vec<Value> = m
        .rows()
        .map(|row| Value::Array(row.iter().map(scalar_json).collect()))
        .collect();
    json!({ "entries": rows, "order": m.order() })
}

pub fn complex_json(z: Complex64) -> Value {
    json!([z.re, z.im])
}

/// Pretty JSON with a trailing newline.
pub fn to_json_string(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}
