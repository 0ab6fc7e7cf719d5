//! Polynomial expressions in `q`, `x`, `y` with `d`, `partial` and `Dk`.
//!
//! ```text
//! expr   := term (('+' | '-') term)*
//! term   := unary (['*'] unary)*        juxtaposition is a product
//! unary  := '-' unary | factor
//! factor := atom ['^' uint]
//! atom   := rational | 'q' | 'x' | 'y' | 'd' '(' expr ')'
//!         | 'partial' '(' expr ')' | 'D' uint '(' expr ')' | '(' expr ')'
//! ```
//!
//! A run of letters is read one symbol at a time, so `qyx` is `q*y*x`;
//! `partial` is the only multi-letter word.

mod eval;
mod parse;

use std::fmt;

pub use eval::Evaluator;
pub use parse::{parse, ParseError};

use crate::scalar::{format_rational, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Expr {
    /// Always non-negative; signs are `Neg` nodes.
    Rational(Rational),
    Q,
    X,
    Y,
    Neg(Box<Expr>),
    /// Two or more terms.
    Sum(Vec<Expr>),
    /// Two or more factors, in written order.
    Prod(Vec<Expr>),
    Pow(Box<Expr>, u32),
    D(Box<Expr>),
    Partial(Box<Expr>),
    Dk(usize, Box<Expr>),
}

impl Expr {
    fn is_compound(&self) -> bool {
        matches!(self, Expr::Sum(_) | Expr::Prod(_))
    }
}

fn parenthesized(e: &Expr) -> String {
    format!("({})", render(e))
}

fn render_factor(e: &Expr) -> String {
    if e.is_compound() {
        parenthesized(e)
    } else {
        render(e)
    }
}

fn render_pow_base(e: &Expr) -> String {
    match e {
        Expr::Q | Expr::X | Expr::Y | Expr::D(_) | Expr::Partial(_) | Expr::Dk(..) => render(e),
        Expr::Rational(r) if r.is_integer() => render(e),
        _ => parenthesized(e),
    }
}

/// Text that [`parse`] reads back to the same tree.
pub fn render(e: &Expr) -> String {
    match e {
        Expr::Rational(r) => format_rational(r),
        Expr::Q => "q".into(),
        Expr::X => "x".into(),
        Expr::Y => "y".into(),
        Expr::Neg(inner) => format!("-{}", render_factor(inner)),
        Expr::Sum(terms) => {
            let mut out = String::new();
            for (i, t) in terms.iter().enumerate() {
                match t {
                    _ if i == 0 => out.push_str(&term_text(t)),
                    Expr::Neg(inner) => {
                        out.push_str(" - ");
                        out.push_str(&term_text(inner));
                    }
                    _ => {
                        out.push_str(" + ");
                        out.push_str(&term_text(t));
                    }
                }
            }
            out
        }
        Expr::Prod(factors) => factors.iter().map(render_factor).collect::<Vec<_>>().join("*"),
        Expr::Pow(base, e) => format!("{}^{e}", render_pow_base(base)),
        Expr::D(inner) => format!("d({})", render(inner)),
        Expr::Partial(inner) => format!("partial({})", render(inner)),
        Expr::Dk(k, inner) => format!("D{k}({})", render(inner)),
    }
}

fn term_text(t: &Expr) -> String {
    if matches!(t, Expr::Sum(_)) {
        parenthesized(t)
    } else {
        render(t)
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render(self))
    }
}
