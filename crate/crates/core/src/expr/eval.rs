use super::Expr;
use crate::calculus::PlaneCalculus;
use crate::error::{AlgebraError, Result};
use crate::qplane::{PlaneElement, QuantumPlane};

/// Evaluates expressions in the quantum plane of one order.
#[derive(Debug, Clone)]
pub struct Evaluator {
    plane: QuantumPlane,
    calc: PlaneCalculus,
}

impl Evaluator {
    pub fn new(order: usize) -> Result<Self> {
        let plane = QuantumPlane::new(order)?;
        let calc = PlaneCalculus::new(plane.field().clone())?;
        Ok(Self { plane, calc })
    }

    pub fn plane(&self) -> &QuantumPlane {
        &self.plane
    }

    pub fn calculus(&self) -> &PlaneCalculus {
        &self.calc
    }

    /// `d` acts on the whole plane; `partial` and `Dk` need a degree-zero argument.
    pub fn eval(&self, e: &Expr) -> Result<PlaneElement> {
        let p = &self.plane;
        let f = p.field();
        Ok(match e {
            Expr::Rational(r) => PlaneElement::scalar(f.from_rational(r.clone())),
            Expr::Q => p.q(),
            Expr::X => p.x(),
            Expr::Y => p.y(),
            Expr::Neg(inner) => -&self.eval(inner)?,
            Expr::Sum(terms) => {
                let mut acc = p.zero();
                for t in terms {
                    acc = &acc + &self.eval(t)?;
                }
                acc
            }
            Expr::Prod(factors) => {
                let mut acc = p.one();
                for t in factors {
                    acc = &acc * &self.eval(t)?;
                }
                acc
            }
            Expr::Pow(base, k) => self.eval(base)?.pow(*k),
            Expr::D(inner) => p.differential(&self.eval(inner)?),
            Expr::Partial(inner) => {
                let r = self.eval(inner)?.as_xpoly().ok_or(AlgebraError::NotDegreeZero)?;
                PlaneElement::from_row(0, &self.calc.partial(&r))
            }
            Expr::Dk(k, inner) => {
                let op = self.calc.covariant(*k)?;
                let r = self.eval(inner)?.as_xpoly().ok_or(AlgebraError::NotDegreeZero)?;
                PlaneElement::from_row(0, &op.apply(self.calc.algebra(), &r))
            }
        })
    }
}
