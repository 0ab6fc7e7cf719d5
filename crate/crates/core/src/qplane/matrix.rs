use std::sync::Arc;

use super::PlaneElement;
use crate::error::{AlgebraError, Result};
use crate::scalar::{CycScalar, CyclotomicField};

/// `N × N` matrix over `Q(q)`, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RepMatrix {
    order: usize,
    entries: Vec<CycScalar>,
}

impl RepMatrix {
    pub fn zero(field: &Arc<CyclotomicField>) -> Self {
        let n = field.order();
        Self {
            order: n,
            entries: vec![field.zero(); n * n],
        }
    }

    pub fn identity(field: &Arc<CyclotomicField>) -> Self {
        let mut m = Self::zero(field);
        for i in 0..m.order {
            m.entries[i * m.order + i] = field.one();
        }
        m
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn entry(&self, i: usize, j: usize) -> &CycScalar {
        &self.entries[i * self.order + j]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[CycScalar]> {
        self.entries.chunks(self.order)
    }

    /// Entries as one flat vector, for linear independence checks.
    pub fn flatten(&self) -> Vec<CycScalar> {
        self.entries.clone()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(CycScalar::is_zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.order == other.order {
            Ok(())
        } else {
            Err(AlgebraError::OrderMismatch {
                left: self.order,
                right: other.order,
            })
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            order: self.order,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(Self {
            order: self.order,
            entries: self.entries.iter().zip(&other.entries).map(|(a, b)| a - b).collect(),
        })
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let n = self.order;
        let field = self.entries[0].field().clone();
        let mut out = Self::zero(&field);
        for i in 0..n {
            for k in 0..n {
                let a = self.entry(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.entry(k, j);
                    if !b.is_zero() {
                        let slot = &mut out.entries[i * n + j];
                        *slot = &*slot + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &CycScalar) -> Self {
        Self {
            order: self.order,
            entries: self.entries.iter().map(|c| s * c).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let field = self.entries[0].field().clone();
        (0..e).fold(Self::identity(&field), |acc, _| {
            acc.checked_mul(self).expect("same order")
        })
    }
}

/// The generator matrices `(X, Y)`: `X = diag(1, q⁻¹, …, q^{-(N-1)})`,
/// `Y` the cyclic shift with ones on the superdiagonal and in the lower-left corner.
pub fn rep_matrices(field: &Arc<CyclotomicField>) -> (RepMatrix, RepMatrix) {
    let n = field.order();
    let mut x = RepMatrix::zero(field);
    let mut y = RepMatrix::zero(field);
    for i in 0..n {
        x.entries[i * n + i] = field.q_pow(-(i as i64));
        y.entries[i * n + (i + 1) % n] = field.one();
    }
    (x, y)
}

/// `Σ β_{kl} Y^k X^l`. Since `(Y^k X^l)_{ij} = q^{-jl}` for `j = i + k` and zero
/// elsewhere, entries are filled in directly.
pub fn represent(a: &PlaneElement) -> RepMatrix {
    let field = a.field().clone();
    let n = a.order();
    let mut out = RepMatrix::zero(&field);
    for (k, l, beta) in a.terms() {
        for i in 0..n {
            let j = (i + k) % n;
            let slot = &mut out.entries[i * n + j];
            *slot = &*slot + &(beta * &field.q_pow(-((j * l) as i64)));
        }
    }
    out
}

/// `Σ β_{kl} Y^k X^l` by explicit matrix products.
pub fn represent_by_products(a: &PlaneElement) -> RepMatrix {
    let field = a.field().clone();
    let (x, y) = rep_matrices(&field);
    let mut out = RepMatrix::zero(&field);
    for (k, l, beta) in a.terms() {
        let m = y.pow(k as u32).checked_mul(&x.pow(l as u32)).expect("same order").scale(beta);
        out = out.checked_add(&m).expect("same order");
    }
    out
}

/// Rank of a family of vectors over `Q(q)`, by Gaussian elimination.
pub fn rank(vectors: &[Vec<CycScalar>]) -> usize {
    let mut rows: Vec<Vec<CycScalar>> = vectors.to_vec();
    let width = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for col in 0..width {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let inv = rows[r][col].invert().expect("pivot is nonzero");
        let pivot_row: Vec<CycScalar> = rows[r].iter().map(|c| c * &inv).collect();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[col].is_zero() {
                continue;
            }
            let factor = row[col].clone();
            for (c, p) in row.iter_mut().zip(&pivot_row) {
                *c = &*c - &(&factor * p);
            }
        }
        rows[r] = pivot_row;
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    r
}
