//! Intersection numbers with weighted codimension-one subtori, and the
//! ideal they generate.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactla::IntMatrix;
use crate::ideal::FracIdeal;
use crate::latimer::order_of;
use crate::order::{FieldElement, Order, OrderElement};

/// A nonzero integer linear form; its weight is the gcd of the coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearForm {
    coeffs: Vec<BigInt>,
}

impl LinearForm {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.iter().all(Zero::is_zero) {
            return Err(Error::ZeroVector);
        }
        Ok(LinearForm { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&x| BigInt::from(x)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Smallest positive value of the form on `Z^n`.
    pub fn weight(&self) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
    }

    pub fn eval(&self, v: &[BigInt]) -> BigInt {
        self.coeffs.iter().zip(v).map(|(a, b)| a * b).sum()
    }
}

/// `|alpha(v)|`.
pub fn intersection(alpha: &LinearForm, v: &[BigInt]) -> Result<BigInt> {
    if v.len() != alpha.coeffs.len() {
        return Err(Error::DimensionMismatch(format!(
            "form of length {} applied to vector of length {}",
            alpha.coeffs.len(),
            v.len()
        )));
    }
    Ok(alpha.eval(v).abs())
}

/// Determinant over `Z[xi]` by cofactor expansion.
fn det_over(order: &Order, m: &[Vec<OrderElement>]) -> OrderElement {
    let n = m.len();
    if n == 0 {
        return order.one();
    }
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = order.zero();
    for (j, a0j) in m[0].iter().enumerate() {
        if a0j.is_zero() {
            continue;
        }
        let minor: Vec<Vec<OrderElement>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, x)| x.clone()).collect())
            .collect();
        let term = order.mul(a0j, &det_over(order, &minor));
        acc = OrderElement {
            coords: if j % 2 == 0 {
                acc.coords.iter().zip(&term.coords).map(|(x, y)| x + y).collect()
            } else {
                acc.coords.iter().zip(&term.coords).map(|(x, y)| x - y).collect()
            },
        };
    }
    acc
}

/// Column `k` of `adj(M - xi I)`, which lies in the kernel of `M - xi I`
/// (`n >= 2`).
fn adjugate_column(order: &Order, m: &IntMatrix, k: usize) -> Vec<OrderElement> {
    let n = m.nrows();
    let a: Vec<Vec<OrderElement>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut e = order.int(&m[(i, j)]);
                    if i == j {
                        e.coords[1] -= 1;
                    }
                    e
                })
                .collect()
        })
        .collect();
    // adj(A)_{ik} = (-1)^{i+k} det(A without row k and column i).
    (0..n)
        .map(|i| {
            let minor: Vec<Vec<OrderElement>> = (0..n)
                .filter(|&r| r != k)
                .map(|r| (0..n).filter(|&c| c != i).map(|c| a[r][c].clone()).collect())
                .collect();
            let d = det_over(order, &minor);
            if (i + k) % 2 == 0 {
                d
            } else {
                OrderElement { coords: d.coords.iter().map(|x| -x).collect() }
            }
        })
        .collect()
}

/// The ideal of intersection numbers of the eigenvector of `M` with
/// coordinate forms: generated by the entries of a kernel vector of
/// `M - xi I` taken from the adjugate, normalised to first entry 1.
pub fn intersection_ideal(m: &IntMatrix) -> Result<FracIdeal> {
    let order = order_of(m)?;
    intersection_ideal_in(order, m)
}

pub fn intersection_ideal_in(order: Arc<Order>, m: &IntMatrix) -> Result<FracIdeal> {
    let n = m.nrows();
    if n == 1 {
        return Ok(FracIdeal::unit(order));
    }
    let col = (0..n)
        .map(|k| adjugate_column(&order, m, k))
        .find(|c| c.iter().any(|e| !e.is_zero()))
        .ok_or_else(|| Error::ReduciblePolynomial(m.charpoly().to_string()))?;
    let first = order.to_field(&col[0]);
    let inv = order.inverse(&first)?;
    let gens: Vec<FieldElement> = col.iter().map(|e| order.mul_field(&order.to_field(e), &inv)).collect();
    Ok(FracIdeal::from_generators(order, &gens)?.primitive())
}
