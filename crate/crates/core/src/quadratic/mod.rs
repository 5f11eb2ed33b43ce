//! Real quadratic data for the family `d = 4n^2 + 1`: Pell solutions, the
//! matrices `[[-a, -1], [1, 0]]`, and class numbers of maximal orders.

pub mod pell;

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use crate::error::{Error, Result};
use crate::exactla::{IntMatrix, MonicIntPoly};
use crate::ideal::{class_monoid_with, MonoidOptions};
use crate::order::{Order, OrderElement};
use crate::par::{self, Execution};

pub use pell::{is_squarefree, minimal_pm4, solve_pell4, FundamentalUnit, PellSolution};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadOrderInfo {
    pub d: BigInt,
    /// Discriminant of the maximal order: `d` or `4d`.
    pub maximal_order_disc: BigInt,
    pub class_number: usize,
    pub pell: PellSolution,
    /// `[[-a, -1], [1, 0]]` with charpoly `X^2 + aX + 1`.
    pub matrix: IntMatrix,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GrowthRow {
    pub d: BigInt,
    pub class_number: usize,
    /// `sqrt(d) * log log d / log d`, for display.
    pub mw_value: f64,
}

/// The first `count` squarefree values of `4n^2 + 1`.
pub fn mw_family(count: usize) -> Vec<BigInt> {
    (1u64..)
        .map(|n| BigInt::from(4 * n * n + 1))
        .filter(is_squarefree)
        .take(count)
        .collect()
}

/// Monic polynomial generating the maximal order of `Q(sqrt d)`.
pub fn maximal_order_poly(d: &BigInt) -> MonicIntPoly {
    let coeffs = if d.mod_floor(&BigInt::from(4)).is_one() {
        vec![BigInt::one(), BigInt::from(-1), -(d - BigInt::one()) / 4]
    } else {
        vec![BigInt::one(), BigInt::from(0), -d.clone()]
    };
    MonicIntPoly::new(coeffs).expect("monic quadratic")
}

/// `[[-a, -1], [1, 0]]`.
pub fn family_matrix(a: &BigInt) -> IntMatrix {
    IntMatrix::from_rows(vec![
        vec![-a.clone(), BigInt::from(-1)],
        vec![BigInt::one(), BigInt::from(0)],
    ])
    .expect("square")
}

pub fn quad_class_number(d: &BigInt) -> Result<QuadOrderInfo> {
    quad_class_number_with(d, &MonoidOptions::default())
}

pub fn quad_class_number_with(d: &BigInt, opts: &MonoidOptions) -> Result<QuadOrderInfo> {
    let pell = solve_pell4(d)?;
    let order = Arc::new(Order::new(maximal_order_poly(d))?);
    let maximal_order_disc = order.disc().clone();
    let monoid = class_monoid_with(order, opts)?;
    if !monoid.certified {
        return Err(Error::BudgetExceeded(format!("class partition for d = {d} not certified")));
    }
    Ok(QuadOrderInfo {
        d: d.clone(),
        maximal_order_disc,
        class_number: monoid.picard_size,
        matrix: family_matrix(&pell.a),
        pell,
    })
}

/// Unit `(a + b sqrt(D)) / 2` written on the power basis of `order`.
pub fn fundamental_unit(order: &Order) -> Result<OrderElement> {
    if order.degree() != 2 {
        return Err(Error::DimensionMismatch("fundamental unit needs a quadratic order".into()));
    }
    let u = minimal_pm4(order.disc())?;
    // xi = (-p + sqrt(D)) / 2, so (a + b sqrt(D)) / 2 = (a + b p) / 2 + b xi.
    let p = &order.chi().coeffs()[1];
    Ok(OrderElement { coords: vec![(&u.a + &u.b * p) / 2, u.b] })
}

pub fn mw_value(d: &BigInt) -> f64 {
    let x = d.to_f64().unwrap_or(f64::INFINITY);
    x.sqrt() * x.ln().ln() / x.ln()
}

pub fn growth_report(count: usize, exec: Execution) -> Result<Vec<GrowthRow>> {
    let family = mw_family(count);
    let opts = MonoidOptions { execution: Execution::Sequential, ..MonoidOptions::default() };
    par::map(exec, &family, |d| {
        quad_class_number_with(d, &opts).map(|info| GrowthRow {
            d: d.clone(),
            class_number: info.class_number,
            mw_value: mw_value(d),
        })
    })
    .into_iter()
    .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_prefix() {
        let f: Vec<i64> = mw_family(6).iter().map(|x| x.to_i64().unwrap()).collect();
        assert_eq!(f[..3], [5, 17, 37]);
        assert!(f.iter().all(|d| d % 4 == 1));
        assert_eq!(f, vec![5, 17, 37, 65, 101, 145]);
    }

    #[test]
    fn family_matrix_charpoly() {
        let m = family_matrix(&BigInt::from(3));
        assert_eq!(m.charpoly(), MonicIntPoly::from_i64(&[1, 3, 1]).unwrap());
    }

    #[test]
    fn small_class_numbers() {
        for (d, h) in [(5, 1), (10, 2), (65, 2), (79, 3)] {
            let info = quad_class_number(&BigInt::from(d)).unwrap();
            assert_eq!(info.class_number, h, "d = {d}");
        }
    }

    #[test]
    fn unit_has_norm_pm1() {
        for c in [[1, -1, -1], [1, 0, -10], [1, 3, 1], [1, 0, -79]] {
            let o = Order::new(MonicIntPoly::from_i64(&c).unwrap()).unwrap();
            let u = fundamental_unit(&o).unwrap();
            let n = o.norm_int(&u);
            assert!(n == BigInt::one() || n == BigInt::from(-1));
        }
    }
}
