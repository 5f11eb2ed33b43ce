//! Pell equations `a^2 - D b^2 = ±4` via the continued fraction of `sqrt(D)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Minimal positive solution of `a^2 - d b^2 = 4`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PellSolution {
    pub d: BigInt,
    pub a: BigInt,
    pub b: BigInt,
    pub minimal: bool,
}

/// Fundamental unit `(a + b sqrt(D)) / 2` of the quadratic order of
/// discriminant `D`, with `a^2 - D b^2 = 4 * norm`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalUnit {
    pub disc: BigInt,
    pub a: BigInt,
    pub b: BigInt,
    pub norm: i8,
}

pub fn is_square(n: &BigInt) -> bool {
    !n.is_negative() && {
        let r = n.sqrt();
        &r * &r == *n
    }
}

pub fn is_squarefree(n: &BigInt) -> bool {
    let n = n.abs();
    let mut p = BigInt::from(2);
    let mut m = n;
    while &p * &p <= m {
        if (&m % &p).is_zero() {
            m /= &p;
            if (&m % &p).is_zero() {
                return false;
            }
        }
        p += 1;
    }
    true
}

/// Least `(x, y)` with `x, y > 0` and `x^2 - n y^2 = ±1`, plus the sign.
///
/// The first convergent of `sqrt(n)` hitting ±1 is the fundamental unit of
/// `Z[sqrt(n)]`.
fn cf_unit(n: &BigInt) -> (BigInt, BigInt, i8) {
    let a0 = n.sqrt();
    let (mut m, mut d, mut a) = (BigInt::zero(), BigInt::one(), a0.clone());
    let (mut p_prev, mut p) = (BigInt::one(), a0.clone());
    let (mut q_prev, mut q) = (BigInt::zero(), BigInt::one());
    loop {
        let v = &p * &p - n * &q * &q;
        if v.is_one() {
            return (p, q, 1);
        }
        if v == BigInt::from(-1) {
            return (p, q, -1);
        }
        m = &d * &a - &m;
        d = (n - &m * &m) / &d;
        a = (&a0 + &m) / &d;
        let p_next = &a * &p + &p_prev;
        let q_next = &a * &q + &q_prev;
        p_prev = std::mem::replace(&mut p, p_next);
        q_prev = std::mem::replace(&mut q, q_next);
    }
}

/// Fundamental unit of the order of discriminant `disc > 0`, `disc` a
/// nonsquare congruent to 0 or 1 mod 4.
pub fn minimal_pm4(disc: &BigInt) -> Result<FundamentalUnit> {
    if !disc.is_positive() || is_square(disc) {
        return Err(Error::InvalidD(format!("{disc} is not a positive nonsquare")));
    }
    let r = disc.mod_floor(&BigInt::from(4));
    if r == BigInt::from(2) || r == BigInt::from(3) {
        return Err(Error::InvalidD(format!("{disc} is not a discriminant")));
    }
    let unit = |a: BigInt, b: BigInt, norm: i8| FundamentalUnit { disc: disc.clone(), a, b, norm };
    if r.is_zero() {
        let (x, y, s) = cf_unit(&(disc / 4));
        return Ok(unit(2 * x, y, s));
    }
    let (x1, y1, s) = cf_unit(disc);
    // The unit group of the order of discriminant D contains that of Z[sqrt(D)]
    // with index 1 or 3; in the second case eps^3 = x1 + y1 sqrt(D) with
    // 2 * y1 = b (D b^2 + 3 s).
    let target = 2 * &y1;
    let (mut lo, mut hi) = (BigInt::one(), y1.clone());
    let cubic = |b: &BigInt| b * (disc * b * b + 3 * BigInt::from(s));
    while lo < hi {
        let mid: BigInt = (&lo + &hi) / 2;
        if cubic(&mid) < target {
            lo = mid + 1;
        } else {
            hi = mid;
        }
    }
    let b = lo;
    if b.is_odd() && cubic(&b) == target {
        let a2 = disc * &b * &b + 4 * BigInt::from(s);
        if is_square(&a2) {
            let a = a2.sqrt();
            if &a * (&a * &a + 3 * disc * &b * &b) == 8 * &x1 {
                return Ok(unit(a, b, s));
            }
        }
    }
    Ok(unit(2 * x1, 2 * y1, s))
}

/// Minimal positive solution of `a^2 - d b^2 = 4` for squarefree `d > 1`.
pub fn solve_pell4(d: &BigInt) -> Result<PellSolution> {
    if d <= &BigInt::one() || is_square(d) {
        return Err(Error::InvalidD(format!("{d} must be a positive nonsquare")));
    }
    if !is_squarefree(d) {
        return Err(Error::InvalidD(format!("{d} is not squarefree")));
    }
    let four = BigInt::from(4);
    let (disc, scale) = if d.mod_floor(&four).is_one() { (d.clone(), 1) } else { (4 * d, 2) };
    let u = minimal_pm4(&disc)?;
    let (a, b) = if u.norm == 1 {
        (u.a, u.b)
    } else {
        ((&u.a * &u.a + &disc * &u.b * &u.b) / 2, &u.a * &u.b)
    };
    let b = b * scale;
    debug_assert_eq!(&a * &a - d * &b * &b, four);
    Ok(PellSolution { d: d.clone(), a, b, minimal: true })
}
