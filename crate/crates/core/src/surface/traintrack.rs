//! Transition matrices of train tracks: characteristic polynomial, weight
//! vector ideal class and the Perron root.

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactla::{IntMatrix, MonicIntPoly, QPoly};
use crate::ideal::FracIdeal;
use crate::latimer::{eigen_ideal, eigenvector, Eigenvector};
use crate::order::Order;

/// At a switch the incoming weights sum to the outgoing weights. Arcs may
/// repeat.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Switch {
    pub incoming: Vec<usize>,
    pub outgoing: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrainTrack {
    pub transition: IntMatrix,
    pub switches: Vec<Switch>,
}

impl TrainTrack {
    pub fn new(transition: IntMatrix, switches: Vec<Switch>) -> Result<Self> {
        if !transition.is_square() {
            return Err(Error::DimensionMismatch("transition matrix must be square".into()));
        }
        if transition.entries().any(Signed::is_negative) {
            return Err(Error::InvalidInput("transition matrix has negative entries".into()));
        }
        let n = transition.nrows();
        if switches
            .iter()
            .any(|s| s.incoming.iter().chain(&s.outgoing).any(|&a| a >= n))
        {
            return Err(Error::InvalidInput("switch refers to a missing arc".into()));
        }
        Ok(TrainTrack { transition, switches })
    }

    pub fn arcs(&self) -> usize {
        self.transition.nrows()
    }
}

/// Rational interval `[lo, hi]` containing the largest real root.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PerronInterval {
    pub lo: BigRational,
    pub hi: BigRational,
}

impl PerronInterval {
    pub fn approx(&self) -> f64 {
        let mid = (&self.lo + &self.hi) / BigRational::from_integer(BigInt::from(2));
        mid.to_f64().unwrap_or(f64::NAN)
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }
}

#[derive(Clone, Debug)]
pub struct TrainTrackClass {
    pub chi: MonicIntPoly,
    pub weights: Eigenvector,
    pub ideal: FracIdeal,
    pub stretch: PerronInterval,
}

/// Some power of `A` is entrywise positive; by Wielandt it suffices to
/// look at `A^((n-1)^2 + 1)`.
pub fn is_primitive(a: &IntMatrix) -> bool {
    let n = a.nrows();
    let pattern: Vec<Vec<bool>> = (0..n).map(|i| (0..n).map(|j| a[(i, j)].is_positive()).collect()).collect();
    let mut p = pattern.clone();
    let k = (n - 1) * (n - 1) + 1;
    for _ in 1..k {
        p = (0..n)
            .map(|i| (0..n).map(|j| (0..n).any(|l| p[i][l] && pattern[l][j])).collect())
            .collect();
    }
    p.iter().all(|r| r.iter().all(|&x| x))
}

fn sturm_chain(p: &QPoly) -> Vec<QPoly> {
    let mut chain = vec![p.clone(), p.derivative()];
    while !chain.last().expect("nonempty").is_zero() {
        let k = chain.len();
        let (_, r) = chain[k - 2].div_rem(&chain[k - 1]).expect("nonzero divisor");
        chain.push(r.neg());
    }
    chain.pop();
    chain
}

fn sign_changes(chain: &[QPoly], x: &BigRational) -> usize {
    let signs: Vec<i8> = chain
        .iter()
        .map(|q| {
            let v = q.eval(x);
            if v.is_positive() {
                1
            } else if v.is_negative() {
                -1
            } else {
                0
            }
        })
        .filter(|&s| s != 0)
        .collect();
    signs.windows(2).filter(|w| w[0] != w[1]).count()
}

/// Largest real root of a squarefree polynomial, isolated by Sturm-certified
/// bisection to width at most `tol`.
pub fn largest_real_root(p: &MonicIntPoly, tol: &BigRational) -> Option<PerronInterval> {
    let q = p.to_qpoly();
    let chain = sturm_chain(&q);
    let bound = p.coeffs().iter().skip(1).map(|c| c.abs()).max().unwrap_or_default() + BigInt::one();
    let mut lo = BigRational::from_integer(-bound.clone());
    let mut hi = BigRational::from_integer(bound);
    let v_hi = sign_changes(&chain, &hi);
    if sign_changes(&chain, &lo) == v_hi {
        return None;
    }
    let two = BigRational::from_integer(BigInt::from(2));
    // Invariant: the largest root lies in (lo, hi].
    while &(&hi - &lo) > tol {
        let mid = (&lo + &hi) / &two;
        if sign_changes(&chain, &mid) > v_hi {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Some(PerronInterval { lo, hi })
}

pub fn default_tolerance() -> BigRational {
    BigRational::new(BigInt::one(), BigInt::from(10u64).pow(8))
}

pub fn traintrack_class(t: &TrainTrack) -> Result<TrainTrackClass> {
    let m = &t.transition;
    let chi = m.charpoly();
    let order = Arc::new(Order::new(chi.clone())?);
    if !is_primitive(m) {
        return Err(Error::NotPrimitive);
    }
    let weights = eigenvector(&order, m)?;
    for (i, s) in t.switches.iter().enumerate() {
        let mut balance = vec![BigInt::zero(); order.degree()];
        for &a in &s.incoming {
            for (b, w) in balance.iter_mut().zip(&weights.entries[a].coords) {
                *b += w;
            }
        }
        for &a in &s.outgoing {
            for (b, w) in balance.iter_mut().zip(&weights.entries[a].coords) {
                *b -= w;
            }
        }
        if balance.iter().any(|x| !x.is_zero()) {
            return Err(Error::SwitchViolation(i));
        }
    }
    let ideal = eigen_ideal(order, &weights)?;
    let stretch = largest_real_root(&chi, &default_tolerance())
        .ok_or_else(|| Error::InvalidInput("characteristic polynomial has no real root".into()))?;
    Ok(TrainTrackClass { chi, weights, ideal, stretch })
}

/// Irreducible polynomials share a root iff they are equal, so stretch
/// factors of two classified tracks agree iff `gcd(chi_1, chi_2)` is
/// nonconstant.
pub fn same_stretch_factor(a: &TrainTrackClass, b: &TrainTrackClass) -> bool {
    a.chi.to_qpoly().gcd(&b.chi.to_qpoly()).degree().unwrap_or(0) > 0
}
