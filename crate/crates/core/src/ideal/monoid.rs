//! The ideal class monoid by enumeration of xi-stable sublattices of
//! bounded index followed by an equivalence partition.

use std::cmp::Ordering;
use std::sync::Arc;

use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive};

use super::equivalence::{is_equivalent, Equivalence, SearchBudget};
use super::FracIdeal;
use crate::error::{Error, Result};
use crate::exactla::{HnfBasis, IntMatrix};
use crate::order::Order;
use crate::par::{self, Execution};

/// One class of the monoid; two classes are equal iff their canonical
/// representatives are.
#[derive(Clone, Debug)]
pub struct IdealClass {
    /// Integral representative of least norm, lexicographically least HNF
    /// among those.
    pub canonical: FracIdeal,
    pub invertible: bool,
    /// Number of enumerated lattices that fell into this class.
    pub members: usize,
}

impl PartialEq for IdealClass {
    fn eq(&self, other: &Self) -> bool {
        self.canonical == other.canonical
    }
}

impl Eq for IdealClass {}

#[derive(Clone, Debug)]
pub struct ClassMonoid {
    pub order: Arc<Order>,
    pub classes: Vec<IdealClass>,
    pub picard_size: usize,
    pub bound_used: u64,
    /// False when some pairwise comparison returned `Unknown`.
    pub certified: bool,
    pub lattices_enumerated: usize,
}

impl ClassMonoid {
    pub fn size(&self) -> usize {
        self.classes.len()
    }

    /// Index of the class containing `a`, if it can be decided.
    pub fn class_of(&self, a: &FracIdeal, budget: &SearchBudget) -> Option<usize> {
        let ring = a.multiplier_ring();
        self.classes.iter().position(|c| {
            c.canonical.multiplier_ring() == ring
                && is_equivalent(&c.canonical, a, budget).is_equivalent()
        })
    }
}

#[derive(Clone, Copy, Debug)]
pub struct MonoidOptions {
    pub bound: Option<u64>,
    pub budget: SearchBudget,
    pub execution: Execution,
    /// Upper limit on the number of candidate HNF matrices examined.
    pub max_candidates: u64,
}

impl Default for MonoidOptions {
    fn default() -> Self {
        MonoidOptions {
            bound: None,
            budget: SearchBudget::default(),
            execution: Execution::default(),
            max_candidates: 20_000_000,
        }
    }
}

/// `ceil(sqrt(|disc|))`, doubled above degree 2.
pub fn default_bound(order: &Order) -> u64 {
    let d = order.disc().abs();
    let mut r = d.sqrt();
    if &r * &r < d {
        r += 1;
    }
    let r = r.to_u64().unwrap_or(u64::MAX).max(1);
    if order.degree() <= 2 {
        r
    } else {
        r.saturating_mul(2)
    }
}

pub fn class_monoid(order: Arc<Order>, bound: Option<u64>) -> Result<ClassMonoid> {
    class_monoid_with(order, &MonoidOptions { bound, ..MonoidOptions::default() })
}

pub fn class_monoid_with(order: Arc<Order>, opts: &MonoidOptions) -> Result<ClassMonoid> {
    let bound = opts.bound.unwrap_or_else(|| default_bound(&order)).max(1);
    let ideals = enumerate_stable(&order, bound, opts)?;
    let lattices_enumerated = ideals.len();
    let rings = par::map(opts.execution, &ideals, |a| a.multiplier_ring());

    let mut classes: Vec<IdealClass> = Vec::new();
    let mut class_rings: Vec<usize> = Vec::new();
    let mut certified = true;
    let budget = SearchBudget { execution: opts.execution, ..opts.budget };
    for (idx, a) in ideals.iter().enumerate() {
        let candidates: Vec<usize> = (0..classes.len())
            .filter(|&k| rings[class_rings[k]] == rings[idx])
            .collect();
        let verdicts = par::map(opts.execution, &candidates, |&k| {
            is_equivalent(&classes[k].canonical, a, &budget)
        });
        match verdicts.iter().position(Equivalence::is_equivalent) {
            Some(pos) => classes[candidates[pos]].members += 1,
            None => {
                if verdicts.iter().any(|v| !v.is_certified()) {
                    certified = false;
                }
                classes.push(IdealClass {
                    canonical: a.clone(),
                    invertible: a.is_invertible(),
                    members: 1,
                });
                class_rings.push(idx);
            }
        }
    }
    let picard_size = classes.iter().filter(|c| c.invertible).count();
    Ok(ClassMonoid {
        order,
        classes,
        picard_size,
        bound_used: bound,
        certified,
        lattices_enumerated,
    })
}

/// All xi-stable sublattices of `Z^n` of index at most `bound`, sorted by
/// index and then by HNF entries.
pub(crate) fn enumerate_stable(order: &Arc<Order>, bound: u64, opts: &MonoidOptions) -> Result<Vec<FracIdeal>> {
    let n = order.degree();
    let total: u64 = (1..=bound).map(|m| hnf_count(m, n)).sum();
    if total > opts.max_candidates {
        return Err(Error::BudgetExceeded(format!(
            "{total} candidate lattices up to index {bound}"
        )));
    }
    let mut found: Vec<(u64, Vec<BigInt>, HnfBasis)> =
        par::range_flat_map(opts.execution, 1..bound as i64 + 1, |m| {
            let mut out = Vec::new();
            for diag in diagonals(m, n) {
                stable_with_diagonal(order, &diag, &mut out);
            }
            out.into_iter()
                .map(|h| (m as u64, h.matrix().entries().cloned().collect(), h))
                .collect()
        });
    found.sort_by(|x, y| match x.0.cmp(&y.0) {
        Ordering::Equal => x.1.cmp(&y.1),
        o => o,
    });
    Ok(found
        .into_iter()
        .map(|(_, _, h)| FracIdeal::from_lattice_unchecked(order.clone(), super::RatLattice::normalized(1.into(), h)))
        .collect())
}

/// Number of HNF matrices of determinant `m` (sum over diagonals of
/// `prod d_j^(j)`).
fn hnf_count(m: u64, n: usize) -> u64 {
    diagonals(m as i64, n)
        .iter()
        .map(|d| {
            d.iter()
                .enumerate()
                .fold(1u64, |acc, (j, &dj)| acc.saturating_mul((dj as u64).saturating_pow(j as u32)))
        })
        .fold(0u64, u64::saturating_add)
}

/// Ordered factorisations `m = d_1 * ... * d_n`.
fn diagonals(m: i64, n: usize) -> Vec<Vec<i64>> {
    if n == 1 {
        return vec![vec![m]];
    }
    let mut out = Vec::new();
    for d in (1..=m).filter(|d| m % d == 0) {
        for mut rest in diagonals(m / d, n - 1) {
            rest.insert(0, d);
            out.push(rest);
        }
    }
    out
}

fn stable_with_diagonal(order: &Order, diag: &[i64], out: &mut Vec<HnfBasis>) {
    let n = diag.len();
    // Free entries (i, j) with i < j range over [0, d_j).
    let slots: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let mut entries = vec![0i64; slots.len()];
    loop {
        let mut m = vec![vec![BigInt::from(0); n]; n];
        for i in 0..n {
            m[i][i] = BigInt::from(diag[i]);
        }
        for (k, &(i, j)) in slots.iter().enumerate() {
            m[i][j] = BigInt::from(entries[k]);
        }
        let basis = HnfBasis::from_hnf_matrix(IntMatrix::from_rows(m).expect("square"))
            .expect("reduced upper triangular");
        if (0..n).all(|i| basis.contains(&order.times_xi(basis.row(i)))) {
            out.push(basis);
        }
        // Odometer over the free entries.
        let mut k = 0;
        loop {
            if k == slots.len() {
                return;
            }
            entries[k] += 1;
            if entries[k] < diag[slots[k].1] {
                break;
            }
            entries[k] = 0;
            k += 1;
        }
    }
}
