//! Deciding `x a = y b`.
//!
//! Every candidate multiplier lies in the colon lattice `(b : a)` and has
//! norm `N(b) / N(a)` up to sign. In degree 2 the search is reduced modulo
//! the unit group, which makes the answer exact; in higher degree a bounded
//! box search returns `Unknown` when it runs out.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{reduce, FracIdeal};
use crate::order::{FieldElement, OrderElement};
use crate::par::{self, Execution};
use crate::quadratic::pell::{is_square, minimal_pm4};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Equivalence {
    /// `z * a = b`, verified exactly.
    Equivalent(FieldElement),
    Inequivalent,
    Unknown,
}

impl Equivalence {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, Equivalence::Equivalent(_))
    }

    pub fn is_certified(&self) -> bool {
        !matches!(self, Equivalence::Unknown)
    }
}

/// Limits for the higher-degree box search.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchBudget {
    /// Maximal absolute coefficient on the colon lattice basis.
    pub radius: u32,
    pub execution: Execution,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget { radius: 4, execution: Execution::default() }
    }
}

impl SearchBudget {
    pub fn with_radius(radius: u32) -> Self {
        SearchBudget { radius: radius.max(1), ..Self::default() }
    }
}

pub fn is_equivalent(a: &FracIdeal, b: &FracIdeal, budget: &SearchBudget) -> Equivalence {
    if a == b {
        return Equivalence::Equivalent(a.order().field_int(&BigInt::one()));
    }
    let n = a.degree();
    let c = b.colon(a);
    let t = b.norm() / a.norm();
    let target = t * BigRational::from_integer(num_traits::pow(c.den().clone(), n));
    if !target.is_integer() {
        return Equivalence::Inequivalent;
    }
    let target = target.to_integer();
    let check = |w: &[BigInt]| -> Option<FieldElement> {
        let o = a.order();
        if o.norm_int(&OrderElement { coords: w.to_vec() }).abs() != target {
            return None;
        }
        let z = FieldElement {
            coords: w.iter().map(|x| BigRational::new(x.clone(), c.den().clone())).collect(),
        };
        (a.scale(&z).ok()? == *b).then_some(z)
    };
    if n == 1 {
        // Z[xi] = Z and every lattice is principal.
        let w = vec![c.hnf().row(0)[0].clone()];
        return check(&w).map_or(Equivalence::Inequivalent, Equivalence::Equivalent);
    }
    if n == 2 {
        return match quadratic_search(&c, &target, &check) {
            Some(z) => Equivalence::Equivalent(z),
            None => Equivalence::Inequivalent,
        };
    }
    if a.multiplier_ring() != b.multiplier_ring() {
        return Equivalence::Inequivalent;
    }
    match box_search(&c, budget, &check) {
        Some(z) => Equivalence::Equivalent(z),
        None => Equivalence::Unknown,
    }
}

/// Every `w = u + v xi` in the colon lattice with `N(w) = ±T`, up to units.
///
/// With `chi = X^2 + pX + q` and `D = p^2 - 4q`, `4 N(w) = (2u - pv)^2 - D v^2`.
/// For `D < 0` this bounds `v` directly. For `D > 0` multiply by a power of
/// the fundamental unit `eps` so that the ratio of the two embeddings lies in
/// `[1/eps, eps]`; then `D v^2 <= T (eps + 1/eps + 2)`.
fn quadratic_search<F>(c: &FracIdeal, target: &BigInt, check: &F) -> Option<FieldElement>
where
    F: Fn(&[BigInt]) -> Option<FieldElement>,
{
    let chi = c.order().chi().coeffs();
    let (p, q) = (&chi[1], &chi[2]);
    let disc: BigInt = p * p - 4 * q;
    let (v_max_sq, signs): (BigInt, &[i64]) = if disc.is_negative() {
        ((4 * target) / -&disc, &[1])
    } else {
        let unit = minimal_pm4(&disc).expect("discriminant of an irreducible quadratic");
        let x = if unit.norm == 1 { unit.a.clone() } else { &unit.b * (disc.sqrt() + 1) };
        ((target * (x + 2)) / &disc, &[1, -1])
    };
    let v_max = v_max_sq.sqrt();
    let h = c.hnf();
    let (h11, h12, h22) = (&h.row(0)[0], &h.row(0)[1], &h.row(1)[1]);
    let mut v = BigInt::zero();
    while v <= v_max {
        for &s in signs {
            let delta = &disc * &v * &v + 4 * s * target;
            if delta.is_negative() || !is_square(&delta) {
                continue;
            }
            let r = delta.sqrt();
            for r in [r.clone(), -r] {
                let num = p * &v + &r;
                if num.is_odd() {
                    continue;
                }
                let u: BigInt = num / 2;
                // (u, v) = j (h11, h12) + k (0, h22)
                let (j, rem) = u.div_rem(h11);
                if !rem.is_zero() || !(&v - &j * h12).is_multiple_of(h22) {
                    continue;
                }
                if let Some(z) = check(&[u, v.clone()]) {
                    return Some(z);
                }
            }
        }
        v += 1;
    }
    None
}

/// Points `sum c_i b_i` of the colon lattice with `max |c_i| <= radius`,
/// scanned shell by shell, `b` an LLL-reduced basis.
fn box_search<F>(c: &FracIdeal, budget: &SearchBudget, check: &F) -> Option<FieldElement>
where
    F: Fn(&[BigInt]) -> Option<FieldElement> + Sync,
{
    let n = c.degree();
    let hnf = c.hnf();
    let rows: Vec<Vec<BigInt>> = (0..n).map(|i| hnf.row(i).to_vec()).collect();
    let basis = reduce::lll(&rows, &reduce::complex_roots(c.order().chi()));
    let radius = budget.radius as i64;
    for shell in 1..=radius {
        let side = 2 * shell + 1;
        let total = side.pow(n as u32 - 1);
        // Fix the first coordinate per task, enumerate the rest inside the box.
        let firsts: Vec<i64> = (-shell..=shell).collect();
        let found = par::find_map_first(budget.execution, &firsts, |&c0| {
            for idx in 0..total {
                let mut coeffs = Vec::with_capacity(n);
                coeffs.push(c0);
                let mut rest = idx;
                for _ in 1..n {
                    coeffs.push(rest % side - shell);
                    rest /= side;
                }
                if coeffs.iter().map(|x| x.abs()).max() != Some(shell) {
                    continue;
                }
                // Fix the sign: the first nonzero coefficient is positive.
                if coeffs.iter().find(|x| **x != 0).is_some_and(|x| *x < 0) {
                    continue;
                }
                let mut w = vec![BigInt::zero(); n];
                for (i, ci) in coeffs.iter().enumerate() {
                    if *ci != 0 {
                        let ci = BigInt::from(*ci);
                        for (wj, hj) in w.iter_mut().zip(&basis[i]) {
                            *wj += &ci * hj;
                        }
                    }
                }
                if let Some(z) = check(&w) {
                    return Some(z);
                }
            }
            None
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use std::sync::Arc;

    use super::*;
    use crate::exactla::MonicIntPoly;
    use crate::order::Order;

    fn order(c: &[i64]) -> Arc<Order> {
        Arc::new(Order::new(MonicIntPoly::from_i64(c).unwrap()).unwrap())
    }

    fn ideal(o: &Arc<Order>, gens: &[&[(i64, i64)]]) -> FracIdeal {
        let g: Vec<FieldElement> = gens.iter().map(|c| FieldElement::from_ratios(c)).collect();
        FracIdeal::from_generators(o.clone(), &g).unwrap()
    }

    #[test]
    fn sqrt10_prime_is_not_principal() {
        let o = order(&[1, 0, -10]);
        let one = FracIdeal::unit(o.clone());
        let p = ideal(&o, &[&[(2, 1), (0, 1)], &[(0, 1), (1, 1)]]);
        let budget = SearchBudget::default();
        assert_eq!(is_equivalent(&one, &p, &budget), Equivalence::Inequivalent);
        assert_eq!(is_equivalent(&p, &one, &budget), Equivalence::Inequivalent);
        assert!(is_equivalent(&one, &one, &budget).is_equivalent());
    }

    #[test]
    fn principal_scaling_is_found() {
        let o = order(&[1, 0, -10]);
        let p = ideal(&o, &[&[(2, 1), (0, 1)], &[(0, 1), (1, 1)]]);
        let x = FieldElement::from_ratios(&[(7, 3), (-2, 1)]);
        let xp = p.scale(&x).unwrap();
        match is_equivalent(&xp, &p, &SearchBudget::default()) {
            Equivalence::Equivalent(z) => assert_eq!(xp.scale(&z).unwrap(), p),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn imaginary_quadratic() {
        // h(-20) = 2: (2, 1 + sqrt(-5)) is not principal.
        let o = order(&[1, 0, 5]);
        let one = FracIdeal::unit(o.clone());
        let p = ideal(&o, &[&[(2, 1), (0, 1)], &[(1, 1), (1, 1)]]);
        assert_eq!(is_equivalent(&one, &p, &SearchBudget::default()), Equivalence::Inequivalent);
        assert!(is_equivalent(&p.mul(&p), &one, &SearchBudget::default()).is_equivalent());
    }

    #[test]
    fn cubic_principal_found() {
        let o = order(&[1, 0, -1, -1]);
        let one = FracIdeal::unit(o.clone());
        let x = FieldElement::from_ratios(&[(2, 1), (1, 1), (-1, 1)]);
        let px = FracIdeal::principal(o, &x).unwrap();
        assert!(is_equivalent(&one, &px, &SearchBudget::default()).is_equivalent());
    }
}
