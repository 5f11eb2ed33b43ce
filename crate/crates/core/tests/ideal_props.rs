use std::sync::Arc;

use latimer_core::exactla::{IntMatrix, MonicIntPoly};
use latimer_core::ideal::{is_equivalent, Equivalence, FracIdeal, SearchBudget};
use latimer_core::latimer::{ideal_to_matrix, matrix_to_ideal, matrix_to_ideal_in};
use latimer_core::order::{FieldElement, Order};
use num_bigint::BigInt;
use proptest::prelude::*;

const QUADRATICS: [&[i64]; 3] = [&[1, -1, -1], &[1, 0, -10], &[1, 0, 5]];

fn order(c: &[i64]) -> Arc<Order> {
    Arc::new(Order::new(MonicIntPoly::from_i64(c).unwrap()).unwrap())
}

fn elem(c: &[i64]) -> FieldElement {
    FieldElement::from_ratios(&c.iter().map(|&x| (x, 1)).collect::<Vec<_>>())
}

fn ideal(o: &Arc<Order>, g: &[i64]) -> Option<FracIdeal> {
    let (a, b) = g.split_at(2);
    FracIdeal::from_generators(o.clone(), &[elem(a), elem(b)]).ok()
}

fn unimodular(ops: &[(usize, usize, i64)], n: usize) -> IntMatrix {
    let mut p = IntMatrix::identity(n);
    for &(i, j, s) in ops {
        if i % n != j % n {
            let mut e = IntMatrix::identity(n);
            e[(i % n, j % n)] = BigInt::from(s);
            p = p.mul(&e).unwrap();
        }
    }
    p
}

fn equivalent(a: &FracIdeal, b: &FracIdeal) -> bool {
    match is_equivalent(a, b, &SearchBudget::default()) {
        Equivalence::Equivalent(_) => true,
        Equivalence::Inequivalent => false,
        Equivalence::Unknown => panic!("quadratic equivalence must be decided"),
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn norm_is_multiplicative_in_maximal_orders(
        k in 0usize..3,
        g in prop::collection::vec(-12i64..=12, 4),
        h in prop::collection::vec(-12i64..=12, 4),
    ) {
        let o = order(QUADRATICS[k]);
        let (Some(a), Some(b)) = (ideal(&o, &g), ideal(&o, &h)) else { return Ok(()) };
        prop_assert_eq!(a.mul(&b).norm(), a.norm() * b.norm());
        prop_assert!(a.is_invertible());
    }

    #[test]
    fn scaling_preserves_the_class(
        k in 0usize..3,
        g in prop::collection::vec(-12i64..=12, 4),
        x in prop::collection::vec(-9i64..=9, 2),
        den in 1i64..=5,
    ) {
        let o = order(QUADRATICS[k]);
        let Some(a) = ideal(&o, &g) else { return Ok(()) };
        let z = FieldElement::from_ratios(&[(x[0], den), (x[1], 1)]);
        prop_assume!(!z.is_zero());
        let b = a.scale(&z).unwrap();
        prop_assert!(equivalent(&a, &b));
        prop_assert!(equivalent(&b, &a));
    }

    #[test]
    fn equivalence_is_symmetric_and_transitive(
        k in 0usize..3,
        g in prop::collection::vec(-8i64..=8, 12),
    ) {
        let o = order(QUADRATICS[k]);
        let ids: Vec<FracIdeal> = g.chunks(4).filter_map(|c| ideal(&o, c)).collect();
        prop_assume!(ids.len() == 3);
        let e = |i: usize, j: usize| equivalent(&ids[i], &ids[j]);
        for i in 0..3 {
            for j in 0..3 {
                prop_assert_eq!(e(i, j), e(j, i));
                for l in 0..3 {
                    if e(i, j) && e(j, l) {
                        prop_assert!(e(i, l));
                    }
                }
            }
        }
    }

    #[test]
    fn ideal_matrix_round_trip(k in 0usize..3, g in prop::collection::vec(-12i64..=12, 4)) {
        let o = order(QUADRATICS[k]);
        let Some(a) = ideal(&o, &g) else { return Ok(()) };
        let m = ideal_to_matrix(&a);
        prop_assert_eq!(m.charpoly(), o.chi().clone());
        prop_assert!(equivalent(&matrix_to_ideal_in(o.clone(), &m).unwrap(), &a));
    }

    #[test]
    fn conjugation_preserves_the_class(
        k in 0usize..3,
        g in prop::collection::vec(-12i64..=12, 4),
        ops in prop::collection::vec((0usize..2, 0usize..2, -3i64..=3), 0..5),
    ) {
        let o = order(QUADRATICS[k]);
        let Some(a) = ideal(&o, &g) else { return Ok(()) };
        let m = ideal_to_matrix(&a);
        let p = unimodular(&ops, 2);
        let conj = p.mul(&m).unwrap().mul(&p.inverse_unimodular().unwrap()).unwrap();
        prop_assert!(equivalent(&matrix_to_ideal(&conj).unwrap(), &matrix_to_ideal(&m).unwrap()));
    }
}

#[test]
fn cubic_round_trip_is_found_by_search() {
    let o = order(&[1, 0, -1, -1]);
    let a = FracIdeal::from_generators(o.clone(), &[elem(&[3, 1, 0]), elem(&[0, 2, 1])]).unwrap();
    let m = ideal_to_matrix(&a);
    let b = matrix_to_ideal_in(o, &m).unwrap();
    assert!(is_equivalent(&a, &b, &SearchBudget::default()).is_equivalent());
}

#[test]
fn companion_maps_to_the_order() {
    for c in QUADRATICS {
        let o = order(c);
        let a = matrix_to_ideal_in(o.clone(), o.companion()).unwrap();
        assert_eq!(a, FracIdeal::unit(o));
    }
}
