use latimer_core::quadratic::{is_squarefree, solve_pell4};
use num_bigint::BigInt;

/// Least `b >= 1` with `d b^2 + 4` a perfect square.
fn scan(d: u64) -> (u64, u64) {
    (1u64..)
        .find_map(|b| {
            let a2 = d * b * b + 4;
            let a = (a2 as f64).sqrt().round() as u64;
            (a * a == a2).then_some((a, b))
        })
        .unwrap()
}

#[test]
fn pell_minimal_solutions_up_to_100() {
    let mut checked = 0;
    for d in 2u64..=100 {
        let big = BigInt::from(d);
        if !is_squarefree(&big) {
            assert!(solve_pell4(&big).is_err());
            continue;
        }
        let s = solve_pell4(&big).unwrap();
        let (a, b) = scan(d);
        assert_eq!((s.a, s.b), (BigInt::from(a), BigInt::from(b)), "d = {d}");
        checked += 1;
    }
    assert_eq!(checked, 60);
}
