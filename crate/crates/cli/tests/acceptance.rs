//! Acceptance checks, one line per criterion. Runs as a plain binary so the
//! time limits are measured on the checks alone.

use std::sync::Arc;
use std::time::{Duration, Instant};

use latimer_core::exactla::{IntMatrix, MonicIntPoly};
use latimer_core::ideal::{class_monoid, class_monoid_with, default_bound, is_equivalent, MonoidOptions};
use latimer_core::latimer::{classify, ideal_to_matrix, matrix_to_ideal, matrix_to_ideal_in, oracle_count_classes};
use latimer_core::quadratic::{is_squarefree, maximal_order_poly, solve_pell4};
use latimer_core::surface::{
    bound_class_number, bound_max_index, bound_rank, cover_genus, digit_count, intersection_ideal, lifts_as_loop,
    standard_symplectic, transvection, verify_genus3, GroupPresentation, TwoCover,
};
use latimer_core::{Equivalence, FieldElement, FracIdeal, Order, SearchBudget};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = fn() -> Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn order(c: &[i64]) -> Arc<Order> {
    Arc::new(Order::new(MonicIntPoly::from_i64(c).unwrap()).unwrap())
}

fn c1_genus3() -> Result<String, String> {
    let r = verify_genus3();
    ensure(r.rank_m_minus_i == 2 && r.ok(), || format!("{r:?}"))?;
    Ok(format!("rank(M - I6) = {}", r.rank_m_minus_i))
}

fn c2_covers() -> Result<String, String> {
    let base = GroupPresentation::genus2_example();
    let s1 = TwoCover::new(base.clone(), vec![0, 1, 1, 0]).map_err(|e| e.to_string())?;
    let s2 = TwoCover::new(base.clone(), vec![0, 1, 0, 0]).map_err(|e| e.to_string())?;
    let g = (cover_genus(&s1).map_err(|e| e.to_string())?, cover_genus(&s2).map_err(|e| e.to_string())?);
    ensure(g == (3, 3), || format!("cover genera {g:?}"))?;
    let lambda = base.parse_word("gamma beta delta gamma beta alpha^-1 delta gamma beta").unwrap();
    let mu = base.parse_word("alpha beta alpha^-1 beta^-1").unwrap();
    ensure(lifts_as_loop(&lambda, &s1) && !lifts_as_loop(&lambda, &s2), || "lambda parity".into())?;
    ensure(lifts_as_loop(&mu, &s1) && lifts_as_loop(&mu, &s2), || "mu parity".into())?;
    Ok("genus 3 and 3; lambda lifts in the first cover only; mu lifts in both".into())
}

fn c3_bounds() -> Result<String, String> {
    let k = bound_max_index(2).map_err(|e| e.to_string())?;
    ensure(k == BigInt::from(168), || format!("max index {k}"))?;
    let a = bound_class_number(2).map_err(|e| e.to_string())?;
    let b = bound_class_number(2).map_err(|e| e.to_string())?;
    let fact: BigInt = (1..=168u32).map(BigInt::from).product();
    ensure(a == b && a == num_traits::pow(fact, 4), || "class number bound unstable".into())?;
    let log_digits = 4.0 * (1..=168u32).map(|i| f64::from(i).log10()).sum::<f64>();
    let digits = digit_count(&a);
    ensure(digits == log_digits.floor() as usize + 1 && digits == 1210, || format!("{digits} digits"))?;
    let r = bound_rank(2, 1).map_err(|e| e.to_string())?;
    ensure(r.to_string() == "4", || format!("rank bound {r}"))?;
    Ok(format!("168, (168!)^4 with {digits} digits, rank bound 4"))
}

fn c4_bijection() -> Result<String, String> {
    let cases: [(&[i64], usize, i64); 5] =
        [(&[1, -1, -1], 1, 10), (&[1, 3, 1], 1, 10), (&[1, 0, -10], 2, 10), (&[1, 0, -2], 1, 10), (&[1, 0, -1, -1], 1, 40)];
    let mut out = Vec::new();
    for (c, want, conj) in cases {
        let chi = MonicIntPoly::from_i64(c).unwrap();
        let oracle = oracle_count_classes(&chi, 10, conj).map_err(|e| e.to_string())?;
        let inv = classify(&chi).map_err(|e| e.to_string())?;
        ensure(oracle == want && inv.count() == oracle && inv.certified(), || {
            format!("{chi}: oracle {oracle}, classify {}, expected {want}", inv.count())
        })?;
        out.push(format!("{}", inv.count()));
    }
    Ok(format!("counts {}", out.join(", ")))
}

fn random_ideal(rng: &mut ChaCha8Rng, o: &Arc<Order>) -> FracIdeal {
    loop {
        let mut g = || FieldElement::from_ratios(&[(rng.gen_range(-20..=20), 1), (rng.gen_range(-20..=20), 1)]);
        let gens = [g(), g()];
        if let Ok(a) = FracIdeal::from_generators(o.clone(), &gens) {
            return a;
        }
    }
}

fn certified_equivalent(a: &FracIdeal, b: &FracIdeal) -> Result<(), String> {
    match is_equivalent(a, b, &SearchBudget::default()) {
        Equivalence::Equivalent(z) => ensure(a.scale(&z).map_err(|e| e.to_string())? == *b, || "bad multiplier".into()),
        other => Err(format!("{a} vs {b}: {other:?}")),
    }
}

fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> IntMatrix {
    let mut p = IntMatrix::identity(n);
    for _ in 0..rng.gen_range(1..=6) {
        let (i, j) = (rng.gen_range(0..n), rng.gen_range(0..n));
        if i != j {
            let mut e = IntMatrix::identity(n);
            e[(i, j)] = BigInt::from(rng.gen_range(-2..=2));
            p = p.mul(&e).unwrap();
        }
    }
    p
}

fn c5_round_trip() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let orders = [order(&[1, 0, -10]), order(&[1, 0, 5]), order(&[1, 0, 3])];
    for i in 0..200 {
        let o = &orders[i % 3];
        let a = random_ideal(&mut rng, o);
        let back = matrix_to_ideal_in(o.clone(), &ideal_to_matrix(&a)).map_err(|e| e.to_string())?;
        certified_equivalent(&back, &a)?;
    }
    for i in 0..200 {
        let o = &orders[i % 3];
        let m = ideal_to_matrix(&random_ideal(&mut rng, o));
        let p = random_unimodular(&mut rng, 2);
        let conj = p.mul(&m).unwrap().mul(&p.inverse_unimodular().unwrap()).unwrap();
        let (a, b) = (matrix_to_ideal(&m), matrix_to_ideal(&conj));
        certified_equivalent(&a.map_err(|e| e.to_string())?, &b.map_err(|e| e.to_string())?)?;
    }
    Ok("200 round trips and 200 conjugations, all certified".into())
}

fn c6_pell() -> Result<String, String> {
    let mut checked = 0;
    for d in 2u64..=100 {
        let big = BigInt::from(d);
        if !is_squarefree(&big) {
            continue;
        }
        let s = solve_pell4(&big).map_err(|e| e.to_string())?;
        let (a, b) = (1u64..)
            .find_map(|b| {
                let a2 = d * b * b + 4;
                let a = a2.isqrt();
                (a * a == a2).then_some((a, b))
            })
            .unwrap();
        ensure(s.a == BigInt::from(a) && s.b == BigInt::from(b), || format!("d = {d}: {} {} vs {a} {b}", s.a, s.b))?;
        checked += 1;
    }
    Ok(format!("{checked} squarefree d match the b-scan"))
}

/// Narrow class number from cycles of reduced indefinite forms, halved
/// when the fundamental unit has norm +1.
fn form_class_number(disc: i64) -> usize {
    let r = disc.isqrt();
    // Reduced: sqrt(D) - b < 2|a| < sqrt(D) + b with 0 < b < sqrt(D).
    let reduced = |a: i64, b: i64| {
        let t = 2 * a.abs();
        (t + b) * (t + b) > disc && (t <= b || (t - b) * (t - b) < disc)
    };
    let mut forms = Vec::new();
    for b in 1..=r {
        if (b * b - disc) % 4 != 0 {
            continue;
        }
        let ac = (b * b - disc) / 4;
        for a in (-ac.abs()..=ac.abs()).filter(|&a| a != 0 && ac % a == 0) {
            let c = ac / a;
            if num_integer::gcd(num_integer::gcd(a, b), c) == 1 && reduced(a, b) {
                forms.push((a, b, c));
            }
        }
    }
    let step = |(_, b, c): (i64, i64, i64)| {
        let m = 2 * c.abs();
        // b' = -b mod 2|c| in (sqrt(D) - 2|c|, sqrt(D)).
        let mut nb = (-b).rem_euclid(m);
        while nb + m <= r {
            nb += m;
        }
        (c, nb, (nb * nb - disc) / (4 * c))
    };
    let mut seen = std::collections::HashSet::new();
    let mut cycles = 0;
    for &f in &forms {
        if seen.contains(&f) {
            continue;
        }
        cycles += 1;
        let mut g = f;
        while seen.insert(g) {
            g = step(g);
        }
    }
    let unit_norm = (1i64..)
        .find_map(|b| {
            [-4i64, 4].into_iter().find_map(|s| {
                let a2 = disc * b * b + s;
                (a2 >= 0 && a2.isqrt() * a2.isqrt() == a2).then_some(s)
            })
        })
        .unwrap();
    if unit_norm == -4 {
        cycles
    } else {
        cycles / 2
    }
}

fn c7_class_numbers() -> Result<String, String> {
    let mut out = Vec::new();
    for (d, want) in [(5i64, 1usize), (10, 2), (65, 2), (79, 3)] {
        let o = Arc::new(Order::new(maximal_order_poly(&BigInt::from(d))).unwrap());
        let disc: i64 = o.disc().try_into().unwrap();
        let doubled = 2 * default_bound(&o);
        let oracle = class_monoid(o.clone(), Some(doubled)).map_err(|e| e.to_string())?;
        let m = class_monoid(o, None).map_err(|e| e.to_string())?;
        let forms = form_class_number(disc);
        ensure(oracle.certified && m.certified, || format!("d = {d} uncertified"))?;
        ensure(oracle.picard_size == m.picard_size && m.picard_size == forms && forms == want, || {
            format!("d = {d}: doubled {}, default {}, forms {forms}, expected {want}", oracle.picard_size, m.picard_size)
        })?;
        out.push(format!("h({d}) = {}", m.picard_size));
    }
    Ok(out.join(", "))
}

fn c8_intersection() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for n in [2usize, 3] {
        let mut done = 0;
        while done < 100 {
            let rows: Vec<Vec<BigInt>> =
                (0..n).map(|_| (0..n).map(|_| BigInt::from(rng.gen_range(-6..=6))).collect()).collect();
            let m = IntMatrix::from_rows(rows).unwrap();
            if !m.charpoly().is_irreducible(6).unwrap() {
                continue;
            }
            let a = intersection_ideal(&m).map_err(|e| e.to_string())?;
            let b = matrix_to_ideal(&m).map_err(|e| e.to_string())?;
            ensure(a.lattice() == b.lattice(), || format!("{m}: {a} vs {b}"))?;
            done += 1;
        }
    }
    Ok("100 matrices of size 2 and 100 of size 3".into())
}

fn c9_transvections() -> Result<String, String> {
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    let mut vec = |g: usize| loop {
        let c: Vec<BigInt> = (0..2 * g).map(|_| BigInt::from(rng.gen_range(-9..=9))).collect();
        if c.iter().any(|x| !x.is_zero()) {
            return c;
        }
    };
    for i in 0..100 {
        let g = 1 + i % 3;
        let j = standard_symplectic(g);
        let id = IntMatrix::identity(2 * g);
        let t = transvection(&j, &vec(g)).map_err(|e| e.to_string())?;
        let u = transvection(&j, &vec(g)).map_err(|e| e.to_string())?;
        ensure(t.det().is_one() && t.sub(&id).unwrap().rank() == 1, || format!("{t}"))?;
        ensure(t.mul(&u).unwrap().sub(&id).unwrap().rank() <= 2, || "composition rank".into())?;
    }
    Ok("100 transvections and compositions".into())
}

fn fundamental(d: i64) -> bool {
    let sf = |n: i64| (2..).take_while(|p| p * p <= n.abs()).all(|p| n % (p * p) != 0);
    match d.rem_euclid(4) {
        1 => d != 1 && sf(d),
        0 => matches!((d / 4).rem_euclid(4), 2 | 3) && sf(d / 4),
        _ => false,
    }
}

fn c10_performance() -> Result<String, String> {
    let mut count = 0;
    for d in (-200i64..=200).filter(|&d| fundamental(d)) {
        let c = if d.rem_euclid(4) == 1 { [1, -1, (1 - d) / 4] } else { [1, 0, -d / 4] };
        let m = class_monoid_with(order(&c), &MonoidOptions::default()).map_err(|e| e.to_string())?;
        ensure(m.certified && m.size() == m.picard_size, || format!("disc {d}: {} classes, certified {}", m.size(), m.certified))?;
        count += 1;
    }
    Ok(format!("{count} maximal orders, no Unknown verdicts"))
}

fn cli_matrix() -> Vec<u8> {
    let dir = std::env::temp_dir().join(format!("latimer-acceptance-{}", std::process::id()));
    let track = dir.join("track.json");
    std::fs::create_dir_all(&dir).unwrap();
    std::fs::write(&track, r#"{"transition": {"n": 2, "rows": [["2", "1"], ["1", "1"]]}}"#).unwrap();
    let cache = dir.join("cache");
    let (cache, track) = (cache.to_str().unwrap().to_string(), track.to_str().unwrap().to_string());
    let commands: Vec<Vec<&str>> = vec![
        vec!["classify", "--poly", "1,-1,-1"],
        vec!["classify", "--poly", "1,0,-10", "--oracle", "6,6"],
        vec!["classify", "--poly", "1,0,-1"],
        vec!["classify", "--poly", "1,0,-1,-1", "--format", "json"],
        vec!["icm", "--poly", "1,0,3"],
        vec!["icm", "--poly", "1,0,-79", "--cache-dir", &cache],
        vec!["icm", "--poly", "1,0,-79", "--cache-dir", &cache],
        vec!["conjugate", "--mat-a", "0,10;1,0", "--mat-b", "0,2;5,0"],
        vec!["conjugate", "--mat-a", "1,1;1,0", "--mat-b", "0,1;1,1"],
        vec!["pell", "--d", "5"],
        vec!["pell", "--d", "61", "--format", "json"],
        vec!["mw", "--count", "6"],
        vec!["bounds", "--genus", "2"],
        vec!["verify-example"],
        vec!["cover", "--genus", "2", "--hom", "0,1,1,0"],
        vec!["ttclass", "--file", &track],
    ];
    let mut report = Vec::new();
    for c in &commands {
        let mut out = Vec::new();
        let mut err = Vec::new();
        let code = latimer_cli::run(std::iter::once("latimer").chain(c.iter().copied()), &mut out, &mut err);
        report.extend(format!("$ {}\nexit {code}\n", c.join(" ")).into_bytes());
        report.extend(out);
        report.extend(err);
    }
    std::fs::remove_dir_all(&dir).ok();
    report
}

fn c11_determinism() -> Result<String, String> {
    let (a, b) = (cli_matrix(), cli_matrix());
    ensure(a == b, || "reports differ between runs".into())?;
    Ok(format!("{} bytes, identical", a.len()))
}

fn main() {
    let checks: [(u32, &str, Check, u64); 11] = [
        (1, "genus 3 example", c1_genus3, 1),
        (2, "double covers", c2_covers, 1),
        (3, "genus 2 bounds", c3_bounds, 1),
        (4, "matrix/ideal bijection", c4_bijection, 300),
        (5, "round trips", c5_round_trip, 120),
        (6, "Pell solutions", c6_pell, 30),
        (7, "quadratic class numbers", c7_class_numbers, 300),
        (8, "intersection ideals", c8_intersection, 60),
        (9, "transvections", c9_transvections, 10),
        (10, "quadratic performance", c10_performance, 60),
        (11, "CLI determinism", c11_determinism, 600),
    ];
    let mut failed = 0;
    for (id, name, f, limit) in checks {
        let t = Instant::now();
        let r = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let elapsed = t.elapsed();
        let timely = elapsed <= Duration::from_secs(limit);
        let (status, detail) = match &r {
            Ok(d) if timely => ("PASS", d.clone()),
            Ok(d) => ("FAIL", format!("over the {limit} s limit: {d}")),
            Err(e) => ("FAIL", e.clone()),
        };
        if status == "FAIL" {
            failed += 1;
        }
        println!("criterion {id:>2} {status} {:>8.3}s / {limit}s  {name}: {detail}", elapsed.as_secs_f64());
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
