//! Brute-force count of conjugacy classes of small integer matrices with a
//! given characteristic polynomial.
//!
//! Uses only machine-integer arithmetic and none of the ideal machinery:
//! every matrix with entries in `[-h, h]` and the right characteristic
//! polynomial is listed, linked to the conjugates by elementary unimodular
//! matrices that stay in the list, and the remaining components are merged
//! by a search for `P` with `P M = N P`, `|P_ij| <= p`, `det P = ±1`.

use std::collections::HashMap;

use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::exactla::MonicIntPoly;
use crate::par::{self, Execution};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub matrices: usize,
    /// Components after linking by elementary conjugations.
    pub components: usize,
    pub classes: usize,
    /// One matrix per class, row-major.
    pub representatives: Vec<Vec<i64>>,
}

pub fn oracle_count_classes(chi: &MonicIntPoly, entry_bound: i64, conj_bound: i64) -> Result<usize> {
    oracle_report(chi, entry_bound, conj_bound, Execution::default()).map(|r| r.classes)
}

pub fn oracle_report(chi: &MonicIntPoly, entry_bound: i64, conj_bound: i64, exec: Execution) -> Result<OracleReport> {
    let n = chi.degree();
    let c: Option<Vec<i64>> = chi.coeffs().iter().map(|x| x.to_i64()).collect();
    let c = c.ok_or_else(|| Error::BudgetExceeded("coefficients exceed machine integers".into()))?;
    if entry_bound < 0 || conj_bound < 1 {
        return Err(Error::InvalidInput("bounds must be positive".into()));
    }
    let mats = match n {
        1 => {
            let v = -c[1];
            if v.abs() <= entry_bound { vec![vec![v]] } else { vec![] }
        }
        2 => enumerate2(c[1], c[2], entry_bound),
        3 if entry_bound <= 12 => enumerate3(c[1], c[2], c[3], entry_bound, exec),
        _ => {
            return Err(Error::BudgetExceeded(format!(
                "oracle supports degree <= 3 with entry bound <= 12, got degree {n} and bound {entry_bound}"
            )))
        }
    };
    let index: HashMap<&[i64], usize> = mats.iter().enumerate().map(|(i, m)| (m.as_slice(), i)).collect();
    let mut uf = UnionFind::new(mats.len());
    let gens = generators(n);
    for (i, m) in mats.iter().enumerate() {
        for (g, ginv) in &gens {
            let conj = mul(n, &mul(n, g, m), ginv);
            if let Some(&j) = index.get(conj.as_slice()) {
                uf.union(i, j);
            }
        }
    }
    let mut reps: Vec<usize> = (0..mats.len()).filter(|&i| uf.find(i) == i).collect();
    let components = reps.len();
    // Components are merged greedily against the classes found so far.
    let mut classes: Vec<usize> = Vec::new();
    reps.sort();
    for r in reps {
        let found = par::find_map_first(exec, &classes, |&k| {
            conjugator(n, &mats[k], &mats[r], conj_bound).map(|_| ())
        });
        if found.is_none() {
            classes.push(r);
        }
    }
    Ok(OracleReport {
        matrices: mats.len(),
        components,
        classes: classes.len(),
        representatives: classes.iter().map(|&k| mats[k].clone()).collect(),
    })
}

/// `X^2 + pX + q`: trace `-p`, determinant `q`.
fn enumerate2(p: i64, q: i64, h: i64) -> Vec<Vec<i64>> {
    let t = -p;
    let mut out = Vec::new();
    for a in -h..=h {
        let d = t - a;
        if d.abs() > h {
            continue;
        }
        let bc = a * d - q;
        for b in -h..=h {
            if b == 0 {
                if bc == 0 {
                    for cc in -h..=h {
                        out.push(vec![a, 0, cc, d]);
                    }
                }
                continue;
            }
            if bc % b == 0 && (bc / b).abs() <= h {
                out.push(vec![a, b, bc / b, d]);
            }
        }
    }
    out
}

/// `X^3 + c1 X^2 + c2 X + c3`: trace `-c1`, sum of principal 2x2 minors
/// `c2`, determinant `-c3`. The minor condition is linear in `m32`.
fn enumerate3(c1: i64, c2: i64, c3: i64, h: i64, exec: Execution) -> Vec<Vec<i64>> {
    let t = -c1;
    let det = -c3;
    par::range_flat_map(exec, -h..h + 1, |m11| {
        let mut out = Vec::new();
        for m22 in -h..=h {
            let m33 = t - m11 - m22;
            if m33.abs() > h {
                continue;
            }
            let diag_minors = m11 * m22 + m11 * m33 + m22 * m33 - c2;
            for m12 in -h..=h {
                for m21 in -h..=h {
                    let s1 = diag_minors - m12 * m21;
                    for m13 in -h..=h {
                        for m31 in -h..=h {
                            let s2 = s1 - m13 * m31;
                            for m23 in -h..=h {
                                // m23 * m32 = s2
                                let mut push = |m32: i64| {
                                    let d = m11 * (m22 * m33 - m23 * m32) - m12 * (m21 * m33 - m23 * m31)
                                        + m13 * (m21 * m32 - m22 * m31);
                                    if d == det {
                                        out.push(vec![m11, m12, m13, m21, m22, m23, m31, m32, m33]);
                                    }
                                };
                                if m23 == 0 {
                                    if s2 == 0 {
                                        for m32 in -h..=h {
                                            push(m32);
                                        }
                                    }
                                } else if s2 % m23 == 0 && (s2 / m23).abs() <= h {
                                    push(s2 / m23);
                                }
                            }
                        }
                    }
                }
            }
        }
        out
    })
}

fn mul(n: usize, a: &[i64], b: &[i64]) -> Vec<i64> {
    let mut c = vec![0; n * n];
    for i in 0..n {
        for k in 0..n {
            let aik = a[i * n + k];
            if aik != 0 {
                for j in 0..n {
                    c[i * n + j] += aik * b[k * n + j];
                }
            }
        }
    }
    c
}

fn identity(n: usize) -> Vec<i64> {
    let mut m = vec![0; n * n];
    for i in 0..n {
        m[i * n + i] = 1;
    }
    m
}

/// Pairs `(G, G^{-1})` generating `GL_n(Z)`: elementary matrices, a
/// transposition and a sign change for each index.
fn generators(n: usize) -> Vec<(Vec<i64>, Vec<i64>)> {
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i != j {
                for s in [1, -1] {
                    let mut g = identity(n);
                    g[i * n + j] = s;
                    let mut gi = identity(n);
                    gi[i * n + j] = -s;
                    gens.push((g, gi));
                }
            }
        }
        let mut d = identity(n);
        d[i * n + i] = -1;
        gens.push((d.clone(), d));
        if i + 1 < n {
            let mut p = identity(n);
            p[i * n + i] = 0;
            p[(i + 1) * n + i + 1] = 0;
            p[i * n + i + 1] = 1;
            p[(i + 1) * n + i] = 1;
            gens.push((p.clone(), p));
        }
    }
    gens
}

fn det(n: usize, m: &[i64]) -> i64 {
    match n {
        1 => m[0],
        2 => m[0] * m[3] - m[1] * m[2],
        3 => {
            m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6])
                + m[2] * (m[3] * m[7] - m[4] * m[6])
        }
        _ => unreachable!("oracle degree"),
    }
}

/// Some `P` with `P M = N P`, entries in `[-p, p]` and `det P = ±1`.
///
/// The solutions of `P M = N P` form a lattice of rank `n` in `Z^(n^2)`;
/// its echelon basis turns the entry box into nested coefficient ranges.
fn conjugator(n: usize, m: &[i64], nn: &[i64], p: i64) -> Option<Vec<i64>> {
    let k = n * n;
    // Linear map on vec(P) (row-major): (PM - NP)_{ij} = sum_l P_il M_lj - N_il P_lj.
    let mut rows = vec![vec![0i64; k]; k];
    for i in 0..n {
        for j in 0..n {
            let r = &mut rows[i * n + j];
            for l in 0..n {
                r[i * n + l] += m[l * n + j];
                r[l * n + j] -= nn[i * n + l];
            }
        }
    }
    let basis = integer_kernel(&rows, k);
    let pivots: Vec<usize> = basis
        .iter()
        .map(|b| b.iter().position(|&x| x != 0).expect("nonzero basis vector"))
        .collect();
    let mut coeffs = vec![0i64; basis.len()];
    let mut point = vec![0i64; k];
    search(&basis, &pivots, 0, p, &mut coeffs, &mut point, n)
}

fn search(
    basis: &[Vec<i64>],
    pivots: &[usize],
    depth: usize,
    p: i64,
    coeffs: &mut Vec<i64>,
    point: &mut Vec<i64>,
    n: usize,
) -> Option<Vec<i64>> {
    if depth == basis.len() {
        if point.iter().all(|x| x.abs() <= p) && det(n, point).abs() == 1 {
            return Some(point.clone());
        }
        return None;
    }
    let b = &basis[depth];
    let piv = pivots[depth];
    // Entry at this pivot is fixed by the coefficients chosen so far plus c * b[piv].
    let base = point[piv];
    let step = b[piv];
    let lo = ceil_div(-p - base, step.abs());
    let hi = floor_div(p - base, step.abs());
    let sign = step.signum();
    for c0 in lo..=hi {
        let c = c0 * sign;
        for (x, y) in point.iter_mut().zip(b) {
            *x += c * y;
        }
        coeffs[depth] = c;
        let r = search(basis, pivots, depth + 1, p, coeffs, point, n);
        for (x, y) in point.iter_mut().zip(b) {
            *x -= c * y;
        }
        if r.is_some() {
            return r;
        }
    }
    None
}

fn floor_div(a: i64, b: i64) -> i64 {
    a.div_euclid(b)
}

fn ceil_div(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

/// Echelon basis of `{x in Z^k : A x = 0}` (`A` given by rows), with
/// strictly increasing pivot positions.
fn integer_kernel(a: &[Vec<i64>], k: usize) -> Vec<Vec<i64>> {
    // Column-reduce [A; I]: the identity part of zero columns spans the kernel.
    let m = a.len();
    let mut cols: Vec<Vec<i128>> = (0..k)
        .map(|j| {
            let mut c: Vec<i128> = a.iter().map(|r| r[j] as i128).collect();
            c.extend((0..k).map(|i| i128::from(i == j)));
            c
        })
        .collect();
    let mut next = 0;
    for row in 0..m {
        // Euclid on entries `row` of columns next.. to isolate one nonzero.
        loop {
            let nz: Vec<usize> = (next..k).filter(|&j| cols[j][row] != 0).collect();
            if nz.len() <= 1 {
                if let Some(&j) = nz.first() {
                    cols.swap(next, j);
                    next += 1;
                }
                break;
            }
            let piv = *nz.iter().min_by_key(|&&j| cols[j][row].abs()).unwrap();
            for &j in &nz {
                if j != piv {
                    let q = cols[j][row] / cols[piv][row];
                    let (pc, jc) = if piv < j {
                        let (l, r) = cols.split_at_mut(j);
                        (&l[piv], &mut r[0])
                    } else {
                        let (l, r) = cols.split_at_mut(piv);
                        (&r[0], &mut l[j])
                    };
                    for (x, y) in jc.iter_mut().zip(pc.iter()) {
                        *x -= q * y;
                    }
                }
            }
        }
    }
    let kernel: Vec<Vec<i128>> = cols[next..].iter().map(|c| c[m..].to_vec()).collect();
    echelon(kernel)
        .into_iter()
        .map(|r| r.into_iter().map(|x| x as i64).collect())
        .collect()
}

/// Row echelon form over the integers (same row span).
fn echelon(mut rows: Vec<Vec<i128>>) -> Vec<Vec<i128>> {
    let k = rows.first().map_or(0, Vec::len);
    let mut out = Vec::new();
    for col in 0..k {
        loop {
            let nz: Vec<usize> = (0..rows.len()).filter(|&i| rows[i][col] != 0).collect();
            if nz.len() <= 1 {
                if let Some(&i) = nz.first() {
                    out.push(rows.remove(i));
                }
                break;
            }
            let piv = *nz.iter().min_by_key(|&&i| rows[i][col].abs()).unwrap();
            let pr = rows[piv].clone();
            for &i in &nz {
                if i != piv {
                    let q = rows[i][col] / pr[col];
                    for (x, y) in rows[i].iter_mut().zip(&pr) {
                        *x -= q * y;
                    }
                }
            }
        }
    }
    out
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// The smaller root wins, keeping representatives deterministic.
    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }
}
