use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::exactla::matrix::IntMatrix;

/// Smith normal form `U * A * V = diag(d_1, ..., d_r, 0, ...)` with
/// `d_1 | d_2 | ...`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SnfResult {
    pub diagonal: Vec<BigInt>,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

impl SnfResult {
    pub fn rank(&self) -> usize {
        self.diagonal.iter().filter(|d| !d.is_zero()).count()
    }

    /// Invariant factors greater than one.
    pub fn torsion(&self) -> Vec<BigInt> {
        self.diagonal
            .iter()
            .filter(|d| d > &&BigInt::from(1))
            .cloned()
            .collect()
    }
}

pub fn snf(a: &IntMatrix) -> SnfResult {
    let (m, n) = (a.nrows(), a.ncols());
    let mut d = a.clone();
    let mut u = IntMatrix::identity(m);
    let mut v = IntMatrix::identity(n);
    let steps = m.min(n);
    for t in 0..steps {
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in t..m {
                for j in t..n {
                    if d[(i, j)].is_zero() {
                        continue;
                    }
                    if best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs()) {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return finish(d, u, v, steps);
            };
            swap_rows(&mut d, t, pi);
            swap_rows(&mut u, t, pi);
            swap_cols(&mut d, t, pj);
            swap_cols(&mut v, t, pj);

            let mut clean = true;
            for i in t + 1..m {
                if d[(i, t)].is_zero() {
                    continue;
                }
                let q = d[(i, t)].div_floor(&d[(t, t)]);
                add_row_multiple(&mut d, i, t, &q);
                add_row_multiple(&mut u, i, t, &q);
                if !d[(i, t)].is_zero() {
                    clean = false;
                }
            }
            for j in t + 1..n {
                if d[(t, j)].is_zero() {
                    continue;
                }
                let q = d[(t, j)].div_floor(&d[(t, t)]);
                add_col_multiple(&mut d, j, t, &q);
                add_col_multiple(&mut v, j, t, &q);
                if !d[(t, j)].is_zero() {
                    clean = false;
                }
            }
            if !clean {
                continue;
            }
            // Divisibility: fold an offending row into row t and retry.
            let p = d[(t, t)].clone();
            let bad = (t + 1..m).find(|&i| (t + 1..n).any(|j| !(&d[(i, j)] % &p).is_zero()));
            match bad {
                Some(i) => {
                    let neg_one = BigInt::from(-1);
                    add_row_multiple(&mut d, t, i, &neg_one);
                    add_row_multiple(&mut u, t, i, &neg_one);
                }
                None => break,
            }
        }
        if d[(t, t)].is_negative() {
            negate_row(&mut d, t);
            negate_row(&mut u, t);
        }
    }
    finish(d, u, v, steps)
}

fn finish(d: IntMatrix, u: IntMatrix, v: IntMatrix, steps: usize) -> SnfResult {
    let diagonal = (0..steps).map(|i| d[(i, i)].abs()).collect();
    let mut u = u;
    for i in 0..steps {
        if d[(i, i)].is_negative() {
            negate_row(&mut u, i);
        }
    }
    SnfResult { diagonal, u, v }
}

fn swap_rows(m: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..m.ncols() {
        let tmp = m[(a, j)].clone();
        m[(a, j)] = m[(b, j)].clone();
        m[(b, j)] = tmp;
    }
}

fn swap_cols(m: &mut IntMatrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for i in 0..m.nrows() {
        let tmp = m[(i, a)].clone();
        m[(i, a)] = m[(i, b)].clone();
        m[(i, b)] = tmp;
    }
}

/// row_dst -= q * row_src
fn add_row_multiple(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    for j in 0..m.ncols() {
        let s = &m[(src, j)] * q;
        m[(dst, j)] -= s;
    }
}

/// col_dst -= q * col_src
fn add_col_multiple(m: &mut IntMatrix, dst: usize, src: usize, q: &BigInt) {
    for i in 0..m.nrows() {
        let s = &m[(i, src)] * q;
        m[(i, dst)] -= s;
    }
}

fn negate_row(m: &mut IntMatrix, i: usize) {
    for j in 0..m.ncols() {
        m[(i, j)] = -&m[(i, j)];
    }
}
