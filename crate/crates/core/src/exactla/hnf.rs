//! Row Hermite normal form.
//!
//! Convention used throughout the crate: basis vectors are rows, the basis
//! matrix is upper triangular with positive pivots, and every entry above a
//! pivot lies in `[0, pivot)`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::exactla::matrix::IntMatrix;

/// Full-rank lattice in `Z^n` given by its row HNF basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HnfBasis {
    rows: IntMatrix,
}

impl HnfBasis {
    /// Wraps a matrix already in HNF; checks the shape conditions.
    pub fn from_hnf_matrix(m: IntMatrix) -> Result<Self> {
        if !is_hnf(&m) {
            return Err(Error::InvalidInput(format!("{m} is not in Hermite normal form")));
        }
        Ok(HnfBasis { rows: m })
    }

    pub fn identity(n: usize) -> Self {
        HnfBasis { rows: IntMatrix::identity(n) }
    }

    pub fn dim(&self) -> usize {
        self.rows.nrows()
    }

    pub fn matrix(&self) -> &IntMatrix {
        &self.rows
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        self.rows.row(i)
    }

    /// Index of the lattice in `Z^n`.
    pub fn det(&self) -> BigInt {
        (0..self.dim()).map(|i| self.rows[(i, i)].clone()).product()
    }

    /// gcd of all entries.
    pub fn content(&self) -> BigInt {
        self.rows.entries().fold(BigInt::zero(), |acc, x| acc.gcd(x))
    }

    /// Integer coordinates of `v` in this basis, if `v` lies in the lattice.
    pub fn coordinates(&self, v: &[BigInt]) -> Option<Vec<BigInt>> {
        let n = self.dim();
        debug_assert_eq!(v.len(), n);
        let mut r = v.to_vec();
        let mut coords = Vec::with_capacity(n);
        for i in 0..n {
            let (q, rem) = r[i].div_rem(&self.rows[(i, i)]);
            if !rem.is_zero() {
                return None;
            }
            if !q.is_zero() {
                for j in i..n {
                    r[j] -= &q * &self.rows[(i, j)];
                }
            }
            coords.push(q);
        }
        Some(coords)
    }

    pub fn contains(&self, v: &[BigInt]) -> bool {
        self.coordinates(v).is_some()
    }

    /// `self` divided entrywise by `k`, which must divide the content.
    pub fn div_exact(&self, k: &BigInt) -> HnfBasis {
        let rows = self.rows.to_rows();
        let m = rows
            .into_iter()
            .map(|r| r.into_iter().map(|x| x / k).collect())
            .collect();
        HnfBasis { rows: IntMatrix::from_rows(m).expect("square") }
    }

    pub fn scale(&self, k: &BigInt) -> HnfBasis {
        debug_assert!(k.is_positive());
        HnfBasis { rows: self.rows.scale(k) }
    }

    /// `det * B^{-1}`, exact, where `B` is this basis matrix.
    pub fn scaled_inverse(&self) -> IntMatrix {
        let n = self.dim();
        let det = self.det();
        let mut x = IntMatrix::zeros(n, n);
        // B X = det I, solved column by column by back substitution.
        for col in 0..n {
            for i in (0..n).rev() {
                let mut acc = if i == col { det.clone() } else { BigInt::zero() };
                for j in i + 1..n {
                    acc -= &self.rows[(i, j)] * &x[(j, col)];
                }
                x[(i, col)] = acc / &self.rows[(i, i)];
            }
        }
        x
    }
}

pub fn is_hnf(m: &IntMatrix) -> bool {
    if !m.is_square() {
        return false;
    }
    let n = m.nrows();
    for i in 0..n {
        if !m[(i, i)].is_positive() {
            return false;
        }
        for j in 0..i {
            if !m[(i, j)].is_zero() {
                return false;
            }
        }
        for k in 0..i {
            let x = &m[(k, i)];
            if x.is_negative() || x >= &m[(i, i)] {
                return false;
            }
        }
    }
    true
}

/// Row echelon Hermite form of the lattice spanned by `rows` (each of length
/// `ncols`). Zero rows are dropped; the result has one row per pivot.
pub fn hnf_echelon(rows: &[Vec<BigInt>], ncols: usize) -> Vec<Vec<BigInt>> {
    let mut a: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|r| r.iter().any(|x| !x.is_zero()))
        .cloned()
        .collect();
    let m = a.len();
    let mut r = 0;
    for c in 0..ncols {
        if r == m {
            break;
        }
        loop {
            let piv = (r..m)
                .filter(|&i| !a[i][c].is_zero())
                .min_by(|&i, &j| a[i][c].abs().cmp(&a[j][c].abs()));
            let Some(p) = piv else { break };
            a.swap(r, p);
            let mut clean = true;
            for i in r + 1..m {
                if a[i][c].is_zero() {
                    continue;
                }
                let q = a[i][c].div_floor(&a[r][c]);
                let (head, tail) = a.split_at_mut(i);
                let pivot_row = &head[r];
                for (x, y) in tail[0][c..].iter_mut().zip(&pivot_row[c..]) {
                    *x -= &q * y;
                }
                if !tail[0][c].is_zero() {
                    clean = false;
                }
            }
            if clean {
                break;
            }
        }
        if a.get(r).is_none_or(|row| row[c].is_zero()) {
            continue;
        }
        if a[r][c].is_negative() {
            for x in a[r].iter_mut() {
                *x = -&*x;
            }
        }
        for i in 0..r {
            let q = a[i][c].div_floor(&a[r][c]);
            if q.is_zero() {
                continue;
            }
            let (head, tail) = a.split_at_mut(r);
            for (x, y) in head[i][c..].iter_mut().zip(&tail[0][c..]) {
                *x -= &q * y;
            }
        }
        r += 1;
    }
    a.truncate(r);
    a
}

/// HNF basis of the full-rank lattice spanned by `rows` in `Z^n`.
pub fn hnf(rows: &[Vec<BigInt>], n: usize) -> Result<HnfBasis> {
    let e = hnf_echelon(rows, n);
    if e.len() < n {
        return Err(Error::RankDeficient { rank: e.len(), expected: n });
    }
    // Full rank and echelon with n rows means pivots sit on the diagonal.
    Ok(HnfBasis { rows: IntMatrix::from_rows(e)? })
}

pub fn gcd_all<'a>(xs: impl IntoIterator<Item = &'a BigInt>) -> BigInt {
    xs.into_iter().fold(BigInt::zero(), |acc, x| acc.gcd(x))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> Vec<BigInt> {
        x.iter().map(|&a| BigInt::from(a)).collect()
    }

    #[test]
    fn examples() {
        let h = hnf(&[v(&[2, 0]), v(&[0, 2]), v(&[1, 1])], 2).unwrap();
        assert_eq!(h.matrix(), &IntMatrix::from_i64(&[&[1, 1], &[0, 2]]));
        let h = hnf(&[v(&[0, 10]), v(&[1, 0])], 2).unwrap();
        assert_eq!(h.matrix(), &IntMatrix::from_i64(&[&[1, 0], &[0, 10]]));
        let id: Vec<_> = IntMatrix::identity(3).to_rows();
        assert_eq!(hnf(&id, 3).unwrap(), HnfBasis::identity(3));
    }

    #[test]
    fn rank_deficient() {
        let e = hnf(&[v(&[1, 2]), v(&[2, 4])], 2).unwrap_err();
        assert_eq!(e, Error::RankDeficient { rank: 1, expected: 2 });
    }

    #[test]
    fn membership_and_inverse() {
        let h = hnf(&[v(&[4, 1]), v(&[0, 3])], 2).unwrap();
        assert!(h.contains(&v(&[4, 1])));
        assert!(h.contains(&v(&[0, 3])));
        assert!(!h.contains(&v(&[1, 0])));
        let inv = h.scaled_inverse();
        let prod = h.matrix().mul(&inv).unwrap();
        assert_eq!(prod, IntMatrix::identity(2).scale(&h.det()));
    }
}
