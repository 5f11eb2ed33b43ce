use std::fmt;
use std::ops::{Index, IndexMut};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactla::poly::MonicIntPoly;

/// Dense matrix of arbitrary-precision integers, row-major.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<BigInt>,
}

impl IntMatrix {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".into()));
        }
        Ok(IntMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        })
    }

    /// Convenience constructor for literals; panics on ragged input.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        let v = rows
            .iter()
            .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
            .collect();
        Self::from_rows(v).expect("ragged literal matrix")
    }

    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix {
            rows,
            cols,
            data: vec![BigInt::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = BigInt::one();
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    /// Dimension of a square matrix.
    pub fn dim(&self) -> usize {
        debug_assert!(self.is_square());
        self.rows
    }

    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<BigInt>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn column(&self, j: usize) -> Vec<BigInt> {
        (0..self.rows).map(|i| self[(i, j)].clone()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t[(j, i)] = self[(i, j)].clone();
            }
        }
        t
    }

    pub fn mul(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} times {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        out[(i, j)] += a * b;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn sub(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix difference".into()));
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a - b)
                .collect(),
        })
    }

    pub fn add(&self, other: &IntMatrix) -> Result<IntMatrix> {
        if self.rows != other.rows || self.cols != other.cols {
            return Err(Error::DimensionMismatch("matrix sum".into()));
        }
        Ok(IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, k: &BigInt) -> IntMatrix {
        IntMatrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|a| a * k).collect(),
        }
    }

    /// Matrix-vector product with a column vector.
    pub fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        debug_assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// Row vector times matrix.
    pub fn apply_left(&self, v: &[BigInt]) -> Vec<BigInt> {
        debug_assert_eq!(v.len(), self.rows);
        let mut out = vec![BigInt::zero(); self.cols];
        for (i, x) in v.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (o, a) in out.iter_mut().zip(self.row(i)) {
                *o += x * a;
            }
        }
        out
    }

    pub fn trace(&self) -> BigInt {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)].clone()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = &BigInt> {
        self.data.iter()
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.data.iter().map(|x| x.abs()).max().unwrap_or_default()
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return BigInt::one();
        }
        let mut a = self.to_rows();
        let mut sign = false;
        let mut prev = BigInt::one();
        for k in 0..n {
            if a[k][k].is_zero() {
                match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                    Some(i) => {
                        a.swap(k, i);
                        sign = !sign;
                    }
                    None => return BigInt::zero(),
                }
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        let d = a[n - 1][n - 1].clone();
        if sign {
            -d
        } else {
            d
        }
    }

    /// Determinant by Laplace expansion along the first row. Exponential;
    /// intended as an independent cross-check for small matrices.
    pub fn det_cofactor(&self) -> BigInt {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let cols: Vec<usize> = (0..self.cols).collect();
        self.laplace(0, &cols)
    }

    fn laplace(&self, row: usize, cols: &[usize]) -> BigInt {
        if cols.is_empty() {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        for (k, &c) in cols.iter().enumerate() {
            let a = &self[(row, c)];
            if a.is_zero() {
                continue;
            }
            let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
            let minor = self.laplace(row + 1, &rest);
            if k % 2 == 0 {
                total += a * minor;
            } else {
                total -= a * minor;
            }
        }
        total
    }

    /// Rank over the rationals, via fraction-free elimination.
    pub fn rank(&self) -> usize {
        let mut a = self.to_rows();
        let (m, n) = (self.rows, self.cols);
        let mut r = 0;
        for c in 0..n {
            let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            for i in r + 1..m {
                if a[i][c].is_zero() {
                    continue;
                }
                let (f, g) = (a[r][c].clone(), a[i][c].clone());
                for j in c..n {
                    let v = &a[i][j] * &f - &a[r][j] * &g;
                    a[i][j] = v;
                }
                let content = a[i][c..].iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
                if !content.is_zero() && !content.is_one() {
                    for x in a[i][c..].iter_mut() {
                        *x = &*x / &content;
                    }
                }
            }
            r += 1;
            if r == m {
                break;
            }
        }
        r
    }

    /// Basis of the right kernel `{x : A x = 0}` over the rationals,
    /// read off the reduced row echelon form.
    pub fn kernel_rational(&self) -> Vec<Vec<BigRational>> {
        let (m, n) = (self.rows, self.cols);
        let mut a: Vec<Vec<BigRational>> = (0..m)
            .map(|i| self.row(i).iter().map(|x| BigRational::from_integer(x.clone())).collect())
            .collect();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..n {
            if r == m {
                break;
            }
            let Some(p) = (r..m).find(|&i| !a[i][c].is_zero()) else {
                continue;
            };
            a.swap(r, p);
            let inv = a[r][c].recip();
            for x in a[r].iter_mut() {
                *x = &*x * &inv;
            }
            for i in 0..m {
                if i != r && !a[i][c].is_zero() {
                    let f = a[i][c].clone();
                    for j in 0..n {
                        let v = &a[r][j] * &f;
                        a[i][j] -= v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![BigRational::zero(); n];
                v[f] = BigRational::one();
                for (row, &pc) in pivots.iter().enumerate() {
                    v[pc] = -a[row][f].clone();
                }
                v
            })
            .collect()
    }

    /// Characteristic polynomial `det(X I - M)` by Faddeev–LeVerrier; the
    /// divisions by `k` are exact over the integers.
    pub fn charpoly(&self) -> MonicIntPoly {
        assert!(self.is_square(), "characteristic polynomial of a non-square matrix");
        let n = self.rows;
        let mut coeffs = vec![BigInt::one()];
        let mut acc = IntMatrix::zeros(n, n);
        let mut c_prev = BigInt::one();
        for k in 1..=n {
            // acc = M * acc + c_{k-1} I
            let mut next = self.mul(&acc).expect("square");
            for i in 0..n {
                next[(i, i)] += &c_prev;
            }
            acc = next;
            let t = self.mul(&acc).expect("square").trace();
            let c = -(t / BigInt::from(k));
            coeffs.push(c.clone());
            c_prev = c;
        }
        MonicIntPoly::new(coeffs).expect("leading coefficient is one")
    }

    pub fn is_unimodular(&self) -> bool {
        self.is_square() && self.det().abs().is_one()
    }

    /// Adjugate matrix, `adj(A) A = det(A) I`.
    pub fn adjugate(&self) -> IntMatrix {
        assert!(self.is_square());
        let n = self.rows;
        let mut adj = IntMatrix::zeros(n, n);
        if n == 1 {
            adj[(0, 0)] = BigInt::one();
            return adj;
        }
        for i in 0..n {
            for j in 0..n {
                let minor: Vec<Vec<BigInt>> = (0..n)
                    .filter(|&r| r != i)
                    .map(|r| {
                        (0..n)
                            .filter(|&c| c != j)
                            .map(|c| self[(r, c)].clone())
                            .collect()
                    })
                    .collect();
                let d = IntMatrix::from_rows(minor).expect("square minor").det();
                adj[(j, i)] = if (i + j) % 2 == 0 { d } else { -d };
            }
        }
        adj
    }

    /// Inverse of a unimodular matrix, exact.
    pub fn inverse_unimodular(&self) -> Result<IntMatrix> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch("inverse of non-square matrix".into()));
        }
        let d = self.det();
        if !d.abs().is_one() {
            return Err(Error::InvalidInput(format!("matrix is not unimodular (det {d})")));
        }
        Ok(self.adjugate().scale(&d))
    }

    /// The matrix with `XI - M` replaced by `M - k I`.
    pub fn sub_scalar(&self, k: &BigInt) -> IntMatrix {
        let mut m = self.clone();
        for i in 0..self.rows.min(self.cols) {
            m[(i, i)] -= k;
        }
        m
    }
}

impl Index<(usize, usize)> for IntMatrix {
    type Output = BigInt;
    fn index(&self, (i, j): (usize, usize)) -> &BigInt {
        &self.data[i * self.cols + j]
    }
}

impl IndexMut<(usize, usize)> for IntMatrix {
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut BigInt {
        &mut self.data[i * self.cols + j]
    }
}

impl fmt::Debug for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for (j, x) in self.row(i).iter().enumerate() {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_identity_and_small() {
        assert_eq!(IntMatrix::identity(4).det(), BigInt::one());
        let m = IntMatrix::from_i64(&[&[2, 6], &[1, -2]]);
        assert_eq!(m.det(), BigInt::from(-10));
        assert_eq!(m.det_cofactor(), BigInt::from(-10));
    }

    #[test]
    fn det_needs_pivoting() {
        let m = IntMatrix::from_i64(&[&[0, 1, 2], &[1, 0, 3], &[4, -3, 8]]);
        assert_eq!(m.det(), m.det_cofactor());
        assert_eq!(m.det(), BigInt::from(-2));
    }

    #[test]
    fn rank_examples() {
        assert_eq!(IntMatrix::zeros(3, 3).rank(), 0);
        assert_eq!(IntMatrix::identity(3).rank(), 3);
        let m = IntMatrix::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
    }

    #[test]
    fn kernel_of_rank_one() {
        let m = IntMatrix::from_i64(&[&[1, 2], &[2, 4]]);
        let k = m.kernel_rational();
        assert_eq!(k.len(), 1);
        let two = BigRational::from_integer(BigInt::from(2));
        assert_eq!(&k[0][0] + &k[0][1] * two, BigRational::zero());
    }

    #[test]
    fn charpoly_examples() {
        let m = IntMatrix::from_i64(&[&[-3, -1], &[1, 0]]);
        assert_eq!(m.charpoly().to_string(), "X^2 + 3X + 1");
        assert_eq!(IntMatrix::identity(2).charpoly().to_string(), "X^2 - 2X + 1");
        let p = MonicIntPoly::from_i64(&[1, 0, -1, -1]).unwrap();
        assert_eq!(p.companion().charpoly(), p);
    }

    #[test]
    fn unimodular_inverse() {
        let p = IntMatrix::from_i64(&[&[2, 1], &[1, 1]]);
        let q = p.inverse_unimodular().unwrap();
        assert_eq!(p.mul(&q).unwrap(), IntMatrix::identity(2));
        assert!(IntMatrix::from_i64(&[&[2, 0], &[0, 1]]).inverse_unimodular().is_err());
    }
}
