//! Symplectic transvections `x -> x + <x, c> c` with `<x, c> = x J c`.
//!
//! Vectors are rows acting on the right, so `x T = x + (x J c) c` and
//! `T = I + (J c) c^T`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exactla::IntMatrix;

/// Block-diagonal `[[0, 1], [-1, 0]]` of size `2g`.
pub fn standard_symplectic(g: usize) -> IntMatrix {
    let mut j = IntMatrix::zeros(2 * g, 2 * g);
    for i in 0..g {
        j[(2 * i, 2 * i + 1)] = BigInt::from(1);
        j[(2 * i + 1, 2 * i)] = BigInt::from(-1);
    }
    j
}

pub fn is_skew(j: &IntMatrix) -> bool {
    j.is_square() && (0..j.nrows()).all(|r| (0..j.ncols()).all(|c| j[(r, c)] == -&j[(c, r)]))
}

pub fn transvection(j: &IntMatrix, c: &[BigInt]) -> Result<IntMatrix> {
    if !is_skew(j) {
        return Err(Error::InvalidInput("form is not skew-symmetric".into()));
    }
    let n = j.nrows();
    if c.len() != n {
        return Err(Error::DimensionMismatch(format!("vector of length {} for a form of size {n}", c.len())));
    }
    let jc = j.apply(c);
    if c.iter().all(Zero::is_zero) || jc.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    let mut t = IntMatrix::identity(n);
    for r in 0..n {
        for s in 0..n {
            t[(r, s)] += &jc[r] * &c[s];
        }
    }
    Ok(t)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(x: &[i64]) -> Vec<BigInt> {
        x.iter().map(|&a| BigInt::from(a)).collect()
    }

    #[test]
    fn genus_one_example() {
        let t = transvection(&standard_symplectic(1), &v(&[1, 0])).unwrap();
        assert_eq!(t, IntMatrix::from_i64(&[&[1, 0], &[-1, 1]]));
    }

    #[test]
    fn action_on_rows() {
        let j = standard_symplectic(2);
        let c = v(&[1, 2, -1, 3]);
        let t = transvection(&j, &c).unwrap();
        let x = v(&[2, -1, 0, 5]);
        let pairing: BigInt = x.iter().zip(j.apply(&c)).map(|(a, b)| a * b).sum();
        let expected: Vec<BigInt> = x.iter().zip(&c).map(|(a, b)| a + &pairing * b).collect();
        assert_eq!(t.apply_left(&x), expected);
        assert_eq!(t.det(), BigInt::from(1));
        assert_eq!(t.sub(&IntMatrix::identity(4)).unwrap().rank(), 1);
    }

    #[test]
    fn zero_vector_rejected() {
        assert_eq!(transvection(&standard_symplectic(1), &v(&[0, 0])), Err(Error::ZeroVector));
    }
}
