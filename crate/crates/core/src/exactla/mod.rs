//! Exact integer and rational linear algebra, plus integer polynomials.

pub mod hnf;
pub mod matrix;
pub mod poly;
pub mod snf;

pub use hnf::{hnf, hnf_echelon, HnfBasis};
pub use matrix::IntMatrix;
pub use poly::{MonicIntPoly, QPoly, DEFAULT_DEGREE_CAP};
pub use snf::{snf, SnfResult};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Least common multiple of the denominators of `v`.
pub fn common_denominator<'a>(v: impl IntoIterator<Item = &'a BigRational>) -> BigInt {
    v.into_iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()))
}

/// `(d, w)` with `v = w / d`, `d > 0` minimal.
pub fn clear_denominators(v: &[BigRational]) -> (BigInt, Vec<BigInt>) {
    let d = common_denominator(v);
    let w = v
        .iter()
        .map(|x| x.numer() * (&d / x.denom()))
        .collect();
    (d, w)
}

pub fn to_rat(v: &[BigInt]) -> Vec<BigRational> {
    v.iter().map(|x| BigRational::from_integer(x.clone())).collect()
}

pub fn is_zero_vec<T: Zero>(v: &[T]) -> bool {
    v.iter().all(Zero::is_zero)
}
