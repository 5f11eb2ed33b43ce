//! Closed-form bounds in terms of the genus `g`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};

fn check_genus(g: u64) -> Result<()> {
    if g < 2 {
        return Err(Error::InvalidGenus(g));
    }
    Ok(())
}

fn factorial(k: u64) -> BigInt {
    (2..=k).fold(BigInt::one(), |acc, i| acc * i)
}

/// `168 (g - 1)`.
pub fn bound_max_index(g: u64) -> Result<BigInt> {
    check_genus(g)?;
    Ok(BigInt::from(168u64) * (g - 1))
}

/// `(k!)^(2g)`.
pub fn bound_subgroups(k: u64, g: u64) -> Result<BigInt> {
    check_genus(g)?;
    if k == 0 {
        return Err(Error::InvalidInput("k must be at least 1".into()));
    }
    Ok(num_traits::pow(factorial(k), (2 * g) as usize))
}

/// `((168 (g - 1))!)^(2g)`.
pub fn bound_class_number(g: u64) -> Result<BigInt> {
    bound_subgroups(168 * (g.max(2) - 1), g)
}

/// `2 + 2 (g - 1) / N`.
pub fn bound_rank(g: u64, n: u64) -> Result<BigRational> {
    check_genus(g)?;
    if n == 0 {
        return Err(Error::InvalidInput("N must be at least 1".into()));
    }
    Ok(BigRational::from_integer(BigInt::from(2u64))
        + BigRational::new(BigInt::from(2 * (g - 1)), BigInt::from(n)))
}

pub fn digit_count(x: &BigInt) -> usize {
    x.magnitude().to_str_radix(10).len()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn genus_two_values() {
        assert_eq!(bound_max_index(2).unwrap(), BigInt::from(168));
        let c = bound_class_number(2).unwrap();
        assert_eq!(c, num_traits::pow(factorial(168), 4));
        for g in 2..=10 {
            assert_eq!(bound_rank(g, 1).unwrap(), BigRational::from_integer(BigInt::from(2 * g)));
        }
        assert_eq!(bound_max_index(1), Err(Error::InvalidGenus(1)));
    }

    #[test]
    fn factorial_digits() {
        let f = factorial(168);
        assert_eq!(digit_count(&f), 303);
        let c = bound_class_number(2).unwrap();
        assert_eq!(c, (&f * &f) * (&f * &f));
        assert_eq!(digit_count(&c), 1210);
    }
}
