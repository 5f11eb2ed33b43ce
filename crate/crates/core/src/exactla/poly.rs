use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactla::matrix::IntMatrix;

/// Default degree cap for [`MonicIntPoly::is_irreducible`].
pub const DEFAULT_DEGREE_CAP: usize = 6;

/// Monic integer polynomial, coefficients stored highest degree first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MonicIntPoly {
    coeffs: Vec<BigInt>,
}

impl MonicIntPoly {
    pub fn new(coeffs: Vec<BigInt>) -> Result<Self> {
        if coeffs.len() < 2 {
            return Err(Error::InvalidInput("polynomial must have degree at least 1".into()));
        }
        if !coeffs[0].is_one() {
            return Err(Error::InvalidInput(format!(
                "leading coefficient must be 1, got {}",
                coeffs[0]
            )));
        }
        Ok(MonicIntPoly { coeffs })
    }

    pub fn from_i64(coeffs: &[i64]) -> Result<Self> {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Coefficients, highest degree first.
    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficients, constant term first.
    pub fn ascending(&self) -> Vec<BigInt> {
        self.coeffs.iter().rev().cloned().collect()
    }

    pub fn constant_term(&self) -> &BigInt {
        self.coeffs.last().expect("nonempty")
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs.iter().fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    pub fn eval_rat(&self, x: &BigRational) -> BigRational {
        self.coeffs
            .iter()
            .fold(BigRational::zero(), |acc, c| acc * x + BigRational::from_integer(c.clone()))
    }

    pub fn to_qpoly(&self) -> QPoly {
        QPoly::new(
            self.ascending()
                .into_iter()
                .map(BigRational::from_integer)
                .collect(),
        )
    }

    /// Row-style companion matrix: row `i` holds the power-basis coordinates
    /// of `X * X^i` modulo the polynomial.
    pub fn companion(&self) -> IntMatrix {
        let n = self.degree();
        let asc = self.ascending();
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n - 1 {
            m[(i, i + 1)] = BigInt::one();
        }
        for j in 0..n {
            m[(n - 1, j)] = -asc[j].clone();
        }
        m
    }

    /// Discriminant as `(-1)^(n(n-1)/2) Res(p, p')`.
    pub fn discriminant(&self) -> BigInt {
        let n = self.degree();
        let p = self.ascending();
        let dp: Vec<BigInt> = (1..=n).map(|k| &p[k] * BigInt::from(k)).collect();
        let res = resultant(&p, &dp);
        if (n * (n - 1) / 2) % 2 == 1 {
            -res
        } else {
            res
        }
    }

    /// Decides irreducibility over the integers by exhaustive search for a
    /// monic factor of degree at most `n/2`, with coefficients bounded by
    /// Mignotte's bound `|g_j| <= C(k, j) ||p||_2`.
    pub fn is_irreducible(&self, cap: usize) -> Result<bool> {
        let n = self.degree();
        if n > cap {
            return Err(Error::DegreeCapExceeded { degree: n, cap });
        }
        if n == 1 {
            return Ok(true);
        }
        let p = self.ascending();
        if p[0].is_zero() {
            return Ok(false);
        }
        let norm2 = p.iter().map(|c| c * c).sum::<BigInt>().sqrt() + BigInt::one();
        let divisors = signed_divisors(&p[0]);
        let p_at_1 = self.eval(&BigInt::one());
        let p_at_m1 = self.eval(&-BigInt::one());
        for k in 1..=n / 2 {
            let bounds: Vec<BigInt> = (1..k).map(|j| BigInt::from(binomial(k, j)) * &norm2).collect();
            for g0 in &divisors {
                let mut g = vec![BigInt::zero(); k + 1];
                g[0] = g0.clone();
                g[k] = BigInt::one();
                if search_factor(&p, &mut g, 1, &bounds, &p_at_1, &p_at_m1) {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

fn search_factor(
    p: &[BigInt],
    g: &mut Vec<BigInt>,
    j: usize,
    bounds: &[BigInt],
    p_at_1: &BigInt,
    p_at_m1: &BigInt,
) -> bool {
    let k = g.len() - 1;
    if j == k {
        let g1: BigInt = g.iter().sum();
        let gm1: BigInt = g
            .iter()
            .enumerate()
            .map(|(i, c)| if i % 2 == 0 { c.clone() } else { -c })
            .sum();
        if !divides(&g1, p_at_1) || !divides(&gm1, p_at_m1) {
            return false;
        }
        return divides_poly(p, g);
    }
    let b = bounds[j - 1].clone();
    let mut c = -b.clone();
    while c <= b {
        g[j] = c.clone();
        if search_factor(p, g, j + 1, bounds, p_at_1, p_at_m1) {
            return true;
        }
        c += 1;
    }
    false
}

fn divides(d: &BigInt, n: &BigInt) -> bool {
    if d.is_zero() {
        n.is_zero()
    } else {
        (n % d).is_zero()
    }
}

/// Exact division test of `p` by monic `g` (both ascending).
fn divides_poly(p: &[BigInt], g: &[BigInt]) -> bool {
    let mut r: Vec<BigInt> = p.to_vec();
    let k = g.len() - 1;
    for top in (k..r.len()).rev() {
        let q = r[top].clone();
        if q.is_zero() {
            continue;
        }
        for (i, gi) in g.iter().enumerate() {
            r[top - k + i] -= &q * gi;
        }
    }
    r[..k].iter().all(Zero::is_zero)
}

fn signed_divisors(n: &BigInt) -> Vec<BigInt> {
    let n = n.abs();
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = BigInt::one();
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            small.push(d.clone());
            let e = &n / &d;
            if e != d {
                large.push(e);
            }
        }
        d += 1;
    }
    large.reverse();
    small
        .into_iter()
        .chain(large)
        .flat_map(|d| [d.clone(), -d])
        .collect()
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| acc * (n - i) as u64 / (i as u64 + 1))
}

/// Resultant of two ascending integer polynomials via the Sylvester matrix.
pub fn resultant(p: &[BigInt], q: &[BigInt]) -> BigInt {
    let m = p.len() - 1;
    let n = q.len() - 1;
    let size = m + n;
    if size == 0 {
        return BigInt::one();
    }
    let mut s = IntMatrix::zeros(size, size);
    for row in 0..n {
        for (i, c) in p.iter().rev().enumerate() {
            s[(row, row + i)] = c.clone();
        }
    }
    for row in 0..m {
        for (i, c) in q.iter().rev().enumerate() {
            s[(n + row, row + i)] = c.clone();
        }
    }
    s.det()
}

impl fmt::Debug for MonicIntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for MonicIntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.degree();
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = n - i;
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            first = false;
            let show_mag = !mag.is_one() || e == 0;
            if show_mag {
                write!(f, "{mag}")?;
            }
            match e {
                0 => {}
                1 => write!(f, "X")?,
                _ => write!(f, "X^{e}")?,
            }
        }
        Ok(())
    }
}

/// Dense polynomial over the rationals, constant term first, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QPoly {
    c: Vec<BigRational>,
}

impl QPoly {
    pub fn new(mut c: Vec<BigRational>) -> Self {
        while c.last().is_some_and(Zero::is_zero) {
            c.pop();
        }
        QPoly { c }
    }

    pub fn zero() -> Self {
        QPoly { c: Vec::new() }
    }

    pub fn constant(x: BigRational) -> Self {
        Self::new(vec![x])
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.c
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn lead(&self) -> BigRational {
        self.c.last().cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        self.c
            .iter()
            .rev()
            .fold(BigRational::zero(), |acc, a| acc * x + a)
    }

    pub fn derivative(&self) -> QPoly {
        QPoly::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a * BigRational::from_integer(BigInt::from(k)))
                .collect(),
        )
    }

    pub fn add(&self, o: &QPoly) -> QPoly {
        let n = self.c.len().max(o.c.len());
        QPoly::new(
            (0..n)
                .map(|i| {
                    self.c.get(i).cloned().unwrap_or_else(BigRational::zero)
                        + o.c.get(i).cloned().unwrap_or_else(BigRational::zero)
                })
                .collect(),
        )
    }

    pub fn neg(&self) -> QPoly {
        QPoly { c: self.c.iter().map(|a| -a).collect() }
    }

    pub fn sub(&self, o: &QPoly) -> QPoly {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &QPoly) -> QPoly {
        if self.is_zero() || o.is_zero() {
            return QPoly::zero();
        }
        let mut c = vec![BigRational::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        QPoly::new(c)
    }

    pub fn scale(&self, k: &BigRational) -> QPoly {
        QPoly::new(self.c.iter().map(|a| a * k).collect())
    }

    pub fn div_rem(&self, d: &QPoly) -> Result<(QPoly, QPoly)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let mut r = self.c.clone();
        let lead_inv = d.lead().recip();
        let Some(top) = self.degree() else {
            return Ok((QPoly::zero(), QPoly::zero()));
        };
        if top < dd {
            return Ok((QPoly::zero(), self.clone()));
        }
        let mut q = vec![BigRational::zero(); top - dd + 1];
        for k in (dd..=top).rev() {
            let f = &r[k] * &lead_inv;
            if f.is_zero() {
                continue;
            }
            for (i, di) in d.c.iter().enumerate() {
                let v = &f * di;
                r[k - dd + i] -= v;
            }
            q[k - dd] = f;
        }
        r.truncate(dd);
        Ok((QPoly::new(q), QPoly::new(r)))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &QPoly) -> QPoly {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b).expect("nonzero divisor");
            a = b;
            b = r;
        }
        if a.is_zero() {
            a
        } else {
            let l = a.lead().recip();
            a.scale(&l)
        }
    }
}
