//! Arithmetic in the order `Z[xi] = Z[X]/(chi)` and in its fraction field,
//! always on the power basis `1, xi, ..., xi^(n-1)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::exactla::{self, IntMatrix, MonicIntPoly, QPoly, DEFAULT_DEGREE_CAP};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Order {
    chi: MonicIntPoly,
    companion: IntMatrix,
    disc: BigInt,
    /// Ascending coefficients of chi.
    asc: Vec<BigInt>,
}

/// Element of `Z[xi]` on the power basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct OrderElement {
    pub coords: Vec<BigInt>,
}

/// Element of `Q(xi)` on the power basis; every coordinate is kept reduced.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    pub coords: Vec<BigRational>,
}

pub(crate) trait Scalar:
    Clone + Zero + One + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn lift(x: &BigInt) -> Self;
}

impl Scalar for BigInt {
    fn lift(x: &BigInt) -> Self {
        x.clone()
    }
}

impl Scalar for BigRational {
    fn lift(x: &BigInt) -> Self {
        BigRational::from_integer(x.clone())
    }
}

impl Order {
    pub fn new(chi: MonicIntPoly) -> Result<Self> {
        Self::with_degree_cap(chi, DEFAULT_DEGREE_CAP)
    }

    pub fn with_degree_cap(chi: MonicIntPoly, cap: usize) -> Result<Self> {
        if !chi.is_irreducible(cap)? {
            return Err(Error::ReduciblePolynomial(chi.to_string()));
        }
        let disc = chi.discriminant();
        debug_assert!(!disc.is_zero());
        Ok(Order {
            companion: chi.companion(),
            asc: chi.ascending(),
            disc,
            chi,
        })
    }

    pub fn chi(&self) -> &MonicIntPoly {
        &self.chi
    }

    pub fn degree(&self) -> usize {
        self.chi.degree()
    }

    /// Multiplication-by-xi matrix: row `i` holds the coordinates of `xi^(i+1)`.
    pub fn companion(&self) -> &IntMatrix {
        &self.companion
    }

    pub fn disc(&self) -> &BigInt {
        &self.disc
    }

    pub fn zero(&self) -> OrderElement {
        OrderElement { coords: vec![BigInt::zero(); self.degree()] }
    }

    pub fn one(&self) -> OrderElement {
        self.int(&BigInt::one())
    }

    pub fn int(&self, k: &BigInt) -> OrderElement {
        let mut e = self.zero();
        e.coords[0] = k.clone();
        e
    }

    /// The generator `xi` (for degree 1, `xi` is the integer `-chi(0)`).
    pub fn xi(&self) -> OrderElement {
        let mut v = vec![BigInt::zero(); self.degree()];
        v[0] = BigInt::one();
        OrderElement { coords: self.times_xi(&v) }
    }

    pub fn element(&self, coords: Vec<BigInt>) -> Result<OrderElement> {
        if coords.len() != self.degree() {
            return Err(Error::DimensionMismatch(format!(
                "expected {} coordinates, got {}",
                self.degree(),
                coords.len()
            )));
        }
        Ok(OrderElement { coords })
    }

    pub fn field_element(&self, coords: Vec<BigRational>) -> Result<FieldElement> {
        if coords.len() != self.degree() {
            return Err(Error::DimensionMismatch(format!(
                "expected {} coordinates, got {}",
                self.degree(),
                coords.len()
            )));
        }
        Ok(FieldElement { coords })
    }

    /// Coordinates of `xi * v`.
    pub(crate) fn times_xi<T: Scalar>(&self, v: &[T]) -> Vec<T> {
        let n = self.degree();
        let top = v[n - 1].clone();
        (0..n)
            .map(|j| {
                let shifted = if j > 0 { v[j - 1].clone() } else { T::zero() };
                shifted - top.clone() * T::lift(&self.asc[j])
            })
            .collect()
    }

    fn mul_generic<T: Scalar>(&self, a: &[T], b: &[T]) -> Vec<T> {
        let n = self.degree();
        let mut acc = vec![T::zero(); n];
        let mut t = b.to_vec();
        for (i, ai) in a.iter().enumerate() {
            if !ai.is_zero() {
                for (x, y) in acc.iter_mut().zip(&t) {
                    *x = x.clone() + ai.clone() * y.clone();
                }
            }
            if i + 1 < n {
                t = self.times_xi(&t);
            }
        }
        acc
    }

    pub fn mul(&self, a: &OrderElement, b: &OrderElement) -> OrderElement {
        OrderElement { coords: self.mul_generic(&a.coords, &b.coords) }
    }

    pub fn mul_field(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        FieldElement { coords: self.mul_generic(&a.coords, &b.coords) }
    }

    pub(crate) fn mul_int_vec(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        self.mul_generic(a, b)
    }

    /// Multiplication-by-`a` matrix in row convention: row `i` is `xi^i * a`,
    /// so `coords(z * a) = coords(z) * M_a`.
    pub fn mult_matrix(&self, a: &OrderElement) -> IntMatrix {
        let n = self.degree();
        let mut rows = Vec::with_capacity(n);
        let mut t = a.coords.clone();
        for i in 0..n {
            rows.push(t.clone());
            if i + 1 < n {
                t = self.times_xi(&t);
            }
        }
        IntMatrix::from_rows(rows).expect("square")
    }

    pub fn norm_int(&self, a: &OrderElement) -> BigInt {
        self.mult_matrix(a).det()
    }

    pub fn trace_int(&self, a: &OrderElement) -> BigInt {
        self.mult_matrix(a).trace()
    }

    pub fn norm(&self, a: &FieldElement) -> BigRational {
        let (d, w) = a.integral_parts();
        let nw = self.norm_int(&OrderElement { coords: w });
        BigRational::new(nw, num_traits::pow(d, self.degree()))
    }

    pub fn trace(&self, a: &FieldElement) -> BigRational {
        let (d, w) = a.integral_parts();
        BigRational::new(self.trace_int(&OrderElement { coords: w }), d)
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in `Q[X]`.
    pub fn inverse(&self, a: &FieldElement) -> Result<FieldElement> {
        let n = self.degree();
        let lift = QPoly::new(a.coords.clone());
        if lift.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let (mut r0, mut r1) = (self.chi.to_qpoly(), lift);
        let (mut s0, mut s1) = (QPoly::zero(), QPoly::constant(BigRational::one()));
        while !r1.is_zero() {
            let (q, r) = r0.div_rem(&r1)?;
            let s = s0.sub(&q.mul(&s1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s;
        }
        // r0 is a nonzero constant since chi is irreducible.
        let c = r0.lead().recip();
        let inv = s0.scale(&c);
        let mut coords = inv.coeffs().to_vec();
        coords.resize(n, BigRational::zero());
        Ok(FieldElement { coords })
    }

    pub fn to_field(&self, a: &OrderElement) -> FieldElement {
        FieldElement { coords: exactla::to_rat(&a.coords) }
    }

    pub fn field_int(&self, k: &BigInt) -> FieldElement {
        self.to_field(&self.int(k))
    }

    pub fn field_rat(&self, k: BigRational) -> FieldElement {
        let mut coords = vec![BigRational::zero(); self.degree()];
        coords[0] = k;
        FieldElement { coords }
    }
}

impl OrderElement {
    pub fn is_zero(&self) -> bool {
        exactla::is_zero_vec(&self.coords)
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        OrderElement { coords: coords.iter().map(|&x| BigInt::from(x)).collect() }
    }
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        exactla::is_zero_vec(&self.coords)
    }

    /// `(d, w)` with `self = w / d` and `d > 0` minimal.
    pub fn integral_parts(&self) -> (BigInt, Vec<BigInt>) {
        exactla::clear_denominators(&self.coords)
    }

    pub fn add(&self, o: &FieldElement) -> FieldElement {
        FieldElement { coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, o: &FieldElement) -> FieldElement {
        FieldElement { coords: self.coords.iter().zip(&o.coords).map(|(a, b)| a - b).collect() }
    }

    pub fn scale(&self, k: &BigRational) -> FieldElement {
        FieldElement { coords: self.coords.iter().map(|a| a * k).collect() }
    }

    pub fn from_ratios(coords: &[(i64, i64)]) -> Self {
        FieldElement {
            coords: coords
                .iter()
                .map(|&(p, q)| BigRational::new(BigInt::from(p), BigInt::from(q)))
                .collect(),
        }
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}
