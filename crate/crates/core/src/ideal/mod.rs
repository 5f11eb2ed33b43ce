//! Fractional ideals of `Z[xi]` as xi-stable lattices in power-basis
//! coordinates, their equivalence, and the ideal class monoid.

mod equivalence;
pub mod lattice;
mod monoid;
mod reduce;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::exactla::{self, HnfBasis};
use crate::order::{FieldElement, Order, OrderElement};

pub use equivalence::{is_equivalent, Equivalence, SearchBudget};
pub use lattice::RatLattice;
pub use monoid::{class_monoid, class_monoid_with, default_bound, ClassMonoid, IdealClass, MonoidOptions};

/// Fractional ideal `(1/den) * L` of `Z[xi]`.
#[derive(Clone)]
pub struct FracIdeal {
    order: Arc<Order>,
    lattice: RatLattice,
}

impl PartialEq for FracIdeal {
    fn eq(&self, other: &Self) -> bool {
        self.lattice == other.lattice && *self.order == *other.order
    }
}

impl Eq for FracIdeal {}

impl FracIdeal {
    /// Wraps a lattice, checking xi-stability.
    pub fn from_lattice(order: Arc<Order>, lattice: RatLattice) -> Result<Self> {
        let ideal = FracIdeal { order, lattice };
        if !ideal.is_xi_stable() {
            return Err(Error::InvalidInput("lattice is not stable under xi".into()));
        }
        Ok(ideal)
    }

    pub(crate) fn from_lattice_unchecked(order: Arc<Order>, lattice: RatLattice) -> Self {
        debug_assert!(FracIdeal { order: order.clone(), lattice: lattice.clone() }.is_xi_stable());
        FracIdeal { order, lattice }
    }

    /// Integral ideal with the given HNF basis.
    pub fn from_hnf(order: Arc<Order>, basis: HnfBasis) -> Result<Self> {
        Self::from_lattice(order, RatLattice::normalized(BigInt::one(), basis))
    }

    pub fn unit(order: Arc<Order>) -> Self {
        let n = order.degree();
        FracIdeal { order, lattice: RatLattice::unit(n) }
    }

    /// Smallest fractional ideal containing every generator.
    pub fn from_generators(order: Arc<Order>, gens: &[FieldElement]) -> Result<Self> {
        let n = order.degree();
        let nonzero: Vec<&FieldElement> = gens.iter().filter(|g| !g.is_zero()).collect();
        if nonzero.is_empty() {
            return Err(Error::ZeroIdeal);
        }
        let den = exactla::common_denominator(nonzero.iter().flat_map(|g| g.coords.iter()));
        let mut rows = Vec::with_capacity(n * nonzero.len());
        for g in nonzero {
            let mut w: Vec<BigInt> = g
                .coords
                .iter()
                .map(|x| x.numer() * (&den / x.denom()))
                .collect();
            for k in 0..n {
                rows.push(w.clone());
                if k + 1 < n {
                    w = order.times_xi(&w);
                }
            }
        }
        let lattice = RatLattice::from_int_rows(&rows, &den, n)?;
        Ok(FracIdeal { order, lattice })
    }

    pub fn principal(order: Arc<Order>, x: &FieldElement) -> Result<Self> {
        Self::from_generators(order, std::slice::from_ref(x))
    }

    pub fn order(&self) -> &Arc<Order> {
        &self.order
    }

    pub fn lattice(&self) -> &RatLattice {
        &self.lattice
    }

    pub fn den(&self) -> &BigInt {
        self.lattice.den()
    }

    pub fn hnf(&self) -> &HnfBasis {
        self.lattice.basis()
    }

    pub fn degree(&self) -> usize {
        self.order.degree()
    }

    pub fn is_integral(&self) -> bool {
        self.den().is_one()
    }

    /// Basis elements `omega_i = row_i / den` as field elements.
    pub fn basis_elements(&self) -> Vec<FieldElement> {
        self.lattice
            .rational_rows()
            .into_iter()
            .map(|coords| FieldElement { coords })
            .collect()
    }

    pub fn contains(&self, z: &FieldElement) -> bool {
        self.lattice.contains(&z.coords)
    }

    pub fn is_xi_stable(&self) -> bool {
        let h = self.hnf();
        (0..h.dim()).all(|i| h.contains(&self.order.times_xi(h.row(i))))
    }

    /// Generalised index `det(L) / den^n`.
    pub fn norm(&self) -> BigRational {
        self.lattice.covolume()
    }

    pub fn mul(&self, other: &FracIdeal) -> FracIdeal {
        let n = self.degree();
        let (ha, hb) = (self.hnf(), other.hnf());
        let mut rows = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                rows.push(self.order.mul_int_vec(ha.row(i), hb.row(j)));
            }
        }
        let den = self.den() * other.den();
        let lattice = RatLattice::from_int_rows(&rows, &den, n).expect("product of nonzero ideals");
        FracIdeal { order: self.order.clone(), lattice }
    }

    /// `z * self`.
    pub fn scale(&self, z: &FieldElement) -> Result<FracIdeal> {
        if z.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let rows: Vec<Vec<BigRational>> = self
            .basis_elements()
            .iter()
            .map(|w| self.order.mul_field(w, z).coords)
            .collect();
        let lattice = RatLattice::from_rational_rows(&rows, self.degree())?;
        Ok(FracIdeal { order: self.order.clone(), lattice })
    }

    /// `(self : other) = {z in K : z * other ⊆ self}`.
    pub fn colon(&self, other: &FracIdeal) -> FracIdeal {
        // z * b_j ∈ self  <=>  z * M_j * S_a * (da / (db * det_a)) ∈ Z^n, with
        // M_j the multiplication matrix of the j-th integral basis vector of
        // `other` and S_a = det_a * H_a^{-1}. The solution set is the dual of
        // the lattice spanned by the scaled columns.
        let n = self.degree();
        let sa = self.hnf().scaled_inverse();
        let det_a = self.hnf().det();
        let hb = other.hnf();
        let mut cols = Vec::with_capacity(n * n);
        for j in 0..n {
            let mj = self.order.mult_matrix(&OrderElement { coords: hb.row(j).to_vec() });
            let g = mj.mul(&sa).expect("square");
            for c in 0..n {
                cols.push(g.column(c).iter().map(|x| x * self.den()).collect::<Vec<_>>());
            }
        }
        let den = other.den() * &det_a;
        let span = RatLattice::from_int_rows(&cols, &den, n).expect("full rank");
        FracIdeal { order: self.order.clone(), lattice: span.dual() }
    }

    /// The multiplier ring `(a : a)`, an order containing `Z[xi]`.
    pub fn multiplier_ring(&self) -> FracIdeal {
        self.colon(self)
    }

    pub fn is_invertible(&self) -> bool {
        let one = FracIdeal::unit(self.order.clone());
        self.mul(&one.colon(self)) == one
    }

    /// Scalar multiple with `den = 1` and primitive integer lattice.
    pub fn primitive(&self) -> FracIdeal {
        let c = self.hnf().content();
        let basis = self.hnf().div_exact(&c);
        FracIdeal {
            order: self.order.clone(),
            lattice: RatLattice::normalized(BigInt::one(), basis),
        }
    }

    /// Whether `self` lies inside `Z[xi]`.
    pub fn is_sub_of_order(&self) -> bool {
        self.is_integral()
    }
}

impl fmt::Debug for FracIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FracIdeal(1/{} * {})", self.den(), self.hnf().matrix())
    }
}

impl fmt::Display for FracIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den().is_one() {
            write!(f, "{}", self.hnf().matrix())
        } else {
            write!(f, "(1/{}) {}", self.den(), self.hnf().matrix())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactla::{IntMatrix, MonicIntPoly};

    fn order(c: &[i64]) -> Arc<Order> {
        Arc::new(Order::new(MonicIntPoly::from_i64(c).unwrap()).unwrap())
    }

    fn rat(x: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(x))
    }

    fn fe(c: &[(i64, i64)]) -> FieldElement {
        FieldElement::from_ratios(c)
    }

    #[test]
    fn generators_examples() {
        let o = order(&[1, 0, -10]);
        let one = FracIdeal::from_generators(o.clone(), &[fe(&[(1, 1), (0, 1)])]).unwrap();
        assert_eq!(one, FracIdeal::unit(o.clone()));
        let p = FracIdeal::from_generators(o.clone(), &[fe(&[(2, 1), (0, 1)]), fe(&[(0, 1), (1, 1)])]).unwrap();
        assert!(p.is_integral());
        assert_eq!(p.hnf().matrix(), &IntMatrix::from_i64(&[&[2, 0], &[0, 1]]));
        assert_eq!(p.norm(), rat(2));
        let half = FracIdeal::from_generators(o.clone(), &[fe(&[(1, 2), (0, 1)])]).unwrap();
        assert_eq!(half.den(), &BigInt::from(2));
        assert_eq!(half.hnf(), &HnfBasis::identity(2));
        assert_eq!(
            FracIdeal::from_generators(o, &[fe(&[(0, 1), (0, 1)])]),
            Err(Error::ZeroIdeal)
        );
    }

    #[test]
    fn prime_over_two_squares_to_two() {
        let o = order(&[1, 0, -10]);
        let p = FracIdeal::from_generators(o.clone(), &[fe(&[(2, 1), (0, 1)]), fe(&[(0, 1), (1, 1)])]).unwrap();
        let two = FracIdeal::principal(o.clone(), &fe(&[(2, 1), (0, 1)])).unwrap();
        assert_eq!(p.mul(&p), two);
        assert_eq!(p.mul(&FracIdeal::unit(o.clone())), p);
        assert!(p.is_invertible());
        let one = FracIdeal::unit(o.clone());
        assert_eq!(one.colon(&p).mul(&p), one);
    }

    #[test]
    fn colon_of_principal() {
        let o = order(&[1, 0, -10]);
        let x = fe(&[(3, 1), (1, 1)]);
        let one = FracIdeal::unit(o.clone());
        let px = FracIdeal::principal(o.clone(), &x).unwrap();
        let inv = o.inverse(&x).unwrap();
        assert_eq!(one.colon(&px), FracIdeal::principal(o.clone(), &inv).unwrap());
        assert_eq!(px.norm(), o.norm(&x).abs_ref());
    }

    #[test]
    fn non_invertible_in_non_maximal_order() {
        // Z[sqrt(-3)] has the non-invertible ideal (2, 1 + sqrt(-3)).
        let o = order(&[1, 0, 3]);
        let a = FracIdeal::from_generators(o.clone(), &[fe(&[(2, 1), (0, 1)]), fe(&[(1, 1), (1, 1)])]).unwrap();
        assert!(!a.is_invertible());
        assert_ne!(a.multiplier_ring(), FracIdeal::unit(o));
    }

    trait AbsRef {
        fn abs_ref(&self) -> BigRational;
    }

    impl AbsRef for BigRational {
        fn abs_ref(&self) -> BigRational {
            num_traits::Signed::abs(self)
        }
    }
}
