//! Full-rank lattices in `Q^n`, stored as `(1/den) * L` with `L` an integer
//! HNF lattice and `gcd(den, content(L)) = 1`.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed};

use crate::error::Result;
use crate::exactla::{self, hnf, HnfBasis};

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RatLattice {
    den: BigInt,
    basis: HnfBasis,
}

impl RatLattice {
    pub fn unit(n: usize) -> Self {
        RatLattice { den: BigInt::one(), basis: HnfBasis::identity(n) }
    }

    /// Lattice spanned by `rows / den`.
    pub fn from_int_rows(rows: &[Vec<BigInt>], den: &BigInt, n: usize) -> Result<Self> {
        debug_assert!(den.is_positive());
        let basis = hnf(rows, n)?;
        Ok(Self::normalized(den.clone(), basis))
    }

    pub fn from_rational_rows(rows: &[Vec<BigRational>], n: usize) -> Result<Self> {
        let den = exactla::common_denominator(rows.iter().flatten());
        let ints: Vec<Vec<BigInt>> = rows
            .iter()
            .map(|r| r.iter().map(|x| x.numer() * (&den / x.denom())).collect())
            .collect();
        Self::from_int_rows(&ints, &den, n)
    }

    pub(crate) fn normalized(den: BigInt, basis: HnfBasis) -> Self {
        let g = basis.content().gcd(&den);
        if g.is_one() {
            RatLattice { den, basis }
        } else {
            RatLattice { den: &den / &g, basis: basis.div_exact(&g) }
        }
    }

    pub fn den(&self) -> &BigInt {
        &self.den
    }

    pub fn basis(&self) -> &HnfBasis {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.dim()
    }

    /// Covolume relative to `Z^n`, i.e. the generalised index.
    pub fn covolume(&self) -> BigRational {
        BigRational::new(self.basis.det(), num_traits::pow(self.den.clone(), self.dim()))
    }

    pub fn rational_rows(&self) -> Vec<Vec<BigRational>> {
        (0..self.dim())
            .map(|i| {
                self.basis
                    .row(i)
                    .iter()
                    .map(|x| BigRational::new(x.clone(), self.den.clone()))
                    .collect()
            })
            .collect()
    }

    pub fn contains(&self, v: &[BigRational]) -> bool {
        let scaled: Vec<BigRational> = v
            .iter()
            .map(|x| x * BigRational::from_integer(self.den.clone()))
            .collect();
        if !scaled.iter().all(|x| x.is_integer()) {
            return false;
        }
        let ints: Vec<BigInt> = scaled.iter().map(|x| x.to_integer()).collect();
        self.basis.contains(&ints)
    }

    /// `{y : <y, x> in Z for all x in self}`.
    pub fn dual(&self) -> RatLattice {
        // Basis of the dual is (B^{-1})^T with B = H / den and
        // H^{-1} = S / det(H).
        let s = self.basis.scaled_inverse().transpose();
        let det = self.basis.det();
        let rows: Vec<Vec<BigInt>> = (0..self.dim())
            .map(|i| s.row(i).iter().map(|x| x * &self.den).collect())
            .collect();
        Self::from_int_rows(&rows, &det, self.dim()).expect("dual of a full-rank lattice")
    }

    pub fn sum(&self, other: &RatLattice) -> RatLattice {
        let l = self.den.lcm(&other.den);
        let fa = &l / &self.den;
        let fb = &l / &other.den;
        let mut rows = Vec::with_capacity(2 * self.dim());
        for i in 0..self.dim() {
            rows.push(self.basis.row(i).iter().map(|x| x * &fa).collect());
        }
        for i in 0..other.dim() {
            rows.push(other.basis.row(i).iter().map(|x| x * &fb).collect());
        }
        Self::from_int_rows(&rows, &l, self.dim()).expect("sum of full-rank lattices")
    }

    pub fn intersect(&self, other: &RatLattice) -> RatLattice {
        self.dual().sum(&other.dual()).dual()
    }

    pub fn is_sublattice_of(&self, other: &RatLattice) -> bool {
        self.rational_rows().iter().all(|r| other.contains(r))
    }
}
