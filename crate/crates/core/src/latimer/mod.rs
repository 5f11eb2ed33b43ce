//! Matrices with irreducible characteristic polynomial `chi` and ideal
//! classes of `Z[xi]`: the eigenvector ideal of a matrix, the matrix of an
//! ideal basis, conjugacy decisions with explicit witnesses, classification.

pub mod oracle;

use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactla::{IntMatrix, MonicIntPoly};
use crate::ideal::{
    class_monoid_with, is_equivalent, ClassMonoid, Equivalence, FracIdeal, IdealClass, MonoidOptions,
    RatLattice, SearchBudget,
};
use crate::order::{FieldElement, Order, OrderElement};

pub use oracle::{oracle_count_classes, OracleReport};

/// Primitive `v` in `Z[xi]^n` with `M v = xi v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Eigenvector {
    pub entries: Vec<OrderElement>,
}

impl Eigenvector {
    pub fn verify(&self, order: &Order, m: &IntMatrix) -> bool {
        let n = self.entries.len();
        let xi = order.xi();
        (0..n).all(|i| {
            let mut lhs = vec![BigInt::zero(); n];
            for j in 0..n {
                let mij = &m[(i, j)];
                if !mij.is_zero() {
                    for (l, c) in lhs.iter_mut().zip(&self.entries[j].coords) {
                        *l += mij * c;
                    }
                }
            }
            lhs == order.mul(&xi, &self.entries[i]).coords
        }) && self.entries.iter().any(|e| !e.is_zero())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    Equivalent,
    Inequivalent,
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyVerdict {
    pub status: Verdict,
    /// Unimodular `P` with `P M P^{-1} = N`, present iff `Equivalent`.
    pub witness: Option<IntMatrix>,
}

impl ConjugacyVerdict {
    fn inequivalent() -> Self {
        ConjugacyVerdict { status: Verdict::Inequivalent, witness: None }
    }
}

#[derive(Clone, Debug)]
pub struct ClassInventory {
    pub chi: MonicIntPoly,
    pub pairs: Vec<(IdealClass, IntMatrix)>,
    pub oracle_count: Option<usize>,
    pub monoid: ClassMonoid,
}

impl ClassInventory {
    pub fn count(&self) -> usize {
        self.pairs.len()
    }

    pub fn certified(&self) -> bool {
        self.monoid.certified
    }
}

fn check_square(m: &IntMatrix) -> Result<()> {
    if !m.is_square() || m.nrows() == 0 {
        return Err(Error::DimensionMismatch(format!(
            "expected a nonempty square matrix, got {}x{}",
            m.nrows(),
            m.ncols()
        )));
    }
    Ok(())
}

/// The order `Z[X]/(charpoly(M))`.
pub fn order_of(m: &IntMatrix) -> Result<Arc<Order>> {
    check_square(m)?;
    Ok(Arc::new(Order::new(m.charpoly())?))
}

/// Kernel of `M - xi I` over `K`, normalised by `v_1 = 1`, then scaled to a
/// primitive vector of `Z[xi]^n`.
pub fn eigenvector(order: &Order, m: &IntMatrix) -> Result<Eigenvector> {
    check_square(m)?;
    let n = m.nrows();
    if n != order.degree() {
        return Err(Error::DimensionMismatch(format!(
            "matrix of size {n} over an order of degree {}",
            order.degree()
        )));
    }
    let xi = order.to_field(&order.xi());
    let mut a: Vec<Vec<FieldElement>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let e = order.field_int(&m[(i, j)]);
                    if i == j {
                        e.sub(&xi)
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect();
    // Row reduction over K; the kernel is one-dimensional.
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..n {
        let Some(p) = (r..n).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = order.inverse(&a[r][c])?;
        a[r] = a[r].iter().map(|x| order.mul_field(x, &inv)).collect();
        for i in 0..n {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                let pivot_row = a[r].clone();
                for (x, y) in a[i].iter_mut().zip(&pivot_row) {
                    *x = x.sub(&order.mul_field(y, &f));
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == n {
            break;
        }
    }
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    if free.len() != 1 {
        return Err(Error::ReduciblePolynomial(m.charpoly().to_string()));
    }
    let f = free[0];
    let mut v = vec![order.field_int(&BigInt::zero()); n];
    v[f] = order.field_int(&BigInt::one());
    for (row, &pc) in pivots.iter().enumerate() {
        v[pc] = order.field_int(&BigInt::zero()).sub(&a[row][f]);
    }
    let inv_first = order.inverse(&v[0])?;
    let v: Vec<FieldElement> = v.iter().map(|x| order.mul_field(x, &inv_first)).collect();
    let den = crate::exactla::common_denominator(v.iter().flat_map(|x| x.coords.iter()));
    let ints: Vec<Vec<BigInt>> = v
        .iter()
        .map(|x| x.coords.iter().map(|c| c.numer() * (&den / c.denom())).collect())
        .collect();
    let content = crate::exactla::hnf::gcd_all(ints.iter().flatten());
    Ok(Eigenvector {
        entries: ints
            .into_iter()
            .map(|r| OrderElement { coords: r.into_iter().map(|x| x / &content).collect() })
            .collect(),
    })
}

/// The ideal spanned by the entries of a primitive eigenvector.
pub fn eigen_ideal(order: Arc<Order>, v: &Eigenvector) -> Result<FracIdeal> {
    let n = order.degree();
    let rows: Vec<Vec<BigInt>> = v.entries.iter().map(|e| e.coords.clone()).collect();
    let lattice = RatLattice::from_int_rows(&rows, &BigInt::one(), n)?;
    FracIdeal::from_lattice(order, lattice)
}

pub fn matrix_to_ideal(m: &IntMatrix) -> Result<FracIdeal> {
    let order = order_of(m)?;
    matrix_to_ideal_in(order, m)
}

/// As [`matrix_to_ideal`] with a prebuilt order (which must match `charpoly(M)`).
pub fn matrix_to_ideal_in(order: Arc<Order>, m: &IntMatrix) -> Result<FracIdeal> {
    let v = eigenvector(&order, m)?;
    eigen_ideal(order, &v)
}

/// `M` with `xi * omega_i = sum_j M_ij omega_j` for the HNF basis `omega`.
pub fn ideal_to_matrix(a: &FracIdeal) -> IntMatrix {
    let h = a.hnf();
    let n = h.dim();
    let rows = (0..n)
        .map(|i| {
            h.coordinates(&a.order().times_xi(h.row(i)))
                .expect("ideals are xi-stable")
        })
        .collect();
    IntMatrix::from_rows(rows).expect("square")
}

pub fn are_conjugate(m: &IntMatrix, n: &IntMatrix, budget: &SearchBudget) -> Result<ConjugacyVerdict> {
    check_square(m)?;
    check_square(n)?;
    if m.nrows() != n.nrows() {
        return Ok(ConjugacyVerdict::inequivalent());
    }
    let chi = m.charpoly();
    if chi != n.charpoly() {
        return Ok(ConjugacyVerdict::inequivalent());
    }
    if m == n {
        return Ok(ConjugacyVerdict {
            status: Verdict::Equivalent,
            witness: Some(IntMatrix::identity(m.nrows())),
        });
    }
    let order = Arc::new(Order::new(chi)?);
    let (vm, vn) = (eigenvector(&order, m)?, eigenvector(&order, n)?);
    let (a, b) = (eigen_ideal(order.clone(), &vm)?, eigen_ideal(order.clone(), &vn)?);
    match is_equivalent(&a, &b, budget) {
        Equivalence::Inequivalent => Ok(ConjugacyVerdict::inequivalent()),
        Equivalence::Unknown => Ok(ConjugacyVerdict { status: Verdict::Unknown, witness: None }),
        Equivalence::Equivalent(z) => {
            let p = witness_from(&order, &vm, &vn, &z)?;
            if p.mul(m)? != n.mul(&p)? || !p.is_unimodular() {
                return Err(Error::InvalidInput("conjugating witness failed verification".into()));
            }
            Ok(ConjugacyVerdict { status: Verdict::Equivalent, witness: Some(p) })
        }
    }
}

/// `P` with `P (z v_M) = v_N`, i.e. `P = Y X^{-1}` where the rows of `X` and
/// `Y` are the power-basis coordinates of `z v_M` and `v_N`.
fn witness_from(order: &Order, vm: &Eigenvector, vn: &Eigenvector, z: &FieldElement) -> Result<IntMatrix> {
    let scaled: Vec<FieldElement> = vm
        .entries
        .iter()
        .map(|e| order.mul_field(&order.to_field(e), z))
        .collect();
    let den = crate::exactla::common_denominator(scaled.iter().flat_map(|x| x.coords.iter()));
    let x_int = IntMatrix::from_rows(
        scaled
            .iter()
            .map(|x| x.coords.iter().map(|c| c.numer() * (&den / c.denom())).collect())
            .collect(),
    )?;
    let y = IntMatrix::from_rows(vn.entries.iter().map(|e| e.coords.clone()).collect())?;
    // X = X_int / den, so Y X^{-1} = den * Y adj(X_int) / det(X_int).
    let det = x_int.det();
    let num = y.mul(&x_int.adjugate())?.scale(&den);
    let rows: Option<Vec<Vec<BigInt>>> = (0..num.nrows())
        .map(|i| {
            num.row(i)
                .iter()
                .map(|e| {
                    let q = BigRational::new(e.clone(), det.clone());
                    q.is_integer().then(|| q.to_integer())
                })
                .collect()
        })
        .collect();
    let rows = rows.ok_or_else(|| Error::InvalidInput("basis change is not integral".into()))?;
    let p = IntMatrix::from_rows(rows)?;
    if !p.det().abs().is_one() {
        return Err(Error::InvalidInput("basis change is not unimodular".into()));
    }
    Ok(p)
}

pub fn classify(chi: &MonicIntPoly) -> Result<ClassInventory> {
    classify_with(chi, &MonoidOptions::default(), crate::exactla::DEFAULT_DEGREE_CAP)
}

pub fn classify_with(chi: &MonicIntPoly, opts: &MonoidOptions, degree_cap: usize) -> Result<ClassInventory> {
    let order = Arc::new(Order::with_degree_cap(chi.clone(), degree_cap)?);
    let monoid = class_monoid_with(order, opts)?;
    let pairs = monoid
        .classes
        .iter()
        .map(|c| (c.clone(), ideal_to_matrix(&c.canonical)))
        .collect();
    Ok(ClassInventory { chi: chi.clone(), pairs, oracle_count: None, monoid })
}
