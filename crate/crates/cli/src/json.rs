//! Wire formats. Every integer travels as a decimal string.

use std::sync::Arc;

use latimer_core::ideal::RatLattice;
use latimer_core::{ClassInventory, ClassMonoid, FracIdeal, IntMatrix, MonicIntPoly, Order};
use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::CliError;

fn num(s: &str) -> Result<BigInt, CliError> {
    s.trim().parse().map_err(|_| CliError::Input(format!("not an integer: {s:?}")))
}

fn strings(v: &[BigInt]) -> Vec<String> {
    v.iter().map(ToString::to_string).collect()
}

/// Comma-separated coefficients, highest degree first, leading 1.
pub fn parse_poly(s: &str) -> Result<MonicIntPoly, CliError> {
    let coeffs = s.split(',').map(num).collect::<Result<Vec<_>, _>>()?;
    if coeffs.first().map(|c| c == &BigInt::from(1)) != Some(true) {
        return Err(CliError::Input(format!("polynomial {s:?} is not monic")));
    }
    if coeffs.len() < 2 {
        return Err(CliError::Input("polynomial must have degree at least 1".into()));
    }
    Ok(MonicIntPoly::new(coeffs)?)
}

pub fn print_poly(p: &MonicIntPoly) -> String {
    strings(p.coeffs()).join(",")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixJson {
    pub n: usize,
    pub rows: Vec<Vec<String>>,
}

impl MatrixJson {
    pub fn encode(m: &IntMatrix) -> Self {
        MatrixJson { n: m.nrows(), rows: m.to_rows().iter().map(|r| strings(r)).collect() }
    }

    pub fn decode(&self) -> Result<IntMatrix, CliError> {
        if self.rows.len() != self.n || self.rows.iter().any(|r| r.len() != self.n) {
            return Err(CliError::Input(format!("matrix is not {0}x{0}", self.n)));
        }
        let rows = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| num(x)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        Ok(IntMatrix::from_rows(rows)?)
    }
}

/// `{"n": .., "rows": ..}` or the compact `a,b;c,d`.
pub fn parse_matrix(s: &str) -> Result<IntMatrix, CliError> {
    let t = s.trim();
    if t.starts_with('{') {
        let m: MatrixJson = serde_json::from_str(t).map_err(|e| CliError::Input(format!("matrix JSON: {e}")))?;
        return m.decode();
    }
    let rows = t
        .split(';')
        .map(|r| r.split(',').map(num).collect::<Result<Vec<_>, _>>())
        .collect::<Result<Vec<_>, _>>()?;
    let n = rows.len();
    if rows.iter().any(|r| r.len() != n) {
        return Err(CliError::Input(format!("matrix {s:?} is not square")));
    }
    Ok(IntMatrix::from_rows(rows)?)
}

pub fn compact_matrix(m: &IntMatrix) -> String {
    m.to_rows().iter().map(|r| strings(r).join(",")).collect::<Vec<_>>().join(";")
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub den: String,
    pub hnf: Vec<Vec<String>>,
}

impl IdealJson {
    pub fn encode(a: &FracIdeal) -> Self {
        IdealJson { den: a.den().to_string(), hnf: a.hnf().matrix().to_rows().iter().map(|r| strings(r)).collect() }
    }

    pub fn decode(&self, order: Arc<Order>) -> Result<FracIdeal, CliError> {
        let n = order.degree();
        let den = num(&self.den)?;
        let rows = self
            .hnf
            .iter()
            .map(|r| r.iter().map(|x| num(x)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        if rows.len() != n || rows.iter().any(|r| r.len() != n) {
            return Err(CliError::Input(format!("ideal basis must be {n}x{n}")));
        }
        Ok(FracIdeal::from_lattice(order, RatLattice::from_int_rows(&rows, &den, n)?)?)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassJson {
    pub ideal: IdealJson,
    pub invertible: bool,
    pub members: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub matrix: Option<MatrixJson>,
}

/// Serialized [`ClassMonoid`]; with matrices it doubles as a
/// [`ClassInventory`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MonoidJson {
    pub chi: String,
    pub count: usize,
    pub picard_size: usize,
    pub bound: u64,
    pub certified: bool,
    pub lattices_enumerated: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle_count: Option<usize>,
    pub classes: Vec<ClassJson>,
}

impl MonoidJson {
    pub fn from_monoid(m: &ClassMonoid) -> Self {
        MonoidJson {
            chi: print_poly(m.order.chi()),
            count: m.size(),
            picard_size: m.picard_size,
            bound: m.bound_used,
            certified: m.certified,
            lattices_enumerated: m.lattices_enumerated,
            oracle_count: None,
            classes: m
                .classes
                .iter()
                .map(|c| ClassJson {
                    ideal: IdealJson::encode(&c.canonical),
                    invertible: c.invertible,
                    members: c.members,
                    matrix: None,
                })
                .collect(),
        }
    }

    pub fn from_inventory(inv: &ClassInventory) -> Self {
        let mut j = Self::from_monoid(&inv.monoid);
        j.oracle_count = inv.oracle_count;
        for (c, (_, m)) in j.classes.iter_mut().zip(&inv.pairs) {
            c.matrix = Some(MatrixJson::encode(m));
        }
        j
    }

    /// Rebuilds the ideals and matrices, checking each basis is an ideal of
    /// the order and each matrix has the right characteristic polynomial.
    pub fn decode(&self) -> Result<DecodedClasses, CliError> {
        let chi = parse_poly(&self.chi)?;
        let order = Arc::new(Order::new(chi.clone())?);
        let mut classes = Vec::with_capacity(self.classes.len());
        for c in &self.classes {
            let ideal = c.ideal.decode(order.clone())?;
            let matrix = c.matrix.as_ref().map(MatrixJson::decode).transpose()?;
            if matrix.as_ref().is_some_and(|m| m.charpoly() != chi) {
                return Err(CliError::Input("class matrix has the wrong characteristic polynomial".into()));
            }
            classes.push((ideal, matrix));
        }
        Ok(DecodedClasses { order, classes })
    }
}

pub struct DecodedClasses {
    pub order: Arc<Order>,
    pub classes: Vec<(FracIdeal, Option<IntMatrix>)>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SwitchJson {
    pub incoming: Vec<usize>,
    pub outgoing: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrainTrackJson {
    pub transition: MatrixJson,
    #[serde(default)]
    pub switches: Vec<SwitchJson>,
}
