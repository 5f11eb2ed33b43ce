//! Conjugacy classes of integer matrices through ideal classes of the order
//! `Z[x]/(chi)`, together with the quadratic and surface-side computations
//! that accompany the correspondence.
//!
//! The crate is organised bottom-up:
//!
//! - [`exactla`]: exact integer linear algebra (HNF, SNF, determinants,
//!   characteristic polynomials, irreducibility);
//! - [`order`]: arithmetic in `Z[xi]` and its fraction field;
//! - [`ideal`]: fractional ideals, equivalence, the ideal class monoid;
//! - [`latimer`]: matrices to ideals and back, conjugacy decisions,
//!   classification and a brute-force matrix oracle;
//! - [`quadratic`]: Pell equations and real quadratic class numbers;
//! - [`surface`]: genus bounds, double covers, transvections, train tracks.
//!
//! Data-parallel loops go through [`par`]; with the `parallel` feature
//! disabled everything runs sequentially and produces identical output.

pub mod error;
pub mod exactla;
pub mod ideal;
pub mod latimer;
pub mod order;
pub mod par;
pub mod quadratic;
pub mod surface;

pub use error::{Error, Result};
pub use exactla::{HnfBasis, IntMatrix, MonicIntPoly, SnfResult};
pub use ideal::{ClassMonoid, Equivalence, FracIdeal, IdealClass, SearchBudget};
pub use latimer::{ClassInventory, ConjugacyVerdict, Verdict};
pub use order::{FieldElement, Order, OrderElement};
pub use par::Execution;

/// Version string folded into cache keys.
pub const VERSION: &str = env!("CARGO_PKG_VERSION");
