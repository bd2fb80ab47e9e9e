//! Finite and standard models of quasi-MV*, quasi-Wajsberg*, MV* and
//! Wajsberg* algebras, the term equivalence between them, their congruences,
//! and a proof kernel with valuation semantics for the logic qŁ*.
//!
//! ```
//! use qstar_core::algebra::{catalog::Theory, check_theory};
//! use qstar_core::fixtures;
//!
//! let alg = fixtures::qmv7();
//! let report = check_theory(&alg, &Theory::qmv()).unwrap();
//! assert!(report.passed());
//! ```

pub mod algebra;
pub mod fixtures;
pub mod logic;
pub mod models;
pub mod semantics;
pub mod transform;

pub use algebra::{Elem, FiniteAlgebra, Kind, Structure};
pub use models::{Q2Point, Rat};
