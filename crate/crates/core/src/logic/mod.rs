//! The logic qŁ*: formulas, the axiom catalog, the three rules, a proof
//! checker, and generators that expand derived equivalences into primitive
//! proofs.

pub mod builder;
pub mod combinators;
mod formula;
pub mod library;
mod proof;
mod schema;

pub use builder::{Bi, ProofBuilder};
pub use combinators::{biconditional_of, Combinator, CombinatorError};
pub use formula::{Formula, FormulaError, Step};
pub use proof::{
    check_proof, check_proof_from, Justification, Kernel, ProofError, ProofErrorKind, ProofLine, ProofScript,
    ScriptParseError, Verified,
};
pub use schema::{match_pattern, match_schema, schema, schemas, AxiomSchema, Substitution};
