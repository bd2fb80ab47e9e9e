//! Finite algebras given by operation tables, the term language used to
//! state their axioms, and exhaustive law checking.
//!
//! Four signatures are supported:
//!
//! | kind  | binary | unary            | constants |
//! |-------|--------|------------------|-----------|
//! | `mv`  | ⊕      | −                | 0, 1      |
//! | `qmv` | ⊕      | −, ⁺, ⁻          | 0, 1      |
//! | `w`   | →      | ¬                | 1         |
//! | `qw`  | →      | ¬, ⁺, ⁻          | 1         |
//!
//! In the plain kinds `⁺`/`⁻` are defined terms; in the implicative kinds
//! `0` is the defined term `1→1`.

pub mod catalog;
pub mod check;
pub mod format;
pub mod order;
pub mod props;
pub mod term;

use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

pub use check::{
    check_conditional_law, check_law, check_property, check_property_over, check_suite_over,
    check_theory, check_theory_over, CheckReport, CompiledProperty, Counterexample, Outcome,
    TheoryReport,
};
pub use catalog::Theory;
pub use format::{load_algebra, write_algebra, FormatError};
pub use order::{derived_zero, is_flat, is_linear, leq, leq_matrix, regular_set, zero_of};
pub use props::Suite;
pub use term::{eval_term, Atom, ConditionalLaw, Law, LawTerm, Property, TermError};

/// The signature an algebra is presented in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Mv,
    Qmv,
    W,
    Qw,
}

impl Kind {
    /// Kinds whose binary operation is → rather than ⊕.
    pub fn is_implicative(self) -> bool {
        matches!(self, Kind::W | Kind::Qw)
    }

    /// Kinds carrying primitive ⁺ and ⁻.
    pub fn is_quasi(self) -> bool {
        matches!(self, Kind::Qmv | Kind::Qw)
    }

    pub fn binary_name(self) -> &'static str {
        if self.is_implicative() {
            "arrow"
        } else {
            "plus"
        }
    }

    /// The kind on the other side of the term equivalence.
    pub fn dual(self) -> Kind {
        match self {
            Kind::Mv => Kind::W,
            Kind::Qmv => Kind::Qw,
            Kind::W => Kind::Mv,
            Kind::Qw => Kind::Qmv,
        }
    }

    /// The non-quasi kind with the same binary operation.
    pub fn plain(self) -> Kind {
        match self {
            Kind::Mv | Kind::Qmv => Kind::Mv,
            Kind::W | Kind::Qw => Kind::W,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Kind::Mv => "mv",
            Kind::Qmv => "qmv",
            Kind::W => "w",
            Kind::Qw => "qw",
        }
    }
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown algebra kind `{0}` (expected mv, qmv, w or qw)")]
pub struct UnknownKind(pub String);

impl FromStr for Kind {
    type Err = UnknownKind;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "mv" => Ok(Kind::Mv),
            "qmv" => Ok(Kind::Qmv),
            "w" => Ok(Kind::W),
            "qw" => Ok(Kind::Qw),
            other => Err(UnknownKind(other.to_string())),
        }
    }
}

/// Index of an element in the carrier of a [`FiniteAlgebra`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Elem(pub usize);

impl Elem {
    pub fn index(self) -> usize {
        self.0
    }
}

/// An interpretation of one of the four signatures.
///
/// Implemented by finite tables and by the exact-rational standard models.
/// Methods for operations outside `kind()`'s signature are never called on
/// expanded terms; implementations may panic there.
pub trait Structure {
    type Value: Copy + Eq + Hash + fmt::Debug + Send + Sync;

    fn kind(&self) -> Kind;
    fn one(&self) -> Self::Value;
    /// Primitive 0 (plain and quasi MV kinds only).
    fn zero(&self) -> Self::Value;
    /// ⊕ or →, depending on the kind.
    fn binary(&self, a: Self::Value, b: Self::Value) -> Self::Value;
    fn neg(&self, a: Self::Value) -> Self::Value;
    /// Primitive ⁺ (quasi kinds only).
    fn pos(&self, a: Self::Value) -> Self::Value;
    /// Primitive ⁻ (quasi kinds only).
    fn negpart(&self, a: Self::Value) -> Self::Value;

    /// Renders a value for reports.
    fn show(&self, v: Self::Value) -> String;
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("carrier is empty")]
    EmptyCarrier,
    #[error("duplicate element name `{0}`")]
    DuplicateElement(String),
    #[error("table `{table}` has {found} entries, expected {expected}")]
    TableSize {
        table: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("table `{table}` contains index {index} outside a carrier of size {size}")]
    OutOfRange {
        table: &'static str,
        index: usize,
        size: usize,
    },
    #[error("kind {kind} {requirement} table `{table}`")]
    Signature {
        kind: Kind,
        table: &'static str,
        requirement: &'static str,
    },
    #[error("operation requires kind {expected}, got {found}")]
    KindMismatch { expected: String, found: Kind },
    #[error("diagonal x{op}x is not constant: {x}{op}{x} = {left} but {y}{op}{y} = {right}")]
    NonConstantDiagonal {
        op: &'static str,
        x: String,
        y: String,
        left: String,
        right: String,
    },
    #[error("{0}")]
    NotRegular(String),
}

/// A finite algebra in one of the four signatures, stored as operation tables.
///
/// Tables are indexed by [`Elem`]; the binary table is row-major with the
/// left argument selecting the row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    kind: Kind,
    names: Vec<String>,
    binary: Vec<Elem>,
    neg: Vec<Elem>,
    pos: Option<Vec<Elem>>,
    negpart: Option<Vec<Elem>>,
    one: Elem,
    zero: Option<Elem>,
}

/// Raw table data for [`FiniteAlgebra::new`].
#[derive(Clone, Debug, Default)]
pub struct Tables {
    pub binary: Vec<usize>,
    pub neg: Vec<usize>,
    pub pos: Option<Vec<usize>>,
    pub negpart: Option<Vec<usize>>,
    pub one: usize,
    pub zero: Option<usize>,
}

impl FiniteAlgebra {
    pub fn new(kind: Kind, names: Vec<String>, tables: Tables) -> Result<Self, AlgebraError> {
        let n = names.len();
        if n == 0 {
            return Err(AlgebraError::EmptyCarrier);
        }
        for (i, name) in names.iter().enumerate() {
            if names[..i].contains(name) {
                return Err(AlgebraError::DuplicateElement(name.clone()));
            }
        }

        let check = |table: &'static str, v: &[usize], len: usize| {
            if v.len() != len {
                return Err(AlgebraError::TableSize {
                    table,
                    expected: len,
                    found: v.len(),
                });
            }
            match v.iter().find(|&&i| i >= n) {
                Some(&index) => Err(AlgebraError::OutOfRange {
                    table,
                    index,
                    size: n,
                }),
                None => Ok(v.iter().map(|&i| Elem(i)).collect::<Vec<_>>()),
            }
        };

        let binary = check(kind.binary_name(), &tables.binary, n * n)?;
        let neg = check("neg", &tables.neg, n)?;
        let one = check("one", &[tables.one], 1)?[0];

        let (pos, negpart) = match (kind.is_quasi(), tables.pos, tables.negpart) {
            (true, Some(p), Some(m)) => (Some(check("pos", &p, n)?), Some(check("negpart", &m, n)?)),
            (true, None, _) => return Err(sig(kind, "pos", "requires")),
            (true, _, None) => return Err(sig(kind, "negpart", "requires")),
            (false, Some(_), _) => return Err(sig(kind, "pos", "does not carry")),
            (false, _, Some(_)) => return Err(sig(kind, "negpart", "does not carry")),
            (false, None, None) => (None, None),
        };

        let zero = match (kind.is_implicative(), tables.zero) {
            (false, Some(z)) => Some(check("zero", &[z], 1)?[0]),
            (false, None) => return Err(sig(kind, "zero", "requires")),
            (true, Some(_)) => return Err(sig(kind, "zero", "does not carry")),
            (true, None) => None,
        };

        Ok(FiniteAlgebra {
            kind,
            names,
            binary,
            neg,
            pos,
            negpart,
            one,
            zero,
        })
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn size(&self) -> usize {
        self.names.len()
    }

    pub fn elements(&self) -> impl ExactSizeIterator<Item = Elem> + Clone {
        (0..self.size()).map(Elem)
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, e: Elem) -> &str {
        &self.names[e.0]
    }

    pub fn element(&self, name: &str) -> Option<Elem> {
        self.names.iter().position(|n| n == name).map(Elem)
    }

    pub fn op(&self, a: Elem, b: Elem) -> Elem {
        self.binary[a.0 * self.size() + b.0]
    }

    pub fn negate(&self, a: Elem) -> Elem {
        self.neg[a.0]
    }

    pub fn one_elem(&self) -> Elem {
        self.one
    }

    /// Primitive zero, present for `mv`/`qmv`.
    pub fn zero_elem(&self) -> Option<Elem> {
        self.zero
    }

    pub fn pos_table(&self) -> Option<&[Elem]> {
        self.pos.as_deref()
    }

    pub fn negpart_table(&self) -> Option<&[Elem]> {
        self.negpart.as_deref()
    }

    /// Raw tables, suitable for rebuilding the algebra with modifications.
    pub fn tables(&self) -> Tables {
        let raw = |v: &[Elem]| v.iter().map(|e| e.0).collect::<Vec<_>>();
        Tables {
            binary: raw(&self.binary),
            neg: raw(&self.neg),
            pos: self.pos.as_deref().map(raw),
            negpart: self.negpart.as_deref().map(raw),
            one: self.one.0,
            zero: self.zero.map(|z| z.0),
        }
    }

    /// Applies a unary primitive by name (`neg`, `pos`, `negpart`).
    pub(crate) fn unary_table(&self, name: &str) -> Option<&[Elem]> {
        match name {
            "neg" => Some(&self.neg),
            "pos" => self.pos.as_deref(),
            "negpart" => self.negpart.as_deref(),
            _ => None,
        }
    }

    /// Zero as an element: primitive for ⊕-kinds, `1→1` for →-kinds.
    pub fn zero_value(&self) -> Elem {
        match self.zero {
            Some(z) => z,
            None => self.op(self.one, self.one),
        }
    }

    /// `0⊕x` or `0→x`, the regularization of `x`.
    pub fn regularize(&self, x: Elem) -> Elem {
        self.op(self.zero_value(), x)
    }

    pub fn require_kind(&self, allowed: &[Kind]) -> Result<(), AlgebraError> {
        if allowed.contains(&self.kind) {
            Ok(())
        } else {
            Err(AlgebraError::KindMismatch {
                expected: allowed
                    .iter()
                    .map(|k| k.as_str())
                    .collect::<Vec<_>>()
                    .join("|"),
                found: self.kind,
            })
        }
    }
}

fn sig(kind: Kind, table: &'static str, requirement: &'static str) -> AlgebraError {
    AlgebraError::Signature {
        kind,
        table,
        requirement,
    }
}

impl Structure for FiniteAlgebra {
    type Value = Elem;

    fn kind(&self) -> Kind {
        self.kind
    }

    fn one(&self) -> Elem {
        self.one
    }

    fn zero(&self) -> Elem {
        self.zero.expect("primitive zero requested from an implicative algebra")
    }

    fn binary(&self, a: Elem, b: Elem) -> Elem {
        self.op(a, b)
    }

    fn neg(&self, a: Elem) -> Elem {
        self.neg[a.0]
    }

    fn pos(&self, a: Elem) -> Elem {
        self.pos.as_ref().expect("primitive pos requested from a plain algebra")[a.0]
    }

    fn negpart(&self, a: Elem) -> Elem {
        self.negpart.as_ref().expect("primitive negpart requested from a plain algebra")[a.0]
    }

    fn show(&self, v: Elem) -> String {
        self.names[v.0].clone()
    }
}
