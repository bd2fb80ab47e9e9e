//! Shipped fixtures, embedded at compile time from the repository's
//! `fixtures/` directory.

use crate::algebra::{load_algebra, FiniteAlgebra};

pub const QMV7: &str = include_str!("../../../fixtures/qmv7.alg");
pub const QMV7_MUTATED: &str = include_str!("../../../fixtures/qmv7_mutated.alg");

/// The seven-element quasi-MV* algebra.
pub fn qmv7() -> FiniteAlgebra {
    load_algebra(QMV7).expect("shipped fixture parses")
}

/// The same algebra with `plus(a,d)` changed from `b` to `a`.
pub fn qmv7_mutated() -> FiniteAlgebra {
    load_algebra(QMV7_MUTATED).expect("shipped fixture parses")
}

/// Every shipped proof script as `(file stem, text)`.
pub const PROOFS: &[(&str, &str)] = &[
    ("cong_neg", include_str!("../../../fixtures/proofs/cong_neg.prf")),
    ("cong_arrow", include_str!("../../../fixtures/proofs/cong_arrow.prf")),
    ("trans", include_str!("../../../fixtures/proofs/trans.prf")),
    ("neg_arrow", include_str!("../../../fixtures/proofs/neg_arrow.prf")),
    ("refl", include_str!("../../../fixtures/proofs/refl.prf")),
    ("replace_atom", include_str!("../../../fixtures/proofs/replace_atom.prf")),
    ("replace_neg", include_str!("../../../fixtures/proofs/replace_neg.prf")),
    ("replace_pos", include_str!("../../../fixtures/proofs/replace_pos.prf")),
    ("replace_negpart", include_str!("../../../fixtures/proofs/replace_negpart.prf")),
    ("replace_arrow_atom", include_str!("../../../fixtures/proofs/replace_arrow_atom.prf")),
    ("replace_deep_neg", include_str!("../../../fixtures/proofs/replace_deep_neg.prf")),
    ("replace_deep_pos", include_str!("../../../fixtures/proofs/replace_deep_pos.prf")),
    ("replace_deep_negpart", include_str!("../../../fixtures/proofs/replace_deep_negpart.prf")),
    ("replace_deep_left", include_str!("../../../fixtures/proofs/replace_deep_left.prf")),
    ("replace_deep_right", include_str!("../../../fixtures/proofs/replace_deep_right.prf")),
    ("diag_eq", include_str!("../../../fixtures/proofs/diag_eq.prf")),
    ("neg_diag", include_str!("../../../fixtures/proofs/neg_diag.prf")),
    ("double_neg", include_str!("../../../fixtures/proofs/double_neg.prf")),
    ("contrapose_neg", include_str!("../../../fixtures/proofs/contrapose_neg.prf")),
    ("pos_neg_swap", include_str!("../../../fixtures/proofs/pos_neg_swap.prf")),
    ("cong_pos_negpart", include_str!("../../../fixtures/proofs/cong_pos_negpart.prf")),
    ("plus_zero", include_str!("../../../fixtures/proofs/plus_zero.prf")),
    ("pos_filter", include_str!("../../../fixtures/proofs/pos_filter.prf")),
    ("rule_r1", include_str!("../../../fixtures/proofs/rule_r1.prf")),
    ("rule_r3", include_str!("../../../fixtures/proofs/rule_r3.prf")),
];
