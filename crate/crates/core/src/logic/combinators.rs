//! Generators for the standard derived equivalences of the calculus. Each one
//! takes verified scripts and returns a single primitive script whose goals
//! are the two halves of the resulting biconditional (or pair of them).

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::builder::{Bi, ProofBuilder};
use super::formula::{Formula, Step};
use super::proof::{check_proof, ProofError, ProofScript};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CombinatorError {
    #[error("input does not verify: {0}")]
    Unverified(#[from] ProofError),
    #[error("input does not prove a biconditional")]
    NotBiconditional,
    #[error("inputs do not chain: {0} differs from {1}")]
    Mismatch(Formula, Formula),
    #[error("no subformula {sub} at that path in {context}")]
    BadPath { context: Formula, sub: Formula },
    #[error("{name} takes {expected} input proof(s), got {got}")]
    Arity { name: &'static str, expected: usize, got: usize },
    #[error("unknown combinator `{0}`")]
    Unknown(String),
}

/// The biconditional a verified script proves: its two goals if they are
/// converse implications, else its last line `a→b` together with a line `b→a`.
pub fn biconditional_of(script: &ProofScript) -> Result<(Formula, Formula), CombinatorError> {
    let v = check_proof(script)?;
    let has = |f: &Formula| script.lines.iter().any(|l| &l.formula == f);
    let candidates = v.theorems();
    for c in &candidates {
        let Some((a, b)) = c.as_arrow() else { continue };
        let back = b.imp(a);
        if candidates.len() <= 2 && has(&back) && (candidates.len() == 1 || candidates.contains(&back)) {
            return Ok((a.clone(), b.clone()));
        }
    }
    Err(CombinatorError::NotBiconditional)
}

fn import_bi(b: &mut ProofBuilder, script: &ProofScript) -> Result<Bi, CombinatorError> {
    let (left, right) = biconditional_of(script)?;
    b.import(script);
    let fwd = b.line_of(&left.imp(&right)).expect("imported");
    let bwd = b.line_of(&right.imp(&left)).expect("imported");
    Ok(Bi { left, right, fwd, bwd })
}

fn finish(b: ProofBuilder, results: &[Bi], note: String) -> ProofScript {
    let goals = results
        .iter()
        .flat_map(|r| r.halves())
        .fold(Vec::new(), |mut acc, g| {
            if !acc.contains(&g) {
                acc.push(g);
            }
            acc
        });
    b.finish(goals, vec![note])
}

fn show(b: &Bi) -> String {
    format!("{} <-> {}", b.left, b.right)
}

fn single(name: &'static str, f: impl FnOnce(&mut ProofBuilder) -> Bi) -> ProofScript {
    let mut b = ProofBuilder::new();
    let r = f(&mut b);
    let n = format!("{name}: {}", show(&r));
    finish(b, &[r], n)
}

/// `p↔q` ⊢ `¬p↔¬q`.
pub fn cong_neg(input: &ProofScript) -> Result<ProofScript, CombinatorError> {
    let mut b = ProofBuilder::new();
    let h = import_bi(&mut b, input)?;
    let r = b.cong_neg(&h);
    let n = format!("cong-neg: {}", show(&r));
    Ok(finish(b, &[r], n))
}

/// `p↔q`, `r↔t` ⊢ `(p→r)↔(q→t)`.
pub fn cong_arrow(first: &ProofScript, second: &ProofScript) -> Result<ProofScript, CombinatorError> {
    let mut b = ProofBuilder::new();
    let x = import_bi(&mut b, first)?;
    let y = import_bi(&mut b, second)?;
    let r = b.cong_arrow(&x, &y);
    let n = format!("cong-arrow: {}", show(&r));
    Ok(finish(b, &[r], n))
}

/// `p↔q`, `q↔r` ⊢ `p↔r`.
pub fn trans(first: &ProofScript, second: &ProofScript) -> Result<ProofScript, CombinatorError> {
    let mut b = ProofBuilder::new();
    let x = import_bi(&mut b, first)?;
    let y = import_bi(&mut b, second)?;
    if x.right != y.left {
        return Err(CombinatorError::Mismatch(x.right, y.left));
    }
    let r = b.trans(&x, &y);
    let n = format!("trans: {}", show(&r));
    Ok(finish(b, &[r], n))
}

/// `¬(p→q) ↔ (¬p→¬q)`.
pub fn neg_arrow(p: &Formula, q: &Formula) -> ProofScript {
    single("neg-arrow", |b| b.neg_arrow(p, q))
}

/// `p ↔ p`.
pub fn refl(p: &Formula) -> ProofScript {
    single("refl", |b| b.refl(p))
}

/// `p₁↔r₁` ⊢ `p ↔ p[r₁/path]`, where `p₁` sits at `path` in `p`.
pub fn replace(input: &ProofScript, context: &Formula, path: &[Step]) -> Result<ProofScript, CombinatorError> {
    let mut b = ProofBuilder::new();
    let h = import_bi(&mut b, input)?;
    if context.at(path) != Some(&h.left) {
        return Err(CombinatorError::BadPath {
            context: context.clone(),
            sub: h.left,
        });
    }
    let r = b.replace(&h, context, path);
    let n = format!("replace: {}", show(&r));
    Ok(finish(b, &[r], n))
}

/// `(p→p) ↔ (q→q)`.
pub fn diag_eq(p: &Formula, q: &Formula) -> ProofScript {
    single("diag-eq", |b| b.diag_eq(p, q))
}

/// `¬¬(p→p) ↔ (p→p)`.
pub fn neg_diag(p: &Formula) -> ProofScript {
    single("neg-diag", |b| b.neg_diag(p))
}

/// `p ↔ ¬¬p`.
pub fn double_neg(p: &Formula) -> ProofScript {
    single("double-neg", |b| b.double_neg(p))
}

/// `(¬p→q) ↔ (¬q→p)`.
pub fn contrapose_neg(p: &Formula, q: &Formula) -> ProofScript {
    single("contrapose-neg", |b| b.contrapose_neg(p, q))
}

/// `(¬p)⁺ ↔ ¬p⁻` and `(¬p)⁻ ↔ ¬p⁺`.
pub fn pos_neg_swap(p: &Formula) -> ProofScript {
    let mut b = ProofBuilder::new();
    let plus = b.pos_of_neg(p);
    let minus = b.negpart_of_neg(p);
    let n = format!("pos-neg-swap: {} and {}", show(&plus), show(&minus));
    finish(b, &[plus, minus], n)
}

/// `p↔q` ⊢ `p⁺↔q⁺` and `p⁻↔q⁻`.
pub fn cong_pos_negpart(input: &ProofScript) -> Result<ProofScript, CombinatorError> {
    let mut b = ProofBuilder::new();
    let h = import_bi(&mut b, input)?;
    let plus = b.cong_pos(&h);
    let minus = b.cong_negpart_via_neg(&h);
    let n = format!("cong-pos-negpart: {} and {}", show(&plus), show(&minus));
    Ok(finish(b, &[plus, minus], n))
}

/// The combinators by name, for command-line use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Combinator {
    CongNeg,
    CongArrow,
    Trans,
    NegArrow,
    Refl,
    Replace,
    DiagEq,
    NegDiag,
    DoubleNeg,
    ContraposeNeg,
    PosNegSwap,
    CongPosNegpart,
}

impl Combinator {
    pub const ALL: [Combinator; 12] = [
        Combinator::CongNeg,
        Combinator::CongArrow,
        Combinator::Trans,
        Combinator::NegArrow,
        Combinator::Refl,
        Combinator::Replace,
        Combinator::DiagEq,
        Combinator::NegDiag,
        Combinator::DoubleNeg,
        Combinator::ContraposeNeg,
        Combinator::PosNegSwap,
        Combinator::CongPosNegpart,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Combinator::CongNeg => "cong-neg",
            Combinator::CongArrow => "cong-arrow",
            Combinator::Trans => "trans",
            Combinator::NegArrow => "neg-arrow",
            Combinator::Refl => "refl",
            Combinator::Replace => "replace",
            Combinator::DiagEq => "diag-eq",
            Combinator::NegDiag => "neg-diag",
            Combinator::DoubleNeg => "double-neg",
            Combinator::ContraposeNeg => "contrapose-neg",
            Combinator::PosNegSwap => "pos-neg-swap",
            Combinator::CongPosNegpart => "cong-pos-negpart",
        }
    }

    /// Number of input proofs.
    pub fn inputs(self) -> usize {
        match self {
            Combinator::CongNeg | Combinator::Replace | Combinator::CongPosNegpart => 1,
            Combinator::CongArrow | Combinator::Trans => 2,
            _ => 0,
        }
    }

    /// Number of formula parameters (the replace context counts as one).
    pub fn params(self) -> usize {
        match self {
            Combinator::NegArrow | Combinator::DiagEq | Combinator::ContraposeNeg => 2,
            Combinator::Refl
            | Combinator::NegDiag
            | Combinator::DoubleNeg
            | Combinator::PosNegSwap
            | Combinator::Replace => 1,
            _ => 0,
        }
    }

    /// Runs the combinator. Missing formula parameters default to `p`, `q`;
    /// `replace` rewrites occurrence `occurrence` (0-based, outermost first)
    /// of the input's left side inside `params[0]`.
    pub fn run(
        self,
        inputs: &[ProofScript],
        params: &[Formula],
        occurrence: usize,
    ) -> Result<ProofScript, CombinatorError> {
        if inputs.len() != self.inputs() {
            return Err(CombinatorError::Arity {
                name: self.name(),
                expected: self.inputs(),
                got: inputs.len(),
            });
        }
        let defaults = [Formula::var("p"), Formula::var("q")];
        let arg = |i: usize| params.get(i).unwrap_or(&defaults[i]).clone();
        Ok(match self {
            Combinator::CongNeg => cong_neg(&inputs[0])?,
            Combinator::CongArrow => cong_arrow(&inputs[0], &inputs[1])?,
            Combinator::Trans => trans(&inputs[0], &inputs[1])?,
            Combinator::NegArrow => neg_arrow(&arg(0), &arg(1)),
            Combinator::Refl => refl(&arg(0)),
            Combinator::Replace => {
                let context = params.first().ok_or(CombinatorError::Arity {
                    name: "replace context",
                    expected: 1,
                    got: 0,
                })?;
                let (sub, _) = biconditional_of(&inputs[0])?;
                let path = context
                    .occurrences(&sub)
                    .into_iter()
                    .nth(occurrence)
                    .ok_or_else(|| CombinatorError::BadPath {
                        context: context.clone(),
                        sub: sub.clone(),
                    })?;
                replace(&inputs[0], context, &path)?
            }
            Combinator::DiagEq => diag_eq(&arg(0), &arg(1)),
            Combinator::NegDiag => neg_diag(&arg(0)),
            Combinator::DoubleNeg => double_neg(&arg(0)),
            Combinator::ContraposeNeg => contrapose_neg(&arg(0), &arg(1)),
            Combinator::PosNegSwap => pos_neg_swap(&arg(0)),
            Combinator::CongPosNegpart => cong_pos_negpart(&inputs[0])?,
        })
    }
}

impl fmt::Display for Combinator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Combinator {
    type Err = CombinatorError;
    fn from_str(s: &str) -> Result<Combinator, CombinatorError> {
        Combinator::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| CombinatorError::Unknown(s.to_string()))
    }
}
