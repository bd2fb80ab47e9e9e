use std::fmt;

use serde::Serialize;

use crate::algebra::{AlgebraError, Elem, FiniteAlgebra, Kind};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum FilterClause {
    F1,
    F2,
    F3,
}

/// Verdicts of the three filter clauses; each failure names a witness.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FilterReport {
    pub f1: Result<(), String>,
    pub f2: Result<(), String>,
    pub f3: Result<(), String>,
}

impl FilterReport {
    pub fn passed(&self) -> bool {
        self.f1.is_ok() && self.f2.is_ok() && self.f3.is_ok()
    }

    pub fn clauses(&self) -> [(FilterClause, &Result<(), String>); 3] {
        [
            (FilterClause::F1, &self.f1),
            (FilterClause::F2, &self.f2),
            (FilterClause::F3, &self.f3),
        ]
    }
}

impl fmt::Display for FilterReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, r)) in self.clauses().into_iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            match r {
                Ok(()) => write!(f, "PASS {c:?}")?,
                Err(w) => write!(f, "FAIL {c:?}: {w}")?,
            }
        }
        Ok(())
    }
}

/// Checks a subset of an mv algebra against the filter clauses, with
/// `x⁺ = 1⊕(−1⊕x)` and `y⊖x = y⊕(−x)`:
///
/// * F1: `x⁺ ∈ F` for every `x`;
/// * F2: `x ∈ F` and `y⊖x ∈ F` imply `y ∈ F`;
/// * F3: `x⊕y ∈ F` implies `(x⊕t)⊕(y⊖t) ∈ F` for every `t`.
pub fn check_filter(alg: &FiniteAlgebra, set: &[Elem]) -> Result<FilterReport, AlgebraError> {
    alg.require_kind(&[Kind::Mv])?;
    let mut member = vec![false; alg.size()];
    for e in set {
        member[e.0] = true;
    }
    let inf = |e: Elem| member[e.0];
    let name = |e: Elem| alg.name(e);
    let one = alg.one_elem();
    let m1 = alg.negate(one);
    let ominus = |y: Elem, x: Elem| alg.op(y, alg.negate(x));

    let f1 = match alg.elements().find(|&x| !inf(alg.op(one, alg.op(m1, x)))) {
        Some(x) => Err(format!(
            "{}^+ = {} is missing",
            name(x),
            name(alg.op(one, alg.op(m1, x)))
        )),
        None => Ok(()),
    };

    let mut f2 = Ok(());
    'f2: for x in alg.elements().filter(|&x| inf(x)) {
        for y in alg.elements() {
            if inf(ominus(y, x)) && !inf(y) {
                f2 = Err(format!(
                    "x={} and y⊖x={} are in F but y={} is not",
                    name(x),
                    name(ominus(y, x)),
                    name(y)
                ));
                break 'f2;
            }
        }
    }

    let mut f3 = Ok(());
    'f3: for x in alg.elements() {
        for y in alg.elements().filter(|&y| inf(alg.op(x, y))) {
            for t in alg.elements() {
                let v = alg.op(alg.op(x, t), ominus(y, t));
                if !inf(v) {
                    f3 = Err(format!(
                        "x={}, y={}, t={}: x⊕y is in F but (x⊕t)⊕(y⊖t)={} is not",
                        name(x),
                        name(y),
                        name(t),
                        name(v)
                    ));
                    break 'f3;
                }
            }
        }
    }

    Ok(FilterReport { f1, f2, f3 })
}
