//! The defined order, regular elements, flatness and linearity.

use super::term::{LawTerm, Program};
use super::{AlgebraError, Elem, FiniteAlgebra, Kind};

/// `1→1` for w/qw algebras, after checking that `x→x` does not depend on `x`.
pub fn derived_zero(alg: &FiniteAlgebra) -> Result<Elem, AlgebraError> {
    alg.require_kind(&[Kind::W, Kind::Qw])?;
    let zero = alg.op(alg.one_elem(), alg.one_elem());
    let first = Elem(0);
    let d0 = alg.op(first, first);
    for y in alg.elements() {
        let d = alg.op(y, y);
        if d != d0 {
            return Err(AlgebraError::NonConstantDiagonal {
                op: "→",
                x: alg.name(first).to_string(),
                y: alg.name(y).to_string(),
                left: alg.name(d0).to_string(),
                right: alg.name(d).to_string(),
            });
        }
    }
    Ok(zero)
}

/// Zero of any kind: primitive for mv/qmv, derived (and checked) for w/qw.
pub fn zero_of(alg: &FiniteAlgebra) -> Result<Elem, AlgebraError> {
    match alg.zero_elem() {
        Some(z) => Ok(z),
        None => derived_zero(alg),
    }
}

/// Evaluator for `x∨y` in one algebra.
struct JoinProgram {
    prog: Program,
    root: usize,
}

impl JoinProgram {
    fn new(kind: Kind) -> Self {
        let mut prog = Program::new();
        let t = LawTerm::join(LawTerm::Var('x'), LawTerm::Var('y'));
        let root = prog
            .add(&t, kind, &['x', 'y'])
            .expect("join is defined in every kind");
        JoinProgram { prog, root }
    }

    fn eval(&self, alg: &FiniteAlgebra, x: Elem, y: Elem, regs: &mut Vec<Elem>) -> Elem {
        self.prog.run(alg, &[x, y], regs);
        regs[self.root]
    }
}

/// `x ≤ y` iff `x∨y = 0∘y`, with ∘ the binary operation of the kind.
pub fn leq(alg: &FiniteAlgebra, x: Elem, y: Elem) -> bool {
    JoinProgram::new(alg.kind()).eval(alg, x, y, &mut Vec::new()) == alg.regularize(y)
}

/// `m[x][y]` is `leq(x, y)`.
pub fn leq_matrix(alg: &FiniteAlgebra) -> Vec<Vec<bool>> {
    let j = JoinProgram::new(alg.kind());
    let mut regs = Vec::new();
    alg.elements()
        .map(|x| {
            alg.elements()
                .map(|y| j.eval(alg, x, y, &mut regs) == alg.regularize(y))
                .collect()
        })
        .collect()
}

/// Fixed points of `x ↦ 0∘x`.
pub fn regular_set(alg: &FiniteAlgebra) -> Vec<Elem> {
    alg.elements().filter(|&x| alg.regularize(x) == x).collect()
}

/// Whether `0 = 1`.
pub fn is_flat(alg: &FiniteAlgebra) -> Result<bool, AlgebraError> {
    Ok(zero_of(alg)? == alg.one_elem())
}

/// Whether any two elements are comparable.
pub fn is_linear(alg: &FiniteAlgebra) -> Result<bool, AlgebraError> {
    zero_of(alg)?;
    let m = leq_matrix(alg);
    let n = alg.size();
    Ok((0..n).all(|x| (0..n).all(|y| m[x][y] || m[y][x])))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Tables;

    fn two_elem_w(diag_constant: bool) -> FiniteAlgebra {
        // carrier {o, l}; o→o = o, l→l = o or l
        let ll = if diag_constant { 0 } else { 1 };
        FiniteAlgebra::new(
            Kind::W,
            vec!["o".into(), "l".into()],
            Tables {
                binary: vec![0, 1, 0, ll],
                neg: vec![0, 1],
                one: 1,
                ..Default::default()
            },
        )
        .unwrap()
    }

    #[test]
    fn derived_zero_detects_non_constant_diagonal() {
        assert_eq!(derived_zero(&two_elem_w(true)).unwrap(), Elem(0));
        assert!(matches!(
            derived_zero(&two_elem_w(false)),
            Err(AlgebraError::NonConstantDiagonal { .. })
        ));
    }
}
