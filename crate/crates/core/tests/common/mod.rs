#![allow(dead_code)]

use std::path::PathBuf;

use qstar_core::logic::combinators::{double_neg, refl};
use qstar_core::{Elem, FiniteAlgebra, Structure};
use qstar_core::logic::{check_proof, Combinator, Formula, ProofScript};
use rand::Rng;

pub fn f(s: &str) -> Formula {
    Formula::parse(s).unwrap_or_else(|e| panic!("{s}: {e}"))
}

pub fn repo_root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

pub fn proofs_dir() -> PathBuf {
    repo_root().join("fixtures/proofs")
}

/// Formula over `vars` without the constant, so that a generated context
/// cannot contain a given subformula by accident.
pub fn small_formula<R: Rng>(rng: &mut R, depth: usize, vars: &[&str]) -> Formula {
    if depth == 0 || rng.random_ratio(1, 3) {
        return Formula::var(vars[rng.random_range(0..vars.len())]);
    }
    match rng.random_range(0..5) {
        0 => small_formula(rng, depth - 1, vars).neg(),
        1 => small_formula(rng, depth - 1, vars).pos(),
        2 => small_formula(rng, depth - 1, vars).negpart(),
        _ => small_formula(rng, depth - 1, vars).imp(&small_formula(rng, depth - 1, vars)),
    }
}

fn leaf<R: Rng>(rng: &mut R) -> Formula {
    if rng.random_ratio(1, 6) {
        Formula::one()
    } else {
        small_formula(rng, 2, &["p", "q", "r"])
    }
}

/// A verified biconditional `a <-> b` together with `a` and `b`, worked out
/// from the shape each nullary combinator is documented to prove.
pub fn random_input<R: Rng>(rng: &mut R) -> (ProofScript, Formula, Formula) {
    let x = leaf(rng);
    let y = leaf(rng);
    let (c, a, b) = match rng.random_range(0..6) {
        0 => (Combinator::Refl, x.clone(), x.clone()),
        1 => (Combinator::NegArrow, x.imp(&y).neg(), x.neg().imp(&y.neg())),
        2 => (Combinator::DiagEq, x.imp(&x), y.imp(&y)),
        3 => (Combinator::NegDiag, x.imp(&x).neg().neg(), x.imp(&x)),
        4 => (Combinator::DoubleNeg, x.clone(), x.neg().neg()),
        _ => (Combinator::ContraposeNeg, x.neg().imp(&y), y.neg().imp(&x)),
    };
    let script = c.run(&[], &[x, y], 0).expect("nullary combinators are total");
    (script, a, b)
}

fn halves(pairs: &[(Formula, Formula)]) -> Vec<Formula> {
    let mut out = Vec::new();
    for (a, b) in pairs {
        for g in [a.imp(b), b.imp(a)] {
            if !out.contains(&g) {
                out.push(g);
            }
        }
    }
    out
}

/// One random combinator application; returns a description of the failure.
pub fn combinator_trial<R: Rng>(rng: &mut R, c: Combinator) -> Result<(), String> {
    let (inputs, params, occurrence, expected): (Vec<ProofScript>, Vec<Formula>, usize, Vec<(Formula, Formula)>) =
        match c {
            Combinator::CongNeg => {
                let (s, a, b) = random_input(rng);
                (vec![s], vec![], 0, vec![(a.neg(), b.neg())])
            }
            Combinator::CongArrow => {
                let (s, a, b) = random_input(rng);
                let (t, x, y) = random_input(rng);
                (vec![s, t], vec![], 0, vec![(a.imp(&x), b.imp(&y))])
            }
            Combinator::Trans => {
                let (s, a, b) = random_input(rng);
                let (t, c2) = if rng.random_bool(0.5) {
                    (refl(&b), b.clone())
                } else {
                    (double_neg(&b), b.neg().neg())
                };
                (vec![s, t], vec![], 0, vec![(a, c2)])
            }
            Combinator::CongPosNegpart => {
                let (s, a, b) = random_input(rng);
                (vec![s], vec![], 0, vec![(a.pos(), b.pos()), (a.negpart(), b.negpart())])
            }
            Combinator::Replace => {
                let (s, a, b) = random_input(rng);
                let hole = small_formula(rng, 3, &["u", "w", "hole"]);
                let hole = if hole.vars().contains(&"hole".to_string()) { hole } else { hole.imp(&Formula::var("hole")) };
                let fill = |with: &Formula| hole.substitute(&|v| (v == "hole").then(|| with.clone()));
                let (ctx, out) = (fill(&a), fill(&b));
                let occ = rng.random_range(0..ctx.occurrences(&a).len());
                let target = if ctx.occurrences(&a).len() == 1 {
                    out
                } else {
                    let path = &ctx.occurrences(&a)[occ];
                    ctx.replace_at(path, &b).unwrap()
                };
                (vec![s], vec![ctx.clone()], occ, vec![(ctx, target)])
            }
            _ => {
                let x = leaf(rng);
                let y = leaf(rng);
                let pairs = match c {
                    Combinator::NegArrow => vec![(x.imp(&y).neg(), x.neg().imp(&y.neg()))],
                    Combinator::Refl => vec![(x.clone(), x.clone())],
                    Combinator::DiagEq => vec![(x.imp(&x), y.imp(&y))],
                    Combinator::NegDiag => vec![(x.imp(&x).neg().neg(), x.imp(&x))],
                    Combinator::DoubleNeg => vec![(x.clone(), x.neg().neg())],
                    Combinator::ContraposeNeg => vec![(x.neg().imp(&y), y.neg().imp(&x))],
                    Combinator::PosNegSwap => vec![(x.neg().pos(), x.negpart().neg()), (x.neg().negpart(), x.pos().neg())],
                    _ => unreachable!(),
                };
                (vec![], vec![x, y], 0, pairs)
            }
        };
    let params = &params[..c.params().min(params.len())];
    let out = c.run(&inputs, params, occurrence).map_err(|e| format!("{c}: {e}"))?;
    let v = check_proof(&out).map_err(|e| format!("{c}: {e}\n{out}"))?;
    let want = halves(&expected);
    if v.goals != want {
        return Err(format!("{c}: goals {:?}, expected {:?}", v.goals, want));
    }
    Ok(())
}

/// Every partition of `0..n` as a label vector in restricted growth form.
pub fn all_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(i: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if i == n {
            out.push(cur.clone());
            return;
        }
        let max = cur.iter().copied().max().map_or(0, |m| m + 1);
        for l in 0..=max {
            cur.push(l);
            go(i + 1, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}

pub fn compatible(alg: &FiniteAlgebra, lab: &[usize]) -> bool {
    let el: Vec<Elem> = alg.elements().collect();
    let same = |x: Elem, y: Elem| lab[x.0] == lab[y.0];
    for &x in &el {
        for &y in &el {
            if !same(x, y) {
                continue;
            }
            if !same(alg.negate(x), alg.negate(y)) || !same(alg.pos(x), alg.pos(y)) || !same(alg.negpart(x), alg.negpart(y)) {
                return false;
            }
            for &z in &el {
                if !same(alg.op(x, z), alg.op(y, z)) || !same(alg.op(z, x), alg.op(z, y)) {
                    return false;
                }
            }
        }
    }
    true
}
