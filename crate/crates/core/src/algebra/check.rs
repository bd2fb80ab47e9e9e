//! Exhaustive law checking.
//!
//! Assignments are enumerated in lexicographic order of value indices, the
//! first metavariable (in `x y z u v t` order) being most significant. Work is
//! split across threads by the value of the first metavariable; the reported
//! counterexample is always the lexicographically first one.

use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::catalog::Theory;
use super::term::{Atom, ConditionalLaw, Law, Program, Property, TermError};
use super::{FiniteAlgebra, Kind, Structure};

/// A failing assignment together with both sides of the failing atom.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub assignment: Vec<(char, String)>,
    /// The atom that failed, as written.
    pub atom: String,
    pub left: String,
    pub right: String,
}

impl fmt::Display for Counterexample {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (c, v)) in self.assignment.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}={v}")?;
        }
        if self.assignment.is_empty() {
            f.write_str("(no variables)")?;
        }
        write!(f, ": {} gives {} vs {}", self.atom, self.left, self.right)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "lowercase")]
pub enum Outcome {
    Pass,
    Fail(Counterexample),
}

/// The result of checking one law over a domain.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub law: String,
    pub kind: Kind,
    pub arity: usize,
    /// Assignments examined, up to and including the first failure.
    pub visited: u64,
    /// Assignments satisfying every premise (conditional laws only).
    pub premises_satisfied: Option<u64>,
    pub outcome: Outcome,
}

impl CheckReport {
    pub fn passed(&self) -> bool {
        self.outcome == Outcome::Pass
    }

    pub fn counterexample(&self) -> Option<&Counterexample> {
        match &self.outcome {
            Outcome::Pass => None,
            Outcome::Fail(c) => Some(c),
        }
    }
}

impl fmt::Display for CheckReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            Outcome::Pass => {
                write!(f, "PASS {} ({} assignments", self.law, self.visited)?;
                if let Some(s) = self.premises_satisfied {
                    write!(f, ", {s} with premises satisfied")?;
                }
                f.write_str(")")
            }
            Outcome::Fail(c) => write!(f, "FAIL {} at {c}", self.law),
        }
    }
}

/// Reports for every law of a theory.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TheoryReport {
    pub theory: String,
    pub reports: Vec<CheckReport>,
}

impl TheoryReport {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(CheckReport::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckReport> {
        self.reports.iter().filter(|r| !r.passed())
    }
}

struct CompiledAtom {
    text: String,
    prog: Program,
    left: usize,
    right: usize,
}

impl CompiledAtom {
    fn new(atom: &Atom, kind: Kind, vars: &[char]) -> Result<Self, TermError> {
        let (l, r) = atom.as_equation(kind);
        let mut prog = Program::new();
        let left = prog.add(&l, kind, vars)?;
        let right = prog.add(&r, kind, vars)?;
        Ok(CompiledAtom {
            text: atom.to_string(),
            prog,
            left,
            right,
        })
    }
}

/// Verdict of a property at one assignment.
pub(crate) enum Verdict<V> {
    Vacuous,
    Holds,
    Fails { left: V, right: V },
}

/// A property compiled for evaluation in structures of one kind.
pub struct CompiledProperty {
    name: String,
    kind: Kind,
    vars: Vec<char>,
    conditional: bool,
    premises: Vec<CompiledAtom>,
    conclusion: CompiledAtom,
}

impl CompiledProperty {
    pub fn new(prop: &Property) -> Result<Self, TermError> {
        let (name, kind, vars, premises, conclusion, conditional) = match prop {
            Property::Equation(Law {
                name,
                kind,
                left,
                right,
                vars,
            }) => (
                name,
                *kind,
                vars,
                Vec::new(),
                Atom::Eq(left.clone(), right.clone()),
                false,
            ),
            Property::Conditional(ConditionalLaw {
                name,
                kind,
                premises,
                conclusion,
                vars,
            }) => (name, *kind, vars, premises.clone(), conclusion.clone(), true),
        };
        Ok(CompiledProperty {
            name: name.clone(),
            kind,
            vars: vars.clone(),
            conditional,
            premises: premises
                .iter()
                .map(|a| CompiledAtom::new(a, kind, vars))
                .collect::<Result<_, _>>()?,
            conclusion: CompiledAtom::new(&conclusion, kind, vars)?,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }

    pub fn vars(&self) -> &[char] {
        &self.vars
    }

    pub fn is_conditional(&self) -> bool {
        self.conditional
    }

    pub(crate) fn verdict<S: Structure>(
        &self,
        s: &S,
        vals: &[S::Value],
        regs: &mut Vec<S::Value>,
    ) -> Verdict<S::Value> {
        for p in &self.premises {
            p.prog.run(s, vals, regs);
            if regs[p.left] != regs[p.right] {
                return Verdict::Vacuous;
            }
        }
        let c = &self.conclusion;
        c.prog.run(s, vals, regs);
        if regs[c.left] == regs[c.right] {
            Verdict::Holds
        } else {
            Verdict::Fails {
                left: regs[c.left],
                right: regs[c.right],
            }
        }
    }

    pub(crate) fn counterexample<S: Structure>(
        &self,
        s: &S,
        vals: &[S::Value],
        left: S::Value,
        right: S::Value,
    ) -> Counterexample {
        Counterexample {
            assignment: self
                .vars
                .iter()
                .zip(vals)
                .map(|(c, v)| (*c, s.show(*v)))
                .collect(),
            atom: self.conclusion.text.clone(),
            left: s.show(left),
            right: s.show(right),
        }
    }

    pub(crate) fn report(
        &self,
        visited: u64,
        satisfied: u64,
        outcome: Outcome,
    ) -> CheckReport {
        CheckReport {
            law: self.name.clone(),
            kind: self.kind,
            arity: self.arity(),
            visited,
            premises_satisfied: self.conditional.then_some(satisfied),
            outcome,
        }
    }

    /// Checks the property at every assignment drawn from `domain`, in
    /// lexicographic order.
    pub fn check_over<S>(&self, s: &S, domain: &[S::Value]) -> Result<CheckReport, TermError>
    where
        S: Structure + Sync,
    {
        if s.kind() != self.kind {
            return Err(TermError::KindMismatch {
                law: self.name.clone(),
                law_kind: self.kind,
                kind: s.kind(),
            });
        }
        let n = domain.len() as u64;
        let k = self.arity();
        if k == 0 || n == 0 {
            return Ok(self.scan_block(s, domain, 0, 1.min(n.pow(k as u32))));
        }
        let block = n.pow(k as u32 - 1);
        let parts: Vec<(u64, u64, Option<Counterexample>)> = (0..n)
            .into_par_iter()
            .map(|first| {
                let r = self.scan_block(s, domain, first * block, block);
                let cex = r.counterexample().cloned();
                (r.visited, r.premises_satisfied.unwrap_or(0), cex)
            })
            .collect();
        let mut visited = 0;
        let mut satisfied = 0;
        for (v, sat, cex) in parts {
            visited += v;
            satisfied += sat;
            if let Some(c) = cex {
                return Ok(self.report(visited, satisfied, Outcome::Fail(c)));
            }
        }
        Ok(self.report(visited, satisfied, Outcome::Pass))
    }

    /// Scans `count` consecutive assignments starting at linear index `start`.
    fn scan_block<S: Structure>(
        &self,
        s: &S,
        domain: &[S::Value],
        start: u64,
        count: u64,
    ) -> CheckReport {
        let n = domain.len() as u64;
        let k = self.arity();
        let mut digits = vec![0usize; k];
        let mut rest = start;
        for d in digits.iter_mut().rev() {
            *d = (rest % n.max(1)) as usize;
            rest /= n.max(1);
        }
        let mut vals: Vec<S::Value> = digits.iter().map(|&d| domain[d]).collect();
        let mut regs = Vec::new();
        let mut satisfied = 0;
        for i in 0..count {
            match self.verdict(s, &vals, &mut regs) {
                Verdict::Vacuous => {}
                Verdict::Holds => satisfied += 1,
                Verdict::Fails { left, right, .. } => {
                    let cex = self.counterexample(s, &vals, left, right);
                    return self.report(i + 1, satisfied + 1, Outcome::Fail(cex));
                }
            }
            // advance the odometer
            for pos in (0..k).rev() {
                digits[pos] += 1;
                if (digits[pos] as u64) < n {
                    vals[pos] = domain[digits[pos]];
                    break;
                }
                digits[pos] = 0;
                vals[pos] = domain[0];
            }
        }
        self.report(count, satisfied, Outcome::Pass)
    }
}

/// Checks a property at every assignment of values from `domain`.
pub fn check_property_over<S>(
    s: &S,
    prop: &Property,
    domain: &[S::Value],
) -> Result<CheckReport, TermError>
where
    S: Structure + Sync,
{
    CompiledProperty::new(prop)?.check_over(s, domain)
}

fn carrier(alg: &FiniteAlgebra) -> Vec<super::Elem> {
    alg.elements().collect()
}

/// Checks `law` at all `|carrier|^arity` assignments.
pub fn check_law(alg: &FiniteAlgebra, law: &Law) -> Result<CheckReport, TermError> {
    check_property(alg, &Property::Equation(law.clone()))
}

/// Checks a conditional law at all assignments, counting those that satisfy
/// the premises.
pub fn check_conditional_law(
    alg: &FiniteAlgebra,
    claw: &ConditionalLaw,
) -> Result<CheckReport, TermError> {
    check_property(alg, &Property::Conditional(claw.clone()))
}

pub fn check_property(alg: &FiniteAlgebra, prop: &Property) -> Result<CheckReport, TermError> {
    check_property_over(alg, prop, &carrier(alg))
}

/// Checks every law of `theory`; the theory's kind must match the algebra's.
pub fn check_theory(alg: &FiniteAlgebra, theory: &Theory) -> Result<TheoryReport, TermError> {
    check_theory_over(alg, theory, &carrier(alg))
}

pub fn check_theory_over<S>(
    s: &S,
    theory: &Theory,
    domain: &[S::Value],
) -> Result<TheoryReport, TermError>
where
    S: Structure + Sync,
{
    if theory.kind != s.kind() {
        return Err(TermError::KindMismatch {
            law: theory.name.to_string(),
            law_kind: theory.kind,
            kind: s.kind(),
        });
    }
    let reports = theory
        .laws
        .iter()
        .map(|l| check_property_over(s, &Property::Equation(l.clone()), domain))
        .collect::<Result<_, _>>()?;
    Ok(TheoryReport {
        theory: theory.name.to_string(),
        reports,
    })
}

/// Checks a list of properties, e.g. one of the derived-property suites.
pub fn check_suite_over<S>(
    s: &S,
    suite: &[Property],
    domain: &[S::Value],
) -> Result<Vec<CheckReport>, TermError>
where
    S: Structure + Sync,
{
    suite
        .iter()
        .map(|p| check_property_over(s, p, domain))
        .collect()
}
