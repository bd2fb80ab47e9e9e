//! Valuations of formulas in `[-1,1]²`, tautology testing by sampling, and
//! the soundness harness that ties the proof kernel to the standard model.
//!
//! Evaluation delegates to [`RstarQw`]; this module adds no arithmetic of its
//! own.

mod fuzz;
pub mod random;

use std::collections::BTreeMap;
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::Structure;
use crate::logic::Formula;
use crate::models::{Q2Point, Rat, RstarQw, SampleError, SampleValue, Sampler, GRID_LIMIT};

pub use fuzz::{
    axiom_audit, generate_proof, rule_preservation_check, soundness_fuzz, AuditEntry, FuzzConfig, FuzzReport, RuleReport,
    RuleTally, Violation,
};

/// Variable name to point.
pub type Valuation = BTreeMap<String, Q2Point>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("valuation does not cover variable `{0}`")]
pub struct UnboundVariable(pub String);

/// `v*(f)`, computed with the operations of [`RstarQw`].
pub fn evaluate(f: &Formula, v: &Valuation) -> Result<Q2Point, UnboundVariable> {
    eval_with(f, &|name| v.get(name).copied())
}

fn eval_with(f: &Formula, lookup: &dyn Fn(&str) -> Option<Q2Point>) -> Result<Q2Point, UnboundVariable> {
    let m = RstarQw;
    Ok(match f {
        Formula::Var(name) => lookup(name).ok_or_else(|| UnboundVariable(name.to_string()))?,
        Formula::One => m.one(),
        Formula::Neg(a) => m.neg(eval_with(a, lookup)?),
        Formula::Pos(a) => m.pos(eval_with(a, lookup)?),
        Formula::NegPart(a) => m.negpart(eval_with(a, lookup)?),
        Formula::Arrow(a, b) => m.arrow(eval_with(a, lookup)?, eval_with(b, lookup)?),
    })
}

/// Evaluation against values listed in the order of `vars`.
pub(crate) fn eval_at(f: &Formula, vars: &[String], vals: &[Q2Point]) -> Q2Point {
    eval_with(f, &|name| vars.iter().position(|v| v == name).map(|i| vals[i]))
        .expect("sampled valuations cover every variable")
}

/// Membership in `[0,1]×[0,1]`.
pub fn is_designated(x: Q2Point) -> bool {
    let unit = |r: Rat| r >= Rat::ZERO && r <= Rat::ONE;
    unit(x.first) && unit(x.second)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum FalsifyOutcome {
    NoCounterexample,
    Counterexample {
        #[serde(serialize_with = "ser_valuation")]
        valuation: Vec<(String, Q2Point)>,
        value: Q2Point,
    },
}

fn ser_valuation<S: serde::Serializer>(v: &[(String, Q2Point)], s: S) -> Result<S::Ok, S::Error> {
    use serde::ser::SerializeMap;
    let mut m = s.serialize_map(Some(v.len()))?;
    for (k, p) in v {
        m.serialize_entry(k, &p.to_string())?;
    }
    m.end()
}

/// Result of a sampling search for a non-designated value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FalsifyReport {
    #[serde(serialize_with = "ser_formula")]
    pub formula: Formula,
    pub sampler: Sampler,
    /// Valuations evaluated before stopping.
    pub samples: u64,
    pub outcome: FalsifyOutcome,
}

fn ser_formula<S: serde::Serializer>(f: &Formula, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(&f.to_string())
}

impl FalsifyReport {
    pub fn passed(&self) -> bool {
        self.outcome == FalsifyOutcome::NoCounterexample
    }
}

impl fmt::Display for FalsifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.outcome {
            FalsifyOutcome::NoCounterexample => write!(
                f,
                "NO COUNTEREXAMPLE {} in {} samples ({}); sampling does not prove a tautology",
                self.formula, self.samples, self.sampler
            ),
            FalsifyOutcome::Counterexample { valuation, value } => {
                write!(f, "COUNTEREXAMPLE {} AT ", self.formula)?;
                for (i, (k, p)) in valuation.iter().enumerate() {
                    write!(f, "{}{k}={p}", if i == 0 { "" } else { "; " })?;
                }
                write!(f, " VALUE {value}")
            }
        }
    }
}

/// Searches for a valuation at which `f` is not designated. Variables are
/// taken in sorted order; grid mode visits valuations lexicographically with
/// the first variable most significant and reports the least failure, random
/// mode reports the first failure in draw order.
pub fn falsify(f: &Formula, sampler: Sampler) -> Result<FalsifyReport, SampleError> {
    falsify_from(&[], f, sampler)
}

/// As [`falsify`], but a valuation only counts against `f` if it designates
/// every formula of `hypotheses`.
pub fn falsify_from(hypotheses: &[Formula], f: &Formula, sampler: Sampler) -> Result<FalsifyReport, SampleError> {
    sampler.validate()?;
    let mut vars = f.vars();
    for h in hypotheses {
        vars.extend(h.vars());
    }
    vars.sort();
    vars.dedup();
    let fails = |vals: &[Q2Point]| -> Option<Q2Point> {
        if !hypotheses.iter().all(|h| is_designated(eval_at(h, &vars, vals))) {
            return None;
        }
        let x = eval_at(f, &vars, vals);
        (!is_designated(x)).then_some(x)
    };
    let k = vars.len();
    let (samples, hit) = match sampler {
        Sampler::Grid { denominator } => {
            let grid = Q2Point::grid(denominator);
            let n = grid.len() as u64;
            let total = n.checked_pow(k as u32).filter(|&t| t <= GRID_LIMIT).ok_or_else(|| SampleError::TooLarge {
                law: f.to_string(),
                needed: n.saturating_pow(k as u32),
                limit: GRID_LIMIT,
            })?;
            let decode = |mut i: u64| -> Vec<Q2Point> {
                let mut out = vec![Q2Point::ZERO; k];
                for slot in out.iter_mut().rev() {
                    *slot = grid[(i % n) as usize];
                    i /= n;
                }
                out
            };
            // blocks by first variable; the least failing index wins
            let block = if k == 0 { 1 } else { total / n };
            let blocks = if k == 0 { 1 } else { n };
            let hit = (0..blocks)
                .into_par_iter()
                .map(|b| {
                    (b * block..(b + 1) * block).find_map(|i| {
                        let vals = decode(i);
                        fails(&vals).map(|x| (i, vals, x))
                    })
                })
                .find_first(Option::is_some)
                .flatten();
            match hit {
                Some((i, vals, x)) => (i + 1, Some((vals, x))),
                None => (total, None),
            }
        }
        Sampler::Random { count, seed, bound } => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let draws: Vec<Vec<Q2Point>> = (0..count)
                .map(|_| (0..k).map(|_| Q2Point::draw(&mut rng, bound)).collect())
                .collect();
            let hit = draws
                .par_iter()
                .enumerate()
                .find_first(|(_, vals)| fails(vals).is_some())
                .map(|(i, vals)| (i as u64, vals.clone(), fails(vals).expect("failed above")));
            match hit {
                Some((i, vals, x)) => (i + 1, Some((vals, x))),
                None => (count, None),
            }
        }
    };
    let outcome = match hit {
        None => FalsifyOutcome::NoCounterexample,
        Some((vals, value)) => FalsifyOutcome::Counterexample {
            valuation: vars.iter().cloned().zip(vals).collect(),
            value,
        },
    };
    Ok(FalsifyReport {
        formula: f.clone(),
        sampler,
        samples,
        outcome,
    })
}
