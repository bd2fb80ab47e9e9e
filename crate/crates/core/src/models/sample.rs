//! Falsification of laws over the infinite models by grid or random sampling.
//!
//! Sampling never proves a law. A passing report only says that no
//! counterexample occurred among the samples drawn.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use super::{Q2Point, Rat};
use crate::algebra::catalog::Theory;
use crate::algebra::check::{CompiledProperty, Verdict};
use crate::algebra::term::{Property, TermError};
use crate::algebra::{CheckReport, Outcome, Structure};

/// Default denominator bound for random draws.
pub const DEFAULT_BOUND: i64 = 360;

/// Upper limit on assignments visited by one grid sweep.
pub const GRID_LIMIT: u64 = 20_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum Sampler {
    /// Every variable ranges over `{k/D : -D ≤ k ≤ D}` (squared for points).
    Grid { denominator: i64 },
    /// `count` assignments, each coordinate `k/bound` with `k` uniform in
    /// `[-bound, bound]`, drawn from a ChaCha stream seeded with `seed`.
    Random { count: u64, seed: u64, bound: i64 },
}

impl Sampler {
    pub fn grid(denominator: i64) -> Self {
        Sampler::Grid { denominator }
    }

    pub fn random(count: u64, seed: u64) -> Self {
        Sampler::Random {
            count,
            seed,
            bound: DEFAULT_BOUND,
        }
    }

    pub fn validate(&self) -> Result<(), SampleError> {
        match *self {
            Sampler::Grid { denominator } if denominator < 1 => {
                Err(SampleError::Config(format!("grid denominator must be at least 1, got {denominator}")))
            }
            Sampler::Random { count: 0, .. } => {
                Err(SampleError::Config("random sample count must be at least 1".into()))
            }
            Sampler::Random { bound, .. } if bound < 1 => {
                Err(SampleError::Config(format!("denominator bound must be at least 1, got {bound}")))
            }
            _ => Ok(()),
        }
    }
}

impl fmt::Display for Sampler {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sampler::Grid { denominator } => write!(f, "grid D={denominator}"),
            Sampler::Random { count, seed, bound } => {
                write!(f, "random N={count} seed={seed} bound={bound}")
            }
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SampleError {
    #[error("sampler misconfigured: {0}")]
    Config(String),
    #[error("grid sweep of {law} needs {needed} assignments, limit is {limit}")]
    TooLarge { law: String, needed: u64, limit: u64 },
    #[error(transparent)]
    Term(#[from] TermError),
}

/// Values that can be placed on a grid or drawn at random.
pub trait SampleValue: Sized {
    fn grid(denominator: i64) -> Vec<Self>;
    fn draw<R: Rng>(rng: &mut R, bound: i64) -> Self;
}

fn grid_rats(d: i64) -> Vec<Rat> {
    (-d..=d).map(|k| Rat::new(k, d)).collect()
}

fn draw_rat<R: Rng>(rng: &mut R, bound: i64) -> Rat {
    Rat::new(rng.random_range(-bound..=bound), bound)
}

impl SampleValue for Rat {
    fn grid(d: i64) -> Vec<Rat> {
        grid_rats(d)
    }
    fn draw<R: Rng>(rng: &mut R, bound: i64) -> Rat {
        draw_rat(rng, bound)
    }
}

impl SampleValue for Q2Point {
    fn grid(d: i64) -> Vec<Q2Point> {
        let g = grid_rats(d);
        g.iter()
            .flat_map(|&a| g.iter().map(move |&b| Q2Point::raw(a, b)))
            .collect()
    }
    fn draw<R: Rng>(rng: &mut R, bound: i64) -> Q2Point {
        let a = draw_rat(rng, bound);
        let b = draw_rat(rng, bound);
        Q2Point::raw(a, b)
    }
}

/// A law checked by sampling.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SampleReport {
    pub sampler: Sampler,
    pub report: CheckReport,
}

impl SampleReport {
    pub fn passed(&self) -> bool {
        self.report.passed()
    }
}

impl fmt::Display for SampleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.report.outcome {
            Outcome::Pass => write!(
                f,
                "PASS {}: no counterexample in {} samples ({})",
                self.report.law, self.report.visited, self.sampler
            ),
            Outcome::Fail(c) => write!(f, "FAIL {} at {c} ({})", self.report.law, self.sampler),
        }
    }
}

/// Checks one property by sampling.
///
/// Grid mode reports the lexicographically first counterexample; random mode
/// reports the first in draw order.
pub fn sample_check<S>(
    model: &S,
    prop: &Property,
    sampler: Sampler,
) -> Result<SampleReport, SampleError>
where
    S: Structure + Sync,
    S::Value: SampleValue,
{
    sampler.validate()?;
    let compiled = CompiledProperty::new(prop)?;
    let report = match sampler {
        Sampler::Grid { denominator } => {
            let domain = S::Value::grid(denominator);
            let needed = (domain.len() as u64).saturating_pow(compiled.arity() as u32);
            if needed > GRID_LIMIT {
                return Err(SampleError::TooLarge {
                    law: compiled.name().to_string(),
                    needed,
                    limit: GRID_LIMIT,
                });
            }
            compiled.check_over(model, &domain)?
        }
        Sampler::Random { count, seed, bound } => random_check(model, &compiled, count, seed, bound)?,
    };
    Ok(SampleReport { sampler, report })
}

fn random_check<S>(
    model: &S,
    compiled: &CompiledProperty,
    count: u64,
    seed: u64,
    bound: i64,
) -> Result<CheckReport, SampleError>
where
    S: Structure + Sync,
    S::Value: SampleValue,
{
    if model.kind() != compiled.kind() {
        return Err(TermError::KindMismatch {
            law: compiled.name().to_string(),
            law_kind: compiled.kind(),
            kind: model.kind(),
        }
        .into());
    }
    let k = compiled.arity();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draws: Vec<Vec<S::Value>> = (0..count)
        .map(|_| (0..k).map(|_| S::Value::draw(&mut rng, bound)).collect())
        .collect();
    let verdicts: Vec<Verdict<S::Value>> = draws
        .par_iter()
        .map_init(Vec::new, |regs, vals| compiled.verdict(model, vals, regs))
        .collect();
    let mut satisfied = 0;
    for (i, v) in verdicts.into_iter().enumerate() {
        match v {
            Verdict::Vacuous => {}
            Verdict::Holds => satisfied += 1,
            Verdict::Fails { left, right } => {
                let cex = compiled.counterexample(model, &draws[i], left, right);
                return Ok(compiled.report(i as u64 + 1, satisfied + 1, Outcome::Fail(cex)));
            }
        }
    }
    Ok(compiled.report(count, satisfied, Outcome::Pass))
}

/// Samples every law of a theory.
pub fn sample_theory<S>(
    model: &S,
    theory: &Theory,
    sampler: Sampler,
) -> Result<Vec<SampleReport>, SampleError>
where
    S: Structure + Sync,
    S::Value: SampleValue,
{
    theory
        .laws
        .iter()
        .map(|l| sample_check(model, &Property::Equation(l.clone()), sampler))
        .collect()
}
