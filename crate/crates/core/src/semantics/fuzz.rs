//! Random derivations checked against the standard model, and the rule and
//! axiom cases of soundness checked directly by sampling.

use std::collections::HashMap;
use std::fmt;

use rand::seq::IndexedRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::random::{complete_substitution, random_formula, var_names};
use super::{eval_at, falsify, is_designated, FalsifyReport};
use crate::logic::{match_pattern, match_schema, schemas, Formula, Justification, Kernel, ProofLine, ProofScript, Substitution};
use crate::models::{Q2Point, SampleValue, Sampler, DEFAULT_BOUND};

/// Generator bounds for [`soundness_fuzz`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct FuzzConfig {
    pub proofs: u64,
    pub seed: u64,
    /// Depth bound of substituted formulas.
    pub depth: usize,
    /// Number of distinct variables in substituted formulas.
    pub vars: usize,
    /// Generator moves per proof.
    pub steps: usize,
    /// Random valuations tried per theorem.
    pub samples: u64,
    pub kernel: Kernel,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        FuzzConfig {
            proofs: 10_000,
            seed: 0,
            depth: 4,
            vars: 3,
            steps: 8,
            samples: 32,
            kernel: Kernel::STRICT,
        }
    }
}

/// A theorem of a generated proof with a non-designated value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Violation {
    /// Proof index; with the seed it regenerates the script.
    pub index: u64,
    pub seed: u64,
    pub script: String,
    pub report: FalsifyReport,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "VIOLATION proof {} seed {}: {}", self.index, self.seed, self.report)?;
        write!(f, "{}", self.script)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FuzzReport {
    pub proofs: u64,
    /// Scripts accepted by the kernel.
    pub verified: u64,
    /// Generator moves with no applicable rule, skipped.
    pub dead_ends: u64,
    pub theorems_checked: u64,
    pub violations: Vec<Violation>,
    /// Scripts the kernel rejected; always a generator bug.
    pub rejected: Vec<String>,
}

impl FuzzReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty() && self.rejected.is_empty()
    }
}

impl fmt::Display for FuzzReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.violations {
            writeln!(f, "{v}")?;
        }
        for r in &self.rejected {
            writeln!(f, "REJECTED {r}")?;
        }
        write!(
            f,
            "{} proofs, {} verified, {} theorems checked, {} dead ends, {} violations",
            self.proofs,
            self.verified,
            self.theorems_checked,
            self.dead_ends,
            self.violations.len()
        )
    }
}

struct Generator<'a> {
    rng: ChaCha8Rng,
    cfg: &'a FuzzConfig,
    vars: Vec<String>,
    lines: Vec<ProofLine>,
    index: HashMap<Formula, usize>,
    dead_ends: u64,
}

impl Generator<'_> {
    fn push(&mut self, formula: Formula, justification: Justification) -> usize {
        if let Some(&n) = self.index.get(&formula) {
            return n;
        }
        self.lines.push(ProofLine {
            formula: formula.clone(),
            justification,
        });
        let n = self.lines.len();
        self.index.insert(formula, n);
        n
    }

    fn formula(&self, n: usize) -> &Formula {
        &self.lines[n - 1].formula
    }

    fn small(&mut self) -> Formula {
        random_formula(&mut self.rng, self.cfg.depth, &self.vars)
    }

    fn axiom(&mut self, partial: Substitution, which: usize) -> usize {
        let s = &schemas()[which];
        let subst = complete_substitution(&mut self.rng, s, partial, self.cfg.depth, &self.vars);
        let f = s.instantiate(&subst).expect("complete substitution");
        self.push(
            f,
            Justification::Axiom {
                schema: s.id.to_string(),
                subst,
            },
        )
    }

    fn random_axiom(&mut self) -> usize {
        let which = self.rng.random_range(0..schemas().len());
        self.axiom(Substitution::new(), which)
    }

    fn r1(&mut self, minor: usize, major: usize) -> usize {
        let side = if self.rng.random_bool(0.5) { Formula::one() } else { self.small() };
        let (_, psi) = self.formula(major).as_arrow().expect("major is an implication");
        let f = Formula::diag(&side).imp(psi);
        self.push(f, Justification::R1 { minor, major, side })
    }

    fn try_r2(&mut self, from: usize) -> Option<usize> {
        let f = self.cfg.kernel.r2_conclusion(self.formula(from)).ok()?;
        Some(self.push(f, Justification::R2 { from }))
    }

    /// An axiom whose antecedent is an existing line, then R1 and R2 on it.
    fn targeted(&mut self) -> bool {
        let which = self.rng.random_range(0..schemas().len());
        let Some((ante, _)) = schemas()[which].pattern.as_arrow() else {
            return false;
        };
        let start = self.rng.random_range(0..self.lines.len());
        let hit = (0..self.lines.len()).map(|k| (start + k) % self.lines.len() + 1).find_map(|n| {
            let mut subst = Substitution::new();
            match_pattern(ante, self.formula(n), &mut subst).then_some((n, subst))
        });
        let (minor, major) = match hit {
            Some((minor, subst)) => (minor, self.axiom(subst, which)),
            None => match self.axiom_for_antecedent(which) {
                Some(pair) => pair,
                None => return false,
            },
        };
        let mut l = self.r1(minor, major);
        // repeated R2 peels nested diagonal prefixes
        for _ in 0..2 {
            match self.try_r2(l) {
                Some(next) => l = next,
                None => break,
            }
        }
        true
    }

    /// A random instance of schema `which` whose antecedent is itself an
    /// axiom instance; returns the lines of both.
    fn axiom_for_antecedent(&mut self, which: usize) -> Option<(usize, usize)> {
        let s = &schemas()[which];
        let subst = complete_substitution(&mut self.rng, s, Substitution::new(), self.cfg.depth, &self.vars);
        let f = s.instantiate(&subst).expect("complete substitution");
        let (ante, _) = f.as_arrow().expect("schema is an implication");
        let (t, tsubst) = schemas().iter().find_map(|t| match_schema(t, ante).map(|m| (t, m)))?;
        let minor = self.push(
            ante.clone(),
            Justification::Axiom {
                schema: t.id.to_string(),
                subst: tsubst,
            },
        );
        let major = self.push(
            f,
            Justification::Axiom {
                schema: s.id.to_string(),
                subst,
            },
        );
        Some((minor, major))
    }

    fn any_r1(&mut self) -> bool {
        let pairs: Vec<(usize, usize)> = (1..=self.lines.len())
            .flat_map(|j| {
                let ante = self.formula(j).as_arrow().map(|(a, _)| a.clone());
                ante.and_then(|a| self.index.get(&a).map(|&i| (i, j)))
            })
            .collect();
        match pairs.choose(&mut self.rng) {
            Some(&(i, j)) => {
                self.r1(i, j);
                true
            }
            None => false,
        }
    }

    fn any_r2(&mut self) -> bool {
        let ok: Vec<usize> = (1..=self.lines.len())
            .filter(|&n| self.cfg.kernel.r2_conclusion(self.formula(n)).is_ok())
            .collect();
        match ok.choose(&mut self.rng) {
            Some(&n) => self.try_r2(n).is_some(),
            None => false,
        }
    }

    fn any_r3(&mut self) -> bool {
        let arrows: Vec<usize> = (1..=self.lines.len()).filter(|&n| self.formula(n).is_arrow()).collect();
        if arrows.is_empty() {
            return false;
        }
        let first = *arrows.choose(&mut self.rng).expect("non-empty");
        let second = *arrows.choose(&mut self.rng).expect("non-empty");
        let (phi, psi) = self.formula(first).as_arrow().expect("implication");
        let (chi, omega) = self.formula(second).as_arrow().expect("implication");
        let f = psi.imp(chi).imp(&phi.imp(omega));
        self.push(f, Justification::R3 { first, second });
        true
    }

    fn run(mut self) -> (ProofScript, u64) {
        self.random_axiom();
        for _ in 0..self.cfg.steps {
            let moved = match self.rng.random_range(0..6) {
                0 => {
                    self.random_axiom();
                    true
                }
                1 | 2 => self.targeted(),
                3 => self.any_r1(),
                4 => self.any_r2(),
                _ => self.any_r3(),
            };
            if !moved {
                self.dead_ends += 1;
            }
        }
        let script = ProofScript {
            lines: self.lines,
            ..ProofScript::default()
        };
        (script, self.dead_ends)
    }
}

/// The `index`-th generated script for `cfg`, with its dead-end count.
pub fn generate_proof(cfg: &FuzzConfig, index: u64) -> (ProofScript, u64) {
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    rng.set_stream(index);
    Generator {
        rng,
        cfg,
        vars: var_names(cfg.vars),
        lines: Vec::new(),
        index: HashMap::new(),
        dead_ends: 0,
    }
    .run()
}

fn theorem_seed(seed: u64, index: u64, line: usize) -> u64 {
    seed ^ index.wrapping_mul(0x9e37_79b9_7f4a_7c15) ^ (line as u64).wrapping_mul(0xbf58_476d_1ce4_e5b9)
}

struct ProofOutcome {
    verified: bool,
    dead_ends: u64,
    checked: u64,
    violation: Option<Violation>,
    rejected: Option<String>,
}

fn fuzz_one(cfg: &FuzzConfig, index: u64) -> ProofOutcome {
    let (script, dead_ends) = generate_proof(cfg, index);
    let mut out = ProofOutcome {
        verified: false,
        dead_ends,
        checked: 0,
        violation: None,
        rejected: None,
    };
    if let Err(e) = cfg.kernel.check(&[], &script) {
        out.rejected = Some(format!("proof {index}: {e}"));
        return out;
    }
    out.verified = true;
    // axiom lines are covered by the axiom audit
    let last = script.lines.len();
    for (i, line) in script.lines.iter().enumerate() {
        if matches!(line.justification, Justification::Axiom { .. }) && i + 1 != last {
            continue;
        }
        let sampler = Sampler::Random {
            count: cfg.samples,
            seed: theorem_seed(cfg.seed, index, i + 1),
            bound: DEFAULT_BOUND,
        };
        let report = falsify(&line.formula, sampler).expect("valid sampler");
        out.checked += 1;
        if !report.passed() {
            out.violation = Some(Violation {
                index,
                seed: cfg.seed,
                script: script.to_string(),
                report,
            });
            break;
        }
    }
    out
}

/// Generates `cfg.proofs` random primitive scripts, verifies each with the
/// configured kernel, and samples every rule-derived line and the final line
/// for a non-designated value. Results are in proof order regardless of
/// scheduling.
pub fn soundness_fuzz(cfg: &FuzzConfig) -> FuzzReport {
    let outcomes: Vec<ProofOutcome> = (0..cfg.proofs).into_par_iter().map(|i| fuzz_one(cfg, i)).collect();
    let mut report = FuzzReport {
        proofs: cfg.proofs,
        ..FuzzReport::default()
    };
    for o in outcomes {
        report.verified += o.verified as u64;
        report.dead_ends += o.dead_ends;
        report.theorems_checked += o.checked;
        report.violations.extend(o.violation);
        report.rejected.extend(o.rejected);
    }
    report
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RuleTally {
    pub instances: u64,
    /// Instances whose premises were all designated.
    pub premises_held: u64,
    pub violations: u64,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct RuleReport {
    pub r1: RuleTally,
    pub r2: RuleTally,
    pub r3: RuleTally,
    /// First failing instance per rule, as `rule: premises => conclusion`.
    pub examples: Vec<String>,
}

impl RuleReport {
    pub fn passed(&self) -> bool {
        self.r1.violations + self.r2.violations + self.r3.violations == 0
    }
}

impl fmt::Display for RuleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.examples {
            writeln!(f, "{e}")?;
        }
        for (name, t) in [("R1", self.r1), ("R2", self.r2), ("R3", self.r3)] {
            writeln!(
                f,
                "{name}: {} instances, premises held in {}, {} violations",
                t.instances, t.premises_held, t.violations
            )?;
        }
        Ok(())
    }
}

const RULE_DEPTH: usize = 2;
const RULE_CHUNK: u64 = 1024;

fn rule_chunk(seed: u64, chunk: u64, count: u64) -> (RuleReport, [Option<String>; 3]) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk);
    let vars = var_names(3);
    let mut report = RuleReport::default();
    let mut first: [Option<String>; 3] = [None, None, None];
    for _ in 0..count {
        let [p, q, r, t] = std::array::from_fn(|_| random_formula(&mut rng, RULE_DEPTH, &vars));
        let vals: Vec<Q2Point> = vars.iter().map(|_| Q2Point::draw(&mut rng, DEFAULT_BOUND)).collect();
        let held = |fs: &[&Formula]| fs.iter().all(|f| is_designated(eval_at(f, &vars, &vals)));
        let cases: [(Vec<Formula>, Formula); 3] = [
            (vec![p.clone(), p.imp(&q)], Formula::diag(&r).imp(&q)),
            (vec![Formula::diag(&r).imp(&p.imp(&q))], p.imp(&q)),
            (vec![p.imp(&q), r.imp(&t)], q.imp(&r).imp(&p.imp(&t))),
        ];
        for (k, (premises, conclusion)) in cases.iter().enumerate() {
            let tally = match k {
                0 => &mut report.r1,
                1 => &mut report.r2,
                _ => &mut report.r3,
            };
            tally.instances += 1;
            if !held(&premises.iter().collect::<Vec<_>>()) {
                continue;
            }
            tally.premises_held += 1;
            if !held(&[conclusion]) {
                tally.violations += 1;
                if first[k].is_none() {
                    let ps: Vec<String> = premises.iter().map(|f| f.to_string()).collect();
                    let at: Vec<String> = vars.iter().zip(&vals).map(|(v, x)| format!("{v}={x}")).collect();
                    first[k] = Some(format!("R{}: {} => {conclusion} AT {}", k + 1, ps.join(", "), at.join("; ")));
                }
            }
        }
    }
    (report, first)
}

/// Samples `samples` instances of each rule with random formulas and a random
/// valuation, and counts instances whose premises are designated but whose
/// conclusion is not.
pub fn rule_preservation_check(samples: u64, seed: u64) -> RuleReport {
    let chunks = samples.div_ceil(RULE_CHUNK);
    let parts: Vec<_> = (0..chunks)
        .into_par_iter()
        .map(|c| rule_chunk(seed, c, RULE_CHUNK.min(samples - c * RULE_CHUNK)))
        .collect();
    let mut out = RuleReport::default();
    let mut first: [Option<String>; 3] = [None, None, None];
    for (part, f) in parts {
        for (acc, t) in [(&mut out.r1, part.r1), (&mut out.r2, part.r2), (&mut out.r3, part.r3)] {
            acc.instances += t.instances;
            acc.premises_held += t.premises_held;
            acc.violations += t.violations;
        }
        for (slot, x) in first.iter_mut().zip(f) {
            if slot.is_none() {
                *slot = x;
            }
        }
    }
    out.examples = first.into_iter().flatten().collect();
    out
}

/// Per-schema tally of random instances evaluated at random valuations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditEntry {
    pub id: &'static str,
    pub instances: u64,
    pub designated: u64,
    /// Instances valued exactly `⟨0,0⟩`.
    pub zero_valued: u64,
    /// First instance that was not designated, or not zero where zero is expected.
    pub failure: Option<String>,
}

impl AuditEntry {
    /// Every schema but `p -> 1` is expected to evaluate to `⟨0,0⟩`.
    pub fn expects_zero(&self) -> bool {
        self.id != "Q10"
    }

    pub fn passed(&self) -> bool {
        self.designated == self.instances && (!self.expects_zero() || self.zero_valued == self.instances)
    }
}

impl fmt::Display for AuditEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} {}: {}/{} designated, {}/{} zero",
            if self.passed() { "PASS" } else { "FAIL" },
            self.id,
            self.designated,
            self.instances,
            self.zero_valued,
            self.instances
        )?;
        if let Some(x) = &self.failure {
            write!(f, "; {x}")?;
        }
        Ok(())
    }
}

const AUDIT_DEPTH: usize = 3;

/// Evaluates `instances` random instances of every schema, each at its own
/// random valuation.
pub fn axiom_audit(instances: u64, seed: u64) -> Vec<AuditEntry> {
    schemas()
        .par_iter()
        .enumerate()
        .map(|(k, s)| {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            rng.set_stream(k as u64);
            let vars = var_names(3);
            let mut e = AuditEntry {
                id: s.id,
                instances,
                designated: 0,
                zero_valued: 0,
                failure: None,
            };
            for _ in 0..instances {
                let subst = complete_substitution(&mut rng, s, Substitution::new(), AUDIT_DEPTH, &vars);
                let f = s.instantiate(&subst).expect("complete substitution");
                let vals: Vec<Q2Point> = vars.iter().map(|_| Q2Point::draw(&mut rng, DEFAULT_BOUND)).collect();
                let x = eval_at(&f, &vars, &vals);
                let designated = is_designated(x);
                let zero = x == Q2Point::ZERO;
                e.designated += designated as u64;
                e.zero_valued += zero as u64;
                if e.failure.is_none() && (!designated || (e.expects_zero() && !zero)) {
                    let at: Vec<String> = vars.iter().zip(&vals).map(|(v, x)| format!("{v}={x}")).collect();
                    e.failure = Some(format!("{f} AT {} VALUE {x}", at.join("; ")));
                }
            }
            e
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_run() {
        let r = soundness_fuzz(&FuzzConfig {
            proofs: 0,
            ..FuzzConfig::default()
        });
        assert_eq!(r, FuzzReport::default());
    }

    #[test]
    fn generated_scripts_verify_and_are_reproducible() {
        let cfg = FuzzConfig::default();
        for i in 0..50 {
            let (s, _) = generate_proof(&cfg, i);
            assert!(Kernel::STRICT.check(&[], &s).is_ok(), "{s}");
            assert_eq!(generate_proof(&cfg, i).0, s);
        }
    }

    #[test]
    fn small_runs_pass() {
        let r = soundness_fuzz(&FuzzConfig {
            proofs: 200,
            ..FuzzConfig::default()
        });
        assert!(r.passed(), "{r}");
        assert!(rule_preservation_check(2000, 1).passed());
        assert!(axiom_audit(50, 1).iter().all(AuditEntry::passed));
    }
}
