//! One PASS/FAIL line per acceptance criterion. Runs without the libtest
//! harness so the lines always show up in `cargo test` output.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{all_partitions, combinator_trial, compatible};
use qstar_core::algebra::{check_property, check_property_over, check_theory, is_flat, is_linear, Suite, Theory};
use qstar_core::fixtures::{qmv7, qmv7_mutated, PROOFS};
use qstar_core::logic::{check_proof, Combinator, ProofScript};
use qstar_core::models::{pos_divergence, sample_theory, RModel, RstarQmv, RstarQw, SampleValue, Sampler};
use qstar_core::semantics::{axiom_audit, falsify_from, rule_preservation_check, soundness_fuzz, FuzzConfig};
use qstar_core::transform::{
    canonical_embedding, congruence_mu, congruence_tau, enumerate_congruences, quotient, to_plain, to_qmv, to_qw,
    Congruence,
};
use qstar_core::{Elem, FiniteAlgebra, Kind, Q2Point, Rat, Structure};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const LIMIT_1: Duration = Duration::from_secs(1);
const LIMIT_3: Duration = Duration::from_secs(1);
const LIMIT_4: Duration = Duration::from_secs(60);
const LIMIT_7: Duration = Duration::from_secs(120);
const LIMIT_8: Duration = Duration::from_secs(10);

const COMBINATOR_TRIALS: usize = 100;
const SOUNDNESS_GRID: i64 = 2;
const SOUNDNESS_RANDOM: u64 = 1000;
const AUDIT_INSTANCES: u64 = 1000;
const FUZZ_PROOFS: u64 = 10_000;
const RULE_SAMPLES: u64 = 100_000;
const SEED: u64 = 7;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn names(alg: &FiniteAlgebra, c: &Congruence) -> BTreeSet<BTreeSet<String>> {
    c.classes()
        .iter()
        .map(|cl| cl.iter().map(|&e| alg.name(e).to_string()).collect())
        .collect()
}

/// Partition of the carrier by a key function, computed straight from the table.
fn partition_by<K: PartialEq>(alg: &FiniteAlgebra, key: impl Fn(Elem) -> K) -> Congruence {
    let el: Vec<Elem> = alg.elements().collect();
    let mut labels = vec![usize::MAX; el.len()];
    let mut next = 0;
    for &x in &el {
        if labels[x.0] != usize::MAX {
            continue;
        }
        for &y in &el {
            if key(x) == key(y) {
                labels[y.0] = next;
            }
        }
        next += 1;
    }
    Congruence::from_labels(&labels)
}

fn fixture_check() -> Outcome {
    let alg = qmv7();
    let theory = Theory::qmv();
    ensure(theory.groups().len() == 14, || format!("{} groups", theory.groups().len()))?;
    let r = check_theory(&alg, &theory).map_err(|e| e.to_string())?;
    if let Some(f) = r.failures().next() {
        return Err(format!("{} fails on the fixture", f.law));
    }
    for rep in &r.reports {
        let want = 7u64.pow(rep.arity as u32);
        ensure(rep.visited == want, || format!("{} visited {} of {want}", rep.law, rep.visited))?;
    }
    let m = check_theory(&qmv7_mutated(), &theory).map_err(|e| e.to_string())?;
    let fail = m.failures().next().ok_or("mutation passes every law")?;
    let cex = fail.counterexample().ok_or("no counterexample reported")?;
    let at: Vec<String> = cex.assignment.iter().map(|(v, x)| format!("{v}={x}")).collect();
    Ok(format!(
        "{} laws pass, 343 assignments per ternary law; mutation fails {} at {}",
        r.reports.len(),
        fail.law,
        at.join(",")
    ))
}

fn term_equivalence() -> Outcome {
    let alg = qmv7();
    let w = to_qw(&alg).map_err(|e| e.to_string())?;
    let r = check_theory(&w, &Theory::qw()).map_err(|e| e.to_string())?;
    if let Some(f) = r.failures().next() {
        return Err(format!("{} fails on to_qw(fixture)", f.law));
    }
    let back = to_qmv(&w).map_err(|e| e.to_string())?;
    ensure(back == alg, || "to_qmv(to_qw(fixture)) differs".into())?;
    let again = to_qw(&back).map_err(|e| e.to_string())?;
    ensure(again == w, || "to_qw(to_qmv(W)) differs".into())?;
    Ok(format!("{} QW* laws pass; both round trips are table-identical", r.reports.len()))
}

fn structure_theory() -> Outcome {
    let alg = qmv7();
    let zero = alg.zero();
    // μ identifies elements with the same image under 0 + x; τ collapses the
    // elements fixed by 0 + x and leaves the others alone.
    let mu_oracle = partition_by(&alg, |x| alg.op(zero, x));
    let tau_oracle = partition_by(&alg, |x| if alg.op(zero, x) == x { None } else { Some(x) });
    let mu = congruence_mu(&alg).map_err(|e| e.to_string())?;
    let tau = congruence_tau(&alg).map_err(|e| e.to_string())?;
    ensure(names(&alg, &mu) == names(&alg, &mu_oracle), || format!("mu = {}", mu.display(&alg)))?;
    ensure(names(&alg, &tau) == names(&alg, &tau_oracle), || format!("tau = {}", tau.display(&alg)))?;
    ensure(mu.class_count() == 5 && tau.class_count() == 3, || "class counts".into())?;

    let qm = quotient(&alg, &mu).map_err(|e| e.to_string())?;
    ensure(qm.size() == 5, || format!("A/mu has {} elements", qm.size()))?;
    ensure(qm.elements().all(|x| qm.op(qm.zero(), x) == x), || "0 + x = x fails in A/mu".into())?;
    let plain = to_plain(&qm).map_err(|e| e.to_string())?;
    ensure(check_theory(&plain, &Theory::mv()).map_err(|e| e.to_string())?.passed(), || "A/mu is not MV*".into())?;
    let wm = to_qw(&plain).map_err(|e| e.to_string())?;
    ensure(check_theory(&wm, &Theory::w()).map_err(|e| e.to_string())?.passed(), || "A/mu is not W*".into())?;

    let qt = quotient(&alg, &tau).map_err(|e| e.to_string())?;
    let wt = to_qw(&qt).map_err(|e| e.to_string())?;
    ensure(qt.zero() == qt.one(), || "A/tau is not flat".into())?;
    ensure(is_flat(&wt).map_err(|e| e.to_string())?, || "is_flat(A/tau) is false".into())?;
    ensure(is_linear(&wt).map_err(|e| e.to_string())?, || "A/tau is not linear".into())?;

    let e = canonical_embedding(&alg).map_err(|e| e.to_string())?;
    ensure(e.product.size() == 15, || format!("product has {} elements", e.product.size()))?;
    ensure(e.injective && e.homomorphism(), || "embedding is not an injective homomorphism".into())?;
    ensure(e.mu_projection_surjective && e.tau_projection_surjective, || "a projection is not onto".into())?;

    let (m, t) = (mu.relation(), tau.relation());
    ensure(m.intersect(&t).is_diagonal(), || "mu meet tau is not the diagonal".into())?;
    ensure(m.compose(&t).compose(&m).is_all(), || "mu.tau.mu is not the full relation".into())?;
    Ok(format!("mu = {}; tau = {}; 15-element subdirect embedding", mu.display(&alg), tau.display(&alg)))
}

fn standard_models() -> Outcome {
    let mut laws = 0;
    for (name, reports) in [
        ("R", sample_theory(&RModel, &Theory::mv(), Sampler::grid(4))),
        ("R*qmv", sample_theory(&RstarQmv, &Theory::qmv(), Sampler::grid(2))),
        ("R*qw", sample_theory(&RstarQw, &Theory::qw(), Sampler::grid(2))),
    ] {
        let reports = reports.map_err(|e| format!("{name}: {e}"))?;
        if let Some(r) = reports.iter().find(|r| !r.passed()) {
            return Err(format!("{name}: {r}"));
        }
        laws += reports.len();
    }
    let x = pos_divergence(2).ok_or("no divergence on grid 2")?;
    ensure(x.second < Rat::ZERO, || format!("divergence at {x} has a non-negative second coordinate"))?;
    ensure(RstarQmv.pos(x) != RstarQw.pos(x), || "witness does not diverge".into())?;
    Ok(format!(
        "{laws} laws sampled with no counterexample; positive parts diverge at {x}: {} vs {}",
        RstarQmv.pos(x),
        RstarQw.pos(x)
    ))
}

fn derived_suites() -> Outcome {
    let alg = qmv7();
    let w = to_qw(&alg).map_err(|e| e.to_string())?;
    let grid = Q2Point::grid(2);
    let mut items = 0;
    for suite in Suite::all() {
        for p in &suite.items {
            let (exact, sampled) = match suite.kind {
                Kind::Qmv => (check_property(&alg, p), check_property_over(&RstarQmv, p, &grid)),
                _ => (check_property(&w, p), check_property_over(&RstarQw, p, &grid)),
            };
            let exact = exact.map_err(|e| format!("{}: {e}", p.name()))?;
            ensure(exact.passed(), || format!("{}/{} fails on the fixture", suite.name, p.name()))?;
            let sampled = sampled.map_err(|e| format!("{}: {e}", p.name()))?;
            ensure(sampled.passed(), || format!("{}/{} fails on the model", suite.name, p.name()))?;
            items += 1;
        }
    }
    Ok(format!("{items} items over {} suites pass exhaustively and on grid 2", Suite::all().len()))
}

fn proof_fixtures() -> Outcome {
    for (name, text) in PROOFS {
        let script = ProofScript::parse(text).map_err(|e| format!("{name}: {e}"))?;
        check_proof(&script).map_err(|e| format!("{name}: {e}"))?;
    }
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    for c in Combinator::ALL {
        for _ in 0..COMBINATOR_TRIALS {
            combinator_trial(&mut rng, c)?;
        }
    }
    Ok(format!(
        "{} scripts verify; {} combinators x {COMBINATOR_TRIALS} random trials verify with the declared shape",
        PROOFS.len(),
        Combinator::ALL.len()
    ))
}

fn soundness() -> Outcome {
    let mut theorems = 0;
    for (name, text) in PROOFS {
        let script = ProofScript::parse(text).map_err(|e| format!("{name}: {e}"))?;
        let v = check_proof(&script).map_err(|e| format!("{name}: {e}"))?;
        for g in &v.goals {
            for s in [Sampler::grid(SOUNDNESS_GRID), Sampler::random(SOUNDNESS_RANDOM, SEED)] {
                let r = falsify_from(&v.hypotheses, g, s).map_err(|e| format!("{name}: {e}"))?;
                ensure(r.passed(), || format!("{name}: {r}"))?;
            }
            theorems += 1;
        }
    }
    let audit = axiom_audit(AUDIT_INSTANCES, SEED);
    if let Some(e) = audit.iter().find(|e| !e.passed()) {
        return Err(e.to_string());
    }
    let fuzz = soundness_fuzz(&FuzzConfig {
        proofs: FUZZ_PROOFS,
        seed: SEED,
        ..FuzzConfig::default()
    });
    ensure(fuzz.passed() && fuzz.verified == FUZZ_PROOFS, || fuzz.to_string())?;
    let rules = rule_preservation_check(RULE_SAMPLES, SEED);
    ensure(rules.passed(), || rules.to_string())?;
    Ok(format!(
        "{theorems} fixture theorems hold; {} schemas audited; fuzz: {fuzz}; rules: {} instances each, 0 violations",
        audit.len(),
        RULE_SAMPLES
    ))
}

fn congruence_oracle() -> Outcome {
    let alg = qmv7();
    let parts = all_partitions(7);
    ensure(parts.len() == 877, || format!("{} partitions", parts.len()))?;
    let expected: BTreeSet<_> = parts
        .iter()
        .filter(|l| compatible(&alg, l))
        .map(|l| names(&alg, &Congruence::from_labels(l)))
        .collect();
    let found = enumerate_congruences(&alg).map_err(|e| e.to_string())?;
    let got: BTreeSet<_> = found.iter().map(|c| names(&alg, c)).collect();
    ensure(got == expected, || format!("enumerated {} congruences, brute force {}", got.len(), expected.len()))?;
    let mu = congruence_mu(&alg).map_err(|e| e.to_string())?;
    let tau = congruence_tau(&alg).map_err(|e| e.to_string())?;
    for (label, c) in [
        ("diagonal", Congruence::diagonal(7)),
        ("full", Congruence::all(7)),
        ("mu", mu),
        ("tau", tau),
    ] {
        ensure(found.contains(&c), || format!("{label} missing"))?;
    }
    for c in &found {
        let q = quotient(&alg, c).map_err(|e| e.to_string())?;
        let r = check_theory(&q, &Theory::qmv()).map_err(|e| e.to_string())?;
        ensure(r.passed(), || format!("quotient by {} fails", c.display(&alg)))?;
    }
    Ok(format!("{} congruences, matching brute force over 877 partitions", found.len()))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, fn() -> Outcome, Option<Duration>); 8] = [
        (1, "fixture model check", fixture_check, Some(LIMIT_1)),
        (2, "term equivalence", term_equivalence, None),
        (3, "structure theory", structure_theory, Some(LIMIT_3)),
        (4, "standard models", standard_models, Some(LIMIT_4)),
        (5, "derived-property suites", derived_suites, None),
        (6, "proof fixtures", proof_fixtures, None),
        (7, "soundness suite", soundness, Some(LIMIT_7)),
        (8, "congruence enumeration", congruence_oracle, Some(LIMIT_8)),
    ];
    let mut failed = 0;
    for (n, title, run, limit) in criteria {
        let start = Instant::now();
        let outcome = run();
        let took = start.elapsed();
        let outcome = match (outcome, limit) {
            (Ok(_), Some(l)) if took > l => Err(format!("took {took:.2?}, limit {l:?}")),
            (o, _) => o,
        };
        let budget = limit.map_or(String::new(), |l| format!(", limit {l:?}"));
        match outcome {
            Ok(detail) => println!("PASS {n} {title} ({took:.2?}{budget}): {detail}"),
            Err(why) => {
                failed += 1;
                println!("FAIL {n} {title} ({took:.2?}{budget}): {why}");
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
