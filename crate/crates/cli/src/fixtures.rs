use std::fmt::Display;
use std::fs;
use std::path::Path;

use qstar_core::algebra::{check_property, check_theory, is_flat, is_linear, Suite, Theory};
use qstar_core::logic::check_proof;
use qstar_core::models::Sampler;
use qstar_core::semantics::{axiom_audit, falsify_from, rule_preservation_check, soundness_fuzz, FuzzConfig};
use qstar_core::transform::{
    canonical_embedding, congruence_mu, congruence_tau, enumerate_congruences, quotient, to_plain, to_qmv, to_qw,
};
use qstar_core::FiniteAlgebra;
use serde_json::json;

use crate::algebra::{check_groups, load};
use crate::logic::load_script;
use crate::report::{CmdResult, Report, UsageError};

fn step(out: &mut Report, name: &str, result: Result<String, String>) {
    let (passed, detail) = match &result {
        Ok(d) => (true, d.as_str()),
        Err(d) => (false, d.as_str()),
    };
    let human = format!("{} {name}: {detail}", if passed { "PASS" } else { "FAIL" });
    out.check(passed, human, &json!({"step": name, "verdict": if passed { "pass" } else { "fail" }, "detail": detail}));
}

fn err<E: Display>(e: E) -> String {
    e.to_string()
}

fn term_equivalence(alg: &FiniteAlgebra) -> Result<String, String> {
    let w = to_qw(alg).map_err(err)?;
    let qw = check_theory(&w, &Theory::qw()).map_err(err)?;
    let back = to_qmv(&w).map_err(err)?;
    let again = to_qw(&back).map_err(err)?;
    verdict(
        qw.passed() && back == *alg && again == w,
        "QW* holds on the transform and both round trips are identical",
        "transform or round trip failed",
    )
}

fn quotient_mu(alg: &FiniteAlgebra) -> Result<String, String> {
    let mu = congruence_mu(alg).map_err(err)?;
    let qm = quotient(alg, &mu).map_err(err)?;
    let plain = to_plain(&qm).map_err(err)?;
    let w = to_qw(&plain).map_err(err)?;
    let ok = check_theory(&plain, &Theory::mv()).map_err(err)?.passed()
        && check_theory(&w, &Theory::w()).map_err(err)?.passed();
    let shown = mu.display(alg).to_string();
    verdict(ok, format!("{} elements, MV* and W* hold", qm.size()), shown)
}

fn quotient_tau(alg: &FiniteAlgebra) -> Result<String, String> {
    let tau = congruence_tau(alg).map_err(err)?;
    let qt = to_qw(&quotient(alg, &tau).map_err(err)?).map_err(err)?;
    let ok = is_flat(&qt).map_err(err)? && is_linear(&qt).map_err(err)?;
    verdict(ok, format!("{} elements, flat and linear", qt.size()), "not flat and linear")
}

fn embedding(alg: &FiniteAlgebra) -> Result<String, String> {
    let e = canonical_embedding(alg).map_err(err)?;
    verdict(
        e.is_subdirect_embedding(),
        format!("subdirect into {} elements", e.product.size()),
        "not a subdirect embedding",
    )
}

fn congruences(alg: &FiniteAlgebra) -> Result<String, String> {
    let cs = enumerate_congruences(alg).map_err(err)?;
    let mut bad = Vec::new();
    for c in &cs {
        if !check_theory(&quotient(alg, c).map_err(err)?, &Theory::qmv()).map_err(err)?.passed() {
            bad.push(c.display(alg).to_string());
        }
    }
    verdict(bad.is_empty(), format!("{} congruences, every quotient is QMV*", cs.len()), bad.join("; "))
}

fn derived(alg: &FiniteAlgebra) -> Result<String, String> {
    let w = to_qw(alg).map_err(err)?;
    let mut items = 0;
    let mut failing = Vec::new();
    for s in Suite::all() {
        let target = if s.kind == alg.kind() { alg } else { &w };
        for p in &s.items {
            items += 1;
            if !check_property(target, p).map_err(err)?.passed() {
                failing.push(p.name().to_string());
            }
        }
    }
    verdict(failing.is_empty(), format!("{items} items hold"), failing.join(", "))
}

fn verdict(ok: bool, pass: impl Into<String>, fail: impl Into<String>) -> Result<String, String> {
    if ok {
        Ok(pass.into())
    } else {
        Err(fail.into())
    }
}

pub fn run(dir: &Path, cfg: &FuzzConfig, samples: u64) -> CmdResult {
    let mut out = Report::new();
    let alg = load(&dir.join("qmv7.alg"))?;
    let mutated = load(&dir.join("qmv7_mutated.alg"))?;

    check_groups(&alg, &Theory::qmv(), &mut out)?;
    let m = check_theory(&mutated, &Theory::qmv())?;
    let caught = m.failures().next().map(|f| format!("{f}"));
    step(&mut out, "mutation", caught.ok_or_else(|| "mutated table passes every law".to_string()));

    step(&mut out, "term equivalence", term_equivalence(&alg));
    step(&mut out, "quotient by mu", quotient_mu(&alg));
    step(&mut out, "quotient by tau", quotient_tau(&alg));
    step(&mut out, "embedding", embedding(&alg));
    step(&mut out, "congruences", congruences(&alg));
    step(&mut out, "derived properties", derived(&alg));

    let mut files: Vec<_> = fs::read_dir(dir.join("proofs"))
        .map_err(|e| UsageError(format!("{}: {e}", dir.join("proofs").display())))?
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "prf"))
        .collect();
    files.sort();
    for path in &files {
        let name = path.file_stem().unwrap().to_string_lossy().into_owned();
        let script = load_script(path)?;
        let res = match check_proof(&script) {
            Err(e) => Err(e.to_string()),
            Ok(v) => {
                let mut res = Ok(format!("{} lines", v.lines));
                'goals: for g in v.theorems() {
                    for s in [Sampler::grid(2), Sampler::random(samples, cfg.seed)] {
                        let r = falsify_from(&v.hypotheses, &g, s)?;
                        if !r.passed() {
                            res = Err(r.to_string());
                            break 'goals;
                        }
                    }
                }
                res
            }
        };
        step(&mut out, &format!("proof {name}"), res);
    }

    let audit = axiom_audit(samples, cfg.seed);
    let failed: Vec<String> = audit.iter().filter(|e| !e.passed()).map(|e| e.to_string()).collect();
    step(
        &mut out,
        "axiom audit",
        verdict(failed.is_empty(), format!("{} schemas, {samples} instances each", audit.len()), failed.join("; ")),
    );
    let rules = rule_preservation_check(100_000, cfg.seed);
    let shown = rules.to_string().trim_end().replace('\n', "; ");
    step(&mut out, "rule preservation", verdict(rules.passed(), shown.clone(), shown));
    let fuzz = soundness_fuzz(cfg);
    step(&mut out, "soundness fuzz", verdict(fuzz.passed(), fuzz.to_string(), fuzz.to_string()));
    Ok(out)
}
