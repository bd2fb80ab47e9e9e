use std::fs;
use std::path::Path;

use qstar_core::algebra::{check_property, check_theory, load_algebra, write_algebra, Suite, Theory};
use qstar_core::transform::{
    canonical_embedding, check_filter, congruence_mu, congruence_tau, direct_product, enumerate_congruences, quotient,
    to_plain, to_qmv, to_qw, Congruence,
};
use qstar_core::{Elem, FiniteAlgebra, Kind};
use serde_json::json;

use crate::report::{CmdResult, Report, UsageError};

pub fn load(path: &Path) -> Result<FiniteAlgebra, UsageError> {
    let text = fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    load_algebra(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

/// One record per numbered axiom; a group passes when all its sub-laws do.
pub fn check_groups(alg: &FiniteAlgebra, theory: &Theory, out: &mut Report) -> Result<(), UsageError> {
    let r = check_theory(alg, theory)?;
    for (group, members) in theory.groups() {
        let reports: Vec<_> = r.reports.iter().filter(|c| members.contains(&c.law)).collect();
        let failure = reports.iter().find(|c| !c.passed());
        let visited: u64 = reports.iter().map(|c| c.visited).sum();
        let human = match failure {
            None => format!("PASS {group} ({visited} assignments)"),
            Some(f) => format!("FAIL {group}: {} at {}", f.law, f.counterexample().unwrap()),
        };
        let rec = json!({
            "theory": theory.name,
            "group": group,
            "verdict": if failure.is_none() { "pass" } else { "fail" },
            "laws": reports,
        });
        out.check(failure.is_none(), human, &rec);
    }
    Ok(())
}

pub fn check(path: &Path) -> CmdResult {
    let alg = load(path)?;
    let mut out = Report::new();
    check_groups(&alg, &Theory::for_kind(alg.kind()), &mut out)?;
    Ok(out)
}

pub fn props(path: &Path) -> CmdResult {
    let alg = load(path)?;
    let suites = Suite::for_kind(alg.kind());
    if suites.is_empty() {
        return Err(UsageError(format!("no property suites for kind {}", alg.kind().as_str())));
    }
    let mut out = Report::new();
    for s in suites {
        for p in &s.items {
            let r = check_property(&alg, p)?;
            out.check(r.passed(), format!("{}: {r}", s.name), &json!({"suite": s.name, "report": r}));
        }
    }
    Ok(out)
}

fn emit(alg: &FiniteAlgebra) -> Report {
    let mut out = Report::new();
    let text = write_algebra(alg);
    out.record(text.trim_end(), &json!({"algebra": text}));
    out
}

pub fn transform(path: &Path, to: Kind) -> CmdResult {
    let alg = load(path)?;
    let mut res = alg.clone();
    if res.kind().is_implicative() != to.is_implicative() {
        res = if to.is_implicative() { to_qw(&res)? } else { to_qmv(&res)? };
    }
    if res.kind() != to && !to.is_quasi() {
        res = to_plain(&res)?;
    }
    if res.kind() != to {
        return Err(UsageError(format!(
            "a {} algebra transforms to {}, not {}",
            alg.kind().as_str(),
            res.kind().as_str(),
            to.as_str()
        )));
    }
    Ok(emit(&res))
}

pub fn congruence(alg: &FiniteAlgebra, spec: &str) -> Result<Congruence, UsageError> {
    Ok(match spec {
        "mu" => congruence_mu(alg)?,
        "tau" => congruence_tau(alg)?,
        _ => Congruence::from_spec(alg, spec)?,
    })
}

pub fn quotient_cmd(path: &Path, spec: &str) -> CmdResult {
    let alg = load(path)?;
    let c = congruence(&alg, spec)?;
    Ok(emit(&quotient(&alg, &c)?))
}

pub fn product(a: &Path, b: &Path) -> CmdResult {
    Ok(emit(&direct_product(&load(a)?, &load(b)?)?))
}

pub fn embed(path: &Path) -> CmdResult {
    let alg = load(path)?;
    let e = canonical_embedding(&alg)?;
    let mut out = Report::new();
    for (x, m, t) in &e.images {
        out.text(format!("h({x}) = ({m}, {t})"));
    }
    let verdict = |b: bool| if b { "yes" } else { "no" };
    out.text(format!("product size: {}", e.product.size()));
    out.text(format!("injective: {}", verdict(e.injective)));
    match &e.homomorphism_failure {
        None => out.text("homomorphism: yes"),
        Some(w) => out.text(format!("homomorphism: no ({w})")),
    }
    out.text(format!("mu projection onto: {}", verdict(e.mu_projection_surjective)));
    out.text(format!("tau projection onto: {}", verdict(e.tau_projection_surjective)));
    let ok = e.is_subdirect_embedding();
    out.check(
        ok,
        if ok { "PASS subdirect embedding" } else { "FAIL subdirect embedding" },
        &json!({"embedding": e, "product_size": e.product.size(), "verdict": if ok { "pass" } else { "fail" }}),
    );
    Ok(out)
}

pub fn congruences(path: &Path) -> CmdResult {
    let alg = load(path)?;
    let mut out = Report::new();
    for c in enumerate_congruences(&alg)? {
        let shown = c.display(&alg).to_string();
        out.record(&shown, &json!({"congruence": shown, "classes": c.class_count()}));
    }
    Ok(out)
}

pub fn filter(path: &Path, set: &str) -> CmdResult {
    let alg = load(path)?;
    let members: Vec<Elem> = set
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|n| alg.element(n).ok_or_else(|| UsageError(format!("unknown element `{n}`"))))
        .collect::<Result<_, _>>()?;
    let r = check_filter(&alg, &members)?;
    let mut out = Report::new();
    for (clause, res) in r.clauses() {
        let human = match res {
            Ok(()) => format!("PASS {clause:?}"),
            Err(w) => format!("FAIL {clause:?}: {w}"),
        };
        let rec = json!({"clause": clause, "verdict": if res.is_ok() { "pass" } else { "fail" }, "witness": res.as_ref().err()});
        out.check(res.is_ok(), human, &rec);
    }
    Ok(out)
}
