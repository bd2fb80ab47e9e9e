use std::fs;
use std::path::{Path, PathBuf};

use qstar_core::logic::{Combinator, Formula, Kernel, ProofScript};
use qstar_core::models::Sampler;
use qstar_core::semantics::{evaluate, falsify, is_designated, soundness_fuzz, FuzzConfig, Valuation};
use qstar_core::Q2Point;
use serde_json::json;

use crate::report::{CmdResult, Report, UsageError};

fn parse_formula(s: &str) -> Result<Formula, UsageError> {
    Formula::parse(s).map_err(|e| UsageError(format!("`{s}`: {e}")))
}

pub fn load_script(path: &Path) -> Result<ProofScript, UsageError> {
    let text = fs::read_to_string(path).map_err(|e| UsageError(format!("{}: {e}", path.display())))?;
    ProofScript::parse(&text).map_err(|e| UsageError(format!("{}: {e}", path.display())))
}

pub fn eval(formula: &str, vals: &[String]) -> CmdResult {
    let f = parse_formula(formula)?;
    let mut v = Valuation::new();
    for item in vals {
        let (name, point) = item
            .split_once('=')
            .ok_or_else(|| UsageError(format!("`{item}`: expected name=a,b")))?;
        let p: Q2Point = point.parse().map_err(|e| UsageError(format!("`{item}`: {e}")))?;
        v.insert(name.trim().to_string(), p);
    }
    let x = evaluate(&f, &v)?;
    let designated = is_designated(x);
    let mut out = Report::new();
    out.record(
        format!("{x}{}", if designated { " (designated)" } else { "" }),
        &json!({"formula": f.to_string(), "value": x, "designated": designated}),
    );
    Ok(out)
}

pub fn falsify_cmd(formula: &str, sampler: Sampler) -> CmdResult {
    let f = parse_formula(formula)?;
    let r = falsify(&f, sampler)?;
    let mut out = Report::new();
    out.check(r.passed(), &r, &r);
    Ok(out)
}

pub fn check(path: &Path, kernel: Kernel) -> CmdResult {
    let script = load_script(path)?;
    let mut out = Report::new();
    match kernel.check(&script.hypotheses, &script) {
        Ok(v) => {
            let theorems: Vec<String> = v.theorems().iter().map(|t| t.to_string()).collect();
            for t in &theorems {
                out.text(format!("theorem {t}"));
            }
            out.check(
                true,
                format!("PASS {} ({} lines)", path.display(), v.lines),
                &json!({
                    "file": path.display().to_string(),
                    "verdict": "pass",
                    "lines": v.lines,
                    "hypotheses": v.hypotheses.iter().map(|h| h.to_string()).collect::<Vec<_>>(),
                    "theorems": theorems,
                }),
            );
        }
        Err(e) => out.check(
            false,
            format!("FAIL {}: {e}", path.display()),
            &json!({"file": path.display().to_string(), "verdict": "fail", "line": e.line, "error": e.to_string()}),
        ),
    }
    Ok(out)
}

pub fn expand(name: &str, inputs: &[PathBuf], args: &[String], occurrence: usize) -> CmdResult {
    let c: Combinator = name.parse()?;
    let scripts: Vec<ProofScript> = inputs.iter().map(|p| load_script(p)).collect::<Result<_, _>>()?;
    let params: Vec<Formula> = args.iter().map(|a| parse_formula(a)).collect::<Result<_, _>>()?;
    let script = c.run(&scripts, &params, occurrence)?;
    let text = script.to_string();
    let mut out = Report::new();
    out.record(text.trim_end(), &json!({"combinator": c.name(), "script": text}));
    Ok(out)
}

pub fn fuzz(cfg: &FuzzConfig) -> CmdResult {
    let r = soundness_fuzz(cfg);
    let mut out = Report::new();
    for v in &r.violations {
        out.text(v);
    }
    for s in &r.rejected {
        out.text(format!("REJECTED {s}"));
    }
    out.check(r.passed(), &r, &r);
    Ok(out)
}
