use std::fmt::Display;
use std::str::FromStr;

use qstar_core::algebra::Theory;
use qstar_core::models::{sample_theory, ModelName, RModel, RstarQmv, RstarQw, SampleValue, Sampler};
use qstar_core::Structure;
use serde_json::json;

use crate::report::{CmdResult, Report, UsageError};

fn check_with<S>(model: &S, name: ModelName, sampler: Sampler) -> CmdResult
where
    S: Structure + Sync,
    S::Value: SampleValue,
{
    let theory = Theory::for_kind(name.kind());
    let mut out = Report::new();
    for r in sample_theory(model, &theory, sampler)? {
        out.check(r.passed(), &r, &json!({"model": name, "report": r}));
    }
    Ok(out)
}

pub fn check(name: ModelName, sampler: Sampler) -> CmdResult {
    match name {
        ModelName::R => check_with(&RModel, name, sampler),
        ModelName::RstarQmv => check_with(&RstarQmv, name, sampler),
        ModelName::RstarQw => check_with(&RstarQw, name, sampler),
    }
}

fn eval_with<S>(model: &S, name: ModelName, op: &str, args: &str) -> CmdResult
where
    S: Structure,
    S::Value: FromStr,
    <S::Value as FromStr>::Err: Display,
{
    let vals: Vec<S::Value> = args
        .split(';')
        .map(|a| a.trim().parse::<S::Value>().map_err(|e| UsageError(format!("`{}`: {e}", a.trim()))))
        .collect::<Result<_, _>>()?;
    let binary = name.kind().binary_name();
    let want = if op == binary { 2 } else { 1 };
    if vals.len() != want {
        return Err(UsageError(format!("{op} takes {want} argument(s), got {}", vals.len())));
    }
    let v = match op {
        _ if op == binary => model.binary(vals[0], vals[1]),
        "neg" => model.neg(vals[0]),
        "pos" => model.pos(vals[0]),
        "negpart" => model.negpart(vals[0]),
        _ => {
            return Err(UsageError(format!(
                "model {name} has operations {binary}, neg, pos, negpart; got `{op}`"
            )))
        }
    };
    let shown = model.show(v);
    let mut out = Report::new();
    out.record(&shown, &json!({"model": name, "op": op, "args": args, "value": shown}));
    Ok(out)
}

pub fn eval(name: ModelName, op: &str, args: &str) -> CmdResult {
    match name {
        ModelName::R => eval_with(&RModel, name, op, args),
        ModelName::RstarQmv => eval_with(&RstarQmv, name, op, args),
        ModelName::RstarQw => eval_with(&RstarQw, name, op, args),
    }
}
