//! Random formulas and substitutions for the fuzzers.

use rand::Rng;

use crate::logic::{AxiomSchema, Formula, Substitution};

/// Variable names `x`, `y`, `z`, `x3`, ... used by the generators.
pub fn var_names(count: usize) -> Vec<String> {
    const BASE: [&str; 3] = ["x", "y", "z"];
    (0..count.max(1))
        .map(|i| BASE.get(i).map(|s| s.to_string()).unwrap_or_else(|| format!("x{i}")))
        .collect()
}

/// A formula of depth at most `depth` over `vars` and the constant 1.
pub fn random_formula<R: Rng>(rng: &mut R, depth: usize, vars: &[String]) -> Formula {
    if depth == 0 || rng.random_ratio(1, 4) {
        let k = rng.random_range(0..=vars.len());
        return match vars.get(k) {
            Some(v) => Formula::var(v),
            None => Formula::one(),
        };
    }
    let d = depth - 1;
    match rng.random_range(0..5) {
        0 => random_formula(rng, d, vars).neg(),
        1 => random_formula(rng, d, vars).pos(),
        2 => random_formula(rng, d, vars).negpart(),
        _ => random_formula(rng, d, vars).imp(&random_formula(rng, d, vars)),
    }
}

/// Binds every metavariable of `schema` not already in `partial`.
pub fn complete_substitution<R: Rng>(
    rng: &mut R,
    schema: &AxiomSchema,
    mut partial: Substitution,
    depth: usize,
    vars: &[String],
) -> Substitution {
    for m in &schema.metavars {
        if !partial.contains_key(m) {
            partial.insert(m.clone(), random_formula(rng, depth, vars));
        }
    }
    partial
}
