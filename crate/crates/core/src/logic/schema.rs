use std::collections::BTreeMap;
use std::fmt;
use std::sync::OnceLock;

use super::formula::Formula;

/// Metavariable name to formula.
pub type Substitution = BTreeMap<String, Formula>;

/// One directed axiom schema. Variables of the pattern are metavariables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomSchema {
    pub id: &'static str,
    pub pattern: Formula,
    pub metavars: Vec<String>,
}

// A biconditional `A <-> B` yields `id.L: A -> B` and `id.R: B -> A`.
const SOURCE: &[(&str, &str, &str)] = &[
    ("Q1", "p -> q", "~q -> ~p"),
    ("Q2", "1", "(1 -> p) -> 1"),
    ("Q3", "p", "(q -> q) -> p"),
    ("Q4", "p -> q", "(q^+ -> p^-) -> (p^+ -> q^-)"),
    ("Q5", "~(p -> q)", "q -> p"),
    ("Q6", "(p -> (~p -> q))^+", "p^+ -> (~p^+ -> q^+)"),
    ("Q7", "p -> (q \\/ r)", "(p -> r) \\/ (p -> q)"),
    ("Q8", "p \\/ (q \\/ r)", "(p \\/ q) \\/ r"),
    ("Q9", "((p -> 1) -> ((q -> 1) -> r)) -> ((q -> 1) -> ((p -> 1) -> r))", ""),
    ("Q10", "p -> 1", ""),
    ("Q11a", "(1 -> 1) -> p^+", "(p -> 1) -> 1"),
    ("Q11b", "(1 -> 1) -> p^-", "(p -> ~1) -> ~1"),
];

fn build() -> Vec<AxiomSchema> {
    let mut out = Vec::new();
    let leak = |s: String| -> &'static str { Box::leak(s.into_boxed_str()) };
    for &(id, a, b) in SOURCE {
        let a = Formula::parse(a).expect("schema parses");
        if b.is_empty() {
            out.push(AxiomSchema::new(id, a));
        } else {
            let b = Formula::parse(b).expect("schema parses");
            out.push(AxiomSchema::new(leak(format!("{id}.L")), a.imp(&b)));
            out.push(AxiomSchema::new(leak(format!("{id}.R")), b.imp(&a)));
        }
    }
    out
}

/// Every directed schema, in catalog order.
pub fn schemas() -> &'static [AxiomSchema] {
    static CATALOG: OnceLock<Vec<AxiomSchema>> = OnceLock::new();
    CATALOG.get_or_init(build)
}

pub fn schema(id: &str) -> Option<&'static AxiomSchema> {
    schemas().iter().find(|s| s.id == id)
}

impl AxiomSchema {
    fn new(id: &'static str, pattern: Formula) -> Self {
        let metavars = pattern.vars();
        AxiomSchema { id, pattern, metavars }
    }

    /// The instance under `subst`; `None` unless `subst` covers exactly the
    /// metavariables.
    pub fn instantiate(&self, subst: &Substitution) -> Option<Formula> {
        if subst.len() != self.metavars.len() || self.metavars.iter().any(|m| !subst.contains_key(m)) {
            return None;
        }
        Some(self.pattern.substitute(&|v| subst.get(v).cloned()))
    }

    /// Instance with the given bindings, by position in `metavars`.
    pub fn apply(&self, args: &[&Formula]) -> Formula {
        assert_eq!(args.len(), self.metavars.len(), "{}: wrong number of arguments", self.id);
        let subst: Substitution = self.metavars.iter().cloned().zip(args.iter().map(|f| (*f).clone())).collect();
        self.instantiate(&subst).expect("complete substitution")
    }

    pub fn is_biconditional_half(&self) -> bool {
        self.id.ends_with(".L") || self.id.ends_with(".R")
    }
}

impl fmt::Display for AxiomSchema {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}: {}", self.id, self.pattern)
    }
}

/// Extends `subst` so that `pattern` under it equals `f`.
pub fn match_pattern(pattern: &Formula, f: &Formula, subst: &mut Substitution) -> bool {
    match (pattern, f) {
        (Formula::Var(v), _) => match subst.get(v.as_ref()) {
            Some(bound) => bound == f,
            None => {
                subst.insert(v.to_string(), f.clone());
                true
            }
        },
        (Formula::One, Formula::One) => true,
        (Formula::Neg(a), Formula::Neg(b))
        | (Formula::Pos(a), Formula::Pos(b))
        | (Formula::NegPart(a), Formula::NegPart(b)) => match_pattern(a, b, subst),
        (Formula::Arrow(a1, b1), Formula::Arrow(a2, b2)) => {
            match_pattern(a1, a2, subst) && match_pattern(b1, b2, subst)
        }
        _ => false,
    }
}

/// The substitution making `f` an instance of `schema`, if there is one.
pub fn match_schema(schema: &AxiomSchema, f: &Formula) -> Option<Substitution> {
    let mut subst = Substitution::new();
    match_pattern(&schema.pattern, f, &mut subst).then_some(subst)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Formula {
        Formula::parse(s).unwrap()
    }

    #[test]
    fn catalog_shape() {
        assert_eq!(schemas().len(), 22);
        let q11: Vec<_> = schemas().iter().filter(|s| s.id.starts_with("Q11")).collect();
        assert_eq!(q11.len(), 4);
        assert_eq!(schema("Q3.R").unwrap().pattern, f("((q -> q) -> p) -> p"));
        assert_eq!(schema("Q10").unwrap().metavars, vec!["p"]);
    }

    #[test]
    fn matching() {
        let s = match_schema(schema("Q3.R").unwrap(), &f("((1 -> 1) -> (p -> q)) -> (p -> q)")).unwrap();
        assert_eq!(s["p"], f("p -> q"));
        assert_eq!(s["q"], Formula::one());
        let s = match_schema(schema("Q10").unwrap(), &f("r^- -> 1")).unwrap();
        assert_eq!(s["p"], f("r^-"));
        assert!(match_schema(schema("Q1.L").unwrap(), &f("(p -> q) -> (~p -> ~q)")).is_none());
        // repeated metavariables must agree
        assert!(match_schema(schema("Q3.R").unwrap(), &f("((1 -> p) -> q) -> q")).is_none());
    }
}
