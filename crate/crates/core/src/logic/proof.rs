use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::formula::{Formula, FormulaError};
use super::schema::{match_schema, schema, Substitution};

/// How a line was obtained. Line and hypothesis numbers are 1-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Justification {
    Axiom { schema: String, subst: Substitution },
    Hypothesis(usize),
    /// `φ` at line `minor`, `φ→ψ` at line `major`, conclusion `(r→r)→ψ`.
    R1 { minor: usize, major: usize, side: Formula },
    /// `(r→r)→(φ→ψ)` at line `from`, conclusion `φ→ψ`.
    R2 { from: usize },
    /// `φ→ψ` at `first`, `χ→ω` at `second`, conclusion `(ψ→χ)→(φ→ω)`.
    R3 { first: usize, second: usize },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProofLine {
    pub formula: Formula,
    pub justification: Justification,
}

/// A Hilbert-style derivation, optionally from hypotheses. `goals` lists the
/// formulas the script claims to derive; a biconditional is claimed as its
/// two implications.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ProofScript {
    pub goals: Vec<Formula>,
    pub hypotheses: Vec<Formula>,
    pub lines: Vec<ProofLine>,
    /// Free-text comment lines, kept for printing.
    pub notes: Vec<String>,
}

/// Result of a successful check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verified {
    /// Formula of the final line.
    pub theorem: Formula,
    pub goals: Vec<Formula>,
    pub hypotheses: Vec<Formula>,
    pub lines: usize,
}

impl Verified {
    /// Declared goals if present, else the final line.
    pub fn theorems(&self) -> Vec<Formula> {
        if self.goals.is_empty() {
            vec![self.theorem.clone()]
        } else {
            self.goals.clone()
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProofErrorKind {
    #[error("proof has no lines")]
    Empty,
    #[error("unknown schema `{0}`")]
    UnknownSchema(String),
    #[error("substitution must bind exactly {expected:?}")]
    BadSubstitution { expected: Vec<String> },
    #[error("formula is not the {schema} instance {expected}")]
    NotInstance { schema: String, expected: Formula },
    #[error("hypothesis {index} does not exist ({count} given)")]
    NoSuchHypothesis { index: usize, count: usize },
    #[error("formula differs from hypothesis {index}: {expected}")]
    HypothesisMismatch { index: usize, expected: Formula },
    #[error("line {cited} is cited but only earlier lines may be")]
    ForwardReference { cited: usize },
    #[error("R1 needs line {major} to be `{minor_formula} -> ψ`, found {found}")]
    R1Shape { major: usize, minor_formula: Formula, found: Formula },
    #[error("R1 conclusion must be {expected}")]
    R1Conclusion { expected: Formula },
    #[error("R2 needs line {from} of shape `(r -> r) -> φ`, found {found}")]
    R2Shape { from: usize, found: Formula },
    #[error("R2 consequent must be an implication")]
    R2NotImplication,
    #[error("R2 conclusion must be {expected}")]
    R2Conclusion { expected: Formula },
    #[error("R3 needs line {line} to be an implication, found {found}")]
    R3Shape { line: usize, found: Formula },
    #[error("R3 conclusion must be {expected}")]
    R3Conclusion { expected: Formula },
    #[error("goal {0} is not derived by any line")]
    GoalNotDerived(Formula),
}

/// A rejected script: the 1-based line at fault and why.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {kind}")]
pub struct ProofError {
    pub line: usize,
    pub kind: ProofErrorKind,
}

/// Rule checker. The strict kernel is the only sound configuration; the lax
/// one lets R2 conclude non-implications and exists to test the fuzzer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Kernel {
    pub r2_requires_implication: bool,
}

impl Default for Kernel {
    fn default() -> Self {
        Kernel::STRICT
    }
}

impl Kernel {
    pub const STRICT: Kernel = Kernel {
        r2_requires_implication: true,
    };
    pub const LAX_R2: Kernel = Kernel {
        r2_requires_implication: false,
    };

    /// The conclusion of R2 applied to `f`, if the rule applies.
    pub fn r2_conclusion(&self, f: &Formula) -> Result<Formula, ProofErrorKind> {
        let shape = || ProofErrorKind::R2Shape { from: 0, found: f.clone() };
        let (prefix, rest) = f.as_arrow().ok_or_else(shape)?;
        let (r1, r2) = prefix.as_arrow().ok_or_else(shape)?;
        if r1 != r2 {
            return Err(shape());
        }
        if self.r2_requires_implication && !rest.is_arrow() {
            return Err(ProofErrorKind::R2NotImplication);
        }
        Ok(rest.clone())
    }

    pub fn check(&self, hypotheses: &[Formula], script: &ProofScript) -> Result<Verified, ProofError> {
        if script.lines.is_empty() {
            return Err(ProofError { line: 0, kind: ProofErrorKind::Empty });
        }
        for (n, line) in script.lines.iter().enumerate() {
            let here = n + 1;
            self.check_line(hypotheses, &script.lines[..n], line)
                .map_err(|kind| ProofError { line: here, kind })?;
        }
        for g in &script.goals {
            if !script.lines.iter().any(|l| &l.formula == g) {
                return Err(ProofError {
                    line: script.lines.len(),
                    kind: ProofErrorKind::GoalNotDerived(g.clone()),
                });
            }
        }
        Ok(Verified {
            theorem: script.lines.last().expect("nonempty").formula.clone(),
            goals: script.goals.clone(),
            hypotheses: hypotheses.to_vec(),
            lines: script.lines.len(),
        })
    }

    fn check_line(&self, hyps: &[Formula], earlier: &[ProofLine], line: &ProofLine) -> Result<(), ProofErrorKind> {
        let cite = |i: usize| -> Result<&Formula, ProofErrorKind> {
            if i == 0 || i > earlier.len() {
                Err(ProofErrorKind::ForwardReference { cited: i })
            } else {
                Ok(&earlier[i - 1].formula)
            }
        };
        let f = &line.formula;
        match &line.justification {
            Justification::Axiom { schema: id, subst } => {
                let s = schema(id).ok_or_else(|| ProofErrorKind::UnknownSchema(id.clone()))?;
                let expected = s.instantiate(subst).ok_or_else(|| ProofErrorKind::BadSubstitution {
                    expected: s.metavars.clone(),
                })?;
                if &expected != f || match_schema(s, f).is_none() {
                    return Err(ProofErrorKind::NotInstance {
                        schema: id.clone(),
                        expected,
                    });
                }
            }
            Justification::Hypothesis(k) => {
                let h = k
                    .checked_sub(1)
                    .and_then(|i| hyps.get(i))
                    .ok_or(ProofErrorKind::NoSuchHypothesis {
                        index: *k,
                        count: hyps.len(),
                    })?;
                if h != f {
                    return Err(ProofErrorKind::HypothesisMismatch {
                        index: *k,
                        expected: h.clone(),
                    });
                }
            }
            Justification::R1 { minor, major, side } => {
                let phi = cite(*minor)?;
                let imp = cite(*major)?;
                let psi = match imp.as_arrow() {
                    Some((a, b)) if a == phi => b,
                    _ => {
                        return Err(ProofErrorKind::R1Shape {
                            major: *major,
                            minor_formula: phi.clone(),
                            found: imp.clone(),
                        })
                    }
                };
                let expected = Formula::diag(side).imp(psi);
                if &expected != f {
                    return Err(ProofErrorKind::R1Conclusion { expected });
                }
            }
            Justification::R2 { from } => {
                let src = cite(*from)?;
                let expected = self.r2_conclusion(src).map_err(|e| match e {
                    ProofErrorKind::R2Shape { found, .. } => ProofErrorKind::R2Shape { from: *from, found },
                    other => other,
                })?;
                if &expected != f {
                    return Err(ProofErrorKind::R2Conclusion { expected });
                }
            }
            Justification::R3 { first, second } => {
                let a = cite(*first)?;
                let b = cite(*second)?;
                let (phi, psi) = a.as_arrow().ok_or_else(|| ProofErrorKind::R3Shape {
                    line: *first,
                    found: a.clone(),
                })?;
                let (chi, omega) = b.as_arrow().ok_or_else(|| ProofErrorKind::R3Shape {
                    line: *second,
                    found: b.clone(),
                })?;
                let expected = psi.imp(chi).imp(&phi.imp(omega));
                if &expected != f {
                    return Err(ProofErrorKind::R3Conclusion { expected });
                }
            }
        }
        Ok(())
    }
}

/// Checks a script against its own hypotheses.
pub fn check_proof(script: &ProofScript) -> Result<Verified, ProofError> {
    Kernel::STRICT.check(&script.hypotheses, script)
}

/// Checks a script with hypothesis lines resolved against `hypotheses`.
pub fn check_proof_from(hypotheses: &[Formula], script: &ProofScript) -> Result<Verified, ProofError> {
    Kernel::STRICT.check(hypotheses, script)
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("line {line}: {message}")]
pub struct ScriptParseError {
    pub line: usize,
    pub message: String,
}

impl ProofScript {
    pub fn parse(text: &str) -> Result<ProofScript, ScriptParseError> {
        let mut script = ProofScript::default();
        for (n, raw) in text.lines().enumerate() {
            let ln = n + 1;
            let err = |message: String| ScriptParseError { line: ln, message };
            let fe = |e: FormulaError| err(format!("formula: {e}"));
            let line = raw.trim();
            if line.is_empty() {
                continue;
            }
            if let Some(note) = line.strip_prefix('#') {
                script.notes.push(note.trim().to_string());
                continue;
            }
            if let Some(rest) = line.strip_prefix("theorem:") {
                script.goals.push(Formula::parse(rest).map_err(fe)?);
                continue;
            }
            if let Some(rest) = line.strip_prefix("hyp ") {
                let (k, f) = rest.split_once(':').ok_or_else(|| err("expected `hyp <k>: <formula>`".into()))?;
                let k: usize = k.trim().parse().map_err(|_| err(format!("bad hypothesis number `{}`", k.trim())))?;
                if k != script.hypotheses.len() + 1 {
                    return Err(err(format!(
                        "hypotheses must be numbered in order, expected {}",
                        script.hypotheses.len() + 1
                    )));
                }
                script.hypotheses.push(Formula::parse(f).map_err(fe)?);
                continue;
            }
            let (num, rest) = line
                .split_once('.')
                .ok_or_else(|| err("expected `<n>. <formula> ; <justification>`".into()))?;
            let num: usize = num.trim().parse().map_err(|_| err(format!("bad line number `{}`", num.trim())))?;
            if num != script.lines.len() + 1 {
                return Err(err(format!("lines must be numbered in order, expected {}", script.lines.len() + 1)));
            }
            let (f, just) = rest
                .rsplit_once(';')
                .ok_or_else(|| err("missing `; <justification>`".into()))?;
            let formula = Formula::parse(f).map_err(fe)?;
            let justification = parse_justification(just.trim()).map_err(err)?;
            script.lines.push(ProofLine { formula, justification });
        }
        Ok(script)
    }
}

fn parse_justification(s: &str) -> Result<Justification, String> {
    let (head, rest) = s.split_once(char::is_whitespace).unwrap_or((s, ""));
    let rest = rest.trim();
    let nums = |rest: &str, k: usize| -> Result<Vec<usize>, String> {
        let v: Vec<usize> = rest
            .split_whitespace()
            .take(k)
            .map(|t| t.parse().map_err(|_| format!("bad line reference `{t}`")))
            .collect::<Result<_, _>>()?;
        if v.len() != k {
            return Err(format!("`{head}` needs {k} line reference(s)"));
        }
        Ok(v)
    };
    match head {
        "ax" => {
            let (id, binds) = rest.split_once(char::is_whitespace).unwrap_or((rest, ""));
            if id.is_empty() {
                return Err("`ax` needs a schema id".into());
            }
            let mut subst = Substitution::new();
            for b in binds.split(',').map(str::trim).filter(|b| !b.is_empty()) {
                let (mv, f) = b.split_once(":=").ok_or_else(|| format!("expected `<mv>:=<formula>`, got `{b}`"))?;
                let f = Formula::parse(f).map_err(|e| format!("binding of {}: {e}", mv.trim()))?;
                if subst.insert(mv.trim().to_string(), f).is_some() {
                    return Err(format!("metavariable {} bound twice", mv.trim()));
                }
            }
            Ok(Justification::Axiom {
                schema: id.to_string(),
                subst,
            })
        }
        "hyp" => Ok(Justification::Hypothesis(nums(rest, 1)?[0])),
        "r1" => {
            let v = nums(rest, 2)?;
            let side = rest
                .split_once("r:=")
                .ok_or("`r1` needs `r:=<formula>`")?
                .1;
            let side = Formula::parse(side).map_err(|e| format!("side formula: {e}"))?;
            Ok(Justification::R1 {
                minor: v[0],
                major: v[1],
                side,
            })
        }
        "r2" => Ok(Justification::R2 { from: nums(rest, 1)?[0] }),
        "r3" => {
            let v = nums(rest, 2)?;
            Ok(Justification::R3 {
                first: v[0],
                second: v[1],
            })
        }
        _ => Err(format!("unknown justification `{head}`")),
    }
}

impl FromStr for ProofScript {
    type Err = ScriptParseError;
    fn from_str(s: &str) -> Result<ProofScript, ScriptParseError> {
        ProofScript::parse(s)
    }
}

impl fmt::Display for Justification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Justification::Axiom { schema, subst } => {
                write!(f, "ax {schema}")?;
                for (i, (mv, g)) in subst.iter().enumerate() {
                    write!(f, "{}{mv}:={g}", if i == 0 { " " } else { ", " })?;
                }
                Ok(())
            }
            Justification::Hypothesis(k) => write!(f, "hyp {k}"),
            Justification::R1 { minor, major, side } => write!(f, "r1 {minor} {major} r:={side}"),
            Justification::R2 { from } => write!(f, "r2 {from}"),
            Justification::R3 { first, second } => write!(f, "r3 {first} {second}"),
        }
    }
}

impl fmt::Display for ProofScript {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for n in &self.notes {
            writeln!(f, "# {n}")?;
        }
        for g in &self.goals {
            writeln!(f, "theorem: {g}")?;
        }
        for (i, h) in self.hypotheses.iter().enumerate() {
            writeln!(f, "hyp {}: {h}", i + 1)?;
        }
        for (i, l) in self.lines.iter().enumerate() {
            writeln!(f, "{}. {} ; {}", i + 1, l.formula, l.justification)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    const REFL: &str = "\
theorem: p -> p
1. p -> (1 -> 1) -> p ; ax Q3.L p:=p, q:=1
2. ((1 -> 1) -> p) -> p ; ax Q3.R p:=p, q:=1
3. (p -> p) -> p -> p ; r3 1 2
4. ((p -> p) -> p -> p) -> p -> p ; ax Q3.R p:=p -> p, q:=p
";

    #[test]
    fn parse_print_round_trip() {
        let s = ProofScript::parse(REFL).unwrap();
        assert_eq!(s.lines.len(), 4);
        assert_eq!(ProofScript::parse(&s.to_string()).unwrap(), s);
    }

    #[test]
    fn r3_line_is_checked() {
        let s = ProofScript::parse(REFL).unwrap();
        // line 3 should be ((1 -> 1) -> p) -> ... so the shortcut is rejected
        let e = check_proof(&s).unwrap_err();
        assert_eq!(e.line, 3);
        assert!(matches!(e.kind, ProofErrorKind::R3Conclusion { .. }));
    }

    #[test]
    fn r2_needs_an_implication() {
        let s = ProofScript::parse(
            "hyp 1: (r -> r) -> q\n1. (r -> r) -> q ; hyp 1\n2. q ; r2 1\n",
        )
        .unwrap();
        let e = check_proof(&s).unwrap_err();
        assert_eq!(e.to_string(), "line 2: R2 consequent must be an implication");
        let v = Kernel::LAX_R2.check(&s.hypotheses, &s).unwrap();
        assert_eq!(v.theorem, Formula::var("q"));
    }

    #[test]
    fn forward_references_fail() {
        let s = ProofScript::parse("1. p -> 1 ; ax Q10 p:=p\n2. (1 -> 1) -> 1 ; r1 1 2 r:=1\n").unwrap();
        assert_eq!(
            check_proof(&s).unwrap_err().kind,
            ProofErrorKind::ForwardReference { cited: 2 }
        );
        let s = ProofScript::parse("1. p -> 1 ; r2 1\n").unwrap();
        assert_eq!(check_proof(&s).unwrap_err().line, 1);
    }

    #[test]
    fn hypotheses_from_outside() {
        let s = ProofScript::parse("1. p ; hyp 1\n2. p -> q ; hyp 2\n3. (1 -> 1) -> q ; r1 1 2 r:=1\n").unwrap();
        let g = [Formula::var("p"), Formula::parse("p -> q").unwrap()];
        let v = check_proof_from(&g, &s).unwrap();
        assert_eq!(v.theorem, Formula::parse("(1 -> 1) -> q").unwrap());
        assert!(check_proof(&s).is_err());
    }

    #[test]
    fn substitutions_must_be_total() {
        let s = ProofScript::parse("1. p -> (1 -> 1) -> p ; ax Q3.L p:=p\n").unwrap();
        assert!(matches!(check_proof(&s).unwrap_err().kind, ProofErrorKind::BadSubstitution { .. }));
    }
}
