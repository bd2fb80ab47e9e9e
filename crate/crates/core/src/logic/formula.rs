use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use thiserror::Error;

/// A formula over `→, ¬, ⁺, ⁻, 1`. Children are shared, so cloning is cheap.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Formula {
    Var(Arc<str>),
    One,
    Neg(Arc<Formula>),
    Arrow(Arc<Formula>, Arc<Formula>),
    Pos(Arc<Formula>),
    NegPart(Arc<Formula>),
}

/// One step into a formula: the operand of a unary connective, or a side of
/// an implication.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Inner,
    Left,
    Right,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("column {column}: {message}")]
pub struct FormulaError {
    pub column: usize,
    pub message: String,
}

impl Formula {
    pub fn var(name: &str) -> Formula {
        Formula::Var(name.into())
    }

    pub fn one() -> Formula {
        Formula::One
    }

    pub fn neg(&self) -> Formula {
        Formula::Neg(Arc::new(self.clone()))
    }

    pub fn imp(&self, other: &Formula) -> Formula {
        Formula::Arrow(Arc::new(self.clone()), Arc::new(other.clone()))
    }

    pub fn pos(&self) -> Formula {
        Formula::Pos(Arc::new(self.clone()))
    }

    pub fn negpart(&self) -> Formula {
        Formula::NegPart(Arc::new(self.clone()))
    }

    /// `((p⁺→q⁺)⁺→(¬p)⁻)→((q⁻→p⁻)⁻→p⁻)`.
    pub fn join(&self, q: &Formula) -> Formula {
        let p = self;
        let left = p.pos().imp(&q.pos()).pos().imp(&p.neg().negpart());
        let right = q.negpart().imp(&p.negpart()).negpart().imp(&p.negpart());
        left.imp(&right)
    }

    /// `¬(¬p ∨ ¬q)`.
    pub fn meet(&self, q: &Formula) -> Formula {
        self.neg().join(&q.neg()).neg()
    }

    /// `r → r`, the shape every rule prefix takes.
    pub fn diag(r: &Formula) -> Formula {
        r.imp(r)
    }

    pub fn parse(text: &str) -> Result<Formula, FormulaError> {
        let mut p = Parser { src: text.as_bytes(), pos: 0 };
        let f = p.lattice()?;
        p.skip_ws();
        if p.pos < p.src.len() {
            return Err(p.error("unexpected trailing input"));
        }
        Ok(f)
    }

    pub fn as_arrow(&self) -> Option<(&Formula, &Formula)> {
        match self {
            Formula::Arrow(a, b) => Some((a, b)),
            _ => None,
        }
    }

    pub fn is_arrow(&self) -> bool {
        matches!(self, Formula::Arrow(..))
    }

    /// Number of connectives.
    pub fn connectives(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::One => 0,
            Formula::Neg(a) | Formula::Pos(a) | Formula::NegPart(a) => 1 + a.connectives(),
            Formula::Arrow(a, b) => 1 + a.connectives() + b.connectives(),
        }
    }

    pub fn depth(&self) -> usize {
        match self {
            Formula::Var(_) | Formula::One => 0,
            Formula::Neg(a) | Formula::Pos(a) | Formula::NegPart(a) => 1 + a.depth(),
            Formula::Arrow(a, b) => 1 + a.depth().max(b.depth()),
        }
    }

    /// Variable names, sorted.
    pub fn vars(&self) -> Vec<String> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out.into_iter().collect()
    }

    fn collect_vars(&self, out: &mut BTreeSet<String>) {
        match self {
            Formula::Var(v) => {
                out.insert(v.to_string());
            }
            Formula::One => {}
            Formula::Neg(a) | Formula::Pos(a) | Formula::NegPart(a) => a.collect_vars(out),
            Formula::Arrow(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    pub fn at(&self, path: &[Step]) -> Option<&Formula> {
        let Some((step, rest)) = path.split_first() else {
            return Some(self);
        };
        match (self, step) {
            (Formula::Neg(a) | Formula::Pos(a) | Formula::NegPart(a), Step::Inner) => a.at(rest),
            (Formula::Arrow(a, _), Step::Left) => a.at(rest),
            (Formula::Arrow(_, b), Step::Right) => b.at(rest),
            _ => None,
        }
    }

    /// Copy of `self` with the subformula at `path` replaced.
    pub fn replace_at(&self, path: &[Step], with: &Formula) -> Option<Formula> {
        let Some((step, rest)) = path.split_first() else {
            return Some(with.clone());
        };
        Some(match (self, step) {
            (Formula::Neg(a), Step::Inner) => a.replace_at(rest, with)?.neg(),
            (Formula::Pos(a), Step::Inner) => a.replace_at(rest, with)?.pos(),
            (Formula::NegPart(a), Step::Inner) => a.replace_at(rest, with)?.negpart(),
            (Formula::Arrow(a, b), Step::Left) => a.replace_at(rest, with)?.imp(b),
            (Formula::Arrow(a, b), Step::Right) => a.imp(&b.replace_at(rest, with)?),
            _ => return None,
        })
    }

    /// Paths of every occurrence of `sub`, outermost first, left to right.
    pub fn occurrences(&self, sub: &Formula) -> Vec<Vec<Step>> {
        let mut out = Vec::new();
        let mut path = Vec::new();
        self.find(sub, &mut path, &mut out);
        out
    }

    fn find(&self, sub: &Formula, path: &mut Vec<Step>, out: &mut Vec<Vec<Step>>) {
        if self == sub {
            out.push(path.clone());
        }
        let go = |f: &Formula, s: Step, path: &mut Vec<Step>, out: &mut Vec<Vec<Step>>| {
            path.push(s);
            f.find(sub, path, out);
            path.pop();
        };
        match self {
            Formula::Var(_) | Formula::One => {}
            Formula::Neg(a) | Formula::Pos(a) | Formula::NegPart(a) => go(a, Step::Inner, path, out),
            Formula::Arrow(a, b) => {
                go(a, Step::Left, path, out);
                go(b, Step::Right, path, out);
            }
        }
    }

    /// Simultaneous replacement of variables.
    pub fn substitute(&self, map: &dyn Fn(&str) -> Option<Formula>) -> Formula {
        match self {
            Formula::Var(v) => map(v).unwrap_or_else(|| self.clone()),
            Formula::One => Formula::One,
            Formula::Neg(a) => a.substitute(map).neg(),
            Formula::Pos(a) => a.substitute(map).pos(),
            Formula::NegPart(a) => a.substitute(map).negpart(),
            Formula::Arrow(a, b) => a.substitute(map).imp(&b.substitute(map)),
        }
    }

    fn write(&self, f: &mut fmt::Formatter<'_>, level: u8) -> fmt::Result {
        // 0: right of an arrow, 1: left of an arrow or under ~, 2: under a postfix.
        let own = match self {
            Formula::Var(_) | Formula::One | Formula::Pos(_) | Formula::NegPart(_) => 2,
            Formula::Neg(_) => 1,
            Formula::Arrow(..) => 0,
        };
        let paren = own < level;
        if paren {
            f.write_str("(")?;
        }
        match self {
            Formula::Var(v) => f.write_str(v)?,
            Formula::One => f.write_str("1")?,
            Formula::Neg(a) => {
                f.write_str("~")?;
                a.write(f, 1)?;
            }
            Formula::Pos(a) => {
                a.write(f, 2)?;
                f.write_str("^+")?;
            }
            Formula::NegPart(a) => {
                a.write(f, 2)?;
                f.write_str("^-")?;
            }
            Formula::Arrow(a, b) => {
                a.write(f, 1)?;
                f.write_str(" -> ")?;
                b.write(f, 0)?;
            }
        }
        if paren {
            f.write_str(")")?;
        }
        Ok(())
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.write(f, 0)
    }
}

impl fmt::Debug for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}

impl FromStr for Formula {
    type Err = FormulaError;
    fn from_str(s: &str) -> Result<Formula, FormulaError> {
        Formula::parse(s)
    }
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn error(&self, message: &str) -> FormulaError {
        FormulaError {
            column: self.pos + 1,
            message: message.to_string(),
        }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn eat(&mut self, token: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(token.as_bytes()) {
            self.pos += token.len();
            true
        } else {
            false
        }
    }

    // \/ and /\ : loosest, left-associative, expanded on the spot.
    fn lattice(&mut self) -> Result<Formula, FormulaError> {
        let mut f = self.arrow()?;
        loop {
            if self.eat("\\/") {
                f = f.join(&self.arrow()?);
            } else if self.eat("/\\") {
                f = f.meet(&self.arrow()?);
            } else {
                return Ok(f);
            }
        }
    }

    fn arrow(&mut self) -> Result<Formula, FormulaError> {
        let left = self.unary()?;
        if self.eat("->") {
            Ok(left.imp(&self.arrow()?))
        } else {
            Ok(left)
        }
    }

    fn unary(&mut self) -> Result<Formula, FormulaError> {
        if self.eat("~") {
            return Ok(self.unary()?.neg());
        }
        let mut f = self.atom()?;
        loop {
            if self.eat("^+") {
                f = f.pos();
            } else if self.eat("^-") {
                f = f.negpart();
            } else {
                return Ok(f);
            }
        }
    }

    fn atom(&mut self) -> Result<Formula, FormulaError> {
        self.skip_ws();
        let Some(&c) = self.src.get(self.pos) else {
            return Err(self.error("unexpected end of formula"));
        };
        match c {
            b'(' => {
                self.pos += 1;
                let f = self.lattice()?;
                if !self.eat(")") {
                    return Err(self.error("expected `)`"));
                }
                Ok(f)
            }
            b'1' => {
                self.pos += 1;
                if self.src.get(self.pos).is_some_and(|c| c.is_ascii_alphanumeric()) {
                    return Err(self.error("unexpected character after `1`"));
                }
                Ok(Formula::One)
            }
            b'a'..=b'z' => {
                let start = self.pos;
                while self
                    .src
                    .get(self.pos)
                    .is_some_and(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || *c == b'_')
                {
                    self.pos += 1;
                }
                let name = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii");
                Ok(Formula::var(name))
            }
            _ => Err(self.error(&format!("unexpected `{}`", char::from(c)))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(s: &str) -> Formula {
        Formula::parse(s).unwrap()
    }

    #[test]
    fn precedence() {
        let p = Formula::var("p");
        let q = Formula::var("q");
        assert_eq!(f("~q -> ~p"), q.neg().imp(&p.neg()));
        assert_eq!(f("p^+ -> 1"), p.pos().imp(&Formula::one()));
        assert_eq!(f("~p^-"), p.negpart().neg());
        assert_eq!(f("p -> q -> p"), p.imp(&q.imp(&p)));
        assert_eq!(f("(~p)^+^-"), p.neg().pos().negpart());
    }

    #[test]
    fn join_expands() {
        let expected = f("((p^+ -> q^+)^+ -> (~p)^-) -> ((q^- -> p^-)^- -> p^-)");
        assert_eq!(f("p \\/ q"), expected);
        assert_eq!(f("p /\\ q"), f("~(~p \\/ ~q)"));
        // the lattice macros bind loosest
        assert_eq!(f("p -> q \\/ r"), f("(p -> q) \\/ r"));
    }

    #[test]
    fn printing_is_minimal() {
        for s in ["~(p -> q) -> ~p", "(p -> q) -> r", "(~p)^+", "~p^+", "p1 -> q_2", "(p -> 1)^-^+"] {
            assert_eq!(f(s).to_string(), s);
        }
    }

    #[test]
    fn errors_carry_columns() {
        assert_eq!(Formula::parse("p -> ").unwrap_err().column, 6);
        assert_eq!(Formula::parse("(p").unwrap_err().message, "expected `)`");
        assert_eq!(Formula::parse("p q").unwrap_err().column, 3);
        assert!(Formula::parse("P").is_err());
        assert!(Formula::parse("12").is_err());
    }

    #[test]
    fn paths() {
        let g = f("~(s -> p1) -> p1");
        let p1 = Formula::var("p1");
        let occ = g.occurrences(&p1);
        assert_eq!(occ, vec![vec![Step::Left, Step::Inner, Step::Right], vec![Step::Right]]);
        assert_eq!(g.replace_at(&occ[0], &Formula::var("r1")).unwrap(), f("~(s -> r1) -> p1"));
        assert!(g.at(&[Step::Inner]).is_none());
    }
}
