//! Metavariable terms, their macro expansion into pure signature terms, and
//! a compiled form used by the checkers.
//!
//! Concrete syntax (ASCII):
//!
//! ```text
//! x y z u v t       metavariables
//! 0 1               constants (0 is 1->1 in the implicative kinds)
//! a + b   a -> b    binary operation, right associative
//! -a      ~a        negation (both spellings denote the same operation)
//! a^+     a^-       postfix positive / negative part
//! a \/ b  a /\ b    join / meet macros, loosest, left associative
//! ```

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

use super::{Kind, Structure};

/// Metavariable names in canonical order; arities list variables in this order.
pub const METAVARIABLES: [char; 6] = ['x', 'y', 'z', 'u', 'v', 't'];

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum LawTerm {
    Var(char),
    One,
    Zero,
    Plus(Box<LawTerm>, Box<LawTerm>),
    Arrow(Box<LawTerm>, Box<LawTerm>),
    Neg(Box<LawTerm>),
    Pos(Box<LawTerm>),
    NegPart(Box<LawTerm>),
    Join(Box<LawTerm>, Box<LawTerm>),
    Meet(Box<LawTerm>, Box<LawTerm>),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TermError {
    #[error("syntax error at column {column}: {message}")]
    Syntax { column: usize, message: String },
    #[error("operation {op} is not in the {kind} signature")]
    NotInSignature { op: &'static str, kind: Kind },
    #[error("metavariable `{0}` is unbound")]
    Unbound(char),
    #[error("law {law} is stated for kind {law_kind}, algebra has kind {kind}")]
    KindMismatch {
        law: String,
        law_kind: Kind,
        kind: Kind,
    },
}

use LawTerm::*;

fn bx(t: LawTerm) -> Box<LawTerm> {
    Box::new(t)
}

impl LawTerm {
    pub fn var(c: char) -> Self {
        Var(c)
    }
    pub fn plus(a: LawTerm, b: LawTerm) -> Self {
        Plus(bx(a), bx(b))
    }
    pub fn arrow(a: LawTerm, b: LawTerm) -> Self {
        Arrow(bx(a), bx(b))
    }
    pub fn neg(a: LawTerm) -> Self {
        Neg(bx(a))
    }
    pub fn pos(a: LawTerm) -> Self {
        Pos(bx(a))
    }
    pub fn negpart(a: LawTerm) -> Self {
        NegPart(bx(a))
    }
    pub fn join(a: LawTerm, b: LawTerm) -> Self {
        Join(bx(a), bx(b))
    }
    pub fn meet(a: LawTerm, b: LawTerm) -> Self {
        Meet(bx(a), bx(b))
    }

    /// The binary operation of `kind` applied to `a` and `b`.
    pub fn binary(kind: Kind, a: LawTerm, b: LawTerm) -> Self {
        if kind.is_implicative() {
            Self::arrow(a, b)
        } else {
            Self::plus(a, b)
        }
    }

    pub fn parse(src: &str) -> Result<Self, TermError> {
        let mut p = Parser::new(src)?;
        let t = p.lattice()?;
        p.expect_end()?;
        Ok(t)
    }

    /// Adds the metavariables of this term to `out`.
    pub fn collect_vars(&self, out: &mut Vec<char>) {
        match self {
            Var(c) => {
                if !out.contains(c) {
                    out.push(*c)
                }
            }
            One | Zero => {}
            Neg(a) | Pos(a) | NegPart(a) => a.collect_vars(out),
            Plus(a, b) | Arrow(a, b) | Join(a, b) | Meet(a, b) => {
                a.collect_vars(out);
                b.collect_vars(out);
            }
        }
    }

    /// True when the term uses only primitive operations of `kind`.
    pub fn is_pure(&self, kind: Kind) -> bool {
        match self {
            Var(_) | One => true,
            Zero => !kind.is_implicative(),
            Plus(a, b) => !kind.is_implicative() && a.is_pure(kind) && b.is_pure(kind),
            Arrow(a, b) => kind.is_implicative() && a.is_pure(kind) && b.is_pure(kind),
            Neg(a) => a.is_pure(kind),
            Pos(a) | NegPart(a) => kind.is_quasi() && a.is_pure(kind),
            Join(..) | Meet(..) => false,
        }
    }

    /// Rewrites every macro of `kind` into primitive operations.
    ///
    /// * `0` becomes `1→1` for w/qw;
    /// * `⁺`, `⁻` become `1⊕(−1⊕x)`, `−1⊕(1⊕x)` for mv and `(x→1)→1`,
    ///   `(x→¬1)→¬1` for w;
    /// * `x∨y` becomes `(x⁺⊕(−x⁺⊕y⁺)⁺)⊕(x⁻⊕(−x⁻⊕y⁻)⁺)` for ⊕-kinds and
    ///   `((x⁺→y⁺)⁺→(¬x)⁻)→((y⁻→x⁻)⁻→x⁻)` for →-kinds;
    /// * `x∧y` becomes `¬(¬x∨¬y)`.
    pub fn expand(&self, kind: Kind) -> Result<LawTerm, TermError> {
        let imp = kind.is_implicative();
        Ok(match self {
            Var(c) => Var(*c),
            One => One,
            Zero if imp => Self::arrow(One, One),
            Zero => Zero,
            Plus(a, b) if !imp => Self::plus(a.expand(kind)?, b.expand(kind)?),
            Plus(..) => return Err(TermError::NotInSignature { op: "plus", kind }),
            Arrow(a, b) if imp => Self::arrow(a.expand(kind)?, b.expand(kind)?),
            Arrow(..) => return Err(TermError::NotInSignature { op: "arrow", kind }),
            Neg(a) => Self::neg(a.expand(kind)?),
            Pos(a) => positive_part(kind, a.expand(kind)?),
            NegPart(a) => negative_part(kind, a.expand(kind)?),
            Join(a, b) => join_expansion(kind, a.expand(kind)?, b.expand(kind)?),
            Meet(a, b) => {
                let a = Self::neg(a.expand(kind)?);
                let b = Self::neg(b.expand(kind)?);
                Self::neg(join_expansion(kind, a, b))
            }
        })
    }

    /// Number of nodes.
    pub fn size(&self) -> usize {
        match self {
            Var(_) | One | Zero => 1,
            Neg(a) | Pos(a) | NegPart(a) => 1 + a.size(),
            Plus(a, b) | Arrow(a, b) | Join(a, b) | Meet(a, b) => 1 + a.size() + b.size(),
        }
    }
}

fn positive_part(kind: Kind, x: LawTerm) -> LawTerm {
    match kind {
        Kind::Qmv | Kind::Qw => LawTerm::pos(x),
        Kind::Mv => LawTerm::plus(One, LawTerm::plus(LawTerm::neg(One), x)),
        Kind::W => LawTerm::arrow(LawTerm::arrow(x, One), One),
    }
}

fn negative_part(kind: Kind, x: LawTerm) -> LawTerm {
    match kind {
        Kind::Qmv | Kind::Qw => LawTerm::negpart(x),
        Kind::Mv => LawTerm::plus(LawTerm::neg(One), LawTerm::plus(One, x)),
        Kind::W => LawTerm::arrow(
            LawTerm::arrow(x, LawTerm::neg(One)),
            LawTerm::neg(One),
        ),
    }
}

/// Join of two already-expanded terms.
fn join_expansion(kind: Kind, x: LawTerm, y: LawTerm) -> LawTerm {
    let p = |t: LawTerm| positive_part(kind, t);
    let m = |t: LawTerm| negative_part(kind, t);
    if kind.is_implicative() {
        // ((x⁺→y⁺)⁺→(¬x)⁻)→((y⁻→x⁻)⁻→x⁻)
        let left = LawTerm::arrow(
            p(LawTerm::arrow(p(x.clone()), p(y.clone()))),
            m(LawTerm::neg(x.clone())),
        );
        let right = LawTerm::arrow(m(LawTerm::arrow(m(y), m(x.clone()))), m(x));
        LawTerm::arrow(left, right)
    } else {
        // (x⁺⊕(−x⁺⊕y⁺)⁺)⊕(x⁻⊕(−x⁻⊕y⁻)⁺)
        let left = LawTerm::plus(
            p(x.clone()),
            p(LawTerm::plus(LawTerm::neg(p(x.clone())), p(y.clone()))),
        );
        let right = LawTerm::plus(
            m(x.clone()),
            p(LawTerm::plus(LawTerm::neg(m(x)), m(y))),
        );
        LawTerm::plus(left, right)
    }
}

impl fmt::Display for LawTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn go(t: &LawTerm, f: &mut fmt::Formatter<'_>, neg: &str) -> fmt::Result {
            let wrap = |t: &LawTerm, f: &mut fmt::Formatter<'_>| -> fmt::Result {
                match t {
                    Var(_) | One | Zero | Pos(_) | NegPart(_) => go(t, f, neg),
                    _ => {
                        f.write_str("(")?;
                        go(t, f, neg)?;
                        f.write_str(")")
                    }
                }
            };
            match t {
                Var(c) => write!(f, "{c}"),
                One => f.write_str("1"),
                Zero => f.write_str("0"),
                Neg(a) => {
                    f.write_str(neg)?;
                    match **a {
                        Neg(_) => go(a, f, neg),
                        _ => wrap(a, f),
                    }
                }
                Pos(a) => {
                    wrap(a, f)?;
                    f.write_str("^+")
                }
                NegPart(a) => {
                    wrap(a, f)?;
                    f.write_str("^-")
                }
                Plus(a, b) | Arrow(a, b) | Join(a, b) | Meet(a, b) => {
                    let op = match t {
                        Plus(..) => " + ",
                        Arrow(..) => " -> ",
                        Join(..) => " \\/ ",
                        _ => " /\\ ",
                    };
                    let side = |s: &LawTerm, f: &mut fmt::Formatter<'_>| match s {
                        Neg(_) => go(s, f, neg),
                        _ => wrap(s, f),
                    };
                    side(a, f)?;
                    f.write_str(op)?;
                    side(b, f)
                }
            }
        }
        let neg = if self.uses_plus() { "-" } else { "~" };
        go(self, f, neg)
    }
}

impl LawTerm {
    fn uses_plus(&self) -> bool {
        match self {
            Plus(..) => true,
            Var(_) | One | Zero => false,
            Neg(a) | Pos(a) | NegPart(a) => a.uses_plus(),
            Arrow(a, b) | Join(a, b) | Meet(a, b) => a.uses_plus() || b.uses_plus(),
        }
    }
}

// ---------------------------------------------------------------------------
// parsing

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Var(char),
    Zero,
    One,
    Plus,
    Arrow,
    Neg,
    PostPos,
    PostNeg,
    Join,
    Meet,
    LParen,
    RParen,
}

struct Parser {
    toks: Vec<(Tok, usize)>,
    at: usize,
    end: usize,
}

impl Parser {
    fn new(src: &str) -> Result<Self, TermError> {
        let chars: Vec<char> = src.chars().collect();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = i + 1;
            let next = chars.get(i + 1).copied();
            let (tok, len) = match (c, next) {
                (c, _) if c.is_whitespace() => {
                    i += 1;
                    continue;
                }
                ('^', Some('+')) => (Tok::PostPos, 2),
                ('^', Some('-')) => (Tok::PostNeg, 2),
                ('-', Some('>')) => (Tok::Arrow, 2),
                ('\\', Some('/')) => (Tok::Join, 2),
                ('/', Some('\\')) => (Tok::Meet, 2),
                ('-' | '~', _) => (Tok::Neg, 1),
                ('+', _) => (Tok::Plus, 1),
                ('(', _) => (Tok::LParen, 1),
                (')', _) => (Tok::RParen, 1),
                ('0', _) => (Tok::Zero, 1),
                ('1', _) => (Tok::One, 1),
                (c, _) if METAVARIABLES.contains(&c) => (Tok::Var(c), 1),
                (c, _) => {
                    return Err(TermError::Syntax {
                        column: col,
                        message: format!("unexpected character `{c}`"),
                    })
                }
            };
            toks.push((tok, col));
            i += len;
        }
        Ok(Parser {
            toks,
            at: 0,
            end: chars.len() + 1,
        })
    }

    fn peek(&self) -> Option<Tok> {
        self.toks.get(self.at).map(|t| t.0)
    }

    fn column(&self) -> usize {
        self.toks.get(self.at).map_or(self.end, |t| t.1)
    }

    fn err<T>(&self, message: impl Into<String>) -> Result<T, TermError> {
        Err(TermError::Syntax {
            column: self.column(),
            message: message.into(),
        })
    }

    fn expect_end(&self) -> Result<(), TermError> {
        match self.peek() {
            None => Ok(()),
            Some(t) => self.err(format!("unexpected token {t:?}")),
        }
    }

    fn lattice(&mut self) -> Result<LawTerm, TermError> {
        let mut t = self.binop()?;
        while let Some(op @ (Tok::Join | Tok::Meet)) = self.peek() {
            self.at += 1;
            let rhs = self.binop()?;
            t = if op == Tok::Join {
                LawTerm::join(t, rhs)
            } else {
                LawTerm::meet(t, rhs)
            };
        }
        Ok(t)
    }

    fn binop(&mut self) -> Result<LawTerm, TermError> {
        let lhs = self.unary()?;
        match self.peek() {
            Some(Tok::Plus) => {
                self.at += 1;
                Ok(LawTerm::plus(lhs, self.binop()?))
            }
            Some(Tok::Arrow) => {
                self.at += 1;
                Ok(LawTerm::arrow(lhs, self.binop()?))
            }
            _ => Ok(lhs),
        }
    }

    fn unary(&mut self) -> Result<LawTerm, TermError> {
        if self.peek() == Some(Tok::Neg) {
            self.at += 1;
            return Ok(LawTerm::neg(self.unary()?));
        }
        let mut t = self.primary()?;
        loop {
            match self.peek() {
                Some(Tok::PostPos) => t = LawTerm::pos(t),
                Some(Tok::PostNeg) => t = LawTerm::negpart(t),
                _ => return Ok(t),
            }
            self.at += 1;
        }
    }

    fn primary(&mut self) -> Result<LawTerm, TermError> {
        let t = match self.peek() {
            Some(Tok::Var(c)) => Var(c),
            Some(Tok::Zero) => Zero,
            Some(Tok::One) => One,
            Some(Tok::LParen) => {
                self.at += 1;
                let t = self.lattice()?;
                if self.peek() != Some(Tok::RParen) {
                    return self.err("expected `)`");
                }
                t
            }
            Some(t) => return self.err(format!("unexpected token {t:?}")),
            None => return self.err("unexpected end of term"),
        };
        self.at += 1;
        Ok(t)
    }
}

// ---------------------------------------------------------------------------
// laws

/// An atomic statement: an equation or an order atom `s ≤ t`.
///
/// Order atoms are read through the defined order: `s ≤ t` iff
/// `s∨t = 0⊕t` (⊕-kinds) or `s∨t = 0→t` (→-kinds).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Atom {
    Eq(LawTerm, LawTerm),
    Leq(LawTerm, LawTerm),
}

impl Atom {
    pub fn parse(src: &str) -> Result<Self, TermError> {
        if let Some((l, r)) = src.split_once("<=") {
            Ok(Atom::Leq(LawTerm::parse(l)?, LawTerm::parse(r)?))
        } else if let Some((l, r)) = src.split_once('=') {
            Ok(Atom::Eq(LawTerm::parse(l)?, LawTerm::parse(r)?))
        } else {
            Err(TermError::Syntax {
                column: 1,
                message: format!("`{}` is neither an equation nor an order atom", src.trim()),
            })
        }
    }

    pub fn collect_vars(&self, out: &mut Vec<char>) {
        let (Atom::Eq(a, b) | Atom::Leq(a, b)) = self;
        a.collect_vars(out);
        b.collect_vars(out);
    }

    /// The equation this atom stands for in `kind`, before expansion.
    pub fn as_equation(&self, kind: Kind) -> (LawTerm, LawTerm) {
        match self {
            Atom::Eq(a, b) => (a.clone(), b.clone()),
            Atom::Leq(a, b) => (
                LawTerm::join(a.clone(), b.clone()),
                LawTerm::binary(kind, Zero, b.clone()),
            ),
        }
    }
}

impl fmt::Display for Atom {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Atom::Eq(a, b) => write!(f, "{a} = {b}"),
            Atom::Leq(a, b) => write!(f, "{a} <= {b}"),
        }
    }
}

fn canonical_vars(mut vars: Vec<char>) -> Vec<char> {
    vars.sort_by_key(|c| METAVARIABLES.iter().position(|m| m == c));
    vars
}

/// A named identity `left = right`, universally quantified over its metavariables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Law {
    pub name: String,
    pub kind: Kind,
    pub left: LawTerm,
    pub right: LawTerm,
    pub vars: Vec<char>,
}

impl Law {
    pub fn new(name: impl Into<String>, kind: Kind, left: LawTerm, right: LawTerm) -> Self {
        let mut vars = Vec::new();
        left.collect_vars(&mut vars);
        right.collect_vars(&mut vars);
        Law {
            name: name.into(),
            kind,
            left,
            right,
            vars: canonical_vars(vars),
        }
    }

    /// Parses `lhs = rhs`.
    pub fn parse(name: impl Into<String>, kind: Kind, src: &str) -> Result<Self, TermError> {
        match Atom::parse(src)? {
            Atom::Eq(l, r) => Ok(Law::new(name, kind, l, r)),
            Atom::Leq(..) => Err(TermError::Syntax {
                column: 1,
                message: "a law must be an equation".into(),
            }),
        }
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }
}

impl fmt::Display for Law {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} = {}", self.left, self.right)
    }
}

/// `premise₁ ∧ … ∧ premiseₙ ⇒ conclusion`, universally quantified.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConditionalLaw {
    pub name: String,
    pub kind: Kind,
    pub premises: Vec<Atom>,
    pub conclusion: Atom,
    pub vars: Vec<char>,
}

impl ConditionalLaw {
    pub fn new(name: impl Into<String>, kind: Kind, premises: Vec<Atom>, conclusion: Atom) -> Self {
        let mut vars = Vec::new();
        for p in &premises {
            p.collect_vars(&mut vars);
        }
        conclusion.collect_vars(&mut vars);
        ConditionalLaw {
            name: name.into(),
            kind,
            premises,
            conclusion,
            vars: canonical_vars(vars),
        }
    }

    /// Parses `p₁ ; p₂ => c`, or just `c` for an unconditional atom.
    pub fn parse(name: impl Into<String>, kind: Kind, src: &str) -> Result<Self, TermError> {
        let (premises, conclusion) = match src.split_once("=>") {
            Some((ps, c)) => (
                ps.split(';').map(Atom::parse).collect::<Result<Vec<_>, _>>()?,
                Atom::parse(c)?,
            ),
            None => (Vec::new(), Atom::parse(src)?),
        };
        Ok(ConditionalLaw::new(name, kind, premises, conclusion))
    }

    pub fn arity(&self) -> usize {
        self.vars.len()
    }
}

impl fmt::Display for ConditionalLaw {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.premises.iter().enumerate() {
            if i > 0 {
                f.write_str(" ; ")?;
            }
            write!(f, "{p}")?;
        }
        if !self.premises.is_empty() {
            f.write_str(" => ")?;
        }
        write!(f, "{}", self.conclusion)
    }
}

/// An entry of a property suite.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Property {
    Equation(Law),
    Conditional(ConditionalLaw),
}

impl Property {
    pub fn name(&self) -> &str {
        match self {
            Property::Equation(l) => &l.name,
            Property::Conditional(c) => &c.name,
        }
    }

    pub fn kind(&self) -> Kind {
        match self {
            Property::Equation(l) => l.kind,
            Property::Conditional(c) => c.kind,
        }
    }

    /// Parses either form; conditional syntax is recognised by `=>` or `<=`.
    pub fn parse(name: &str, kind: Kind, src: &str) -> Result<Self, TermError> {
        if src.contains("=>") || src.contains("<=") {
            ConditionalLaw::parse(name, kind, src).map(Property::Conditional)
        } else {
            Law::parse(name, kind, src).map(Property::Equation)
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Property::Equation(l) => l.fmt(f),
            Property::Conditional(c) => c.fmt(f),
        }
    }
}

// ---------------------------------------------------------------------------
// compiled form

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Instr {
    Var(usize),
    One,
    Zero,
    Bin(usize, usize),
    Neg(usize),
    Pos(usize),
    NegPart(usize),
}

/// Straight-line code for a set of pure terms, with common subterms shared.
#[derive(Clone, Debug, Default)]
pub struct Program {
    code: Vec<Instr>,
    memo: HashMap<Instr, usize>,
}

impl Program {
    pub fn new() -> Self {
        Self::default()
    }

    /// Adds `t` (expanded for `kind`) and returns the register holding its value.
    /// `vars` gives the slot of each metavariable.
    pub fn add(&mut self, t: &LawTerm, kind: Kind, vars: &[char]) -> Result<usize, TermError> {
        let pure = t.expand(kind)?;
        self.add_pure(&pure, vars)
    }

    fn add_pure(&mut self, t: &LawTerm, vars: &[char]) -> Result<usize, TermError> {
        let ins = match t {
            Var(c) => Instr::Var(vars.iter().position(|v| v == c).ok_or(TermError::Unbound(*c))?),
            One => Instr::One,
            Zero => Instr::Zero,
            Plus(a, b) | Arrow(a, b) => {
                let a = self.add_pure(a, vars)?;
                let b = self.add_pure(b, vars)?;
                Instr::Bin(a, b)
            }
            Neg(a) => Instr::Neg(self.add_pure(a, vars)?),
            Pos(a) => Instr::Pos(self.add_pure(a, vars)?),
            NegPart(a) => Instr::NegPart(self.add_pure(a, vars)?),
            Join(..) | Meet(..) => unreachable!("macros are expanded before compilation"),
        };
        if let Some(&r) = self.memo.get(&ins) {
            return Ok(r);
        }
        self.code.push(ins);
        let r = self.code.len() - 1;
        self.memo.insert(ins, r);
        Ok(r)
    }

    pub fn len(&self) -> usize {
        self.code.len()
    }

    pub fn is_empty(&self) -> bool {
        self.code.is_empty()
    }

    /// Evaluates every register; `regs` is reused scratch space.
    pub fn run<S: Structure>(&self, s: &S, vars: &[S::Value], regs: &mut Vec<S::Value>) {
        regs.clear();
        for ins in &self.code {
            let v = match *ins {
                Instr::Var(i) => vars[i],
                Instr::One => s.one(),
                Instr::Zero => s.zero(),
                Instr::Bin(a, b) => s.binary(regs[a], regs[b]),
                Instr::Neg(a) => s.neg(regs[a]),
                Instr::Pos(a) => s.pos(regs[a]),
                Instr::NegPart(a) => s.negpart(regs[a]),
            };
            regs.push(v);
        }
    }
}

/// Evaluates a single term in a structure under an assignment of its metavariables.
pub fn eval_term<S: Structure>(
    s: &S,
    t: &LawTerm,
    assignment: &[(char, S::Value)],
) -> Result<S::Value, TermError> {
    let vars: Vec<char> = assignment.iter().map(|(c, _)| *c).collect();
    let values: Vec<S::Value> = assignment.iter().map(|(_, v)| *v).collect();
    let mut prog = Program::new();
    let root = prog.add(t, s.kind(), &vars)?;
    let mut regs = Vec::with_capacity(prog.len());
    prog.run(s, &values, &mut regs);
    Ok(regs[root])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LawTerm {
        LawTerm::parse(s).unwrap()
    }

    #[test]
    fn precedence() {
        assert_eq!(p("-x^+"), LawTerm::neg(LawTerm::pos(Var('x'))));
        assert_eq!(p("-1 + x"), LawTerm::plus(LawTerm::neg(One), Var('x')));
        assert_eq!(
            p("x -> y -> z"),
            LawTerm::arrow(Var('x'), LawTerm::arrow(Var('y'), Var('z')))
        );
        assert_eq!(
            p("x -> y \\/ z"),
            LawTerm::join(LawTerm::arrow(Var('x'), Var('y')), Var('z'))
        );
        assert_eq!(p("x^-^+"), LawTerm::pos(LawTerm::negpart(Var('x'))));
        assert_eq!(p("~~x"), p("--x"));
    }

    #[test]
    fn syntax_errors_carry_columns() {
        match LawTerm::parse("x + (y").unwrap_err() {
            TermError::Syntax { column, .. } => assert_eq!(column, 7),
            e => panic!("{e}"),
        }
        assert!(matches!(
            LawTerm::parse("x + w"),
            Err(TermError::Syntax { column: 5, .. })
        ));
    }

    #[test]
    fn display_parses_back() {
        for s in [
            "(x + 0)^+ = 1 + (-1 + x)",
            "~(x -> y) = y -> x",
            "x \\/ (y \\/ z) = (x \\/ y) \\/ z",
            "(-x)^+ + 0 = -x^- + 0",
            "--x = x",
        ] {
            let law = Law::parse("t", Kind::Qmv, s).unwrap();
            let again = Law::parse("t", Kind::Qmv, &law.to_string()).unwrap();
            assert_eq!(law, again, "{s} -> {law}");
        }
    }

    #[test]
    fn join_expansion_matches_definition() {
        let qw = p("x \\/ y").expand(Kind::Qw).unwrap();
        let by_hand = p("((x^+ -> y^+)^+ -> (~x)^-) -> ((y^- -> x^-)^- -> x^-)");
        assert_eq!(qw, by_hand);
        let qmv = p("x \\/ y").expand(Kind::Qmv).unwrap();
        let by_hand = p("(x^+ + (-x^+ + y^+)^+) + (x^- + (-x^- + y^-)^+)");
        assert_eq!(qmv, by_hand);
        let meet = p("x /\\ y").expand(Kind::Qw).unwrap();
        assert_eq!(meet, p("~(~x \\/ ~y)").expand(Kind::Qw).unwrap());
    }

    #[test]
    fn plain_kinds_define_parts() {
        assert_eq!(p("x^+").expand(Kind::Mv).unwrap(), p("1 + (-1 + x)"));
        assert_eq!(p("x^-").expand(Kind::W).unwrap(), p("(x -> ~1) -> ~1"));
        assert_eq!(p("0").expand(Kind::Qw).unwrap(), p("1 -> 1"));
        assert!(p("x + y").expand(Kind::Qw).is_err());
        assert!(p("x -> y").expand(Kind::Mv).is_err());
    }

    #[test]
    fn conditional_parse() {
        let c = ConditionalLaw::parse("L", Kind::Qmv, "x <= y ; u <= v => x + u <= y + v").unwrap();
        assert_eq!(c.premises.len(), 2);
        assert_eq!(c.vars, vec!['x', 'y', 'u', 'v']);
        let c = ConditionalLaw::parse("L", Kind::Qmv, "-1 <= x").unwrap();
        assert!(c.premises.is_empty());
    }

    #[test]
    fn program_shares_subterms() {
        let mut prog = Program::new();
        let t = p("x \\/ x");
        prog.add(&t, Kind::Qw, &['x']).unwrap();
        let expanded = t.expand(Kind::Qw).unwrap();
        assert!(prog.len() < expanded.size());
    }
}
