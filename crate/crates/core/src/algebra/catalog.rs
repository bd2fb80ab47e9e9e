//! The four equational theories.
//!
//! Laws that bundle several equalities are split into lettered sub-laws
//! (`QMV*5a` … `QMV*5d`); [`Theory::groups`] recovers the numbered axioms.

use super::term::Law;
use super::Kind;

/// A named set of equations for one kind.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Theory {
    pub name: &'static str,
    pub kind: Kind,
    pub laws: Vec<Law>,
}

const QMV: &[(&str, &str)] = &[
    ("QMV*1", "x + y = y + x"),
    ("QMV*2", "(1 + x) + (y + (1 + z)) = ((1 + x) + y) + (1 + z)"),
    ("QMV*3", "(x + 1) + 1 = 1"),
    ("QMV*4", "(x + y) + 0 = x + y"),
    ("QMV*5a", "x^+ + 0 = (x + 0)^+"),
    ("QMV*5b", "(x + 0)^+ = 1 + (-1 + x)"),
    ("QMV*5c", "x^- + 0 = (x + 0)^-"),
    ("QMV*5d", "(x + 0)^- = -1 + (1 + x)"),
    ("QMV*6", "x + y = (x^+ + y^+) + (x^- + y^-)"),
    ("QMV*7", "0 = -0"),
    ("QMV*8", "x + -x = 0"),
    ("QMV*9", "-(x + y) = -x + -y"),
    ("QMV*10", "--x = x"),
    ("QMV*11", "(-x + (x + y))^+ = -x^+ + (x^+ + y^+)"),
    ("QMV*12", "x \\/ y = y \\/ x"),
    ("QMV*13", "x \\/ (y \\/ z) = (x \\/ y) \\/ z"),
    ("QMV*14", "x + (y \\/ z) = (x + y) \\/ (x + z)"),
];

const QW: &[(&str, &str)] = &[
    ("QW*1", "x -> y = ~y -> ~x"),
    ("QW*2", "(x -> 1) -> ((y -> 1) -> z) = (y -> 1) -> ((x -> 1) -> z)"),
    ("QW*3", "(1 -> x) -> 1 = 1"),
    ("QW*4", "(z -> z) -> (x -> y) = x -> y"),
    ("QW*5a", "(1 -> 1) -> x^+ = ((1 -> 1) -> x)^+"),
    ("QW*5b", "((1 -> 1) -> x)^+ = (x -> 1) -> 1"),
    ("QW*5c", "(1 -> 1) -> x^- = ((1 -> 1) -> x)^-"),
    ("QW*5d", "((1 -> 1) -> x)^- = (x -> ~1) -> ~1"),
    ("QW*6", "x -> y = (y^+ -> x^-) -> (x^+ -> y^-)"),
    ("QW*7", "~(x -> y) = y -> x"),
    ("QW*8", "~~x = x"),
    ("QW*9", "(x -> (~x -> y))^+ = x^+ -> (~x^+ -> y^+)"),
    ("QW*10", "x \\/ y = y \\/ x"),
    ("QW*11", "x \\/ (y \\/ z) = (x \\/ y) \\/ z"),
    ("QW*12", "x -> (y \\/ z) = (x -> y) \\/ (x -> z)"),
];

const MV: &[(&str, &str)] = &[
    ("MV*1", "x + y = y + x"),
    ("MV*2", "(1 + x) + (y + (1 + z)) = ((1 + x) + y) + (1 + z)"),
    ("MV*3", "x + -x = 0"),
    ("MV*4", "(x + 1) + 1 = 1"),
    ("MV*5", "x + 0 = x"),
    ("MV*6", "-(x + y) = -x + -y"),
    ("MV*7", "--x = x"),
    ("MV*8", "x + y = (x^+ + y^+) + (x^- + y^-)"),
    ("MV*9", "(-x + (x + y))^+ = -x^+ + (x^+ + y^+)"),
    ("MV*10", "x \\/ y = y \\/ x"),
    ("MV*11", "x \\/ (y \\/ z) = (x \\/ y) \\/ z"),
    ("MV*12", "x + (y \\/ z) = (x + y) \\/ (x + z)"),
];

const W: &[(&str, &str)] = &[
    ("M1", "x -> y = ~y -> ~x"),
    ("M2", "(x -> 1) -> ((y -> 1) -> z) = (y -> 1) -> ((x -> 1) -> z)"),
    ("M3", "(1 -> x) -> 1 = 1"),
    ("M4", "(y -> y) -> x = x"),
    ("M5", "x -> y = (y^+ -> x^-) -> (x^+ -> y^-)"),
    ("M6", "~(x -> y) = y -> x"),
    ("M7", "~~x = x"),
    ("M8", "(x -> (~x -> y))^+ = x^+ -> (~x^+ -> y^+)"),
    ("M9", "x \\/ y = y \\/ x"),
    ("M10", "x \\/ (y \\/ z) = (x \\/ y) \\/ z"),
    ("M11", "x -> (y \\/ z) = (x -> y) \\/ (x -> z)"),
];

fn build(name: &'static str, kind: Kind, table: &[(&str, &str)]) -> Theory {
    let laws = table
        .iter()
        .map(|(n, src)| {
            Law::parse(*n, kind, src).unwrap_or_else(|e| panic!("catalog law {n}: {e}"))
        })
        .collect();
    Theory { name, kind, laws }
}

impl Theory {
    pub fn qmv() -> Self {
        build("QMV*", Kind::Qmv, QMV)
    }

    pub fn qw() -> Self {
        build("QW*", Kind::Qw, QW)
    }

    pub fn mv() -> Self {
        build("MV*", Kind::Mv, MV)
    }

    pub fn w() -> Self {
        build("M", Kind::W, W)
    }

    /// The theory whose models are exactly the algebras of `kind`.
    pub fn for_kind(kind: Kind) -> Self {
        match kind {
            Kind::Qmv => Self::qmv(),
            Kind::Qw => Self::qw(),
            Kind::Mv => Self::mv(),
            Kind::W => Self::w(),
        }
    }

    /// Keeps only the laws named in `names`; a group name such as `QW*5`
    /// selects all of its sub-laws.
    pub fn select(&self, names: &[&str]) -> Result<Theory, String> {
        for n in names {
            if !self.laws.iter().any(|l| l.name == *n || group_of(&l.name) == *n) {
                return Err(format!("theory {} has no law `{n}`", self.name));
            }
        }
        Ok(Theory {
            name: self.name,
            kind: self.kind,
            laws: self
                .laws
                .iter()
                .filter(|l| names.iter().any(|n| l.name == *n || group_of(&l.name) == *n))
                .cloned()
                .collect(),
        })
    }

    /// Numbered axioms in order, each with the names of its sub-laws.
    pub fn groups(&self) -> Vec<(String, Vec<String>)> {
        let mut out: Vec<(String, Vec<String>)> = Vec::new();
        for l in &self.laws {
            let g = group_of(&l.name);
            match out.last_mut() {
                Some((last, members)) if last == g => members.push(l.name.clone()),
                _ => out.push((g.to_string(), vec![l.name.clone()])),
            }
        }
        out
    }

    /// One line per law: `name<TAB>variables<TAB>equation`.
    pub fn dump(&self) -> String {
        let mut s = String::new();
        for l in &self.laws {
            let vars: String = l.vars.iter().collect();
            s.push_str(&format!("{}\t{}\t{}\n", l.name, vars, l));
        }
        s
    }
}

/// `QW*5b` → `QW*5`; names without a sub-law letter are returned unchanged.
pub fn group_of(name: &str) -> &str {
    name.strip_suffix(|c: char| c.is_ascii_lowercase())
        .unwrap_or(name)
}
