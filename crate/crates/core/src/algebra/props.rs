//! Derived-property suites: identities and conditional laws that hold in
//! every model of a theory.
//!
//! Chained equalities `a = b = c` become the consecutive pairs `a = b`,
//! `b = c`; "iff" statements become two conditional laws.

use super::term::Property;
use super::Kind;

/// A named list of properties for one kind.
#[derive(Clone, Debug)]
pub struct Suite {
    pub name: &'static str,
    pub kind: Kind,
    pub items: Vec<Property>,
}

type Items = &'static [(&'static str, &'static str)];

/// Basic identities of quasi-MV* algebras involving 0, ⁺, ⁻, ∨ and ∧.
const QMV_BASIC: Items = &[
    ("1", "0 + 0 = 0"),
    ("1", "1 + 0 = 1"),
    ("1", "-1 + 0 = -1"),
    ("1", "1 + 1 = 1"),
    ("1", "-1 + -1 = -1"),
    ("2", "-(x + 0) = -x + 0"),
    ("3", "0^+ = 0"),
    ("3", "0 = 0^-"),
    ("3", "1^+ = 1"),
    ("3", "1^- = 0"),
    ("3", "(-1)^+ = 0"),
    ("3", "(-1)^- = -1"),
    ("4", "(-x)^+ + 0 = -x^- + 0"),
    ("4", "(-x)^- + 0 = -x^+ + 0"),
    ("5", "x^-^+ + 0 = 0 = x^+^- + 0"),
    ("6", "x^+^+ + 0 = x^+ + 0"),
    ("6", "x^-^- + 0 = x^- + 0"),
    ("7", "x \\/ 0 = x^+ + 0"),
    ("7", "x /\\ 0 = x^- + 0"),
    ("8", "x^+ \\/ 0 = x^+ + 0"),
    ("8", "x^- /\\ 0 = x^- + 0"),
    ("9", "x^+ /\\ 0 = 0"),
    ("9", "x^- \\/ 0 = 0"),
    ("10", "x \\/ x = x + 0"),
    ("10", "x /\\ x = x + 0"),
    ("11", "x + y = (x + 0) + y = x + (y + 0) = (x + 0) + (y + 0)"),
    ("12", "x \\/ y = (x \\/ y) + 0 = (x + 0) \\/ y = x \\/ (y + 0)"),
    ("12", "x /\\ y = (x /\\ y) + 0 = (x + 0) /\\ y = x /\\ (y + 0)"),
    ("13", "x \\/ y = (x^+ \\/ y^+) + (x^- \\/ y^-)"),
    ("13", "x /\\ y = (x^+ /\\ y^+) + (x^- /\\ y^-)"),
    ("14", "x^+ \\/ x^- = x^+ + 0"),
    ("14", "x^+ /\\ x^- = x^- + 0"),
    (
        "15",
        "x + 0 = (x + 0)^+ + (x + 0)^- = (x^+ \\/ x^-) + (x^+ /\\ x^-) = x^+ + x^-",
    ),
];

/// Order facts of quasi-MV* algebras.
const QMV_ORDER: Items = &[
    ("1", "x <= y ; y <= x => x + 0 = y + 0"),
    ("2", "-1 <= x"),
    ("2", "x <= 1"),
    ("3", "x <= x + 0"),
    ("3", "x + 0 <= x"),
    ("4", "x <= y ; u <= v => x + u <= y + v"),
    ("5", "x <= y => x^+ <= y^+"),
    ("5", "x <= y => x^- <= y^-"),
    ("6", "x <= y ; u <= v => x \\/ u <= y \\/ v"),
    ("7", "x <= y ; u <= v => x /\\ u <= y /\\ v"),
    ("8", "x <= y => x /\\ y = x + 0"),
    ("8", "x /\\ y = x + 0 => x <= y"),
    ("9", "x <= y => -y <= -x"),
    ("10", "x + 0 = 1 + z => 0 <= x"),
    ("11", "x + 0 = -1 + z => x <= 0"),
    ("12", "x <= 0 => x^+ + 0 = 0"),
    ("12", "x^+ + 0 = 0 => x <= 0"),
    ("12", "0 <= x => x^- + 0 = 0"),
    ("12", "x^- + 0 = 0 => 0 <= x"),
    ("13", "x^- <= x"),
    ("13", "x <= x^+"),
];

/// Negation and the diagonal in quasi-Wajsberg* algebras.
const QW_DIAGONAL: Items = &[
    ("1", "~x -> y = ~y -> x"),
    ("1", "x -> ~y = y -> ~x"),
    ("2", "~(x -> y) = ~x -> ~y"),
    ("3", "x -> x = y -> y"),
    ("4", "~(x -> x) = x -> x"),
];

/// Values of the constants 0, 1, ¬1 under → and ⁺/⁻.
const QW_CONSTANTS: Items = &[
    ("1", "0 -> 1 = 1"),
    ("1", "0 -> ~1 = ~1"),
    ("2", "1 -> 0 = ~1"),
    ("2", "~1 -> 0 = 1"),
    ("3", "~1 -> 1 = 1"),
    ("3", "1 -> ~1 = ~1"),
    ("4", "0^+ = 0 = 0^-"),
    ("4", "1^+ = 1"),
    ("4", "(~1)^- = ~1"),
    ("5", "1^- = 0 = (~1)^+"),
];

/// Implications and their negations are regular.
const QW_REGULAR: Items = &[
    ("1", "0 -> (x -> y) = x -> y"),
    ("1", "0 -> ~(x -> y) = ~(x -> y)"),
    ("2", "(x -> y) -> 0 = ~(x -> y)"),
    ("2", "~(x -> y) -> 0 = x -> y"),
];

/// Interaction of → with ∨, ∧ and regularization.
const QW_LATTICE: Items = &[
    ("1", "x \\/ x = 0 -> x"),
    ("1", "x /\\ x = 0 -> x"),
    ("2", "x -> (y /\\ z) = (x -> y) /\\ (x -> z)"),
    ("2", "(x /\\ y) -> z = (x -> z) \\/ (y -> z)"),
    ("2", "(x \\/ y) -> z = (x -> z) /\\ (y -> z)"),
    ("3", "x -> y = (0 -> x) -> y = x -> (0 -> y) = (0 -> x) -> (0 -> y)"),
    (
        "4",
        "x \\/ y = 0 -> (x \\/ y) = (0 -> x) \\/ y = x \\/ (0 -> y) = (0 -> x) \\/ (0 -> y)",
    ),
    (
        "4",
        "x /\\ y = 0 -> (x /\\ y) = (0 -> x) /\\ y = x /\\ (0 -> y) = (0 -> x) /\\ (0 -> y)",
    ),
];

/// Positive and negative parts under negation and iteration.
const QW_PARTS: Items = &[
    ("1", "0 -> (~x)^+ = 0 -> ~x^-"),
    ("1", "0 -> (~x)^- = 0 -> ~x^+"),
    ("2", "0 -> x^+^- = 0 = 0 -> x^-^+"),
    ("3", "0 -> x^+^+ = 0 -> x^+"),
    ("3", "0 -> x^-^- = 0 -> x^-"),
    ("4", "(~x)^+ -> y = ~x^- -> y"),
    ("4", "x -> (~y)^+ = x -> ~y^-"),
    ("4", "(~x)^- -> y = ~x^+ -> y"),
    ("4", "x -> (~y)^- = x -> ~y^+"),
    ("5", "x^+^- -> y = 0 -> y = x^-^+ -> y"),
    ("5", "x -> y^+^- = x -> 0 = x -> y^-^+"),
    ("6", "x^+^+ -> y = x^+ -> y"),
    ("6", "x -> y^+^+ = x -> y^+"),
    ("6", "x^-^- -> y = x^- -> y"),
    ("6", "x -> y^-^- = x -> y^-"),
];

/// Join and meet against 0 and against the parts.
const QW_JOIN: Items = &[
    ("1", "x \\/ 0 = 0 -> x^+"),
    ("1", "x /\\ 0 = 0 -> x^-"),
    ("2", "x^+ \\/ 0 = 0 -> x^+"),
    ("2", "x^- /\\ 0 = 0 -> x^-"),
    ("2", "x^- \\/ 0 = 0"),
    ("2", "x^+ /\\ 0 = 0"),
    ("3", "x \\/ y = ~(x^+ \\/ y^+) -> (x^- \\/ y^-)"),
    ("3", "x /\\ y = ~(x^+ /\\ y^+) -> (x^- /\\ y^-)"),
    ("4", "x^+ \\/ x^- = 0 -> x^+"),
    ("4", "x^+ /\\ x^- = 0 -> x^-"),
    ("5", "0 -> x = ~x^+ -> x^-"),
    ("6", "(x \\/ y)^+ = x^+ \\/ y^+"),
    ("6", "(x \\/ y)^- = x^- \\/ y^-"),
    ("6", "(x /\\ y)^+ = x^+ /\\ y^+"),
    ("6", "(x /\\ y)^- = x^- /\\ y^-"),
    ("7", "x \\/ (x /\\ y) = x \\/ x"),
    ("7", "x /\\ (x \\/ y) = x /\\ x"),
];

/// The two laws separating a quasi-lattice from a lattice.
const QW_QUASILATTICE: Items = &[
    ("1", "x \\/ (y \\/ y) = x \\/ y"),
    ("1", "x /\\ (y /\\ y) = x /\\ y"),
];

/// Order facts of quasi-Wajsberg* algebras.
///
/// Item 5 is the meet monotonicity law `x∧u ≤ y∧v`; the reversed form
/// `y∧u ≤ x∧v` is false (see [`QW_MEET_REVERSED`]).
const QW_ORDER: Items = &[
    ("1", "x <= y ; y <= x => 0 -> x = 0 -> y"),
    ("2", "~1 <= x"),
    ("2", "x <= 1"),
    ("3", "x <= 0 -> x"),
    ("3", "0 -> x <= x"),
    ("4", "x <= y ; u <= v => x \\/ u <= y \\/ v"),
    ("5", "x <= y ; u <= v => x /\\ u <= y /\\ v"),
    ("6", "x <= y => x /\\ y = 0 -> x"),
    ("6", "x /\\ y = 0 -> x => x <= y"),
    ("7", "x <= y => ~y <= ~x"),
    ("8", "x <= y ; u <= v => y -> u <= x -> v"),
    ("9", "x <= y => x^+ <= y^+"),
    ("9", "x <= y => x^- <= y^-"),
    ("10", "x^- <= x"),
    ("10", "x <= x^+"),
];

/// Meet monotonicity with the roles of `x` and `y` exchanged. Not a valid
/// law; kept so tests can show it fails.
pub const QW_MEET_REVERSED: &str = "x <= y ; u <= v => y /\\ u <= x /\\ v";

fn build(name: &'static str, kind: Kind, items: Items) -> Suite {
    let mut out = Vec::new();
    let mut last = "";
    let mut letter = 0u8;
    for (item, src) in items {
        if *item != last {
            last = item;
            letter = 0;
        }
        let pieces: Vec<String> = if src.contains("=>") || src.contains("<=") {
            vec![src.to_string()]
        } else {
            let sides: Vec<&str> = src.split('=').collect();
            sides.windows(2).map(|w| format!("{} = {}", w[0], w[1])).collect()
        };
        for p in pieces {
            let label = format!("{name}.{item}{}", (b'a' + letter) as char);
            letter += 1;
            let prop = Property::parse(&label, kind, &p)
                .unwrap_or_else(|e| panic!("suite item {label}: {e}"));
            out.push(prop);
        }
    }
    // items that ended up with a single piece lose their letter
    let counts = |label: &str| {
        let stem = &label[..label.len() - 1];
        out.iter()
            .filter(|p| p.name().len() == label.len() && p.name().starts_with(stem))
            .count()
    };
    let singles: Vec<bool> = out.iter().map(|p| counts(p.name()) == 1).collect();
    for (p, single) in out.iter_mut().zip(singles) {
        if single {
            let name = p.name()[..p.name().len() - 1].to_string();
            match p {
                Property::Equation(l) => l.name = name,
                Property::Conditional(c) => c.name = name,
            }
        }
    }
    Suite {
        name,
        kind,
        items: out,
    }
}

impl Suite {
    pub fn qmv_basic() -> Self {
        build("qmv-basic", Kind::Qmv, QMV_BASIC)
    }
    pub fn qmv_order() -> Self {
        build("qmv-order", Kind::Qmv, QMV_ORDER)
    }
    pub fn qw_diagonal() -> Self {
        build("qw-diagonal", Kind::Qw, QW_DIAGONAL)
    }
    pub fn qw_constants() -> Self {
        build("qw-constants", Kind::Qw, QW_CONSTANTS)
    }
    pub fn qw_regular() -> Self {
        build("qw-regular", Kind::Qw, QW_REGULAR)
    }
    pub fn qw_lattice() -> Self {
        build("qw-lattice", Kind::Qw, QW_LATTICE)
    }
    pub fn qw_parts() -> Self {
        build("qw-parts", Kind::Qw, QW_PARTS)
    }
    pub fn qw_join() -> Self {
        build("qw-join", Kind::Qw, QW_JOIN)
    }
    pub fn qw_quasilattice() -> Self {
        build("qw-quasilattice", Kind::Qw, QW_QUASILATTICE)
    }
    pub fn qw_order() -> Self {
        build("qw-order", Kind::Qw, QW_ORDER)
    }

    /// All suites stated for `kind` (only qmv and qw have any).
    pub fn for_kind(kind: Kind) -> Vec<Suite> {
        match kind {
            Kind::Qmv => vec![Self::qmv_basic(), Self::qmv_order()],
            Kind::Qw => vec![
                Self::qw_diagonal(),
                Self::qw_constants(),
                Self::qw_regular(),
                Self::qw_lattice(),
                Self::qw_parts(),
                Self::qw_join(),
                Self::qw_quasilattice(),
                Self::qw_order(),
            ],
            Kind::Mv | Kind::W => Vec::new(),
        }
    }

    pub fn all() -> Vec<Suite> {
        let mut v = Self::for_kind(Kind::Qmv);
        v.extend(Self::for_kind(Kind::Qw));
        v
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chains_split_into_pairs() {
        let s = Suite::qw_lattice();
        let names: Vec<&str> = s.items.iter().map(|p| p.name()).collect();
        assert!(names.contains(&"qw-lattice.3c"));
        assert!(!names.contains(&"qw-lattice.3d"));
        assert!(names.contains(&"qw-lattice.4h"));
    }

    #[test]
    fn single_items_have_no_letter() {
        let s = Suite::qw_order();
        assert!(s.items.iter().any(|p| p.name() == "qw-order.1"));
        assert!(s.items.iter().any(|p| p.name() == "qw-order.10b"));
    }

    #[test]
    fn every_suite_builds() {
        let n: usize = Suite::all().iter().map(|s| s.items.len()).sum();
        assert!(n > 100, "{n}");
    }
}
