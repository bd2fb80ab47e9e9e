//! Constructions on finite algebras: the term equivalence between the ⊕ and
//! → signatures, direct products, congruences, quotients, the canonical
//! embedding and filters.

mod congruence;
mod embed;
mod filter;
mod relation;

pub use congruence::{
    congruence_mu, congruence_mu_by_order, congruence_tau, enumerate_congruences, quotient,
    Congruence, CongruenceError, MAX_ENUMERATION_SIZE,
};
pub use embed::{canonical_embedding, Embedding};
pub use filter::{check_filter, FilterClause, FilterReport};
pub use relation::BinaryRelation;

use crate::algebra::order::derived_zero;
use crate::algebra::{AlgebraError, Elem, FiniteAlgebra, Kind, Structure, Tables};

/// Reads a ⊕-structure as a →-structure: `x→y := −x⊕y`, `¬ := −`.
#[derive(Clone, Copy, Debug)]
pub struct AsImplicative<'a, S>(pub &'a S);

impl<S: Structure> Structure for AsImplicative<'_, S> {
    type Value = S::Value;

    fn kind(&self) -> Kind {
        self.0.kind().dual()
    }
    fn one(&self) -> S::Value {
        self.0.one()
    }
    fn zero(&self) -> S::Value {
        unreachable!("implicative structures have no primitive zero")
    }
    fn binary(&self, a: S::Value, b: S::Value) -> S::Value {
        self.0.binary(self.0.neg(a), b)
    }
    fn neg(&self, a: S::Value) -> S::Value {
        self.0.neg(a)
    }
    fn pos(&self, a: S::Value) -> S::Value {
        self.0.pos(a)
    }
    fn negpart(&self, a: S::Value) -> S::Value {
        self.0.negpart(a)
    }
    fn show(&self, v: S::Value) -> String {
        self.0.show(v)
    }
}

/// Reads a →-structure as a ⊕-structure: `x⊕y := ¬x→y`, `0 := 1→1`.
#[derive(Clone, Copy, Debug)]
pub struct AsAdditive<'a, S>(pub &'a S);

impl<S: Structure> Structure for AsAdditive<'_, S> {
    type Value = S::Value;

    fn kind(&self) -> Kind {
        self.0.kind().dual()
    }
    fn one(&self) -> S::Value {
        self.0.one()
    }
    fn zero(&self) -> S::Value {
        self.0.binary(self.0.one(), self.0.one())
    }
    fn binary(&self, a: S::Value, b: S::Value) -> S::Value {
        self.0.binary(self.0.neg(a), b)
    }
    fn neg(&self, a: S::Value) -> S::Value {
        self.0.neg(a)
    }
    fn pos(&self, a: S::Value) -> S::Value {
        self.0.pos(a)
    }
    fn negpart(&self, a: S::Value) -> S::Value {
        self.0.negpart(a)
    }
    fn show(&self, v: S::Value) -> String {
        self.0.show(v)
    }
}

fn tabulate<S: Structure<Value = Elem>>(alg: &FiniteAlgebra, s: &S, zero: Option<Elem>) -> Tables {
    let raw = |f: &dyn Fn(Elem) -> Elem| alg.elements().map(|x| f(x).0).collect::<Vec<_>>();
    let quasi = s.kind().is_quasi();
    Tables {
        binary: alg
            .elements()
            .flat_map(|x| alg.elements().map(move |y| s.binary(x, y).0))
            .collect(),
        neg: raw(&|x| s.neg(x)),
        pos: quasi.then(|| raw(&|x| s.pos(x))),
        negpart: quasi.then(|| raw(&|x| s.negpart(x))),
        one: s.one().0,
        zero: zero.map(|z| z.0),
    }
}

/// qmv → qw and mv → w.
pub fn to_qw(alg: &FiniteAlgebra) -> Result<FiniteAlgebra, AlgebraError> {
    alg.require_kind(&[Kind::Qmv, Kind::Mv])?;
    let s = AsImplicative(alg);
    FiniteAlgebra::new(s.kind(), alg.names().to_vec(), tabulate(alg, &s, None))
}

/// qw → qmv and w → mv. Fails if `x→x` is not constant.
pub fn to_qmv(alg: &FiniteAlgebra) -> Result<FiniteAlgebra, AlgebraError> {
    alg.require_kind(&[Kind::Qw, Kind::W])?;
    let zero = derived_zero(alg)?;
    let s = AsAdditive(alg);
    FiniteAlgebra::new(s.kind(), alg.names().to_vec(), tabulate(alg, &s, Some(zero)))
}

/// Either direction, chosen by the input kind.
pub fn to_dual(alg: &FiniteAlgebra) -> Result<FiniteAlgebra, AlgebraError> {
    if alg.kind().is_implicative() {
        to_qmv(alg)
    } else {
        to_qw(alg)
    }
}

/// Drops the primitive ⁺/⁻ of a qmv/qw algebra in which every element is
/// regular, giving an mv/w algebra. Fails if some `0∘x ≠ x`, or if the stored
/// parts differ from the defined ones.
pub fn to_plain(alg: &FiniteAlgebra) -> Result<FiniteAlgebra, AlgebraError> {
    alg.require_kind(&[Kind::Qmv, Kind::Qw])?;
    let zero = match alg.zero_elem() {
        Some(z) => z,
        None => derived_zero(alg)?,
    };
    for x in alg.elements() {
        if alg.regularize(x) != x {
            return Err(AlgebraError::NotRegular(format!(
                "element {} is not regular: 0{}{} = {}",
                alg.name(x),
                if alg.kind().is_implicative() { "→" } else { "⊕" },
                alg.name(x),
                alg.name(alg.regularize(x))
            )));
        }
        let one = alg.one_elem();
        let m1 = alg.negate(one);
        let (pos, neg) = if alg.kind().is_implicative() {
            (alg.op(alg.op(x, one), one), alg.op(alg.op(x, m1), m1))
        } else {
            (alg.op(one, alg.op(m1, x)), alg.op(m1, alg.op(one, x)))
        };
        if alg.pos(x) != pos || alg.negpart(x) != neg {
            return Err(AlgebraError::NotRegular(format!(
                "stored parts of {} differ from the defined ones",
                alg.name(x)
            )));
        }
    }
    let mut t = alg.tables();
    t.pos = None;
    t.negpart = None;
    t.zero = alg.zero_elem().map(|_| zero.0);
    FiniteAlgebra::new(alg.kind().plain(), alg.names().to_vec(), t)
}

/// Componentwise product; element `(x, y)` is named `x:y` and sits at index
/// `x·|b| + y`.
pub fn direct_product(a: &FiniteAlgebra, b: &FiniteAlgebra) -> Result<FiniteAlgebra, AlgebraError> {
    if a.kind() != b.kind() {
        return Err(AlgebraError::KindMismatch {
            expected: a.kind().to_string(),
            found: b.kind(),
        });
    }
    let nb = b.size();
    let pair = |x: Elem, y: Elem| x.0 * nb + y.0;
    let split = |i: usize| (Elem(i / nb), Elem(i % nb));
    let n = a.size() * nb;
    let names = a
        .elements()
        .flat_map(|x| b.elements().map(move |y| format!("{}:{}", a.name(x), b.name(y))))
        .collect();
    let unary = |f: &dyn Fn(&FiniteAlgebra, Elem) -> Elem| {
        (0..n)
            .map(|i| {
                let (x, y) = split(i);
                pair(f(a, x), f(b, y))
            })
            .collect::<Vec<_>>()
    };
    let quasi = a.kind().is_quasi();
    let tables = Tables {
        binary: (0..n)
            .flat_map(|i| {
                (0..n).map(move |j| {
                    let (x1, y1) = split(i);
                    let (x2, y2) = split(j);
                    pair(a.op(x1, x2), b.op(y1, y2))
                })
            })
            .collect(),
        neg: unary(&|s, x| s.negate(x)),
        pos: quasi.then(|| unary(&|s, x| s.pos(x))),
        negpart: quasi.then(|| unary(&|s, x| s.negpart(x))),
        one: pair(a.one_elem(), b.one_elem()),
        zero: match (a.zero_elem(), b.zero_elem()) {
            (Some(x), Some(y)) => Some(pair(x, y)),
            _ => None,
        },
    };
    FiniteAlgebra::new(a.kind(), names, tables)
}
