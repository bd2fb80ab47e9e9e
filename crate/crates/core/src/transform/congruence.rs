use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

use super::relation::BinaryRelation;
use crate::algebra::order::{leq_matrix, regular_set};
use crate::algebra::{Elem, FiniteAlgebra, Structure, Tables};

/// Largest carrier accepted by [`enumerate_congruences`].
pub const MAX_ENUMERATION_SIZE: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CongruenceError {
    #[error("partition does not cover element `{0}` exactly once")]
    NotAPartition(String),
    #[error("unknown element `{0}` in partition")]
    UnknownElement(String),
    #[error("partition is over {found} elements, algebra has {expected}")]
    SizeMismatch { expected: usize, found: usize },
    #[error("not compatible with {op}: {args} are related but give {left} and {right}")]
    Incompatible {
        op: &'static str,
        args: String,
        left: String,
        right: String,
    },
    #[error("congruence enumeration is limited to {MAX_ENUMERATION_SIZE} elements, carrier has {0}")]
    TooLarge(usize),
}

/// An equivalence on the carrier. Classes are ordered by their smallest
/// element and each class lists its elements in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Congruence {
    class_of: Vec<usize>,
    classes: Vec<Vec<Elem>>,
}

impl Congruence {
    /// Normalizes a class assignment (any labels) into canonical form.
    pub fn from_labels(labels: &[usize]) -> Self {
        let mut map: Vec<(usize, usize)> = Vec::new();
        let mut class_of = Vec::with_capacity(labels.len());
        let mut classes: Vec<Vec<Elem>> = Vec::new();
        for (i, l) in labels.iter().enumerate() {
            let id = match map.iter().find(|(from, _)| from == l) {
                Some(&(_, id)) => id,
                None => {
                    map.push((*l, classes.len()));
                    classes.push(Vec::new());
                    classes.len() - 1
                }
            };
            class_of.push(id);
            classes[id].push(Elem(i));
        }
        Congruence { class_of, classes }
    }

    /// Builds a partition from explicit classes, which must cover `0..n` exactly once.
    pub fn from_classes(n: usize, classes: &[Vec<Elem>]) -> Result<Self, CongruenceError> {
        let mut labels = vec![usize::MAX; n];
        for (id, c) in classes.iter().enumerate() {
            for e in c {
                if e.0 >= n {
                    return Err(CongruenceError::SizeMismatch {
                        expected: n,
                        found: e.0 + 1,
                    });
                }
                if labels[e.0] != usize::MAX {
                    return Err(CongruenceError::NotAPartition(format!("#{}", e.0)));
                }
                labels[e.0] = id;
            }
        }
        if let Some(i) = labels.iter().position(|&l| l == usize::MAX) {
            return Err(CongruenceError::NotAPartition(format!("#{i}")));
        }
        Ok(Self::from_labels(&labels))
    }

    /// Parses `a,b|c|0,d,e,1`. Elements not mentioned form singleton classes.
    pub fn from_spec(alg: &FiniteAlgebra, spec: &str) -> Result<Self, CongruenceError> {
        let n = alg.size();
        let mut labels: Vec<Option<usize>> = vec![None; n];
        let mut next = 0;
        for class in spec.split('|') {
            let members: Vec<&str> = class.split(',').map(str::trim).filter(|s| !s.is_empty()).collect();
            if members.is_empty() {
                continue;
            }
            for m in members {
                let e = alg
                    .element(m)
                    .ok_or_else(|| CongruenceError::UnknownElement(m.to_string()))?;
                if labels[e.0].replace(next).is_some() {
                    return Err(CongruenceError::NotAPartition(m.to_string()));
                }
            }
            next += 1;
        }
        let labels: Vec<usize> = labels
            .into_iter()
            .map(|l| {
                l.unwrap_or_else(|| {
                    next += 1;
                    next - 1
                })
            })
            .collect();
        Ok(Self::from_labels(&labels))
    }

    pub fn diagonal(n: usize) -> Self {
        Self::from_labels(&(0..n).collect::<Vec<_>>())
    }

    pub fn all(n: usize) -> Self {
        Self::from_labels(&vec![0; n])
    }

    pub fn size(&self) -> usize {
        self.class_of.len()
    }

    pub fn classes(&self) -> &[Vec<Elem>] {
        &self.classes
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    pub fn class_of(&self, e: Elem) -> usize {
        self.class_of[e.0]
    }

    pub fn related(&self, a: Elem, b: Elem) -> bool {
        self.class_of[a.0] == self.class_of[b.0]
    }

    pub fn relation(&self) -> BinaryRelation {
        let n = self.size();
        BinaryRelation::from_pairs(
            n,
            (0..n).flat_map(|i| (0..n).filter(move |&j| self.class_of[i] == self.class_of[j]).map(move |j| (i, j))),
        )
    }

    /// The partition of an equivalence relation.
    pub fn from_relation(r: &BinaryRelation) -> Option<Self> {
        if r.equivalence_closure() != *r {
            return None;
        }
        let n = r.size();
        let labels: Vec<usize> = (0..n).map(|i| (0..n).find(|&j| r.contains(i, j)).unwrap()).collect();
        Some(Self::from_labels(&labels))
    }

    /// Verifies that every operation maps related arguments to related results.
    pub fn check_compatible(&self, alg: &FiniteAlgebra) -> Result<(), CongruenceError> {
        if alg.size() != self.size() {
            return Err(CongruenceError::SizeMismatch {
                expected: alg.size(),
                found: self.size(),
            });
        }
        let bad = |op, args: String, l: Elem, r: Elem| CongruenceError::Incompatible {
            op,
            args,
            left: alg.name(l).to_string(),
            right: alg.name(r).to_string(),
        };
        let mut unary: Vec<(&'static str, Box<dyn Fn(Elem) -> Elem + '_>)> =
            vec![("neg", Box::new(|x| alg.negate(x)))];
        if alg.kind().is_quasi() {
            unary.push(("pos", Box::new(|x| alg.pos(x))));
            unary.push(("negpart", Box::new(|x| alg.negpart(x))));
        }
        for class in &self.classes {
            for (i, &x) in class.iter().enumerate() {
                for &y in &class[i + 1..] {
                    for (name, f) in &unary {
                        if !self.related(f(x), f(y)) {
                            return Err(bad(name, format!("{} ~ {}", alg.name(x), alg.name(y)), f(x), f(y)));
                        }
                    }
                    // x ~ y implies x∘z ~ y∘z and z∘x ~ z∘y; both sides together
                    // give compatibility in two arguments.
                    for z in alg.elements() {
                        for (l, r, args) in [
                            (alg.op(x, z), alg.op(y, z), format!("({0},{2}) ~ ({1},{2})", alg.name(x), alg.name(y), alg.name(z))),
                            (alg.op(z, x), alg.op(z, y), format!("({2},{0}) ~ ({2},{1})", alg.name(x), alg.name(y), alg.name(z))),
                        ] {
                            if !self.related(l, r) {
                                return Err(bad(alg.kind().binary_name(), args, l, r));
                            }
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// `{a}|{b,c}|…` using element names.
    pub fn display<'a>(&'a self, alg: &'a FiniteAlgebra) -> impl fmt::Display + 'a {
        struct D<'a>(&'a Congruence, &'a FiniteAlgebra);
        impl fmt::Display for D<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                for (i, c) in self.0.classes.iter().enumerate() {
                    if i > 0 {
                        f.write_str(" | ")?;
                    }
                    let names: Vec<&str> = c.iter().map(|e| self.1.name(*e)).collect();
                    write!(f, "{{{}}}", names.join(","))?;
                }
                Ok(())
            }
        }
        D(self, alg)
    }
}

/// μ: the fibers of `x ↦ 0∘x`, checked for compatibility.
pub fn congruence_mu(alg: &FiniteAlgebra) -> Result<Congruence, CongruenceError> {
    let labels: Vec<usize> = alg.elements().map(|x| alg.regularize(x).0).collect();
    let c = Congruence::from_labels(&labels);
    c.check_compatible(alg)?;
    Ok(c)
}

/// μ read off the order: `x μ y` iff `x ≤ y` and `y ≤ x`. Returns `None` when
/// mutual comparability is not an equivalence.
pub fn congruence_mu_by_order(alg: &FiniteAlgebra) -> Option<Congruence> {
    let m = leq_matrix(alg);
    let n = alg.size();
    let r = BinaryRelation::from_pairs(
        n,
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|&(i, j)| m[i][j] && m[j][i]),
    );
    Congruence::from_relation(&r)
}

/// τ: the regular elements form one class, every other element is alone.
pub fn congruence_tau(alg: &FiniteAlgebra) -> Result<Congruence, CongruenceError> {
    let reg = regular_set(alg);
    let labels: Vec<usize> = alg
        .elements()
        .map(|x| if reg.contains(&x) { reg[0].0 } else { x.0 })
        .collect();
    let c = Congruence::from_labels(&labels);
    c.check_compatible(alg)?;
    Ok(c)
}

/// The quotient algebra. Class `i` becomes element `i`, named by joining its
/// members with `~`. Compatibility is re-verified first.
pub fn quotient(alg: &FiniteAlgebra, c: &Congruence) -> Result<FiniteAlgebra, CongruenceError> {
    c.check_compatible(alg)?;
    let rep = |i: usize| c.classes()[i][0];
    let k = c.class_count();
    let names = c
        .classes()
        .iter()
        .map(|cl| cl.iter().map(|e| alg.name(*e)).collect::<Vec<_>>().join("~"))
        .collect();
    let unary = |f: &dyn Fn(Elem) -> Elem| (0..k).map(|i| c.class_of(f(rep(i)))).collect::<Vec<_>>();
    let quasi = alg.kind().is_quasi();
    let tables = Tables {
        binary: (0..k)
            .flat_map(|i| (0..k).map(move |j| c.class_of(alg.op(rep(i), rep(j)))))
            .collect(),
        neg: unary(&|x| alg.negate(x)),
        pos: quasi.then(|| unary(&|x| alg.pos(x))),
        negpart: quasi.then(|| unary(&|x| alg.negpart(x))),
        one: c.class_of(alg.one_elem()),
        zero: alg.zero_elem().map(|z| c.class_of(z)),
    };
    Ok(FiniteAlgebra::new(alg.kind(), names, tables).expect("quotient tables are total"))
}

/// Restricted growth strings of length `n`, in lexicographic order.
fn set_partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(prefix: &mut Vec<usize>, max: usize, n: usize, out: &mut Vec<Vec<usize>>) {
        if prefix.len() == n {
            out.push(prefix.clone());
            return;
        }
        for l in 0..=max + 1 {
            prefix.push(l);
            go(prefix, max.max(l), n, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return vec![Vec::new()];
    }
    go(&mut vec![0], 0, n, &mut out);
    out
}

/// Every congruence, by testing every partition of the carrier. The order is
/// the lexicographic order of restricted growth strings, so Δ comes last and
/// ∇ first.
pub fn enumerate_congruences(alg: &FiniteAlgebra) -> Result<Vec<Congruence>, CongruenceError> {
    if alg.size() > MAX_ENUMERATION_SIZE {
        return Err(CongruenceError::TooLarge(alg.size()));
    }
    Ok(set_partitions(alg.size())
        .par_iter()
        .filter_map(|labels| {
            let c = Congruence::from_labels(labels);
            c.check_compatible(alg).is_ok().then_some(c)
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bell_numbers() {
        let bell = [1, 1, 2, 5, 15, 52, 203, 877, 4140];
        for (n, b) in bell.iter().enumerate() {
            assert_eq!(set_partitions(n).len(), *b, "n = {n}");
        }
    }

    #[test]
    fn labels_are_canonical() {
        let c = Congruence::from_labels(&[5, 3, 5, 9]);
        assert_eq!(c.classes(), &[vec![Elem(0), Elem(2)], vec![Elem(1)], vec![Elem(3)]]);
        assert_eq!(c, Congruence::from_labels(&[0, 1, 0, 2]));
    }
}
