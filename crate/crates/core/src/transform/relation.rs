use std::fmt;

/// A binary relation on `{0, …, n-1}` stored as a boolean matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct BinaryRelation {
    n: usize,
    bits: Vec<bool>,
}

impl BinaryRelation {
    pub fn empty(n: usize) -> Self {
        BinaryRelation {
            n,
            bits: vec![false; n * n],
        }
    }

    /// Δ.
    pub fn diagonal(n: usize) -> Self {
        let mut r = Self::empty(n);
        for i in 0..n {
            r.insert(i, i);
        }
        r
    }

    /// ∇.
    pub fn all(n: usize) -> Self {
        BinaryRelation {
            n,
            bits: vec![true; n * n],
        }
    }

    pub fn from_pairs(n: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut r = Self::empty(n);
        for (i, j) in pairs {
            r.insert(i, j);
        }
        r
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn insert(&mut self, i: usize, j: usize) {
        self.bits[i * self.n + j] = true;
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.bits[i * self.n + j]
    }

    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |i| (0..self.n).filter(move |&j| self.contains(i, j)).map(move |j| (i, j)))
    }

    fn same_parent(&self, other: &Self) {
        assert_eq!(self.n, other.n, "relations over carriers of different sizes");
    }

    /// `self ∘ other`: pairs `(i, k)` with `i self j` and `j other k` for some `j`.
    pub fn compose(&self, other: &Self) -> Self {
        self.same_parent(other);
        let n = self.n;
        let mut r = Self::empty(n);
        for i in 0..n {
            for j in (0..n).filter(|&j| self.contains(i, j)) {
                for k in (0..n).filter(|&k| other.contains(j, k)) {
                    r.insert(i, k);
                }
            }
        }
        r
    }

    pub fn intersect(&self, other: &Self) -> Self {
        self.same_parent(other);
        BinaryRelation {
            n: self.n,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| *a && *b).collect(),
        }
    }

    pub fn union(&self, other: &Self) -> Self {
        self.same_parent(other);
        BinaryRelation {
            n: self.n,
            bits: self.bits.iter().zip(&other.bits).map(|(a, b)| *a || *b).collect(),
        }
    }

    pub fn is_diagonal(&self) -> bool {
        *self == Self::diagonal(self.n)
    }

    pub fn is_all(&self) -> bool {
        self.bits.iter().all(|b| *b)
    }

    /// Smallest equivalence relation containing `self`.
    pub fn equivalence_closure(&self) -> Self {
        let mut r = self.union(&Self::diagonal(self.n));
        let transpose = Self::from_pairs(self.n, r.pairs().map(|(i, j)| (j, i)).collect::<Vec<_>>());
        r = r.union(&transpose);
        loop {
            let next = r.union(&r.compose(&r));
            if next == r {
                return r;
            }
            r = next;
        }
    }
}

impl fmt::Debug for BinaryRelation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.pairs()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_basics() {
        let a = BinaryRelation::from_pairs(3, [(0, 1)]);
        let b = BinaryRelation::from_pairs(3, [(1, 2)]);
        assert_eq!(a.compose(&b), BinaryRelation::from_pairs(3, [(0, 2)]));
        assert!(b.compose(&a).pairs().next().is_none());
        let d = BinaryRelation::diagonal(3);
        assert_eq!(a.compose(&d), a);
        assert!(d.is_diagonal() && !d.is_all());
    }

    #[test]
    fn closure() {
        let a = BinaryRelation::from_pairs(3, [(0, 1), (1, 2)]);
        assert!(a.equivalence_closure().is_all());
    }
}
