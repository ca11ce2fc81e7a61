//! Sparse exact linear algebra over the rationals.

use std::collections::BTreeMap;

use num_traits::{Signed, Zero};
use rand::Rng;

use crate::lattice::Scalar;

/// A finite linear combination of basis labels; zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Vector<K: Ord> {
    terms: BTreeMap<K, Scalar>,
}

impl<K: Ord> Default for Vector<K> {
    fn default() -> Self {
        Vector { terms: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> Vector<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn basis(k: K) -> Self {
        let mut v = Self::new();
        v.add_term(k, Scalar::from_integer(1.into()));
        v
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (K, Scalar)>) -> Self {
        let mut v = Self::new();
        for (k, c) in terms {
            v.add_term(k, c);
        }
        v
    }

    pub fn add_term(&mut self, k: K, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Vector<K>, c: &Scalar) {
        if c.is_zero() {
            return;
        }
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v * c);
        }
    }

    pub fn add(&mut self, other: &Vector<K>) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), v.clone());
        }
    }

    pub fn sub(&mut self, other: &Vector<K>) {
        for (k, v) in &other.terms {
            self.add_term(k.clone(), -v);
        }
    }

    pub fn scaled(&self, c: &Scalar) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        Vector { terms: self.terms.iter().map(|(k, v)| (k.clone(), v * c)).collect() }
    }

    pub fn coeff(&self, k: &K) -> Scalar {
        self.terms.get(k).cloned().unwrap_or_else(Scalar::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, &Scalar)> {
        self.terms.iter()
    }

    pub fn keys(&self) -> impl Iterator<Item = &K> {
        self.terms.keys()
    }

    /// Largest absolute coefficient (zero for the zero vector).
    pub fn max_abs(&self) -> Scalar {
        self.terms.values().map(|c| c.abs()).max().unwrap_or_else(Scalar::zero)
    }

    /// Applies a linear map given on basis labels.
    pub fn map_linear<L: Ord + Clone>(&self, mut f: impl FnMut(&K) -> Vector<L>) -> Vector<L> {
        let mut out = Vector::new();
        for (k, c) in &self.terms {
            out.add_scaled(&f(k), c);
        }
        out
    }

    pub fn filter(&self, mut keep: impl FnMut(&K) -> bool) -> Self {
        Vector {
            terms: self
                .terms
                .iter()
                .filter(|(k, _)| keep(k))
                .map(|(k, v)| (k.clone(), v.clone()))
                .collect(),
        }
    }
}

/// Difference `a - b`.
pub fn diff<K: Ord + Clone>(a: &Vector<K>, b: &Vector<K>) -> Vector<K> {
    let mut out = a.clone();
    out.sub(b);
    out
}

/// A random nonzero rational `p/q` with `|p| <= 6`, `1 <= q <= 4`.
pub fn random_scalar(rng: &mut impl Rng) -> Scalar {
    let mut p = 0;
    while p == 0 {
        p = rng.gen_range(-6i64..=6);
    }
    Scalar::new(p.into(), rng.gen_range(1i64..=4).into())
}

/// A random combination of up to `terms` labels drawn from `labels`.
pub fn random_combination<K: Ord + Clone>(labels: &[K], terms: usize, rng: &mut impl Rng) -> Vector<K> {
    let mut v = Vector::new();
    if labels.is_empty() {
        return v;
    }
    for _ in 0..terms.max(1) {
        let k = labels[rng.gen_range(0..labels.len())].clone();
        v.add_term(k, random_scalar(rng));
    }
    v
}

/// Reduced row echelon basis of a subspace, keyed by pivot label.
#[derive(Clone, Debug)]
pub struct EchelonBasis<K: Ord> {
    rows: BTreeMap<K, Vector<K>>,
}

impl<K: Ord> Default for EchelonBasis<K> {
    fn default() -> Self {
        EchelonBasis { rows: BTreeMap::new() }
    }
}

impl<K: Ord + Clone> EchelonBasis<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `v` modulo the current span.
    pub fn reduce(&self, v: &Vector<K>) -> Vector<K> {
        let mut v = v.clone();
        for (pivot, row) in &self.rows {
            let c = v.coeff(pivot);
            if !c.is_zero() {
                v.add_scaled(row, &-c);
            }
        }
        v
    }

    /// Adds `v` to the span; returns the new basis vector if the span grew.
    pub fn insert(&mut self, v: &Vector<K>) -> Option<Vector<K>> {
        let r = self.reduce(v);
        let (pivot, lead) = match r.iter().next() {
            Some((k, c)) => (k.clone(), c.clone()),
            None => return None,
        };
        let r = r.scaled(&(Scalar::from_integer(1.into()) / lead));
        for row in self.rows.values_mut() {
            let c = row.coeff(&pivot);
            if !c.is_zero() {
                row.add_scaled(&r, &-c);
            }
        }
        self.rows.insert(pivot, r.clone());
        Some(r)
    }

    pub fn contains(&self, v: &Vector<K>) -> bool {
        self.reduce(v).is_zero()
    }

    pub fn rows(&self) -> impl Iterator<Item = &Vector<K>> {
        self.rows.values()
    }
}

/// Sparse matrix of an operator restricted to a finite set of basis columns,
/// keyed by (row, column).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WindowMatrix<K: Ord> {
    pub entries: BTreeMap<(K, K), Scalar>,
}

impl<K: Ord + Clone> WindowMatrix<K> {
    pub fn from_columns<'a>(cols: impl IntoIterator<Item = &'a K>, mut op: impl FnMut(&K) -> Vector<K>) -> Self
    where
        K: 'a,
    {
        let mut entries = BTreeMap::new();
        for c in cols {
            for (r, v) in op(c).iter() {
                entries.insert((r.clone(), c.clone()), v.clone());
            }
        }
        WindowMatrix { entries }
    }

    /// Same matrix with rows and columns relabeled.
    pub fn relabel(&self, mut f: impl FnMut(&K) -> K) -> Self {
        WindowMatrix { entries: self.entries.iter().map(|((r, c), v)| ((f(r), f(c)), v.clone())).collect() }
    }
}

/// Rank of a dense rational matrix given by rows.
pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let mut basis: EchelonBasis<usize> = EchelonBasis::new();
    for r in rows {
        let v = Vector::from_terms(r.iter().cloned().enumerate());
        basis.insert(&v);
    }
    basis.dim()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{frac, int};

    #[test]
    fn zero_terms_are_dropped() {
        let mut v: Vector<u32> = Vector::new();
        v.add_term(1, int(2));
        v.add_term(1, int(-2));
        v.add_term(2, int(0));
        assert!(v.is_zero());
    }

    #[test]
    fn echelon_span() {
        let mut b: EchelonBasis<u32> = EchelonBasis::new();
        let a = Vector::from_terms([(0, int(1)), (1, int(2))]);
        let c = Vector::from_terms([(1, int(1)), (2, frac(1, 2))]);
        assert!(b.insert(&a).is_some());
        assert!(b.insert(&c).is_some());
        let mut comb = a.scaled(&int(3));
        comb.add_scaled(&c, &frac(-2, 7));
        assert!(b.insert(&comb).is_none());
        assert!(b.contains(&comb));
        assert_eq!(b.dim(), 2);
    }

    #[test]
    fn dense_rank() {
        let m = vec![
            vec![int(1), int(2), int(3)],
            vec![int(2), int(4), int(6)],
            vec![int(0), int(1), int(1)],
        ];
        assert_eq!(rank(&m), 2);
    }
}
