//! Multisets of irreducible labels: the output form of every decomposition.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use serde::Serialize;

use crate::root_system::DominantWeight;

/// Anything labelling a module of known dimension.
pub trait Dimensioned {
    fn dim(&self) -> BigUint;
}

/// Ordered pair `(left, right)` labelling `V(left) ⊗ V(right)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct WeightPair {
    pub left: DominantWeight,
    pub right: DominantWeight,
}

impl WeightPair {
    pub fn new(left: DominantWeight, right: DominantWeight) -> Self {
        WeightPair { left, right }
    }

    pub fn diagonal(w: DominantWeight) -> Self {
        WeightPair { left: w.clone(), right: w }
    }
}

impl Dimensioned for WeightPair {
    fn dim(&self) -> BigUint {
        self.left.dim() * self.right.dim()
    }
}

/// Label ↦ positive multiplicity. Iteration is in label order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Isotypic<K: Ord> {
    terms: BTreeMap<K, u64>,
}

impl<K: Ord> Default for Isotypic<K> {
    fn default() -> Self {
        Isotypic { terms: BTreeMap::new() }
    }
}

impl<K: Ord> Isotypic<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn singleton(k: K) -> Self {
        let mut out = Self::new();
        out.add(k, 1);
        out
    }

    pub fn add(&mut self, k: K, mult: u64) {
        if mult > 0 {
            *self.terms.entry(k).or_default() += mult;
        }
    }

    pub fn merge(&mut self, other: Isotypic<K>) {
        for (k, m) in other.terms {
            self.add(k, m);
        }
    }

    pub fn get(&self, k: &K) -> u64 {
        self.terms.get(k).copied().unwrap_or(0)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&K, u64)> {
        self.terms.iter().map(|(k, &m)| (k, m))
    }

    /// Number of distinct labels.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_mult(&self) -> u64 {
        self.terms.values().sum()
    }
}

impl<K: Ord + Dimensioned> Isotypic<K> {
    /// `Σ mult · dim(label)`.
    pub fn total_dim(&self) -> BigUint {
        self.terms.iter().map(|(k, &m)| k.dim() * m).sum()
    }
}

impl<K: Ord> FromIterator<(K, u64)> for Isotypic<K> {
    fn from_iter<I: IntoIterator<Item = (K, u64)>>(iter: I) -> Self {
        let mut out = Isotypic::new();
        for (k, m) in iter {
            out.add(k, m);
        }
        out
    }
}

impl<K: Ord> IntoIterator for Isotypic<K> {
    type Item = (K, u64);
    type IntoIter = std::collections::btree_map::IntoIter<K, u64>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter()
    }
}
