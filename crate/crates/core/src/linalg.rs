//! Exact row reduction of sparse rational vectors.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::vector::{ModuleVector, Rational};

pub type SparseRow<K> = BTreeMap<K, Rational>;

/// Incremental row-echelon form keyed by leading (smallest) key.
#[derive(Debug, Clone)]
pub struct Echelon<K: Ord + Clone> {
    pivots: BTreeMap<K, SparseRow<K>>,
}

impl<K: Ord + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Self {
            pivots: BTreeMap::new(),
        }
    }
}

impl<K: Ord + Clone> Echelon<K> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `row` against the stored pivots until its leading key is free.
    pub fn reduce(&self, mut row: SparseRow<K>) -> SparseRow<K> {
        loop {
            let Some((lead, coeff)) = row.iter().find(|(k, _)| self.pivots.contains_key(*k)) else {
                return row;
            };
            let lead = lead.clone();
            let coeff = coeff.clone();
            for (k, c) in &self.pivots[&lead] {
                let updated = row.get(k).cloned().unwrap_or_else(Rational::zero) - &coeff * c;
                if updated.is_zero() {
                    row.remove(k);
                } else {
                    row.insert(k.clone(), updated);
                }
            }
        }
    }

    /// Adds `row` to the span. Returns `true` when it was independent.
    pub fn insert(&mut self, row: SparseRow<K>) -> bool {
        let mut row = self.reduce(row);
        let Some((lead, coeff)) = row.iter().next() else {
            return false;
        };
        let lead = lead.clone();
        let inv = Rational::one() / coeff;
        for c in row.values_mut() {
            *c *= &inv;
        }
        self.pivots.insert(lead, row);
        true
    }

    pub fn contains(&self, row: SparseRow<K>) -> bool {
        self.reduce(row).is_empty()
    }
}

/// Exact rank of a family of rows.
pub fn rank<K: Ord + Clone>(rows: impl IntoIterator<Item = SparseRow<K>>) -> usize {
    let mut ech = Echelon::new();
    for r in rows {
        ech.insert(r);
    }
    ech.rank()
}

/// Exact rank of a family of module vectors in the monomial basis.
pub fn vector_rank<'a>(vectors: impl IntoIterator<Item = &'a ModuleVector>) -> usize {
    rank(vectors.into_iter().map(|v| v.terms().clone()))
}
