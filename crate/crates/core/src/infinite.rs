//! Infinite Gelfand-Tsetlin patterns, stored up to their degree.
//!
//! Every row above the degree equals the weight padded with zeros, so only the
//! finite triangle below it is kept. The degree is the least `N ≥ max(1, len λ)`
//! such that all lowering exponents `λ_{k i} − λ_{k−1, i}` vanish for `k > N`.
//! The lower bound `len λ` is needed because a module for a weight with more
//! parts than the rank does not exist.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::HighestWeight;
use crate::pattern::{enumerate_patterns, GTPattern};

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct InfiniteGTPattern {
    weight: HighestWeight,
    triangle: GTPattern,
}

impl InfiniteGTPattern {
    /// The stable pattern whose truncation at rank `pattern.rank()` is `pattern`.
    pub fn from_pattern(pattern: &GTPattern) -> Self {
        let degree = finite_degree(pattern);
        Self {
            weight: pattern.highest_weight(),
            triangle: pattern.truncate(degree),
        }
    }

    pub fn weight(&self) -> &HighestWeight {
        &self.weight
    }

    pub fn triangle(&self) -> &GTPattern {
        &self.triangle
    }

    pub fn degree(&self) -> usize {
        self.triangle.rank()
    }

    /// Row `k` of the infinite pattern, for any `k ≥ 1`.
    pub fn row(&self, k: usize) -> Vec<u32> {
        if k <= self.degree() {
            self.triangle.row(k).to_vec()
        } else {
            self.weight.padded(k)
        }
    }

    /// Truncation to rank `n ≥ degree`.
    pub fn at_rank(&self, n: usize) -> Result<GTPattern> {
        if n < self.degree() {
            return Err(Error::WeightTooLong {
                length: self.degree(),
                rank: n,
            });
        }
        Ok(self.triangle.pad_to_rank(n))
    }
}

fn finite_degree(pattern: &GTPattern) -> usize {
    let floor = pattern.highest_weight().len().max(1);
    let mut degree = pattern.rank();
    while degree > floor && (1..degree).all(|i| pattern.exponent(degree, i) == 0) {
        degree -= 1;
    }
    degree
}

/// Degree of an infinite pattern, recomputed from its rows.
pub fn pattern_degree(pattern: &InfiniteGTPattern) -> usize {
    finite_degree(pattern.triangle())
}

/// All infinite patterns of degree `≤ max_degree`, ordered by degree and then
/// by reading key within each degree.
pub fn enumerate_infinite_patterns(
    weight: &HighestWeight,
    max_degree: usize,
) -> Result<Vec<InfiniteGTPattern>> {
    let mut out = Vec::new();
    for degree in weight.len().max(1)..=max_degree {
        out.extend(stratum(weight, degree)?);
    }
    if out.is_empty() {
        weight.check_rank(max_degree)?;
    }
    Ok(out)
}

/// Infinite patterns of degree exactly `degree`.
pub fn stratum(weight: &HighestWeight, degree: usize) -> Result<Vec<InfiniteGTPattern>> {
    Ok(enumerate_patterns(weight, degree)?
        .into_iter()
        .filter(|p| finite_degree(p) == degree)
        .map(|p| InfiniteGTPattern::from_pattern(&p))
        .collect())
}
