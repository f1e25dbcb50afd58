//! Finite Gelfand-Tsetlin patterns.
//!
//! Rows are stored bottom-up: `rows[0]` is the single entry of row 1 and
//! `rows[n - 1]` is the top row, which equals the zero-padded highest weight.
//! Entry `(k, i)` in the 1-based accessors is the `i`-th entry of row `k`.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::HighestWeight;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct GTPattern {
    n: usize,
    rows: Vec<Vec<u32>>,
}

impl GTPattern {
    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    /// Row `k`, 1-based from the bottom.
    pub fn row(&self, k: usize) -> &[u32] {
        &self.rows[k - 1]
    }

    /// Entry `λ_{k i}`, both indices 1-based.
    pub fn entry(&self, k: usize, i: usize) -> u32 {
        self.rows[k - 1][i - 1]
    }

    pub fn top_row(&self) -> &[u32] {
        &self.rows[self.n - 1]
    }

    pub fn highest_weight(&self) -> HighestWeight {
        HighestWeight::new(self.top_row().to_vec())
            .expect("top row of a valid pattern is decreasing")
    }

    /// Lowering exponent `λ_{k i} − λ_{k−1, i}` for `2 ≤ k ≤ n`, `i < k`.
    pub fn exponent(&self, k: usize, i: usize) -> u32 {
        self.entry(k, i) - self.entry(k - 1, i)
    }

    /// Rows read bottom-up and concatenated; the enumeration order key.
    pub fn reading_key(&self) -> Vec<u32> {
        self.rows.iter().flatten().copied().collect()
    }

    /// The gl(n)-weight of the basis vector labelled by this pattern:
    /// component `k` is `rowsum(k) − rowsum(k − 1)`.
    pub fn weight(&self) -> Vec<i64> {
        let sums: Vec<i64> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|&x| x as i64).sum())
            .collect();
        (0..self.n)
            .map(|k| sums[k] - if k == 0 { 0 } else { sums[k - 1] })
            .collect()
    }

    /// Appends a new top row equal to the padded weight.
    pub fn pad_to_rank(&self, n: usize) -> GTPattern {
        assert!(n >= self.n);
        let weight = self.highest_weight();
        let mut rows = self.rows.clone();
        for k in self.n + 1..=n {
            rows.push(weight.padded(k));
        }
        GTPattern { n, rows }
    }

    pub(crate) fn from_rows_unchecked(rows: Vec<Vec<u32>>) -> GTPattern {
        GTPattern {
            n: rows.len(),
            rows,
        }
    }

    pub(crate) fn truncate(&self, n: usize) -> GTPattern {
        GTPattern {
            n,
            rows: self.rows[..n].to_vec(),
        }
    }
}

impl fmt::Display for GTPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rendered: Vec<String> = self
            .rows
            .iter()
            .map(|r| {
                let items: Vec<String> = r.iter().map(u32::to_string).collect();
                format!("[{}]", items.join(","))
            })
            .collect();
        write!(f, "[{}]", rendered.join(","))
    }
}

#[derive(Deserialize)]
struct RawPattern {
    n: usize,
    rows: Vec<Vec<i64>>,
}

impl<'de> Deserialize<'de> for GTPattern {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawPattern::deserialize(d)?;
        if raw.n != raw.rows.len() {
            return Err(serde::de::Error::custom(format!(
                "n = {} but {} rows given",
                raw.n,
                raw.rows.len()
            )));
        }
        validate_pattern(raw.rows).map_err(serde::de::Error::custom)
    }
}

/// Checks a triangular array (rows bottom-up) for shape, sign and interlacing.
pub fn validate_pattern(rows: Vec<Vec<i64>>) -> Result<GTPattern> {
    if rows.is_empty() {
        return Err(Error::ZeroRank);
    }
    for (idx, row) in rows.iter().enumerate() {
        if row.len() != idx + 1 {
            return Err(Error::ShapeError {
                row: idx + 1,
                expected: idx + 1,
                found: row.len(),
            });
        }
        if let Some(&value) = row.iter().find(|&&x| x < 0) {
            return Err(Error::NegativeEntry {
                row: idx + 1,
                value,
            });
        }
    }
    for k in 2..=rows.len() {
        let upper = &rows[k - 1];
        let lower = &rows[k - 2];
        for i in 1..k {
            if !(upper[i - 1] >= lower[i - 1] && lower[i - 1] >= upper[i]) {
                return Err(Error::InterlacingViolation { k, i });
            }
        }
    }
    let rows = rows
        .into_iter()
        .map(|r| r.into_iter().map(|x| x as u32).collect())
        .collect();
    Ok(GTPattern::from_rows_unchecked(rows))
}

/// Like [`validate_pattern`], additionally requiring the top row to be `weight`.
pub fn validate_pattern_for(rows: Vec<Vec<i64>>, weight: &HighestWeight) -> Result<GTPattern> {
    let pattern = validate_pattern(rows)?;
    let expected = weight.padded(pattern.rank());
    if pattern.top_row() != expected.as_slice() || weight.len() > pattern.rank() {
        return Err(Error::TopRowMismatch {
            expected,
            found: pattern.top_row().to_vec(),
        });
    }
    Ok(pattern)
}

/// All patterns with top row `weight`, sorted lexicographically by their
/// bottom-up reading key.
pub fn enumerate_patterns(weight: &HighestWeight, n: usize) -> Result<Vec<GTPattern>> {
    weight.check_rank(n)?;
    // Built top-down: `stack[j]` holds row n - j.
    fn extend(stack: &mut Vec<Vec<u32>>, out: &mut Vec<GTPattern>) {
        let upper = stack.last().unwrap().clone();
        if upper.len() == 1 {
            let mut rows = stack.clone();
            rows.reverse();
            out.push(GTPattern::from_rows_unchecked(rows));
            return;
        }
        let mut row = vec![0u32; upper.len() - 1];
        fill(&upper, 0, &mut row, stack, out);
    }
    fn fill(
        upper: &[u32],
        i: usize,
        row: &mut Vec<u32>,
        stack: &mut Vec<Vec<u32>>,
        out: &mut Vec<GTPattern>,
    ) {
        if i == row.len() {
            stack.push(row.clone());
            extend(stack, out);
            stack.pop();
            return;
        }
        for v in upper[i + 1]..=upper[i] {
            row[i] = v;
            fill(upper, i + 1, row, stack, out);
        }
    }

    let mut out = Vec::new();
    extend(&mut vec![weight.padded(n)], &mut out);
    out.sort_by_cached_key(GTPattern::reading_key);
    Ok(out)
}

/// Dimension of the irreducible gl(n)-module with highest weight `weight`,
/// by the Weyl product formula.
pub fn weyl_dimension(weight: &HighestWeight, n: usize) -> Result<BigUint> {
    weight.check_rank(n)?;
    let parts = weight.padded(n);
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for i in 0..n {
        for j in i + 1..n {
            num *= (parts[i] - parts[j]) as u64 + (j - i) as u64;
            den *= (j - i) as u64;
        }
    }
    debug_assert!((&num % &den) == BigUint::default());
    Ok(num / den)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(parts: &[u32]) -> HighestWeight {
        HighestWeight::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn validate_examples() {
        let p = validate_pattern(vec![vec![0], vec![0, 0]]).unwrap();
        assert_eq!(p.rank(), 2);
        assert!(validate_pattern(vec![vec![1], vec![1, 0]]).is_ok());
        assert_eq!(
            validate_pattern(vec![vec![2], vec![1, 0]]),
            Err(Error::InterlacingViolation { k: 2, i: 1 })
        );
    }

    #[test]
    fn validate_error_paths() {
        assert!(matches!(
            validate_pattern(vec![vec![0], vec![0]]),
            Err(Error::ShapeError { row: 2, .. })
        ));
        assert!(matches!(
            validate_pattern(vec![vec![-1], vec![0, -1]]),
            Err(Error::NegativeEntry { row: 1, value: -1 })
        ));
        assert_eq!(validate_pattern(vec![]), Err(Error::ZeroRank));
        assert!(matches!(
            validate_pattern_for(vec![vec![1], vec![1, 0]], &w(&[1, 1])),
            Err(Error::TopRowMismatch { .. })
        ));
    }

    #[test]
    fn enumerate_examples() {
        let ps = enumerate_patterns(&w(&[1]), 2).unwrap();
        assert_eq!(ps.len(), 2);
        assert_eq!(ps[0].rows(), &[vec![0], vec![1, 0]]);
        assert_eq!(ps[1].rows(), &[vec![1], vec![1, 0]]);

        for n in 1..=4 {
            let ps = enumerate_patterns(&HighestWeight::empty(), n).unwrap();
            assert_eq!(ps.len(), 1);
            assert!(ps[0].reading_key().iter().all(|&x| x == 0));
        }
        assert_eq!(enumerate_patterns(&w(&[2, 1]), 3).unwrap().len(), 8);
        assert_eq!(
            enumerate_patterns(&w(&[1, 1, 1]), 2),
            Err(Error::WeightTooLong { length: 3, rank: 2 })
        );
    }

    #[test]
    fn enumeration_is_sorted_and_unique() {
        let ps = enumerate_patterns(&w(&[3, 1, 1]), 4).unwrap();
        for pair in ps.windows(2) {
            assert!(pair[0].reading_key() < pair[1].reading_key());
        }
    }

    #[test]
    fn dimension_examples() {
        assert_eq!(weyl_dimension(&w(&[1]), 2).unwrap(), BigUint::from(2u32));
        assert_eq!(weyl_dimension(&w(&[1, 1]), 3).unwrap(), BigUint::from(3u32));
        assert_eq!(weyl_dimension(&w(&[2, 1]), 3).unwrap(), BigUint::from(8u32));
        assert_eq!(weyl_dimension(&w(&[]), 5).unwrap(), BigUint::from(1u32));
        assert!(weyl_dimension(&w(&[1, 1, 1]), 2).is_err());
    }

    #[test]
    fn pattern_weight_examples() {
        let p = validate_pattern(vec![vec![1], vec![1, 0]]).unwrap();
        assert_eq!(p.weight(), vec![1, 0]);
        let p = validate_pattern(vec![vec![0], vec![1, 0]]).unwrap();
        assert_eq!(p.weight(), vec![0, 1]);
        let p = validate_pattern(vec![vec![0], vec![0, 0], vec![0, 0, 0]]).unwrap();
        assert_eq!(p.weight(), vec![0, 0, 0]);
    }

    #[test]
    fn json_encoding() {
        let p = validate_pattern(vec![vec![1], vec![1, 0]]).unwrap();
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"n":2,"rows":[[1],[1,0]]}"#);
        let back: GTPattern = serde_json::from_str(&s).unwrap();
        assert_eq!(back, p);
        assert!(serde_json::from_str::<GTPattern>(r#"{"n":2,"rows":[[2],[1,0]]}"#).is_err());
        assert!(serde_json::from_str::<GTPattern>(r#"{"n":3,"rows":[[1],[1,0]]}"#).is_err());
    }
}
