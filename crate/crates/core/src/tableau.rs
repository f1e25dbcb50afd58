//! Semistandard Young tableaux and their bijection with Gelfand-Tsetlin patterns.
//!
//! Entry `λ_{k j}` of a pattern counts the cells of row `j` of the tableau
//! holding a value `≤ k`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::HighestWeight;
use crate::pattern::GTPattern;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct Ssyt {
    shape: HighestWeight,
    rows: Vec<Vec<u32>>,
}

impl Ssyt {
    /// Checks that `rows` is a semistandard filling with positive entries.
    pub fn new(rows: Vec<Vec<u32>>) -> Result<Self> {
        let shape = HighestWeight::new(rows.iter().map(|r| r.len() as u32).collect::<Vec<_>>())?;
        if rows.iter().any(|r| r.is_empty()) {
            return Err(Error::NotSemistandard("empty row".into()));
        }
        for (j, row) in rows.iter().enumerate() {
            if let Some(&entry) = row.iter().find(|&&x| x == 0) {
                return Err(Error::EntryOutOfRange { entry, max: 0 });
            }
            if row.windows(2).any(|w| w[0] > w[1]) {
                return Err(Error::NotSemistandard(format!(
                    "row {} is not weakly increasing",
                    j + 1
                )));
            }
            if j > 0 {
                let above = &rows[j - 1];
                if row.iter().zip(above).any(|(lo, hi)| lo <= hi) {
                    return Err(Error::NotSemistandard(format!(
                        "column strictness fails between rows {j} and {}",
                        j + 1
                    )));
                }
            }
        }
        Ok(Self { shape, rows })
    }

    pub fn shape(&self) -> &HighestWeight {
        &self.shape
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn max_entry(&self) -> u32 {
        self.rows.iter().flatten().copied().max().unwrap_or(0)
    }

    /// Entries of column `c` (0-based), top to bottom.
    pub fn column(&self, c: usize) -> Vec<u32> {
        self.rows
            .iter()
            .take_while(|r| r.len() > c)
            .map(|r| r[c])
            .collect()
    }
}

#[derive(Deserialize)]
struct RawSsyt {
    shape: Vec<u32>,
    rows: Vec<Vec<u32>>,
}

impl<'de> Deserialize<'de> for Ssyt {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawSsyt::deserialize(d)?;
        let t = Ssyt::new(raw.rows).map_err(serde::de::Error::custom)?;
        let shape = HighestWeight::new(raw.shape).map_err(serde::de::Error::custom)?;
        if shape != t.shape {
            return Err(serde::de::Error::custom("shape does not match row lengths"));
        }
        Ok(t)
    }
}

pub fn pattern_to_tableau(pattern: &GTPattern) -> Ssyt {
    let n = pattern.rank();
    let weight = pattern.highest_weight();
    let rows = (1..=weight.len())
        .map(|j| {
            let mut row = Vec::with_capacity(weight.part(j - 1) as usize);
            let mut below = 0;
            for k in j..=n {
                let count = pattern.entry(k, j);
                row.extend(std::iter::repeat_n(k as u32, (count - below) as usize));
                below = count;
            }
            row
        })
        .collect();
    Ssyt {
        shape: weight,
        rows,
    }
}

/// Inverse of [`pattern_to_tableau`] at rank `n`.
pub fn tableau_to_pattern(tableau: &Ssyt, n: usize) -> Result<GTPattern> {
    if n == 0 {
        return Err(Error::ZeroRank);
    }
    if let Some(&entry) = tableau.rows.iter().flatten().find(|&&x| x as usize > n) {
        return Err(Error::EntryOutOfRange { entry, max: n });
    }
    tableau.shape.check_rank(n)?;
    let rows = (1..=n)
        .map(|k| {
            (1..=k)
                .map(|j| {
                    tableau
                        .rows
                        .get(j - 1)
                        .map_or(0, |r| r.iter().filter(|&&x| x as usize <= k).count() as u32)
                })
                .collect()
        })
        .collect();
    Ok(GTPattern::from_rows_unchecked(rows))
}
