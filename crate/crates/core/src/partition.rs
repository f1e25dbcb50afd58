//! Highest weights of polynomial representations, i.e. partitions.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A weakly decreasing, finitely supported sequence of nonnegative integers.
///
/// Trailing zeros are dropped, so `(2, 1, 0, 0)` and `(2, 1)` compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize)]
#[serde(transparent)]
pub struct HighestWeight {
    parts: Vec<u32>,
}

impl HighestWeight {
    pub fn new(parts: impl Into<Vec<u32>>) -> Result<Self> {
        let mut parts = parts.into();
        if let Some(position) = parts.windows(2).position(|w| w[0] < w[1]) {
            return Err(Error::NotDecreasing {
                position: position + 1,
            });
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Self { parts })
    }

    pub fn empty() -> Self {
        Self::default()
    }

    /// Nonzero parts, largest first.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of nonzero parts.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Number of cells of the Young diagram.
    pub fn size(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// The `i`-th part (0-based), zero past the end.
    pub fn part(&self, i: usize) -> u32 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Parts zero-padded to length `n`.
    pub fn padded(&self, n: usize) -> Vec<u32> {
        (0..n).map(|i| self.part(i)).collect()
    }

    /// Column heights of the Young diagram.
    pub fn conjugate(&self) -> Vec<usize> {
        let width = self.part(0) as usize;
        (0..width)
            .map(|c| self.parts.iter().filter(|&&p| p as usize > c).count())
            .collect()
    }

    pub(crate) fn check_rank(&self, rank: usize) -> Result<()> {
        if rank == 0 {
            return Err(Error::ZeroRank);
        }
        if self.len() > rank {
            return Err(Error::WeightTooLong {
                length: self.len(),
                rank,
            });
        }
        Ok(())
    }

    /// All partitions of `size`, largest first in reverse lexicographic order.
    pub fn all_of_size(size: u32) -> Vec<HighestWeight> {
        fn go(remaining: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<HighestWeight>) {
            if remaining == 0 {
                out.push(HighestWeight {
                    parts: prefix.clone(),
                });
                return;
            }
            for p in (1..=remaining.min(max)).rev() {
                prefix.push(p);
                go(remaining - p, p, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        go(size, size, &mut Vec::new(), &mut out);
        out
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, ")")
    }
}

/// Comma-separated parts; the empty string is the empty weight.
impl FromStr for HighestWeight {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Ok(Self::empty());
        }
        let parts = trimmed
            .split(',')
            .map(|p| p.trim().parse::<u32>())
            .collect::<std::result::Result<Vec<_>, _>>()
            .map_err(|_| Error::ParseWeight(s.to_string()))?;
        Self::new(parts)
    }
}

impl<'de> Deserialize<'de> for HighestWeight {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        HighestWeight::new(parts).map_err(serde::de::Error::custom)
    }
}
