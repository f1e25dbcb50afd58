//! Column monomials and sparse exact-rational vectors of a Weyl module.

use std::collections::BTreeMap;
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::HighestWeight;

pub type Rational = BigRational;

/// A tensor product of wedge monomials, one per column of the Young diagram.
///
/// Each column is a strictly increasing list of basis indices. Ordering is
/// lexicographic on the concatenated columns.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ColumnMonomial(Vec<Vec<u32>>);

impl ColumnMonomial {
    pub fn columns(&self) -> &[Vec<u32>] {
        &self.0
    }

    pub fn into_columns(self) -> Vec<Vec<u32>> {
        self.0
    }

    /// True when every row of the associated filling is weakly increasing.
    pub fn is_semistandard(&self) -> bool {
        self.first_violation().is_none()
    }

    /// Leftmost adjacent column pair `(c, c + 1)` and topmost row `r` with
    /// `columns[c][r] > columns[c + 1][r]`.
    pub(crate) fn first_violation(&self) -> Option<(usize, usize)> {
        self.0.windows(2).enumerate().find_map(|(c, pair)| {
            pair[1]
                .iter()
                .zip(&pair[0])
                .position(|(right, left)| left > right)
                .map(|r| (c, r))
        })
    }

    /// Multiplicity of each index `1..=n`.
    pub fn content(&self, n: usize) -> Vec<i64> {
        let mut counts = vec![0i64; n];
        for &x in self.0.iter().flatten() {
            counts[x as usize - 1] += 1;
        }
        counts
    }

    pub fn max_index(&self) -> u32 {
        self.0.iter().flatten().copied().max().unwrap_or(0)
    }

    pub(crate) fn from_canonical(columns: Vec<Vec<u32>>) -> Self {
        debug_assert!(columns.iter().all(|c| c.windows(2).all(|w| w[0] < w[1])));
        Self(columns)
    }
}

impl fmt::Display for ColumnMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cols: Vec<String> = self
            .0
            .iter()
            .map(|c| {
                let items: Vec<String> = c.iter().map(u32::to_string).collect();
                format!("[{}]", items.join(","))
            })
            .collect();
        write!(f, "[{}]", cols.join(","))
    }
}

/// Sorts each column, tracking the sign of the permutation. Returns `None`
/// when some column repeats an index, since the wedge product then vanishes.
pub fn normalize_monomial(mut columns: Vec<Vec<u32>>) -> Option<(ColumnMonomial, i8)> {
    let mut sign = 1i8;
    for col in &mut columns {
        for a in 1..col.len() {
            let mut b = a;
            while b > 0 && col[b - 1] >= col[b] {
                if col[b - 1] == col[b] {
                    return None;
                }
                col.swap(b - 1, b);
                sign = -sign;
                b -= 1;
            }
        }
    }
    Some((ColumnMonomial(columns), sign))
}

/// Finite linear combination of column monomials in the module `V^λ` of
/// `gl(rank)`. Zero coefficients are never stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModuleVector {
    weight: HighestWeight,
    rank: usize,
    terms: BTreeMap<ColumnMonomial, Rational>,
}

impl ModuleVector {
    pub fn zero(weight: HighestWeight, rank: usize) -> Self {
        Self {
            weight,
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub(crate) fn from_terms(
        weight: HighestWeight,
        rank: usize,
        terms: BTreeMap<ColumnMonomial, Rational>,
    ) -> Self {
        let mut v = Self {
            weight,
            rank,
            terms,
        };
        v.terms.retain(|_, c| !c.is_zero());
        v
    }

    /// Builds a vector from raw (possibly unsorted) columns, checking that
    /// they fit the diagram of `weight` and use indices `1..=rank`.
    pub fn from_raw_terms(
        weight: &HighestWeight,
        rank: usize,
        terms: impl IntoIterator<Item = (Vec<Vec<u32>>, Rational)>,
    ) -> Result<Self> {
        weight.check_rank(rank)?;
        let heights = weight.conjugate();
        let mut out = Self::zero(weight.clone(), rank);
        for (columns, coeff) in terms {
            let lens: Vec<usize> = columns.iter().map(Vec::len).collect();
            if lens != heights {
                return Err(Error::BadMonomial(format!(
                    "column heights {lens:?}, expected {heights:?}"
                )));
            }
            if let Some(&x) = columns
                .iter()
                .flatten()
                .find(|&&x| x == 0 || x as usize > rank)
            {
                return Err(Error::BadMonomial(format!("index {x} outside 1..={rank}")));
            }
            if let Some((m, sign)) = normalize_monomial(columns) {
                out.add_term(m, &(coeff * Rational::from_integer(sign.into())));
            }
        }
        Ok(out)
    }

    pub fn highest_weight(&self) -> &HighestWeight {
        &self.weight
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of stored terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<ColumnMonomial, Rational> {
        &self.terms
    }

    pub fn iter(&self) -> impl Iterator<Item = (&ColumnMonomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, m: &ColumnMonomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn same_module(&self, other: &ModuleVector) -> bool {
        self.rank == other.rank && self.weight == other.weight
    }

    pub fn add_term(&mut self, m: ColumnMonomial, coeff: &Rational) {
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(coeff.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += coeff;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    /// `self += scale * other`.
    pub fn add_scaled(&mut self, other: &ModuleVector, scale: &Rational) {
        assert!(self.same_module(other), "vectors from different modules");
        if scale.is_zero() {
            return;
        }
        for (m, c) in &other.terms {
            self.add_term(m.clone(), &(c * scale));
        }
    }

    pub fn scaled(&self, scale: &Rational) -> ModuleVector {
        let mut out = ModuleVector::zero(self.weight.clone(), self.rank);
        out.add_scaled(self, scale);
        out
    }

    pub fn plus(&self, other: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        out.add_scaled(other, &Rational::one());
        out
    }

    pub fn minus(&self, other: &ModuleVector) -> ModuleVector {
        let mut out = self.clone();
        out.add_scaled(other, &-Rational::one());
        out
    }

    /// If `other = c · self` for a nonzero rational `c`, returns `c`.
    pub fn proportionality(&self, other: &ModuleVector) -> Option<Rational> {
        if !self.same_module(other) || self.is_zero() || self.len() != other.len() {
            return None;
        }
        let (m, c) = self.terms.iter().next()?;
        let ratio = other.terms.get(m)? / c;
        (self.scaled(&ratio) == *other).then_some(ratio)
    }

    /// Same terms viewed in the module of `gl(rank)` for a larger rank.
    pub fn with_rank(&self, rank: usize) -> ModuleVector {
        assert!(rank >= self.rank);
        Self {
            weight: self.weight.clone(),
            rank,
            terms: self.terms.clone(),
        }
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c}){m}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct JsonTerm {
    columns: Vec<Vec<u32>>,
    coeff: String,
}

#[derive(Serialize, Deserialize)]
struct JsonVector {
    lambda: Vec<u32>,
    n: usize,
    terms: Vec<JsonTerm>,
}

impl Serialize for ModuleVector {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        JsonVector {
            lambda: self.weight.parts().to_vec(),
            n: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| JsonTerm {
                    columns: m.columns().to_vec(),
                    coeff: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for ModuleVector {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let raw = JsonVector::deserialize(d)?;
        let weight = HighestWeight::new(raw.lambda).map_err(D::Error::custom)?;
        let terms = raw
            .terms
            .into_iter()
            .map(|t| {
                t.coeff
                    .parse::<Rational>()
                    .map(|c| (t.columns, c))
                    .map_err(|e| D::Error::custom(format!("bad coefficient {:?}: {e}", t.coeff)))
            })
            .collect::<std::result::Result<Vec<_>, _>>()?;
        ModuleVector::from_raw_terms(&weight, raw.n, terms).map_err(D::Error::custom)
    }
}
