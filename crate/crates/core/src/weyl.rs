//! The polynomial representation `V^λ` of `gl(n)` realized as a tensor product
//! of exterior powers, one per column of the Young diagram, modulo the column
//! exchange relations.
//!
//! Vectors are kept in straightened form: every stored monomial is
//! semistandard, and these monomials form a basis of the quotient.
//!
//! Straightening picks the leftmost adjacent column pair `(c, c + 1)` with a
//! row violation at the topmost row `r`, and rewrites the monomial as the sum
//! over all exchanges of the top `r + 1` cells of column `c + 1` with
//! equally many cells of column `c`. Every resulting monomial is strictly
//! larger in the order comparing columns right to left, each column as a
//! descending multiset, so the rewriting terminates.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, RwLock};

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::partition::HighestWeight;
use crate::pattern::enumerate_patterns;
use crate::tableau::pattern_to_tableau;
use crate::vector::{normalize_monomial, ColumnMonomial, ModuleVector, Rational};

type Terms = Vec<(ColumnMonomial, Rational)>;

/// The module `V^λ` of `gl(rank)` together with a memo of straightened monomials.
#[derive(Debug)]
pub struct WeylModule {
    weight: HighestWeight,
    rank: usize,
    heights: Vec<usize>,
    memo: RwLock<HashMap<ColumnMonomial, Arc<Terms>>>,
}

impl WeylModule {
    pub fn new(weight: HighestWeight, rank: usize) -> Result<Self> {
        weight.check_rank(rank)?;
        let heights = weight.conjugate();
        Ok(Self {
            weight,
            rank,
            heights,
            memo: RwLock::new(HashMap::new()),
        })
    }

    pub fn highest_weight(&self) -> &HighestWeight {
        &self.weight
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Column heights, i.e. the conjugate partition.
    pub fn column_heights(&self) -> &[usize] {
        &self.heights
    }

    pub fn zero(&self) -> ModuleVector {
        ModuleVector::zero(self.weight.clone(), self.rank)
    }

    pub fn contains(&self, v: &ModuleVector) -> bool {
        v.rank() == self.rank && v.highest_weight() == &self.weight
    }

    fn check(&self, v: &ModuleVector) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }

    /// The monomial whose column `c` is `e_1 ∧ … ∧ e_{h_c}`.
    pub fn highest_weight_vector(&self) -> ModuleVector {
        let columns = self
            .heights
            .iter()
            .map(|&h| (1..=h as u32).collect())
            .collect();
        let mut v = self.zero();
        v.add_term(ColumnMonomial::from_canonical(columns), &Rational::one());
        v
    }

    /// A single monomial from raw columns, straightened.
    pub fn monomial(&self, columns: Vec<Vec<u32>>) -> Result<ModuleVector> {
        let raw =
            ModuleVector::from_raw_terms(&self.weight, self.rank, [(columns, Rational::one())])?;
        Ok(self.straighten(&raw))
    }

    /// Semistandard monomials, i.e. the columns of all semistandard tableaux
    /// of shape `λ` with entries `≤ rank`, in monomial order.
    pub fn standard_monomials(&self) -> Vec<ColumnMonomial> {
        let mut out: Vec<ColumnMonomial> = enumerate_patterns(&self.weight, self.rank)
            .expect("rank checked at construction")
            .iter()
            .map(|p| {
                let t = pattern_to_tableau(p);
                ColumnMonomial::from_canonical(
                    (0..self.heights.len()).map(|c| t.column(c)).collect(),
                )
            })
            .collect();
        out.sort();
        out
    }

    pub fn dimension(&self) -> usize {
        self.standard_monomials().len()
    }

    /// Rewrites `v` modulo the exchange relations into semistandard support.
    pub fn straighten(&self, v: &ModuleVector) -> ModuleVector {
        self.straighten_terms(v.terms().iter().map(|(m, c)| (m.clone(), c.clone())))
    }

    fn straighten_terms(
        &self,
        terms: impl IntoIterator<Item = (ColumnMonomial, Rational)>,
    ) -> ModuleVector {
        let mut acc: BTreeMap<ColumnMonomial, Rational> = BTreeMap::new();
        for (m, c) in terms {
            if c.is_zero() {
                continue;
            }
            if m.is_semistandard() {
                *acc.entry(m).or_insert_with(Rational::zero) += c;
                continue;
            }
            for (s, d) in self.straighten_monomial(&m).iter() {
                *acc.entry(s.clone()).or_insert_with(Rational::zero) += &c * d;
            }
        }
        ModuleVector::from_terms(self.weight.clone(), self.rank, acc)
    }

    fn straighten_monomial(&self, m: &ColumnMonomial) -> Arc<Terms> {
        if let Some(hit) = self.memo.read().unwrap().get(m) {
            return Arc::clone(hit);
        }
        let Some((c, r)) = m.first_violation() else {
            return Arc::new(vec![(m.clone(), Rational::one())]);
        };
        let mut acc: BTreeMap<ColumnMonomial, Rational> = BTreeMap::new();
        for (rewritten, sign) in exchange(m.columns(), c, c + 1, &(0..=r).collect::<Vec<_>>()) {
            let sign = Rational::from_integer(sign.into());
            if rewritten.is_semistandard() {
                *acc.entry(rewritten).or_insert_with(Rational::zero) += sign;
            } else {
                for (s, d) in self.straighten_monomial(&rewritten).iter() {
                    *acc.entry(s.clone()).or_insert_with(Rational::zero) += &sign * d;
                }
            }
        }
        let terms: Terms = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        let terms = Arc::new(terms);
        self.memo
            .write()
            .unwrap()
            .insert(m.clone(), Arc::clone(&terms));
        terms
    }

    /// Action of the matrix unit `E_{ij}` (1-based) by the Leibniz rule over
    /// all cells, followed by straightening.
    pub fn act_e(&self, i: usize, j: usize, v: &ModuleVector) -> Result<ModuleVector> {
        self.check(v)?;
        if i == 0 || j == 0 || i > self.rank || j > self.rank {
            return Err(Error::IndexOutOfRange {
                i,
                j,
                rank: self.rank,
            });
        }
        if i == j {
            let mut out = self.zero();
            for (m, c) in v.iter() {
                let count = m
                    .columns()
                    .iter()
                    .flatten()
                    .filter(|&&x| x as usize == i)
                    .count();
                out.add_term(m.clone(), &(c * Rational::from_integer(count.into())));
            }
            return Ok(out);
        }
        let (from, to) = (j as u32, i as u32);
        let mut raw: BTreeMap<ColumnMonomial, Rational> = BTreeMap::new();
        for (m, c) in v.iter() {
            for (ci, col) in m.columns().iter().enumerate() {
                let Some(pos) = col.iter().position(|&x| x == from) else {
                    continue;
                };
                let mut columns = m.columns().to_vec();
                columns[ci][pos] = to;
                if let Some((n, sign)) = normalize_monomial(columns) {
                    let entry = raw.entry(n).or_insert_with(Rational::zero);
                    if sign > 0 {
                        *entry += c;
                    } else {
                        *entry -= c;
                    }
                }
            }
        }
        Ok(self.straighten_terms(raw))
    }

    /// Applies an operator word, rightmost letter first.
    pub fn act_word(&self, word: &[(usize, usize)], v: &ModuleVector) -> Result<ModuleVector> {
        let mut out = v.clone();
        for &(i, j) in word.iter().rev() {
            if out.is_zero() {
                break;
            }
            out = self.act_e(i, j, &out)?;
        }
        Ok(out)
    }

    /// Common `gl(n)`-weight of all monomials of `v`.
    pub fn weight_of(&self, v: &ModuleVector) -> Result<Vec<i64>> {
        self.check(v)?;
        weight_of(v)
    }

    /// Dimension of the span of `v_λ` under repeated application of all
    /// `E_{ij}`.
    pub fn cyclic_span_dimension(&self) -> usize {
        let mut span = Echelon::new();
        let start = self.highest_weight_vector();
        span.insert(start.terms().clone());
        let mut queue = vec![start];
        while let Some(v) = queue.pop() {
            for i in 1..=self.rank {
                for j in 1..=self.rank {
                    if i == j {
                        continue;
                    }
                    let w = self.act_e(i, j, &v).expect("indices in range");
                    if !w.is_zero() && span.insert(w.terms().clone()) {
                        queue.push(w);
                    }
                }
            }
        }
        span.rank()
    }
}

/// Common `gl(n)`-weight of all monomials of `v`.
pub fn weight_of(v: &ModuleVector) -> Result<Vec<i64>> {
    let mut monomials = v.terms().keys();
    let first = monomials.next().ok_or(Error::ZeroVector)?.content(v.rank());
    if monomials.any(|m| m.content(v.rank()) != first) {
        return Err(Error::NotHomogeneous);
    }
    Ok(first)
}

/// The inclusion `V^λ(gl(n)) → V^λ(gl(target))` sending each monomial to
/// itself.
pub fn embed(v: &ModuleVector, target: usize) -> ModuleVector {
    v.with_rank(target)
}

/// All monomials obtained from `columns` by exchanging the cells at rows
/// `selected` of column `right` with every equally sized set of cells of
/// column `left`, keeping vertical order, with their normalization signs.
/// Vanishing monomials are skipped.
pub fn exchange(
    columns: &[Vec<u32>],
    left: usize,
    right: usize,
    selected: &[usize],
) -> Vec<(ColumnMonomial, i8)> {
    let k = selected.len();
    let mut out = Vec::new();
    for subset in subsets(columns[left].len(), k) {
        let mut cols = columns.to_vec();
        for (&l, &r) in subset.iter().zip(selected) {
            cols[left][l] = columns[right][r];
            cols[right][r] = columns[left][l];
        }
        if let Some(normalized) = normalize_monomial(cols) {
            out.push(normalized);
        }
    }
    out
}

/// All `k`-element subsets of `0..n`, each sorted, in lexicographic order.
pub(crate) fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..n {
            if n - x < k - cur.len() {
                break;
            }
            cur.push(x);
            go(x + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}
