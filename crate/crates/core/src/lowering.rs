//! Lowering operators `z_{ki}` and the Gelfand-Tsetlin basis vectors built
//! from them.
//!
//! `z_{ki}` is the sum over increasing chains `i < i_1 < … < i_p < k`
//! (including the empty chain) of
//!
//! ```text
//! E_{i_1 i} E_{i_2 i_1} … E_{k i_p} · ∏_{j} (E_{ii} − E_{jj} + j − i)
//! ```
//!
//! where `j` runs over `{i+1, …, k−1}` minus the chain. Operators act right
//! to left, so the Cartan factors act first.
//!
//! The basis vector of a pattern applies the blocks for `k = n, n−1, …, 2`
//! in that order, and within block `k` applies `z_{k,k−1}` first and `z_{k1}`
//! last, each raised to the exponent `λ_{ki} − λ_{k−1,i}`.

use num_traits::One;

use crate::error::{Error, Result};
use crate::linalg::vector_rank;
use crate::partition::HighestWeight;
use crate::pattern::{enumerate_patterns, GTPattern};
use crate::vector::{ModuleVector, Rational};
use crate::weyl::{subsets, WeylModule};

/// Applies `z_{ki}` to `v`.
pub fn lowering_z(
    module: &WeylModule,
    k: usize,
    i: usize,
    v: &ModuleVector,
) -> Result<ModuleVector> {
    if !(1 <= i && i < k && k <= module.rank()) {
        return Err(Error::IndexOutOfRange {
            i: k,
            j: i,
            rank: module.rank(),
        });
    }
    if !module.contains(v) {
        return Err(Error::ContextMismatch);
    }
    let between: Vec<usize> = (i + 1..k).collect();
    let mut out = module.zero();
    for size in 0..=between.len() {
        for picks in subsets(between.len(), size) {
            let chain: Vec<usize> = picks.iter().map(|&p| between[p]).collect();
            let complement: Vec<usize> = between
                .iter()
                .copied()
                .filter(|j| !chain.contains(j))
                .collect();

            let corrected = cartan_factor(v, i, &complement);
            if corrected.is_zero() {
                continue;
            }
            // E_{i_1 i} E_{i_2 i_1} … E_{k i_p}
            let mut word = Vec::with_capacity(chain.len() + 1);
            let mut prev = i;
            for &c in &chain {
                word.push((c, prev));
                prev = c;
            }
            word.push((k, prev));
            let term = module.act_word(&word, &corrected)?;
            out.add_scaled(&term, &Rational::one());
        }
    }
    Ok(out)
}

/// `∏_j (E_{ii} − E_{jj} + j − i)` applied to `v`; diagonal on monomials.
fn cartan_factor(v: &ModuleVector, i: usize, complement: &[usize]) -> ModuleVector {
    if complement.is_empty() {
        return v.clone();
    }
    let mut out = ModuleVector::zero(v.highest_weight().clone(), v.rank());
    for (m, c) in v.iter() {
        let content = m.content(v.rank());
        let scalar: i64 = complement
            .iter()
            .map(|&j| content[i - 1] - content[j - 1] + j as i64 - i as i64)
            .product();
        out.add_term(m.clone(), &(c * Rational::from_integer(scalar.into())));
    }
    out
}

/// The basis vector `e_Λ` for a pattern of the module's rank and weight.
pub fn gt_basis_vector(module: &WeylModule, pattern: &GTPattern) -> Result<ModuleVector> {
    let n = module.rank();
    if pattern.rank() != n || &pattern.highest_weight() != module.highest_weight() {
        return Err(Error::TopRowMismatch {
            expected: module.highest_weight().padded(n),
            found: pattern.top_row().to_vec(),
        });
    }
    let mut v = module.highest_weight_vector();
    for k in (2..=n).rev() {
        for i in (1..k).rev() {
            for _ in 0..pattern.exponent(k, i) {
                v = lowering_z(module, k, i, &v)?;
            }
        }
    }
    if v.is_zero() {
        return Err(Error::ZeroVectorProduced(pattern.to_string()));
    }
    Ok(v)
}

/// One vector per pattern, in enumeration order, checked to be linearly
/// independent.
pub fn gt_basis(weight: &HighestWeight, n: usize) -> Result<Vec<(GTPattern, ModuleVector)>> {
    let module = WeylModule::new(weight.clone(), n)?;
    gt_basis_in(&module)
}

pub fn gt_basis_in(module: &WeylModule) -> Result<Vec<(GTPattern, ModuleVector)>> {
    let patterns = enumerate_patterns(module.highest_weight(), module.rank())?;
    let family = patterns
        .into_iter()
        .map(|p| gt_basis_vector(module, &p).map(|v| (p, v)))
        .collect::<Result<Vec<_>>>()?;
    let rank = vector_rank(family.iter().map(|(_, v)| v));
    let expected = module.dimension();
    if rank != expected || family.len() != expected {
        return Err(Error::RankDeficient { rank, expected });
    }
    Ok(family)
}
