//! Stable basis vectors along the chain `V^λ(gl(1)) ⊂ V^λ(gl(2)) ⊂ …`.
//!
//! An infinite pattern of degree `d` only lowers with operators `z_{ki}`,
//! `k ≤ d`, so its basis vector is computed once at rank `d` and carried to
//! higher ranks by the monomial inclusion.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::infinite::InfiniteGTPattern;
use crate::lowering::{gt_basis_in, gt_basis_vector};
use crate::partition::HighestWeight;
use crate::pattern::GTPattern;
use crate::vector::{ModuleVector, Rational};
use crate::weyl::{embed, WeylModule};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TowerVector {
    representative: ModuleVector,
    base_rank: usize,
}

impl TowerVector {
    pub fn new(representative: ModuleVector) -> Self {
        let base_rank = representative.rank();
        Self {
            representative,
            base_rank,
        }
    }

    pub fn representative(&self) -> &ModuleVector {
        &self.representative
    }

    pub fn base_rank(&self) -> usize {
        self.base_rank
    }

    /// The vector viewed in `V^λ(gl(n))`, `n ≥ base_rank`.
    pub fn at_rank(&self, n: usize) -> Result<ModuleVector> {
        if n < self.base_rank {
            return Err(Error::WeightTooLong {
                length: self.base_rank,
                rank: n,
            });
        }
        Ok(embed(&self.representative, n))
    }
}

/// `e_Λ` computed at the degree of `Λ`.
pub fn stable_basis_vector(pattern: &InfiniteGTPattern) -> Result<TowerVector> {
    let module = WeylModule::new(pattern.weight().clone(), pattern.degree())?;
    let v = gt_basis_vector(&module, pattern.triangle())?;
    Ok(TowerVector::new(v))
}

/// For every `n` in `[deg Λ, up_to)`, checks that `e_Λ` at rank `n`, embedded
/// into rank `n + 1`, equals `e_Λ` computed directly at rank `n + 1`.
pub fn stability_check(pattern: &InfiniteGTPattern, up_to: usize) -> Result<()> {
    let degree = pattern.degree();
    if up_to < degree {
        return Err(Error::WeightTooLong {
            length: degree,
            rank: up_to,
        });
    }
    let vector_at = |n: usize| -> Result<ModuleVector> {
        let module = WeylModule::new(pattern.weight().clone(), n)?;
        gt_basis_vector(&module, &pattern.at_rank(n)?)
    };
    let mut current = vector_at(degree)?;
    for n in degree..up_to {
        let next = vector_at(n + 1)?;
        if embed(&current, n + 1) != next {
            return Err(Error::StabilityViolation { rank: n });
        }
        current = next;
    }
    Ok(())
}

/// A wedge monomial of `∧^k C^n` paired with the basis vector it matches.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FundamentalElement {
    pub indices: Vec<u32>,
    pub wedge: ModuleVector,
    pub pattern: GTPattern,
    /// `e_Λ = scalar · wedge`
    #[serde(serialize_with = "serialize_rational")]
    pub scalar: Rational,
}

fn serialize_rational<S: serde::Serializer>(
    q: &Rational,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&q.to_string())
}

/// The wedge monomials `e_{i_1} ∧ … ∧ e_{i_k}`, `i_1 < … < i_k ≤ n`, each
/// matched to the basis vector of `(1^k)` it is proportional to.
pub fn fundamental_basis(k: usize, n: usize) -> Result<Vec<FundamentalElement>> {
    if k == 0 || k > n {
        return Err(Error::WedgeOutOfRange { k, n });
    }
    let weight = HighestWeight::new(vec![1; k])?;
    let module = WeylModule::new(weight, n)?;
    let mut basis = gt_basis_in(&module)?;
    let mut out = Vec::new();
    for picks in crate::weyl::subsets(n, k) {
        let indices: Vec<u32> = picks.iter().map(|&p| p as u32 + 1).collect();
        let wedge = module.monomial(vec![indices.clone()])?;
        let position = basis
            .iter()
            .position(|(_, e)| wedge.proportionality(e).is_some())
            .ok_or_else(|| Error::RankDeficient {
                rank: out.len(),
                expected: module.dimension(),
            })?;
        let (pattern, e) = basis.swap_remove(position);
        let scalar = wedge.proportionality(&e).expect("checked above");
        out.push(FundamentalElement {
            indices,
            wedge,
            pattern,
            scalar,
        });
    }
    if !basis.is_empty() {
        return Err(Error::RankDeficient {
            rank: out.len(),
            expected: out.len() + basis.len(),
        });
    }
    Ok(out)
}
