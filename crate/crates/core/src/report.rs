//! The full verification run behind the `verify` command.

use std::fmt;

use num_traits::{One, ToPrimitive};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::Result;
use crate::infinite::InfiniteGTPattern;
use crate::linalg::vector_rank;
use crate::lowering::gt_basis_vector;
use crate::minors::{spectral_check_vector, SpectralReport};
use crate::partition::HighestWeight;
use crate::pattern::{enumerate_patterns, weyl_dimension, GTPattern};
use crate::vector::{ModuleVector, Rational};
use crate::weyl::{embed, weight_of, WeylModule};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub weight: HighestWeight,
    pub n: usize,
    pub dimension: u64,
    pub patterns: usize,
    pub spectral_checks: usize,
    pub mismatches: Vec<SpectralReport>,
    pub basis_rank: usize,
    pub weight_failures: Vec<GTPattern>,
    /// Patterns whose vector changes between some rank `≤ n` and the next.
    pub stability_failures: Vec<GTPattern>,
    pub stable_up_to: usize,
    pub perturbed: bool,
    pub pass: bool,
}

impl VerifyReport {
    pub fn summary(&self) -> String {
        let outcome = if self.mismatches.is_empty() {
            "all match".to_string()
        } else {
            format!("{} mismatched", self.mismatches.len())
        };
        format!(
            "{} patterns, {} spectral checks, {}",
            self.patterns, self.spectral_checks, outcome
        )
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "weight {} at rank {}", self.weight, self.n)?;
        if self.perturbed {
            writeln!(f, "perturbed: one basis vector altered")?;
        }
        writeln!(f, "{}", self.summary())?;
        for m in &self.mismatches {
            let degree = match m.status {
                crate::minors::SpectralStatus::Mismatch { degree } => degree,
                crate::minors::SpectralStatus::Match => unreachable!(),
            };
            writeln!(
                f,
                "  mismatch: pattern {} m={} at u^{}",
                m.pattern, m.m, degree
            )?;
        }
        writeln!(f, "basis rank {} of {}", self.basis_rank, self.dimension)?;
        if self.weight_failures.is_empty() {
            writeln!(f, "weights consistent")?;
        } else {
            writeln!(f, "{} weight mismatches", self.weight_failures.len())?;
        }
        if self.stability_failures.is_empty() {
            writeln!(f, "stable up to rank {}", self.stable_up_to)?;
        } else {
            writeln!(
                f,
                "{} patterns unstable below rank {}",
                self.stability_failures.len(),
                self.stable_up_to
            )?;
        }
        write!(f, "{}", if self.pass { "PASS" } else { "FAIL" })
    }
}

/// Runs the spectral, rank, weight and stability checks for `V^λ` of `gl(n)`.
///
/// With `perturb`, one basis vector is altered before checking so that the
/// run must fail: in a vector with several terms one coefficient changes sign,
/// otherwise a monomial of another basis vector is added. A one-dimensional
/// module has nothing to mix with, so its single vector is replaced by zero.
pub fn verify(weight: &HighestWeight, n: usize, perturb: bool) -> Result<VerifyReport> {
    let module = WeylModule::new(weight.clone(), n)?;
    let patterns = enumerate_patterns(weight, n)?;
    let dimension = weyl_dimension(weight, n)?;

    let mut vectors = patterns
        .par_iter()
        .map(|p| gt_basis_vector(&module, p))
        .collect::<Result<Vec<_>>>()?;
    if perturb {
        perturb_family(&mut vectors);
    }

    let basis_rank = vector_rank(vectors.iter());
    let weight_failures: Vec<GTPattern> = patterns
        .iter()
        .zip(&vectors)
        .filter(|(p, v)| weight_of(v).ok() != Some(p.weight()))
        .map(|(p, _)| p.clone())
        .collect();

    let jobs: Vec<(usize, usize)> = (0..patterns.len())
        .flat_map(|idx| (1..=n).map(move |m| (idx, m)))
        .collect();
    let reports = jobs
        .par_iter()
        .map(|&(idx, m)| spectral_check_vector(&module, &patterns[idx], m, &vectors[idx]))
        .collect::<Result<Vec<_>>>()?;
    let spectral_checks = reports.len();
    let mismatches: Vec<SpectralReport> = reports.into_iter().filter(|r| !r.is_match()).collect();

    let stable_up_to = n + 1;
    let towers = (1..=stable_up_to)
        .map(|r| WeylModule::new(weight.clone(), r).ok())
        .collect::<Vec<_>>();
    let stability_failures = patterns
        .par_iter()
        .zip(&vectors)
        .map(|(p, v)| stable_through(p, v, &towers).map(|ok| (!ok).then(|| p.clone())))
        .collect::<Result<Vec<_>>>()?
        .into_iter()
        .flatten()
        .collect::<Vec<_>>();

    let dimension_usize = dimension.to_usize().unwrap_or(usize::MAX);
    let pass = mismatches.is_empty()
        && basis_rank == dimension_usize
        && patterns.len() == dimension_usize
        && weight_failures.is_empty()
        && stability_failures.is_empty();

    Ok(VerifyReport {
        weight: weight.clone(),
        n,
        dimension: dimension.to_u64().unwrap_or(u64::MAX),
        patterns: patterns.len(),
        spectral_checks,
        mismatches,
        basis_rank,
        weight_failures,
        stability_failures,
        stable_up_to,
        perturbed: perturb,
        pass,
    })
}

/// Checks `e_Λ` from its degree up to the last tower rank, using `top` as the
/// vector at the pattern's own rank.
fn stable_through(
    pattern: &GTPattern,
    top: &ModuleVector,
    towers: &[Option<WeylModule>],
) -> Result<bool> {
    let n = pattern.rank();
    let stable = InfiniteGTPattern::from_pattern(pattern);
    let vector_at = |r: usize| -> Result<ModuleVector> {
        if r == n {
            return Ok(top.clone());
        }
        let module = towers[r - 1].as_ref().expect("rank at least the degree");
        gt_basis_vector(module, &stable.at_rank(r)?)
    };
    let mut current = vector_at(stable.degree())?;
    for r in stable.degree()..towers.len() {
        let next = vector_at(r + 1)?;
        if embed(&current, r + 1) != next {
            return Ok(false);
        }
        current = next;
    }
    Ok(true)
}

fn perturb_family(vectors: &mut [ModuleVector]) {
    if let Some(v) = vectors.iter_mut().find(|v| v.len() >= 2) {
        let (m, c) = v
            .iter()
            .next()
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        v.add_term(m, &(c * Rational::from_integer((-2).into())));
        return;
    }
    if vectors.len() >= 2 {
        let (m, _) = vectors[1]
            .iter()
            .next()
            .map(|(m, c)| (m.clone(), c.clone()))
            .unwrap();
        vectors[0].add_term(m, &Rational::one());
        return;
    }
    if let Some(v) = vectors.first_mut() {
        *v = ModuleVector::zero(v.highest_weight().clone(), v.rank());
    }
}
