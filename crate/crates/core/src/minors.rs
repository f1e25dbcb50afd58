//! Quantum minors of `L(u) = u + E` acting on module vectors, and the
//! eigenvalue checks they support.
//!
//! `A_m(u) = Σ_{σ ∈ S_m} sgn σ · L(u)_{σ(1) 1} L(u−1)_{σ(2) 2} ⋯ L(u−m+1)_{σ(m) m}`
//! with `L(u−s)_{ab} = (u−s) δ_{ab} + E_{ab}`. The word is applied right to
//! left, so the factor for column `m` acts first. Permutations are expanded as
//! a tree over columns `m, m−1, …, 1` so common suffixes are shared.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::pattern::GTPattern;
use crate::vector::{ModuleVector, Rational};
use crate::weyl::WeylModule;

/// Polynomial in the spectral parameter `u` with vector coefficients;
/// `coefficients[s]` multiplies `u^s`. Trailing zero coefficients are trimmed.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UPolyVector {
    coefficients: Vec<ModuleVector>,
}

impl UPolyVector {
    pub fn zero() -> Self {
        Self {
            coefficients: Vec::new(),
        }
    }

    pub fn constant(v: ModuleVector) -> Self {
        let mut p = Self {
            coefficients: vec![v],
        };
        p.trim();
        p
    }

    pub fn coefficients(&self) -> &[ModuleVector] {
        &self.coefficients
    }

    /// Coefficient of `u^s`, or `None` past the degree.
    pub fn coefficient(&self, s: usize) -> Option<&ModuleVector> {
        self.coefficients.get(s)
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Degree in `u`; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coefficients.len().checked_sub(1)
    }

    fn trim(&mut self) {
        while self.coefficients.last().is_some_and(ModuleVector::is_zero) {
            self.coefficients.pop();
        }
    }

    fn add_scaled(&mut self, other: &UPolyVector, scale: &Rational) {
        for (s, c) in other.coefficients.iter().enumerate() {
            if s < self.coefficients.len() {
                self.coefficients[s].add_scaled(c, scale);
            } else {
                self.coefficients.push(c.scaled(scale));
            }
        }
        self.trim();
    }

    /// `(u − shift) · self`
    fn times_linear(&self, shift: i64) -> UPolyVector {
        let Some(first) = self.coefficients.first() else {
            return Self::zero();
        };
        let shift = Rational::from_integer(shift.into());
        let zero = ModuleVector::zero(first.highest_weight().clone(), first.rank());
        let mut out = vec![zero; self.coefficients.len() + 1];
        for (s, c) in self.coefficients.iter().enumerate() {
            out[s + 1].add_scaled(c, &Rational::one());
            out[s].add_scaled(c, &-shift.clone());
        }
        let mut p = Self { coefficients: out };
        p.trim();
        p
    }

    fn act_e(&self, module: &WeylModule, a: usize, b: usize) -> Result<UPolyVector> {
        let mut p = Self {
            coefficients: self
                .coefficients
                .iter()
                .map(|c| module.act_e(a, b, c))
                .collect::<Result<_>>()?,
        };
        p.trim();
        Ok(p)
    }

    /// `L(u − shift)_{ab} · self`
    fn apply_l_entry(
        &self,
        module: &WeylModule,
        a: usize,
        b: usize,
        shift: i64,
    ) -> Result<UPolyVector> {
        let mut out = self.act_e(module, a, b)?;
        if a == b {
            out.add_scaled(&self.times_linear(shift), &Rational::one());
        }
        Ok(out)
    }

    /// Polynomial with integer scalar coefficients times a vector.
    pub fn scalar_times(poly: &[BigInt], v: &ModuleVector) -> UPolyVector {
        let mut p = Self {
            coefficients: poly
                .iter()
                .map(|c| v.scaled(&Rational::from_integer(c.clone())))
                .collect(),
        };
        p.trim();
        p
    }
}

/// `A_m(u) · v`.
pub fn quantum_minor_apply(module: &WeylModule, m: usize, v: &ModuleVector) -> Result<UPolyVector> {
    if m == 0 || m > module.rank() {
        return Err(Error::IndexOutOfRange {
            i: m,
            j: m,
            rank: module.rank(),
        });
    }
    if !module.contains(v) {
        return Err(Error::ContextMismatch);
    }
    let mut acc = UPolyVector::zero();
    let mut rows = vec![0usize; m];
    expand(
        module,
        m,
        m,
        &mut rows,
        &UPolyVector::constant(v.clone()),
        &mut acc,
    )?;
    Ok(acc)
}

fn expand(
    module: &WeylModule,
    m: usize,
    column: usize,
    rows: &mut Vec<usize>,
    current: &UPolyVector,
    acc: &mut UPolyVector,
) -> Result<()> {
    if column == 0 {
        let sign = permutation_sign(rows);
        acc.add_scaled(current, &Rational::from_integer(sign.into()));
        return Ok(());
    }
    for a in 1..=m {
        if rows[column..].contains(&a) {
            continue;
        }
        let next = current.apply_l_entry(module, a, column, column as i64 - 1)?;
        if next.is_zero() {
            continue;
        }
        rows[column - 1] = a;
        expand(module, m, column - 1, rows, &next, acc)?;
    }
    rows[column - 1] = 0;
    Ok(())
}

fn permutation_sign(perm: &[usize]) -> i64 {
    let inversions = (0..perm.len())
        .flat_map(|i| (i + 1..perm.len()).map(move |j| (i, j)))
        .filter(|&(i, j)| perm[i] > perm[j])
        .count();
    if inversions % 2 == 0 {
        1
    } else {
        -1
    }
}

/// `∏_{i=1}^m (u + λ_{mi} − i + 1)`, stored by its shifts `λ_{mi} − i + 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EigenvaluePolynomial {
    shifts: Vec<i64>,
}

impl EigenvaluePolynomial {
    pub fn for_pattern(pattern: &GTPattern, m: usize) -> Self {
        let shifts = pattern
            .row(m)
            .iter()
            .enumerate()
            .map(|(idx, &x)| x as i64 - idx as i64)
            .collect();
        Self { shifts }
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    /// Coefficients in increasing powers of `u`; the last one is 1.
    pub fn coefficients(&self) -> Vec<BigInt> {
        let mut poly = vec![BigInt::one()];
        for &s in &self.shifts {
            let mut next = vec![BigInt::zero(); poly.len() + 1];
            for (d, c) in poly.iter().enumerate() {
                next[d + 1] += c;
                next[d] += c * s;
            }
            poly = next;
        }
        poly
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase", tag = "status")]
pub enum SpectralStatus {
    Match,
    /// The coefficient of `u^degree` differs.
    Mismatch {
        degree: usize,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectralReport {
    pub pattern: GTPattern,
    pub m: usize,
    #[serde(serialize_with = "serialize_integers")]
    pub expected: Vec<BigInt>,
    #[serde(flatten)]
    pub status: SpectralStatus,
}

impl SpectralReport {
    pub fn is_match(&self) -> bool {
        self.status == SpectralStatus::Match
    }
}

fn serialize_integers<S: Serializer>(
    values: &[BigInt],
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    use num_traits::ToPrimitive;
    use serde::ser::SerializeSeq;
    let mut seq = s.serialize_seq(Some(values.len()))?;
    for v in values {
        match v.to_i64() {
            Some(x) => seq.serialize_element(&x)?,
            None => seq.serialize_element(&v.to_string())?,
        }
    }
    seq.end()
}

/// Compares `A_m(u) · e_Λ` with the eigenvalue polynomial times `e_Λ`.
pub fn spectral_check(
    module: &WeylModule,
    pattern: &GTPattern,
    m: usize,
) -> Result<SpectralReport> {
    let e = crate::lowering::gt_basis_vector(module, pattern)?;
    spectral_check_vector(module, pattern, m, &e)
}

/// As [`spectral_check`] with a precomputed vector standing in for `e_Λ`.
pub fn spectral_check_vector(
    module: &WeylModule,
    pattern: &GTPattern,
    m: usize,
    e: &ModuleVector,
) -> Result<SpectralReport> {
    if m == 0 || m > pattern.rank() {
        return Err(Error::IndexOutOfRange {
            i: m,
            j: m,
            rank: pattern.rank(),
        });
    }
    let expected = EigenvaluePolynomial::for_pattern(pattern, m).coefficients();
    let actual = quantum_minor_apply(module, m, e)?;
    let predicted = UPolyVector::scalar_times(&expected, e);
    let len = actual.coefficients.len().max(predicted.coefficients.len());
    let differing = (0..len)
        .rev()
        .find(|&s| actual.coefficient(s) != predicted.coefficient(s));
    let status = match differing {
        None => SpectralStatus::Match,
        Some(degree) => SpectralStatus::Mismatch { degree },
    };
    Ok(SpectralReport {
        pattern: pattern.clone(),
        m,
        expected,
        status,
    })
}

/// Coefficient of `u^{m−i}` in `A_m(u) · v`, i.e. the central element
/// `a_{mi}` applied to `v`.
pub fn central_coefficient(
    module: &WeylModule,
    m: usize,
    i: usize,
    v: &ModuleVector,
) -> Result<ModuleVector> {
    if i > m {
        return Err(Error::IndexOutOfRange {
            i: m,
            j: i,
            rank: module.rank(),
        });
    }
    let p = quantum_minor_apply(module, m, v)?;
    Ok(p.coefficient(m - i)
        .cloned()
        .unwrap_or_else(|| module.zero()))
}

/// A failed commutation `a_{mi} E_{pq} v ≠ E_{pq} a_{mi} v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentralityWitness {
    pub p: usize,
    pub q: usize,
    pub sample: usize,
}

/// Checks that `a_{mi}` commutes with every `E_{pq}`, `p, q ≤ m`, on the
/// given samples.
pub fn gz_centrality_check(
    module: &WeylModule,
    m: usize,
    i: usize,
    samples: &[ModuleVector],
) -> Result<Option<CentralityWitness>> {
    for (idx, v) in samples.iter().enumerate() {
        let av = central_coefficient(module, m, i, v)?;
        for p in 1..=m {
            for q in 1..=m {
                let lhs = central_coefficient(module, m, i, &module.act_e(p, q, v)?)?;
                let rhs = module.act_e(p, q, &av)?;
                if lhs != rhs {
                    return Ok(Some(CentralityWitness { p, q, sample: idx }));
                }
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::HighestWeight;
    use crate::pattern::validate_pattern;

    fn w(parts: &[u32]) -> HighestWeight {
        HighestWeight::new(parts.to_vec()).unwrap()
    }

    fn ints(xs: &[i64]) -> Vec<BigInt> {
        xs.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn eigenvalue_polynomial_expansion() {
        let p = validate_pattern(vec![vec![0], vec![1, 0]]).unwrap();
        // m = 2: (u + 1 − 1 + 1)(u + 0 − 2 + 1) = u² − 1
        assert_eq!(
            EigenvaluePolynomial::for_pattern(&p, 2).coefficients(),
            ints(&[-1, 0, 1])
        );
        assert_eq!(
            EigenvaluePolynomial::for_pattern(&p, 1).coefficients(),
            ints(&[0, 1])
        );
    }

    #[test]
    fn first_minor_on_vector_rep() {
        let m = WeylModule::new(w(&[1]), 2).unwrap();
        let v = m.highest_weight_vector();
        let p = quantum_minor_apply(&m, 1, &v).unwrap();
        assert_eq!(p, UPolyVector::scalar_times(&ints(&[1, 1]), &v));
    }

    #[test]
    fn zero_vector_gives_zero_polynomial() {
        let m = WeylModule::new(w(&[2, 1]), 3).unwrap();
        for k in 1..=3 {
            assert!(quantum_minor_apply(&m, k, &m.zero()).unwrap().is_zero());
        }
        assert!(quantum_minor_apply(&m, 4, &m.zero()).is_err());
    }

    #[test]
    fn top_minor_on_wedge() {
        let m = WeylModule::new(w(&[1, 1]), 2).unwrap();
        let v = m.highest_weight_vector();
        // (u + 1)(u + 1 − 2 + 1) = u² + u
        let p = quantum_minor_apply(&m, 2, &v).unwrap();
        assert_eq!(p, UPolyVector::scalar_times(&ints(&[0, 1, 1]), &v));
    }

    #[test]
    fn spectral_examples() {
        let m = WeylModule::new(w(&[1]), 2).unwrap();
        let p = validate_pattern(vec![vec![0], vec![1, 0]]).unwrap();
        let r1 = spectral_check(&m, &p, 1).unwrap();
        assert!(r1.is_match());
        assert_eq!(r1.expected, ints(&[0, 1]));
        let r2 = spectral_check(&m, &p, 2).unwrap();
        assert!(r2.is_match());
        assert_eq!(r2.expected, ints(&[-1, 0, 1]));
        assert!(spectral_check(&m, &p, 3).is_err());
    }

    #[test]
    fn capelli_eigenvalue_on_highest_vector() {
        let m = WeylModule::new(w(&[2, 1]), 3).unwrap();
        let top = validate_pattern(vec![vec![2], vec![2, 1], vec![2, 1, 0]]).unwrap();
        let r = spectral_check(&m, &top, 3).unwrap();
        // (u + 2)(u + 1 − 1)(u + 0 − 2) = u³ − 4u
        assert_eq!(r.expected, ints(&[0, -4, 0, 1]));
        assert!(r.is_match());
    }

    #[test]
    fn mismatch_is_reported() {
        let m = WeylModule::new(w(&[1]), 2).unwrap();
        let p = validate_pattern(vec![vec![0], vec![1, 0]]).unwrap();
        let wrong = m
            .highest_weight_vector()
            .plus(&m.monomial(vec![vec![2]]).unwrap());
        let r = spectral_check_vector(&m, &p, 1, &wrong).unwrap();
        assert_eq!(r.status, SpectralStatus::Mismatch { degree: 0 });
    }

    #[test]
    fn report_json() {
        let m = WeylModule::new(w(&[1]), 2).unwrap();
        let p = validate_pattern(vec![vec![0], vec![1, 0]]).unwrap();
        let r = spectral_check(&m, &p, 2).unwrap();
        assert_eq!(
            serde_json::to_string(&r).unwrap(),
            r#"{"pattern":{"n":2,"rows":[[0],[1,0]]},"m":2,"expected":[-1,0,1],"status":"match"}"#
        );
    }

    #[test]
    fn centrality_small() {
        let m = WeylModule::new(w(&[1]), 2).unwrap();
        let samples = vec![
            m.highest_weight_vector(),
            m.monomial(vec![vec![2]]).unwrap(),
        ];
        assert_eq!(gz_centrality_check(&m, 1, 1, &samples).unwrap(), None);

        let m = WeylModule::new(w(&[1, 1]), 2).unwrap();
        let samples = vec![m.highest_weight_vector()];
        for i in 1..=2 {
            assert_eq!(gz_centrality_check(&m, 2, i, &samples).unwrap(), None);
        }
    }

    #[test]
    fn non_central_element_is_caught() {
        // a_{11} = E_11 is central in gl(1) only; it fails against E_12.
        let m = WeylModule::new(w(&[1]), 2).unwrap();
        let v = m.monomial(vec![vec![2]]).unwrap();
        let lhs = central_coefficient(&m, 1, 1, &m.act_e(1, 2, &v).unwrap()).unwrap();
        let rhs = m
            .act_e(1, 2, &central_coefficient(&m, 1, 1, &v).unwrap())
            .unwrap();
        assert_ne!(lhs, rhs);
    }
}
