//! Helpers shared by the integration tests: independent oracles and sampling.

#![allow(dead_code)]

use std::collections::BTreeMap;

use gtbasis::{ColumnMonomial, HighestWeight, ModuleVector, Rational, WeylModule};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Every `(λ, n)` with `|λ| ≤ max_size` and `len λ ≤ n ≤ max_rank`.
pub fn modules(max_size: u32, max_rank: usize) -> Vec<(HighestWeight, usize)> {
    let mut out = Vec::new();
    for size in 0..=max_size {
        for w in HighestWeight::all_of_size(size) {
            for n in w.len().max(1)..=max_rank {
                out.push((w.clone(), n));
            }
        }
    }
    out
}

/// Counts semistandard fillings of `shape` with entries `1..=n` by trying
/// every filling cell by cell.
pub fn brute_force_ssyt_count(shape: &[u32], n: u32) -> u64 {
    let cells: Vec<(usize, usize)> = shape
        .iter()
        .enumerate()
        .flat_map(|(r, &len)| (0..len as usize).map(move |c| (r, c)))
        .collect();
    let mut grid: Vec<Vec<u32>> = shape.iter().map(|&len| vec![0; len as usize]).collect();
    fn go(idx: usize, cells: &[(usize, usize)], grid: &mut Vec<Vec<u32>>, n: u32) -> u64 {
        let Some(&(r, c)) = cells.get(idx) else {
            return 1;
        };
        let mut total = 0;
        for x in 1..=n {
            if c > 0 && grid[r][c - 1] > x {
                continue;
            }
            if r > 0 && grid[r - 1][c] >= x {
                continue;
            }
            grid[r][c] = x;
            total += go(idx + 1, cells, grid, n);
        }
        total
    }
    go(0, &cells, &mut grid, n)
}

/// A polynomial in the variables `x_{r,a}`, keyed by the sorted list of
/// variables in each monomial.
pub type Poly = BTreeMap<Vec<(u32, u32)>, Rational>;

fn poly_mul(a: &Poly, b: &Poly) -> Poly {
    let mut out = Poly::new();
    for (ma, ca) in a {
        for (mb, cb) in b {
            let mut m = ma.clone();
            m.extend_from_slice(mb);
            m.sort_unstable();
            *out.entry(m).or_insert_with(Rational::zero) += ca * cb;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    if n == 0 {
        return vec![(Vec::new(), 1)];
    }
    let mut out = Vec::new();
    for (p, sign) in permutations(n - 1) {
        for pos in 0..n {
            let mut q = p.clone();
            q.insert(pos, n - 1);
            let moved = (n - 1 - pos) as i64;
            out.push((q, if moved % 2 == 0 { sign } else { -sign }));
        }
    }
    out
}

/// The column `(a_1, …, a_h)` as the minor `det[x_{r, a_s}]` of the generic
/// matrix taken on rows `1..=h`.
fn column_minor(column: &[u32]) -> Poly {
    let mut out = Poly::new();
    for (perm, sign) in permutations(column.len()) {
        let mut m: Vec<(u32, u32)> = perm
            .iter()
            .enumerate()
            .map(|(r, &s)| (r as u32 + 1, column[s]))
            .collect();
        m.sort_unstable();
        *out.entry(m).or_insert_with(Rational::zero) += Rational::from_integer(sign.into());
    }
    out.retain(|_, c| !c.is_zero());
    out
}

/// Image of a monomial under the product-of-minors map, which kills every
/// exchange relation.
pub fn bideterminant(columns: &[Vec<u32>]) -> Poly {
    let mut out: Poly = [(Vec::new(), Rational::from_integer(1.into()))].into();
    for col in columns {
        out = poly_mul(&out, &column_minor(col));
    }
    out
}

pub fn bideterminant_of(v: &ModuleVector) -> Poly {
    let mut out = Poly::new();
    for (m, c) in v.iter() {
        for (k, d) in bideterminant(m.columns()) {
            *out.entry(k).or_insert_with(Rational::zero) += c * d;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A nonzero random combination of standard monomials with small integer
/// coefficients.
pub fn random_vector(module: &WeylModule, rng: &mut ChaCha8Rng) -> ModuleVector {
    let basis = module.standard_monomials();
    let mut v = module.zero();
    let count = rng.gen_range(1..=basis.len().min(4));
    for m in basis.choose_multiple(rng, count) {
        let c: i64 = *[-3, -2, -1, 1, 2, 3].choose(rng).unwrap();
        v.add_term(m.clone(), &Rational::from_integer(c.into()));
    }
    v
}

/// Every column monomial of the diagram with strictly increasing columns.
pub fn all_monomials(module: &WeylModule) -> Vec<Vec<Vec<u32>>> {
    let n = module.rank() as u32;
    let mut out = vec![Vec::new()];
    for &h in module.column_heights() {
        let choices = increasing(h, n);
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<Vec<u32>>| {
                choices.iter().map(move |c| {
                    let mut p = prefix.clone();
                    p.push(c.clone());
                    p
                })
            })
            .collect();
    }
    out
}

fn increasing(h: usize, n: u32) -> Vec<Vec<u32>> {
    fn go(start: u32, h: usize, n: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == h {
            out.push(cur.clone());
            return;
        }
        for x in start..=n {
            cur.push(x);
            go(x + 1, h, n, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, h, n, &mut Vec::new(), &mut out);
    out
}

pub fn unit(module: &WeylModule, m: &ColumnMonomial) -> ModuleVector {
    let mut v = module.zero();
    v.add_term(m.clone(), &Rational::from_integer(1.into()));
    v
}

pub fn weight(parts: &[u32]) -> HighestWeight {
    HighestWeight::new(parts.to_vec()).unwrap()
}
