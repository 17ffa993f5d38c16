//! Lattice walks in the orthant with nonnegative steps, read on the diagonal.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::Zero;

use super::EnumError;
use crate::exact_arith::{binomial, factorial, mpoly_mul, MultiPoly};
use crate::ore_shift::{Provenance, Sequence};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepSet {
    pub dim: usize,
    pub steps: Vec<Vec<u32>>,
    pub weights: Vec<u64>,
}

impl StepSet {
    pub fn new(dim: usize, steps: Vec<Vec<u32>>, weights: Vec<u64>) -> Self {
        assert_eq!(steps.len(), weights.len());
        assert!(steps.iter().all(|s| s.len() == dim));
        assert!(weights.iter().all(|&w| w >= 1));
        assert!(dim <= 8);
        StepSet { dim, steps, weights }
    }

    /// Merges repeated steps into weights.
    pub fn from_multiset(dim: usize, steps: impl IntoIterator<Item = Vec<u32>>) -> Self {
        let mut m: HashMap<Vec<u32>, u64> = HashMap::new();
        for s in steps {
            *m.entry(s).or_insert(0) += 1;
        }
        let mut v: Vec<_> = m.into_iter().collect();
        v.sort();
        let (steps, weights) = v.into_iter().unzip();
        StepSet::new(dim, steps, weights)
    }

    /// Invariant under every permutation of the coordinates.
    pub fn is_symmetric(&self) -> bool {
        let w: HashMap<&[u32], u64> = self.steps.iter().map(|s| s.as_slice()).zip(self.weights.iter().copied()).collect();
        self.steps.iter().zip(&self.weights).all(|(s, &ws)| {
            (0..self.dim).all(|i| {
                (i + 1..self.dim).all(|j| {
                    let mut t = s.clone();
                    t.swap(i, j);
                    w.get(t.as_slice()) == Some(&ws)
                })
            })
        })
    }

    pub fn polynomial<S: AsRef<str>>(&self, vars: &[S]) -> MultiPoly {
        let mut p = MultiPoly::zero(vars);
        for (s, &w) in self.steps.iter().zip(&self.weights) {
            p.add_assign(&MultiPoly::monomial(vars, s, BigInt::from(w))).unwrap();
        }
        p
    }
}

fn pack(p: &[u32]) -> u64 {
    p.iter().fold(0u64, |k, &x| (k << 8) | x as u64)
}

/// Counts of walks from the origin ending at (n, …, n) after `per_term`·n
/// steps, n = 0..=n_max. Walks leaving {0..n_max}^dim never return to a
/// diagonal point inside it, so the box is a sound truncation. A symmetric
/// step set only stores points with descending coordinates.
pub fn diagonal_walk_counts(s: &StepSet, per_term: usize, n_max: u64) -> Vec<BigInt> {
    let cap = n_max as u32;
    assert!(cap <= 255);
    let sym = s.is_symmetric();
    let canon = |p: &mut Vec<u32>| {
        if sym {
            p.sort_unstable_by(|a, b| b.cmp(a));
        }
    };
    let mut out = vec![BigInt::from(1)];
    let mut layer: HashMap<u64, BigInt> = HashMap::new();
    layer.insert(pack(&vec![0; s.dim]), BigInt::from(1));
    let mut points: Vec<Vec<u32>> = vec![vec![0; s.dim]];
    let total = per_term * n_max as usize;
    for k in 1..=total {
        // Candidate points: canonical forms of every successor.
        let mut next_points: HashMap<u64, Vec<u32>> = HashMap::new();
        for p in &points {
            for st in &s.steps {
                let mut q: Vec<u32> = p.iter().zip(st).map(|(a, b)| a + b).collect();
                if q.iter().any(|&x| x > cap) {
                    continue;
                }
                canon(&mut q);
                next_points.entry(pack(&q)).or_insert(q);
            }
        }
        let mut next: HashMap<u64, BigInt> = HashMap::with_capacity(next_points.len());
        let mut r = vec![0u32; s.dim];
        for (key, q) in &next_points {
            let mut acc = BigInt::zero();
            for (st, &w) in s.steps.iter().zip(&s.weights) {
                if q.iter().zip(st).any(|(a, b)| a < b) {
                    continue;
                }
                for ((ri, a), b) in r.iter_mut().zip(q).zip(st) {
                    *ri = a - b;
                }
                canon(&mut r);
                if let Some(v) = layer.get(&pack(&r)) {
                    if w == 1 {
                        acc += v;
                    } else {
                        acc += v * w;
                    }
                }
            }
            if !acc.is_zero() {
                next.insert(*key, acc);
            }
        }
        points = next_points.into_iter().filter(|(k, _)| next.contains_key(k)).map(|(_, q)| q).collect();
        layer = next;
        if k % per_term == 0 {
            let n = (k / per_term) as u32;
            out.push(layer.get(&pack(&vec![n; s.dim])).cloned().unwrap_or_else(BigInt::zero));
        }
    }
    out
}

/// ⟨x₁ⁿ⋯x_dⁿ⟩ s^{per_term·n} divided exactly by `divisor`, for n = first..=n_max.
pub fn gen_stepset_diagonal(
    s: &StepSet,
    per_term: usize,
    divisor: u64,
    first: u64,
    n_max: u64,
) -> Result<Sequence, EnumError> {
    let counts = diagonal_walk_counts(s, per_term, n_max);
    let d = BigInt::from(divisor);
    let mut terms = Vec::new();
    for n in first..=n_max {
        let (q, r) = counts[n as usize].div_rem(&d);
        if !r.is_zero() {
            return Err(EnumError::NonExactDivision { n: n as i64, divisor: divisor as i64 });
        }
        terms.push(q);
    }
    Ok(Sequence::new(first as i64, terms, Provenance::Generator))
}

/// The same coefficient from truncated powers of the step polynomial.
pub fn stepset_diagonal_by_powers(s: &StepSet, per_term: usize, n: u64) -> BigInt {
    let vars: Vec<String> = (0..s.dim).map(|i| format!("x{i}")).collect();
    let cap = vec![n as u32; s.dim];
    let p = s.polynomial(&vars).with_cap(cap.clone());
    let mut acc = MultiPoly::one(&vars);
    for _ in 0..per_term * n as usize {
        acc = mpoly_mul(&acc, &p, Some(&cap)).unwrap();
    }
    acc.coeff(&cap)
}

/// Columns of height 4 over {0..3} with no equal vertical neighbours, as steps
/// counting their 0s, 1s and 2s.
pub fn a265234_stepset() -> StepSet {
    let mut steps = Vec::new();
    for code in 0..256u32 {
        let col: Vec<u32> = (0..4).map(|i| (code >> (2 * i)) & 3).collect();
        if col.windows(2).any(|w| w[0] == w[1]) {
            continue;
        }
        steps.push((0..3).map(|v| col.iter().filter(|&&c| c == v).count() as u32).collect());
    }
    StepSet::from_multiset(3, steps)
}

pub fn gen_a265234(n_max: u64) -> Sequence {
    gen_stepset_diagonal(&a265234_stepset(), 1, 24, 1, n_max).expect("column count is symmetric under relabelling")
}

/// Rows of length 6 with entries in {0..max_entry} summing to 2.
pub fn row_sum_two_stepset(max_entry: u32) -> StepSet {
    let mut steps = Vec::new();
    for i in 0..6 {
        for j in i..6 {
            let mut s = vec![0u32; 6];
            s[i] += 1;
            s[j] += 1;
            if s.iter().all(|&x| x <= max_entry) {
                steps.push(s);
            }
        }
    }
    StepSet::from_multiset(6, steps)
}

pub fn a172572_stepset() -> StepSet {
    row_sum_two_stepset(1)
}

pub fn a172671_stepset() -> StepSet {
    row_sum_two_stepset(2)
}

/// Walks ending at (n,…,n) after 3n steps, n = 1..=n_max.
pub fn gen_orthant_walks(s: &StepSet, n_max: u64) -> Sequence {
    let c = diagonal_walk_counts(s, 3, n_max);
    Sequence::new(1, c[1..].to_vec(), Provenance::Generator)
}

/// The six-fold factorial sum left after three Chu–Vandermonde reductions.
pub fn sum_a172572(n: u64) -> BigInt {
    let n = n as i64;
    let f: Vec<BigInt> = (0..=4 * n + 1).map(|k| factorial(k as u64)).collect();
    let fact = |k: i64| -> &BigInt { &f[k as usize] };
    let mut total = BigInt::zero();
    for c1 in 0..=n {
        for c2 in 0..=n - c1 {
            for c3 in 0..=n - c1 - c2 {
                for c6 in 0..=(n - c1).min(n - c2) {
                    for c7 in 0..=(n - c1 - c6).min(n - c3) {
                        let lo = (n - c1 - c2 - c3 - c6 - c7).max(0);
                        let hi = (n - c2 - c6).min(n - c3 - c7);
                        for c10 in lo..=hi {
                            let s = c1 + c2 + c3 + c6 + c7 + c10;
                            let num = fact(3 * n) * fact(4 * n - 2 * s);
                            let mut den = fact(c1) * fact(c2) * fact(c3) * fact(c6) * fact(c7) * fact(c10);
                            den *= fact(n - c1 - c2 - c3);
                            den *= fact(n - c1 - c6 - c7);
                            den *= fact(n - c2 - c6 - c10);
                            den *= fact(n - c3 - c7 - c10);
                            let m = fact(2 * n - s);
                            den *= m * m;
                            den *= fact(s - n);
                            total += num / den;
                        }
                    }
                }
            }
        }
    }
    total
}

/// Σ_k C(m,k)·C(n,r−k).
pub fn chu_vandermonde_lhs(m: i64, n: i64, r: i64) -> BigInt {
    (0..=r).map(|k| binomial(m, k) * binomial(n, r - k)).sum()
}

/// 3×6 arrays over {0,1} with row sums 2 and column sums 1, by trying every
/// choice of rows.
pub fn a172572_first_brute() -> BigInt {
    let rows = a172572_stepset().steps;
    let mut count = 0u64;
    for a in &rows {
        for b in &rows {
            for c in &rows {
                if (0..6).all(|i| a[i] + b[i] + c[i] == 1) {
                    count += 1;
                }
            }
        }
    }
    BigInt::from(count)
}
