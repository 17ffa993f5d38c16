//! n×n arrays with a₀₀ = 0 and a_{n−1,n−1} = n−3, each entry equal to or one
//! more than its north, west and north-west neighbours, and the entry at
//! (i, j) within {m−2, m−1, m} for m = max(i, j), indices from 0.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::ore_shift::{Provenance, Sequence};

fn step_ok(from: i32, to: i32) -> bool {
    to == from || to == from + 1
}

fn band(i: usize, j: usize) -> std::ops::RangeInclusive<i32> {
    let m = i.max(j) as i32;
    (m - 2).max(0)..=m
}

/// Checks every rule on a complete array.
pub fn a253217_valid(a: &[Vec<i32>]) -> bool {
    let n = a.len();
    if n == 0 || a.iter().any(|r| r.len() != n) || a[0][0] != 0 || a[n - 1][n - 1] != n as i32 - 3 {
        return false;
    }
    for i in 0..n {
        for j in 0..n {
            if !band(i, j).contains(&a[i][j]) {
                return false;
            }
            let nbrs = [(i > 0).then(|| a[i - 1][j]), (j > 0).then(|| a[i][j - 1]), (i > 0 && j > 0).then(|| a[i - 1][j - 1])];
            if nbrs.iter().flatten().any(|&x| !step_ok(x, a[i][j])) {
                return false;
            }
        }
    }
    true
}

fn band_rows(i: usize, n: usize) -> Vec<Vec<i32>> {
    fn go(i: usize, n: usize, cur: &mut Vec<i32>, out: &mut Vec<Vec<i32>>) {
        let j = cur.len();
        if j == n {
            out.push(cur.clone());
            return;
        }
        for v in band(i, j) {
            if cur.last().is_none_or(|&p| step_ok(p, v)) {
                cur.push(v);
                go(i, n, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(i, n, &mut Vec::new(), &mut out);
    out
}

/// Row-by-row DP; a row is compatible with the one above when every entry
/// steps by 0 or 1 from its north and north-west neighbours.
pub fn a253217_count(n: u64) -> BigInt {
    let n = n as usize;
    if n == 0 {
        return BigInt::zero();
    }
    let mut layer: HashMap<Vec<i32>, BigInt> =
        band_rows(0, n).into_iter().filter(|r| r[0] == 0).map(|r| (r, BigInt::from(1))).collect();
    for i in 1..n {
        let rows = band_rows(i, n);
        let mut next: HashMap<Vec<i32>, BigInt> = HashMap::new();
        for (up, w) in &layer {
            for lo in &rows {
                if (0..n).all(|j| step_ok(up[j], lo[j]) && (j == 0 || step_ok(up[j - 1], lo[j]))) {
                    *next.entry(lo.clone()).or_insert_with(BigInt::zero) += w;
                }
            }
        }
        layer = next;
    }
    layer.into_iter().filter(|(r, _)| r[n - 1] == n as i32 - 3).map(|(_, w)| w).sum()
}

/// Terms a_1..=a_{n_max}.
pub fn gen_a253217(n_max: u64) -> Sequence {
    Sequence::new(1, (1..=n_max).map(a253217_count).collect(), Provenance::Generator)
}

/// Cell-by-cell filling from the band, validating the complete array only.
pub fn a253217_naive(n: u64) -> BigInt {
    let n = n as usize;
    let mut a = vec![vec![0i32; n]; n];
    fn go(k: usize, n: usize, a: &mut Vec<Vec<i32>>) -> u64 {
        if k == n * n {
            return a253217_valid(a) as u64;
        }
        let (i, j) = (k / n, k % n);
        let mut total = 0;
        for v in band(i, j) {
            // Prune on the west neighbour only; everything else is left to the validator.
            if j > 0 && !step_ok(a[i][j - 1], v) {
                continue;
            }
            a[i][j] = v;
            total += go(k + 1, n, a);
        }
        total
    }
    BigInt::from(go(0, n, &mut a))
}
