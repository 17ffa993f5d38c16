//! n×n matrices over {0,1,2} with m₁₁ = 0, m_nn = 2 and every row, column and
//! falling diagonal weakly monotonic without jumps of 2.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exact_arith::binomial;
use crate::ore_shift::{Provenance, Sequence};

/// Non-intersecting walk pairs in an i×j board.
pub fn narayana(i: i64, j: i64) -> BigInt {
    binomial(i + j - 1, i) * binomial(i + j - 1, i - 1) / (i + j - 1)
}

/// The walk-pair expression; zero at n = 1, 2.
pub fn a306322_formula(n: u64) -> BigInt {
    assert!(n >= 1);
    let n = n as i64;
    let mut s = BigInt::zero();
    for j in 1..=n {
        for i in 1..=n {
            s += narayana(i, j);
        }
        s += (n - j - 1) * narayana(j, n);
    }
    2 * s - 2 * binomial(2 * n, n) + narayana(n, n) + 3
}

/// Terms a_0..=a_{n_max}; a_0 = 1 counts the empty matrix.
pub fn gen_a306322(n_max: u64) -> Sequence {
    let terms = (0..=n_max).map(|n| if n == 0 { BigInt::from(1) } else { a306322_formula(n) }).collect();
    Sequence::new(0, terms, Provenance::Generator)
}

fn steps_ok(a: &[u8], dir: i8) -> bool {
    a.windows(2).all(|w| {
        let d = w[1] as i8 - w[0] as i8;
        d.abs() <= 1 && d * dir >= 0
    })
}

/// Rows in {0,1,2}^n that move in one direction by steps of at most 1.
fn monotone_rows(n: usize, dirs: &[i8]) -> Vec<Vec<u8>> {
    let mut out = Vec::new();
    for code in 0..3u32.pow(n as u32) {
        let mut c = code;
        let row: Vec<u8> = (0..n)
            .map(|_| {
                let d = (c % 3) as u8;
                c /= 3;
                d
            })
            .collect();
        if dirs.iter().any(|&d| steps_ok(&row, d)) {
            out.push(row);
        }
    }
    out
}

/// Row-by-row DP with every line nondecreasing (towards the east and south).
pub fn a306322_dp(n: u64) -> BigInt {
    let n = n as usize;
    if n == 0 {
        return BigInt::from(1);
    }
    let rows = monotone_rows(n, &[1]);
    let fits = |up: &[u8], lo: &[u8]| {
        (0..n).all(|j| lo[j] >= up[j] && lo[j] - up[j] <= 1)
            && (1..n).all(|j| lo[j] >= up[j - 1] && lo[j] - up[j - 1] <= 1)
    };
    let mut layer: HashMap<usize, BigInt> =
        rows.iter().enumerate().filter(|(_, r)| r[0] == 0).map(|(i, _)| (i, BigInt::from(1))).collect();
    for _ in 1..n {
        let mut next: HashMap<usize, BigInt> = HashMap::new();
        for (&i, w) in &layer {
            for (k, lo) in rows.iter().enumerate() {
                if fits(&rows[i], lo) {
                    *next.entry(k).or_insert_with(BigInt::zero) += w;
                }
            }
        }
        layer = next;
    }
    layer.into_iter().filter(|(i, _)| rows[*i][n - 1] == 2).map(|(_, w)| w).sum()
}

/// Every line may run up or down on its own; n ≤ 4.
pub fn a306322_brute_either(n: u64) -> BigInt {
    let n = n as usize;
    assert!((1..=4).contains(&n));
    let rows = monotone_rows(n, &[1, -1]);
    let mut count = 0u64;
    let mut pick = vec![0usize; n];
    loop {
        let m: Vec<&Vec<u8>> = pick.iter().map(|&i| &rows[i]).collect();
        if m[0][0] == 0 && m[n - 1][n - 1] == 2 {
            let col_ok = (0..n).all(|j| {
                let c: Vec<u8> = (0..n).map(|i| m[i][j]).collect();
                steps_ok(&c, 1) || steps_ok(&c, -1)
            });
            let diag_ok = (0..2 * n - 1).all(|s| {
                let d = s as isize - (n as isize - 1);
                let c: Vec<u8> = (0..n).filter_map(|i| usize::try_from(i as isize + d).ok().and_then(|j| m[i].get(j).copied())).collect();
                steps_ok(&c, 1) || steps_ok(&c, -1)
            });
            if col_ok && diag_ok {
                count += 1;
            }
        }
        let mut k = 0;
        while k < n && pick[k] + 1 == rows.len() {
            pick[k] = 0;
            k += 1;
        }
        if k == n {
            break;
        }
        pick[k] += 1;
    }
    BigInt::from(count)
}
