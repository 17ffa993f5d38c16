//! n×n binary arrays with no 01 along a diagonal or antidiagonal.
//!
//! Cells of equal parity only constrain each other, and on each parity class
//! the 1s sit above a Dyck-type path; that gives a = e·o.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exact_arith::binomial;
use crate::ore_shift::{Provenance, Sequence};

fn pow2(k: i64) -> BigInt {
    BigInt::from(1) << k as usize
}

/// Arrangements on the cells with i+j even; n ≥ 2.
pub fn a188818_even(n: u64) -> BigInt {
    assert!(n >= 2);
    let n = n as i64;
    let top = (n + 1) / 2;
    let mut s = BigInt::zero();
    for k in 0..=top {
        for l in k + 1..=top {
            s += binomial(n - 1, n - k - l) - binomial(n - 1, n + k - l + 1);
        }
    }
    pow2(n - 2) + 2 * s
}

/// Arrangements on the cells with i+j odd; n ≥ 2.
pub fn a188818_odd(n: u64) -> BigInt {
    assert!(n >= 2);
    let n = n as i64;
    let top = n / 2;
    let mut s = BigInt::zero();
    for k in 0..=top {
        for l in k + 1..=top {
            s += binomial(n - 1, n - k - l - 1) - binomial(n - 1, n + k - l + 1);
        }
    }
    pow2(n - 2) + 2 * s
}

/// Terms a_1..=a_{n_max}; a_1 = 2 is stored since 2^{n−2} is fractional there.
pub fn gen_a188818(n_max: u64) -> Sequence {
    let terms = (1..=n_max)
        .map(|n| if n == 1 { BigInt::from(2) } else { a188818_even(n) * a188818_odd(n) })
        .collect();
    Sequence::new(1, terms, Provenance::Generator)
}

/// Direct count over the cells of the given parity (None: all cells); n ≤ 5.
pub fn a188818_brute(n: u64, parity: Option<usize>) -> BigInt {
    let n = n as usize;
    let cells: Vec<(usize, usize)> =
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).filter(|(i, j)| parity.is_none_or(|p| (i + j) % 2 == p)).collect();
    assert!(cells.len() <= 25);
    let mut idx = vec![vec![usize::MAX; n]; n];
    for (k, &(i, j)) in cells.iter().enumerate() {
        idx[i][j] = k;
    }
    // (upper, lower) cell pairs where upper = 0 and lower = 1 is forbidden.
    let mut pairs = Vec::new();
    for &(i, j) in &cells {
        if i + 1 == n {
            continue;
        }
        for j2 in [j.wrapping_sub(1), j + 1] {
            if j2 < n && idx[i + 1][j2] != usize::MAX {
                pairs.push((idx[i][j], idx[i + 1][j2]));
            }
        }
    }
    let count = (0u64..1 << cells.len())
        .filter(|bits| pairs.iter().all(|&(u, l)| bits >> u & 1 == 1 || bits >> l & 1 == 0))
        .count();
    BigInt::from(count)
}
