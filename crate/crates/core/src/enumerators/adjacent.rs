//! Multiset permutations of {1..m}ⁿ with neighbouring entries differing by at most one.
//!
//! Collapsing runs of equal letters leaves a walk on the path 1–2–…–m. A walk
//! is determined by its start s, end e, the crossing count of every edge, and
//! at each vertex the order of its departures; the last departure from every
//! vertex other than e points towards e. That makes the count local in the
//! vertices, so it runs as a DP along the path. A vertex visited v times takes
//! its n copies in v nonempty runs: C(n−1, v−1) ways.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exact_arith::binomial;
use crate::ore_shift::{Provenance, Sequence};

struct Pascal(Vec<Vec<BigInt>>);

impl Pascal {
    fn new(n: usize) -> Self {
        Pascal((0..=n as i64).map(|a| (0..=a).map(|b| binomial(a, b)).collect()).collect())
    }
    fn c(&self, a: i64, b: i64) -> &BigInt {
        static ZERO: std::sync::OnceLock<BigInt> = std::sync::OnceLock::new();
        if a < 0 || b < 0 || b > a {
            return ZERO.get_or_init(BigInt::zero);
        }
        &self.0[a as usize][b as usize]
    }
}

/// (right crossings, left crossings) of an edge crossed c times, given which
/// sides of it the walk starts and ends on.
fn split(c: i64, s_left: bool, e_left: bool) -> Option<(i64, i64)> {
    let delta = s_left as i64 - e_left as i64;
    if (c + delta) % 2 != 0 || c < delta.abs() {
        return None;
    }
    Some(((c + delta) / 2, (c - delta) / 2))
}

fn term(m: usize, n: u64, pascal: &Pascal) -> BigInt {
    if n == 0 || m == 1 {
        return BigInt::from(1);
    }
    let n = n as i64;
    let cmax = 2 * n;
    // State after vertex i: crossing count of edge (i, i+1) and whether s, e lie at or left of i.
    let mut layer: HashMap<(i64, bool, bool), BigInt> = HashMap::new();
    layer.insert((0, false, false), BigInt::from(1));
    for i in 0..m {
        let last = i + 1 == m;
        let mut next: HashMap<(i64, bool, bool), BigInt> = HashMap::new();
        for (&(cp, sl, el), w) in &layer {
            let (rp, lp) = if i == 0 { (0, 0) } else { split(cp, sl, el).expect("stored states are consistent") };
            for is_s in [false, true] {
                if is_s && sl {
                    continue;
                }
                for is_e in [false, true] {
                    if is_e && el {
                        continue;
                    }
                    let (sl2, el2) = (sl || is_s, el || is_e);
                    if last && !(sl2 && el2) {
                        continue;
                    }
                    let range = if last { 0..=0 } else { 1..=cmax };
                    for c in range {
                        let Some((r, l)) = split(c, sl2, el2) else { continue };
                        let v = l + rp + is_s as i64;
                        let out = r + lp;
                        if v < 1 || v > n {
                            if v > n {
                                break;
                            }
                            continue;
                        }
                        if out + is_e as i64 != v {
                            continue;
                        }
                        let arrange = if is_e {
                            pascal.c(out, r)
                        } else if !el2 {
                            pascal.c(out - 1, r - 1)
                        } else {
                            pascal.c(out - 1, lp - 1)
                        };
                        if arrange.is_zero() {
                            continue;
                        }
                        let x = w * arrange * pascal.c(n - 1, v - 1);
                        *next.entry((c, sl2, el2)).or_insert_with(BigInt::zero) += x;
                    }
                }
            }
        }
        layer = next;
    }
    layer.into_values().sum()
}

/// Terms a_0..=a_{n_max} for alphabet size m.
pub fn gen_adjacent_permutations(m: usize, n_max: u64) -> Sequence {
    assert!(m >= 1);
    let pascal = Pascal::new(2 * n_max as usize + 2);
    let terms = (0..=n_max).map(|n| term(m, n, &pascal)).collect();
    Sequence::new(0, terms, Provenance::Generator)
}

/// Direct enumeration of the multiset permutations.
pub fn adjacent_permutations_brute(m: usize, n: u64) -> BigInt {
    fn go(left: &mut [u64], prev: Option<usize>, remaining: u64) -> u64 {
        if remaining == 0 {
            return 1;
        }
        let mut total = 0;
        for j in 0..left.len() {
            if left[j] == 0 || prev.is_some_and(|p| p.abs_diff(j) > 1) {
                continue;
            }
            left[j] -= 1;
            total += go(left, Some(j), remaining - 1);
            left[j] += 1;
        }
        total
    }
    let mut left = vec![n; m];
    BigInt::from(go(&mut left, None, n * m as u64))
}
