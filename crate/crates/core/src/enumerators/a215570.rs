//! Permutations of n copies of {1,…,5} whose k-th partial sum never exceeds 3k.
//!
//! b(v,w,x,y,z) counts completions when v 1s, w 2s, … are still to be
//! appended. With R the remaining total and r the remaining count, digit i can
//! be appended iff its copies are not used up and i − 3 ≤ R − 3r. The value
//! does not depend on n, so one table serves every term.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::ore_shift::{Provenance, Sequence};

fn margin(s: &[u32; 5]) -> i64 {
    s.iter().enumerate().map(|(i, &c)| (i as i64 + 1 - 3) * c as i64).sum()
}

/// The states b(s) is summed from.
pub fn a215570_successors(s: [u32; 5]) -> Vec<[u32; 5]> {
    let m = margin(&s);
    (0..5)
        .filter(|&i| s[i] > 0 && i as i64 + 1 - 3 <= m)
        .map(|i| {
            let mut t = s;
            t[i] -= 1;
            t
        })
        .collect()
}

/// Terms a_0..=a_{n_max} from a dense table over {0..n_max}^5.
pub fn gen_a215570(n_max: u64) -> Sequence {
    let b = n_max as usize + 1;
    let size = b.pow(5);
    let mut table: Vec<BigInt> = Vec::with_capacity(size);
    let strides = [b.pow(4), b.pow(3), b * b, b, 1];
    for idx in 0..size {
        if idx == 0 {
            table.push(BigInt::from(1));
            continue;
        }
        let s: [u32; 5] = std::array::from_fn(|i| ((idx / strides[i]) % b) as u32);
        let m = margin(&s);
        let mut acc = BigInt::zero();
        if m >= 0 {
            for i in 0..5 {
                if s[i] > 0 && i as i64 - 2 <= m {
                    acc += &table[idx - strides[i]];
                }
            }
        }
        table.push(acc);
    }
    let diag: usize = strides.iter().sum();
    let terms = (0..b).map(|n| table[n * diag].clone()).collect();
    Sequence::new(0, terms, Provenance::Generator)
}

/// Direct enumeration of the multiset permutations with the partial-sum cap.
pub fn a215570_brute(n: u64) -> BigInt {
    fn go(left: &mut [u32; 5], k: i64, sum: i64) -> u64 {
        if left.iter().all(|&c| c == 0) {
            return 1;
        }
        let mut total = 0;
        for i in 0..5 {
            let s = sum + i as i64 + 1;
            if left[i] > 0 && s <= 3 * (k + 1) {
                left[i] -= 1;
                total += go(left, k + 1, s);
                left[i] += 1;
            }
        }
        total
    }
    BigInt::from(go(&mut [n as u32; 5], 0, 0))
}
