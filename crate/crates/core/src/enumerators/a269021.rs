//! Permutations of length 2n containing the pattern 12⋯n.
//!
//! By Robinson–Schensted, the permutations with longest increasing subsequence
//! λ₁ pair up tableaux of shape λ, so the count is Σ f_λ² over λ ⊢ 2n with
//! λ₁ ≥ n. Below the first row only a partition of at most n cells remains.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exact_arith::factorial;
use crate::ore_shift::{Provenance, Sequence};

fn partitions(m: u32, max: u32, cur: &mut Vec<u32>, out: &mut dyn FnMut(&[u32])) {
    if m == 0 {
        out(cur);
        return;
    }
    for p in (1..=m.min(max)).rev() {
        cur.push(p);
        partitions(m - p, p, cur, out);
        cur.pop();
    }
}

/// Standard Young tableaux of shape λ by the hook length formula.
pub fn syt_count(shape: &[u32]) -> BigInt {
    let size: u32 = shape.iter().sum();
    let mut hooks = BigInt::from(1);
    for (i, &row) in shape.iter().enumerate() {
        for j in 0..row {
            let below = shape[i + 1..].iter().filter(|&&r| r > j).count() as u32;
            hooks *= row - j + below;
        }
    }
    factorial(size as u64) / hooks
}

pub fn a269021_term(n: u64) -> BigInt {
    let n = n as u32;
    let mut total = BigInt::zero();
    for first in n..=2 * n {
        let mut shape = vec![first];
        partitions(2 * n - first, first, &mut Vec::new(), &mut |mu| {
            shape.truncate(1);
            shape.extend_from_slice(mu);
            let f = syt_count(&shape);
            total += &f * &f;
        });
    }
    total
}

/// Terms a_0..=a_{n_max}.
pub fn gen_a269021(n_max: u64) -> Sequence {
    Sequence::new(0, (0..=n_max).map(a269021_term).collect(), Provenance::Generator)
}

/// Longest increasing subsequence by patience sorting.
pub fn lis_length(p: &[u32]) -> usize {
    let mut piles: Vec<u32> = Vec::new();
    for &x in p {
        match piles.binary_search(&x) {
            Ok(i) | Err(i) if i < piles.len() => piles[i] = x,
            _ => piles.push(x),
        }
    }
    piles.len()
}

/// (2n)! minus the permutations with every increasing subsequence shorter than n; n ≤ 5.
pub fn a269021_brute(n: u64) -> BigInt {
    let m = 2 * n as usize;
    let mut p: Vec<u32> = (0..m as u32).collect();
    let mut avoid = 0u64;
    loop {
        if lis_length(&p) < n as usize {
            avoid += 1;
        }
        // Next permutation in lexicographic order.
        let Some(i) = (1..m).rev().find(|&i| p[i - 1] < p[i]) else { break };
        let j = (i..m).rev().find(|&j| p[j] > p[i - 1]).unwrap();
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    factorial(m as u64) - avoid
}
