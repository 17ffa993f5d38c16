//! Sequences whose guessed recurrences are artifacts or expose a wrong term.

use num_bigint::BigInt;

use super::EnumError;
use crate::ore_shift::{Provenance, Sequence};

fn primes_upto_count(count: usize) -> Vec<u64> {
    let mut limit = 64usize;
    loop {
        let mut sieve = vec![true; limit + 1];
        sieve[0] = false;
        sieve[1] = false;
        let mut i = 2;
        while i * i <= limit {
            if sieve[i] {
                (i * i..=limit).step_by(i).for_each(|j| sieve[j] = false);
            }
            i += 1;
        }
        let ps: Vec<u64> = (0..=limit).filter(|&k| sieve[k]).map(|k| k as u64).collect();
        if ps.len() >= count {
            return ps[..count].to_vec();
        }
        limit *= 2;
    }
}

/// ⌊n·p(n) / Σ_{k≤n} p(k)⌋, n = 1..=n_max.
pub fn gen_a237684(n_max: u64) -> Sequence {
    let ps = primes_upto_count(n_max as usize);
    let mut sum = 0u64;
    let terms = ps
        .iter()
        .enumerate()
        .map(|(i, &p)| {
            sum += p;
            BigInt::from((i as u64 + 1) * p / sum)
        })
        .collect();
    Sequence::new(1, terms, Provenance::Generator)
}

/// Whether adding x keeps all sums s_i + s_j (i ≠ j) distinct; `sums` is a bitset.
fn extend(set: &[u32], sums: &[u64], x: u32) -> Option<Vec<u64>> {
    let mut out = sums.to_vec();
    for &s in set {
        let t = (s + x) as usize;
        if out[t / 64] >> (t % 64) & 1 == 1 {
            return None;
        }
        out[t / 64] |= 1 << (t % 64);
    }
    Some(out)
}

/// Largest weak Sidon subset of {1..n} for every n ≤ n_max. Since a(n) ≤ a(n−1) + 1,
/// each step only asks whether a set of size a(n−1)+1 containing n exists;
/// elements are chosen downwards and j more elements below m need j ≤ a(m).
pub fn gen_a039836(n_max: u64) -> Sequence {
    let n_max = n_max as usize;
    let words = (2 * n_max + 64) / 64;
    let mut best = vec![0usize; n_max + 1];
    fn search(best: &[usize], set: &mut Vec<u32>, sums: &[u64], below: u32, need: usize) -> bool {
        if need == 0 {
            return true;
        }
        for x in (1..below).rev() {
            // Everything still to pick lies in {1..x}.
            if best[x as usize] < need {
                return false;
            }
            if let Some(next) = extend(set, sums, x) {
                set.push(x);
                let ok = search(best, set, &next, x, need - 1);
                set.pop();
                if ok {
                    return true;
                }
            }
        }
        false
    }
    for n in 1..=n_max {
        let target = best[n - 1] + 1;
        let mut set = vec![n as u32];
        let sums = vec![0u64; words];
        best[n] = if search(&best, &mut set, &sums, n as u32, target - 1) { target } else { best[n - 1] };
    }
    Sequence::new(1, best[1..].iter().map(|&b| BigInt::from(b)).collect(), Provenance::Generator)
}

/// Direct subset search for small n.
pub fn a039836_brute(n: u64) -> BigInt {
    let n = n as u32;
    let mut best = 0;
    for mask in 0u64..1 << n {
        let s: Vec<u32> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        let mut sums: Vec<u32> = Vec::new();
        for i in 0..s.len() {
            for j in i + 1..s.len() {
                sums.push(s[i] + s[j]);
            }
        }
        let len = sums.len();
        sums.sort_unstable();
        sums.dedup();
        if sums.len() == len {
            best = best.max(s.len());
        }
    }
    BigInt::from(best)
}

/// (n³ + 39n² + 260n + 402)/6.
pub fn a187990_closed(n: i64) -> BigInt {
    BigInt::from((n * n * n + 39 * n * n + 260 * n + 402) / 6)
}

/// Nondecreasing 6-tuples over {−n−4..n+4} with Σ sign(x)·2^|x| = 0, sign(0) = 1.
pub fn a187990_brute(n: u64) -> BigInt {
    let r = n as i64 + 4;
    let w = |x: i64| -> i64 { if x >= 0 { 1 << x } else { -(1 << -x) } };
    fn go(k: usize, from: i64, r: i64, sum: i64, w: &dyn Fn(i64) -> i64) -> u64 {
        if k == 6 {
            return (sum == 0) as u64;
        }
        (from..=r).map(|x| go(k + 1, x, r, sum + w(x), w)).sum()
    }
    BigInt::from(go(0, -r, r, 0, &w))
}

pub fn gen_a187990(n_max: u64) -> Sequence {
    Sequence::new(1, (1..=n_max as i64).map(a187990_closed).collect(), Provenance::Generator)
}

pub fn gen_cautionary(id: &str, n_max: u64) -> Result<Sequence, EnumError> {
    let s = match id {
        "A237684" => gen_a237684(n_max),
        "A039836" => gen_a039836(n_max),
        "A187990" => gen_a187990(n_max),
        _ => return Err(EnumError::UnknownId(id.to_string())),
    };
    Ok(s.with_id(id))
}
