//! k×n matrices filled with 1,…,kn increasing along rows, columns, diagonals
//! and antidiagonals. Filling in order grows a Young diagram whose rows stay
//! distinct until they are full.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::ore_shift::{Provenance, Sequence};

/// Diagrams reachable by adding one box to p inside the k×n box. Row i > 0
/// may grow while it stays two shorter than row i−1, or into a full row
/// directly below a full one.
pub fn young_successors(p: &[u32], n: u32) -> Vec<Vec<u32>> {
    (0..p.len())
        .filter(|&i| if i == 0 { p[0] < n } else { p[i] + 1 < p[i - 1] || (p[i] + 1 == n && p[i - 1] == n) })
        .map(|i| {
            let mut q = p.to_vec();
            q[i] += 1;
            q
        })
        .collect()
}

fn key(p: &[u32]) -> u64 {
    p.iter().fold(0, |k, &x| (k << 12) | x as u64)
}

fn count(k: usize, n: u32) -> BigInt {
    let mut layer: HashMap<u64, (Vec<u32>, BigInt)> = HashMap::new();
    layer.insert(0, (vec![0; k], BigInt::from(1)));
    for _ in 0..k as u32 * n {
        let mut next: HashMap<u64, (Vec<u32>, BigInt)> = HashMap::with_capacity(layer.len());
        for (p, w) in layer.values() {
            for q in young_successors(p, n) {
                next.entry(key(&q)).or_insert_with(|| (q, BigInt::zero())).1 += w;
            }
        }
        layer = next;
    }
    layer.get(&key(&vec![n; k])).map(|e| e.1.clone()).unwrap_or_default()
}

/// Terms a_1..=a_{n_max} for k rows.
pub fn gen_young_monotone(k: usize, n_max: u64) -> Sequence {
    assert!((2..=6).contains(&k));
    assert!(n_max < 4096);
    Sequence::new(1, (1..=n_max).map(|n| count(k, n as u32)).collect(), Provenance::Generator)
}

/// Fills the k×n matrix cell by cell with values in increasing order and
/// checks all four directions explicitly; tiny k·n only.
pub fn young_monotone_brute(k: usize, n: usize) -> BigInt {
    fn go(m: &mut Vec<Vec<u32>>, k: usize, n: usize, next: u32) -> u64 {
        if next as usize > k * n {
            return 1;
        }
        let mut total = 0;
        for i in 0..k {
            for j in 0..n {
                if m[i][j] != 0 {
                    continue;
                }
                // Every cell that must be smaller is already filled.
                let smaller = [(i.wrapping_sub(1), j), (i, j.wrapping_sub(1)), (i.wrapping_sub(1), j.wrapping_sub(1)), (i.wrapping_sub(1), j + 1)];
                if smaller.iter().all(|&(a, b)| a >= k || b >= n || m[a][b] != 0) {
                    m[i][j] = next;
                    total += go(m, k, n, next + 1);
                    m[i][j] = 0;
                }
            }
        }
        total
    }
    BigInt::from(go(&mut vec![vec![0; n]; k], k, n, 1))
}
