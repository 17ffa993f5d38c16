//! Labeled graphs on 2n vertices with n−1 vertices of degree 3 and n+1 of degree 1.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exact_arith::binomial;
use crate::ore_shift::{Provenance, Sequence};

/// Simple graphs on labeled vertices with prescribed residual degrees, given
/// how many vertices need 1, 2 and 3 more edges. A vertex of largest residual
/// degree picks its neighbour set; the rest only depends on the new counts.
struct Completions {
    memo: HashMap<[u32; 3], BigInt>,
}

impl Completions {
    fn count(&mut self, c: [u32; 3]) -> BigInt {
        if c == [0, 0, 0] {
            return BigInt::from(1);
        }
        if let Some(v) = self.memo.get(&c) {
            return v.clone();
        }
        let d = (0..3).rev().find(|&i| c[i] > 0).unwrap() + 1;
        let mut rest = c;
        rest[d - 1] -= 1;
        let mut total = BigInt::zero();
        for k3 in 0..=rest[2].min(d as u32) {
            for k2 in 0..=rest[1].min(d as u32 - k3) {
                let k1 = d as u32 - k3 - k2;
                if k1 > rest[0] {
                    continue;
                }
                let ways = binomial(rest[0] as i64, k1 as i64)
                    * binomial(rest[1] as i64, k2 as i64)
                    * binomial(rest[2] as i64, k3 as i64);
                let next = [rest[0] - k1 + k2, rest[1] - k2 + k3, rest[2] - k3];
                total += ways * self.count(next);
            }
        }
        self.memo.insert(c, total.clone());
        total
    }
}

/// Terms a_1..=a_{n_max}.
pub fn gen_a339987(n_max: u64) -> Sequence {
    let mut comp = Completions { memo: HashMap::new() };
    let terms = (1..=n_max)
        .map(|n| binomial(2 * n as i64, n as i64 - 1) * comp.count([n as u32 + 1, 0, n as u32 - 1]))
        .collect();
    Sequence::new(1, terms, Provenance::Generator)
}

/// Every edge set of size 2n−1 on 2n labeled vertices with the right degree
/// multiset, split into (connected, disconnected); n ≤ 4.
pub fn a339987_brute(n: u64) -> (BigInt, BigInt) {
    let v = 2 * n as usize;
    let edges: Vec<(usize, usize)> = (0..v).flat_map(|i| (i + 1..v).map(move |j| (i, j))).collect();
    let want = 2 * n as usize - 1;
    let (mut conn, mut disc) = (0u64, 0u64);
    let mut pick: Vec<usize> = Vec::with_capacity(want);
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    fn go(start: usize, edges: &[(usize, usize)], want: usize, v: usize, n: usize, pick: &mut Vec<usize>, conn: &mut u64, disc: &mut u64) {
        if pick.len() == want {
            let mut deg = vec![0usize; v];
            for &e in pick.iter() {
                deg[edges[e].0] += 1;
                deg[edges[e].1] += 1;
            }
            let threes = deg.iter().filter(|&&d| d == 3).count();
            let ones = deg.iter().filter(|&&d| d == 1).count();
            if threes + 1 != n || ones != n + 1 {
                return;
            }
            let mut p: Vec<usize> = (0..v).collect();
            let mut comps = v;
            for &e in pick.iter() {
                let (a, b) = (find(&mut p, edges[e].0), find(&mut p, edges[e].1));
                if a != b {
                    p[a] = b;
                    comps -= 1;
                }
            }
            if comps == 1 {
                *conn += 1;
            } else {
                *disc += 1;
            }
            return;
        }
        for e in start..edges.len() {
            if edges.len() - e < want - pick.len() {
                break;
            }
            pick.push(e);
            go(e + 1, edges, want, v, n, pick, conn, disc);
            pick.pop();
        }
    }
    go(0, &edges, want, v, n as usize, &mut pick, &mut conn, &mut disc);
    (BigInt::from(conn), BigInt::from(disc))
}
