//! 4×n matrices M over GF(2) whose rows increase strictly and whose Gram
//! matrix MMᵀ has strictly decreasing rows, rows read as bit strings.

use num_bigint::BigInt;

use crate::ore_shift::{Provenance, Sequence};

/// Rows as n-bit integers, first column most significant, so lexicographic
/// order is numeric order.
pub fn a181280_conditions(rows: &[u32; 4]) -> bool {
    if !rows.windows(2).all(|w| w[0] < w[1]) {
        return false;
    }
    let gram: Vec<u32> = rows
        .iter()
        .map(|&r| rows.iter().fold(0, |acc, &s| (acc << 1) | ((r & s).count_ones() & 1)))
        .collect();
    gram.windows(2).all(|w| w[0] > w[1])
}

/// Exhaustive count over increasing row quadruples; n ≤ 8.
pub fn a181280_count(n: u64) -> BigInt {
    assert!(n <= 8);
    let top = 1u32 << n;
    let dot = |a: u32, b: u32| (a & b).count_ones() & 1;
    let mut count = 0u64;
    for r0 in 0..top {
        let g00 = dot(r0, r0);
        for r1 in r0 + 1..top {
            let (g01, g11) = (dot(r0, r1), dot(r1, r1));
            for r2 in r1 + 1..top {
                let (g02, g12, g22) = (dot(r0, r2), dot(r1, r2), dot(r2, r2));
                for r3 in r2 + 1..top {
                    let (g03, g13, g23, g33) = (dot(r0, r3), dot(r1, r3), dot(r2, r3), dot(r3, r3));
                    let row = |a, b, c, d| (a << 3) | (b << 2) | (c << 1) | d;
                    let g0 = row(g00, g01, g02, g03);
                    let g1 = row(g01, g11, g12, g13);
                    let g2 = row(g02, g12, g22, g23);
                    let g3 = row(g03, g13, g23, g33);
                    if g0 > g1 && g1 > g2 && g2 > g3 {
                        count += 1;
                    }
                }
            }
        }
    }
    BigInt::from(count)
}

/// Terms a_1..=a_{n_max}.
pub fn gen_a181280(n_max: u64) -> Sequence {
    Sequence::new(1, (1..=n_max).map(a181280_count).collect(), Provenance::Generator)
}
