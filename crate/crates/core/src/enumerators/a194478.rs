//! Six points on a triangle of side n, no three on a common line of any of
//! the three directions.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::exact_arith::binomial;
use crate::ore_shift::{Provenance, Sequence};

fn c(a: i64, b: i64) -> BigInt {
    binomial(a, b)
}

/// Inclusion–exclusion parts a⁰..a³ for k = 6. The two-line part sums the
/// parallel and the disjoint non-parallel cases separately.
pub fn a194478_parts(n: u64) -> [BigInt; 4] {
    let n = n as i64;
    let t = n * (n + 1) / 2;
    let a0 = c(t, 6);
    let mut a1 = BigInt::zero();
    for j in 3..=6 {
        for i in 1..=n {
            a1 += c(i, j) * c(t - i, 6 - j);
        }
    }
    a1 *= 3;
    let mut a2 = BigInt::zero();
    for i in 1..=n {
        for j in 1..i {
            a2 += c(i, 3) * c(j, 3);
        }
        for j in 1..=n - i {
            a2 += c(i, 3) * c(j, 3);
        }
        for j in n - i + 1..=n {
            a2 += c(i - 1, 3) * c(j - 1, 3);
            a2 += c(i - 1, 2) * c(j - 1, 2) * c(t - i - j + 1, 1);
            a2 += c(i - 1, 3) * c(j - 1, 2) + c(i - 1, 2) * c(j - 1, 3);
        }
    }
    a2 *= 3;
    let mut a3 = BigInt::zero();
    for i in 3..=n {
        for j in n - i + 1..=n {
            let s: i64 = (n - i.min(j) + 1..=2 * n - (i + j)).map(|l| l - 2).sum::<i64>()
                + (2 * n + 2 - (i + j)..=n).map(|l| l - 2).sum::<i64>();
            a3 += BigInt::from((i - 2) * (j - 2) * s);
        }
    }
    [a0, a1, a2, a3]
}

pub fn a194478_term(n: u64) -> BigInt {
    let [a0, a1, a2, a3] = a194478_parts(n);
    a0 - a1 + a2 - a3
}

/// Terms a_1..=a_{n_max}.
pub fn gen_a194478(n_max: u64) -> Sequence {
    Sequence::new(1, (1..=n_max).map(a194478_term).collect(), Provenance::Generator)
}

/// The closed-form quasipolynomial.
pub fn a194478_quasipolynomial(n: i64) -> BigRational {
    let x = BigInt::from(n);
    let horner = |cs: &[i64]| cs.iter().fold(BigInt::zero(), |acc, &k| acc * &x + k);
    let sign = if n % 2 == 0 { BigInt::one() } else { -BigInt::one() };
    let p = sign * horner(&[2, -7]) * horner(&[1, -7, 13]);
    let q = horner(&[7, 42, -945, 1274, 26089, -128810, 175693, 205366, -810796, 601328, 354172, -582180, 114660]);
    BigRational::new(p, BigInt::from(256)) + BigRational::new(q, BigInt::from(322560))
}

/// Every 6-subset of the triangle, filtered directly.
pub fn a194478_brute(n: u64) -> BigInt {
    let n = n as i64;
    let pts: Vec<(i64, i64)> = (0..n).flat_map(|r| (0..=r).map(move |c| (r, c))).collect();
    let mut count = 0u64;
    let mut idx = [0usize; 6];
    fn go(pts: &[(i64, i64)], idx: &mut [usize; 6], depth: usize, start: usize, count: &mut u64) {
        if depth == 6 {
            let chosen = idx.map(|i| pts[i]);
            let keys: [fn((i64, i64)) -> i64; 3] = [|p| p.0, |p| p.1, |p| p.0 - p.1];
            let ok = keys.iter().all(|key| chosen.iter().all(|&p| chosen.iter().filter(|&&q| key(q) == key(p)).count() < 3));
            *count += ok as u64;
            return;
        }
        for i in start..pts.len() {
            idx[depth] = i;
            go(pts, idx, depth + 1, i + 1, count);
        }
    }
    go(&pts, &mut idx, 0, 0, &mut count);
    BigInt::from(count)
}
