//! Three-cycles of the Kaprekar map among n-digit integers.

use std::collections::BTreeSet;

use num_bigint::BigInt;

use crate::ore_shift::{Provenance, Sequence};

/// Integers are held in a u128, so up to 38 digits.
pub type KaprekarState = u128;

pub const MAX_DIGITS: usize = 38;

fn digits_of(mut v: u128) -> Vec<u8> {
    let mut d = Vec::new();
    while v > 0 {
        d.push((v % 10) as u8);
        v /= 10;
    }
    d
}

/// Digits sorted descending minus digits sorted ascending, using the digit
/// count of v itself.
pub fn kaprekar_map(v: KaprekarState) -> KaprekarState {
    let mut d = digits_of(v);
    d.sort_unstable();
    let asc = d.iter().fold(0u128, |a, &x| a * 10 + x as u128);
    let desc = d.iter().rev().fold(0u128, |a, &x| a * 10 + x as u128);
    desc - asc
}

/// Fixed-width version on most-significant-first digit arrays: the digits of
/// K(x) padded to the same width.
fn kaprekar_digits(x: &[u8]) -> Vec<u8> {
    let mut counts = [0usize; 10];
    for &d in x {
        counts[d as usize] += 1;
    }
    let desc: Vec<u8> = (0..10u8).rev().flat_map(|d| std::iter::repeat_n(d, counts[d as usize])).collect();
    sub_reversed(&desc)
}

/// desc − reverse(desc), digit by digit.
fn sub_reversed(desc: &[u8]) -> Vec<u8> {
    let n = desc.len();
    let mut out = vec![0u8; n];
    let mut borrow = 0i8;
    for k in (0..n).rev() {
        let mut v = desc[k] as i8 - desc[n - 1 - k] as i8 - borrow;
        borrow = 0;
        if v < 0 {
            v += 10;
            borrow = 1;
        }
        out[k] = v as u8;
    }
    out
}

/// Whether x (n digits, no leading zero) starts a 3-cycle of n-digit integers.
fn on_three_cycle(x: &[u8]) -> bool {
    let y = kaprekar_digits(x);
    if y[0] == 0 || y == x {
        return false;
    }
    let z = kaprekar_digits(&y);
    z[0] != 0 && kaprekar_digits(&z) == x
}

/// The n-digit images of the map. With d sorted descending, the image only
/// depends on e_i = d_i − d_{n−1−i} for i < ⌊n/2⌋, and every 9 ≥ e₀ ≥ e₁ ≥ … ≥ 0 occurs.
fn for_each_image(n: usize, f: &mut dyn FnMut(&[u8])) {
    let h = n / 2;
    let mut e = vec![0u8; h];
    fn go(i: usize, hi: u8, e: &mut Vec<u8>, n: usize, f: &mut dyn FnMut(&[u8])) {
        if i == e.len() {
            let mut desc = vec![0u8; n];
            desc[..e.len()].copy_from_slice(e);
            let x = sub_reversed(&desc);
            if x[0] != 0 {
                f(&x);
            }
            return;
        }
        for v in 0..=hi {
            e[i] = v;
            go(i + 1, v, e, n, f);
        }
    }
    go(0, 9, &mut e, n, f);
}

/// Number of 3-cycles among n-digit integers, scanning only the image set.
pub fn a164735_count(n: usize) -> BigInt {
    assert!((1..=MAX_DIGITS).contains(&n));
    let mut members: BTreeSet<Vec<u8>> = BTreeSet::new();
    for_each_image(n, &mut |x| {
        if on_three_cycle(x) {
            members.insert(x.to_vec());
        }
    });
    assert!(members.len() % 3 == 0);
    BigInt::from(members.len() / 3)
}

/// Terms a_1..=a_{n_max}.
pub fn gen_a164735(n_max: u64) -> Sequence {
    Sequence::new(1, (1..=n_max as usize).map(a164735_count).collect(), Provenance::Generator)
}

/// Every n-digit integer iterated with [`kaprekar_map`]; n ≤ 7.
pub fn a164735_brute(n: u32) -> BigInt {
    let lo = 10u128.pow(n - 1);
    let hi = 10u128.pow(n);
    let mut members = 0u64;
    for x in lo..hi {
        let y = kaprekar_map(x);
        if y == x || y < lo {
            continue;
        }
        let z = kaprekar_map(y);
        if z >= lo && kaprekar_map(z) == x {
            members += 1;
        }
    }
    assert!(members % 3 == 0);
    BigInt::from(members / 3)
}

fn word(parts: &[(u8, usize)]) -> KaprekarState {
    let len: usize = parts.iter().map(|p| p.1).sum();
    assert!(len <= MAX_DIGITS);
    parts.iter().flat_map(|&(d, k)| std::iter::repeat_n(d, k)).fold(0u128, |a, d| a * 10 + d as u128)
}

/// 9^e 8^m 7^d 6^m 5^c 4^m 3^b 2^m 1^a 0 9^m 8^{a+1} 7^m 6^b 5^m 4^c 3^m 2^d 1^m 0^{e−1} 1.
pub fn kaprekar_x(m: usize, a: usize, b: usize, c: usize, d: usize, e: usize) -> KaprekarState {
    assert!(c >= 1 && d >= 1 && e >= 1);
    word(&[
        (9, e),
        (8, m),
        (7, d),
        (6, m),
        (5, c),
        (4, m),
        (3, b),
        (2, m),
        (1, a),
        (0, 1),
        (9, m),
        (8, a + 1),
        (7, m),
        (6, b),
        (5, m),
        (4, c),
        (3, m),
        (2, d),
        (1, m),
        (0, e - 1),
        (1, 1),
    ])
}

/// 6 5^c 4 3^b 1^a 0 8^{a+1} 6^b 5 4^{c+1}.
pub fn kaprekar_y(a: usize, b: usize, c: usize) -> KaprekarState {
    assert!(b >= 1);
    word(&[(6, 1), (5, c), (4, 1), (3, b), (1, a), (0, 1), (8, a + 1), (6, b), (5, 1), (4, c + 1)])
}

/// Compositions of s into 5 parts with a, b ≥ 0 and c, d, e ≥ 1.
fn x_tuples(s: i64) -> Vec<[i64; 5]> {
    let mut out = Vec::new();
    if s < 3 {
        return out;
    }
    for a in 0..=s {
        for b in 0..=s - a {
            for c in 1..=s - a - b {
                for d in 1..=s - a - b - c {
                    let e = s - a - b - c - d;
                    if e >= 1 {
                        out.push([a, b, c, d, e]);
                    }
                }
            }
        }
    }
    out
}

/// The count the X and Y families predict, without building any number.
pub fn a164735_pattern_count(n: i64) -> BigInt {
    let mut xs = 0i64;
    let mut m = if n % 2 == 1 { 1 } else { 0 };
    while 9 * m + 2 <= n {
        let rest = n - 9 * m - 2;
        if rest % 2 == 0 {
            xs += x_tuples(rest / 2).iter().filter(|t| !(t[0] + 1 == t[2] && t[2] == t[3])).count() as i64;
        }
        m += 2;
    }
    assert!(xs % 3 == 0);
    let mut total = xs / 3;
    if n % 2 == 0 && n >= 8 {
        // a, c ≥ 0, b ≥ 1 with a + b + c = (n−6)/2.
        let s = (n - 6) / 2;
        total += (1..=s).map(|b| s - b + 1).sum::<i64>();
    }
    BigInt::from(total)
}
