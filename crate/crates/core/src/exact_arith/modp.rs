//! Word-sized prime fields.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[inline]
pub fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

#[inline]
pub fn add_mod(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p {
        s - p
    } else {
        s
    }
}

#[inline]
pub fn sub_mod(a: u64, b: u64, p: u64) -> u64 {
    if a >= b {
        a - b
    } else {
        a + p - b
    }
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mul_mod(r, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    r
}

pub fn inv_mod(a: u64, p: u64) -> u64 {
    debug_assert!(a % p != 0);
    pow_mod(a, p - 2, p)
}

/// Multiplication by a fixed operand with a precomputed quotient (Shoup's trick).
#[derive(Clone, Copy)]
pub struct ShoupMul {
    w: u64,
    wq: u64,
}

impl ShoupMul {
    #[inline]
    pub fn new(w: u64, p: u64) -> Self {
        ShoupMul { w, wq: (((w as u128) << 64) / p as u128) as u64 }
    }
    #[inline]
    pub fn mul(&self, x: u64, p: u64) -> u64 {
        let q = ((self.wq as u128 * x as u128) >> 64) as u64;
        let r = self.w.wrapping_mul(x).wrapping_sub(q.wrapping_mul(p));
        if r >= p {
            r - p
        } else {
            r
        }
    }
}

pub fn bigint_mod(x: &BigInt, p: u64) -> u64 {
    let r = x.mod_floor(&BigInt::from(p));
    r.to_u64().unwrap()
}

/// Signed i64 reduced mod p.
#[inline]
pub fn i64_mod(x: i64, p: u64) -> u64 {
    let r = (x as i128).rem_euclid(p as i128);
    r as u64
}

fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n % q == 0 {
            return n == q;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

pub fn is_prime(n: u64) -> bool {
    is_prime_u64(n)
}

/// A fixed, reproducible stream of random primes in [2^62 - 2^56, 2^62).
/// The stream is sorted in generation order, so combining residues in this
/// order is deterministic.
pub fn prime_stream() -> impl Iterator<Item = u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0f_0e_5);
    let mut seen = std::collections::HashSet::new();
    std::iter::from_fn(move || loop {
        let lo = (1u64 << 62) - (1u64 << 56);
        let cand = rng.gen_range(lo..(1u64 << 62)) | 1;
        if is_prime_u64(cand) && seen.insert(cand) {
            return Some(cand);
        }
    })
}

/// First `k` primes of [`prime_stream`], cached.
pub fn primes(k: usize) -> Vec<u64> {
    use std::sync::Mutex;
    static CACHE: Mutex<Vec<u64>> = Mutex::new(Vec::new());
    let mut c = CACHE.lock().unwrap();
    if c.len() < k {
        *c = prime_stream().take(k.max(16)).collect();
    }
    c[..k].to_vec()
}

/// Symmetric representative of `x` mod `m`.
pub fn symmetric(x: &BigInt, m: &BigInt) -> BigInt {
    let r = x.mod_floor(m);
    if (&r << 1) > *m {
        r - m
    } else {
        r
    }
}

pub fn abs_bits(x: &BigInt) -> u64 {
    x.abs().bits()
}
