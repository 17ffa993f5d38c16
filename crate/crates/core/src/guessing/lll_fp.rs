//! Schnorr–Euchner LLL with floating Gram–Schmidt data.
//!
//! Basis vectors stay exact; only μ and ‖b*ᵢ‖² are approximated. Entries of
//! guessing lattices run to hundreds of bits, so the floating type carries its
//! own 64-bit exponent. Dot products that cancel badly are redone exactly.

use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_traits::{Signed, ToPrimitive, Zero};

use super::lll::{dot, LatticeBasis};

/// m·2^e with 0.5 ≤ |m| < 1, or m = 0.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct XDouble {
    m: f64,
    e: i64,
}

fn frexp(x: f64) -> (f64, i64) {
    if x == 0.0 || !x.is_finite() {
        return (x, 0);
    }
    let bits = x.to_bits();
    let exp = ((bits >> 52) & 0x7ff) as i64;
    if exp == 0 {
        let (m, e) = frexp(x * 2f64.powi(64));
        return (m, e - 64);
    }
    let m = f64::from_bits((bits & !(0x7ffu64 << 52)) | (1022u64 << 52));
    (m, exp - 1022)
}

fn ldexp(m: f64, e: i64) -> f64 {
    if e > 1023 {
        return m * f64::INFINITY;
    }
    if e < -1074 {
        return 0.0;
    }
    if e < -1022 {
        return m * 2f64.powi(-1022) * 2f64.powi((e + 1022) as i32);
    }
    m * f64::from_bits(((e + 1023) as u64) << 52)
}

impl XDouble {
    pub const ZERO: XDouble = XDouble { m: 0.0, e: 0 };
    pub fn new(x: f64, e: i64) -> Self {
        let (m, k) = frexp(x);
        if m == 0.0 {
            Self::ZERO
        } else {
            XDouble { m, e: e + k }
        }
    }
    pub fn from_f64(x: f64) -> Self {
        Self::new(x, 0)
    }
    pub fn from_bigint(x: &BigInt) -> Self {
        let bits = x.bits() as i64;
        if bits <= 63 {
            return Self::from_f64(x.to_i64().unwrap() as f64);
        }
        let shift = bits - 63;
        let top = (x.abs() >> shift as usize).to_u64().unwrap() as f64;
        let s = if x.sign() == Sign::Minus { -top } else { top };
        Self::new(s, shift)
    }
    pub fn to_f64(self) -> f64 {
        ldexp(self.m, self.e)
    }
    pub fn is_zero(self) -> bool {
        self.m == 0.0
    }
    pub fn abs(self) -> Self {
        XDouble { m: self.m.abs(), e: self.e }
    }
    pub fn neg(self) -> Self {
        XDouble { m: -self.m, e: self.e }
    }
    pub fn mul(self, o: Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::ZERO;
        }
        Self::new(self.m * o.m, self.e + o.e)
    }
    pub fn div(self, o: Self) -> Self {
        assert!(!o.is_zero(), "XDouble division by zero");
        if self.is_zero() {
            return Self::ZERO;
        }
        Self::new(self.m / o.m, self.e - o.e)
    }
    pub fn add(self, o: Self) -> Self {
        if self.is_zero() {
            return o;
        }
        if o.is_zero() {
            return self;
        }
        let (a, b) = if self.e >= o.e { (self, o) } else { (o, self) };
        let d = a.e - b.e;
        if d > 110 {
            return a;
        }
        Self::new(a.m + ldexp(b.m, -d), a.e)
    }
    pub fn sub(self, o: Self) -> Self {
        self.add(o.neg())
    }
    /// log2 |x| (−∞ for zero).
    pub fn log2(self) -> f64 {
        if self.is_zero() {
            f64::NEG_INFINITY
        } else {
            self.m.abs().log2() + self.e as f64
        }
    }
    /// Nearest integer, exactly.
    pub fn round_to_bigint(self) -> BigInt {
        if self.is_zero() {
            return BigInt::zero();
        }
        if self.e <= 62 {
            return BigInt::from(ldexp(self.m, self.e).round() as i64);
        }
        // |x| ≥ 2^62: the mantissa already is an integer at this scale.
        let mant = ldexp(self.m, 53) as i64;
        BigInt::from(mant) << (self.e - 53) as usize
    }
    pub fn cmp(self, o: Self) -> Ordering {
        self.sub(o).m.partial_cmp(&0.0).unwrap_or(Ordering::Equal)
    }
}

/// Dot product with cancellation detection: recomputed exactly when the
/// floating result is tiny compared with the norms.
fn approx_dot(a: &[BigInt], b: &[BigInt], af: &[XDouble], bf: &[XDouble], na: XDouble, nb: XDouble) -> XDouble {
    let mut s = XDouble::ZERO;
    for (x, y) in af.iter().zip(bf) {
        if !x.is_zero() && !y.is_zero() {
            s = s.add(x.mul(*y));
        }
    }
    // |⟨a,b⟩| < 2^-26 ‖a‖‖b‖ means most bits cancelled.
    if s.is_zero() || 2.0 * s.abs().log2() < na.log2() + nb.log2() - 52.0 {
        return XDouble::from_bigint(&dot(a, b));
    }
    s
}

/// Floating-point LLL; result is a basis of the same lattice that is LLL-reduced
/// up to floating tolerance (|μ| ≤ 0.51).
pub fn lll_reduce_fp(basis: &LatticeBasis, delta: f64) -> LatticeBasis {
    let n = basis.dim();
    let mut b = basis.rows.clone();
    if n <= 1 {
        return LatticeBasis::new(b);
    }
    let approx = |v: &[BigInt]| v.iter().map(XDouble::from_bigint).collect::<Vec<_>>();
    let mut bf: Vec<Vec<XDouble>> = b.iter().map(|v| approx(v)).collect();
    let mut norm2: Vec<XDouble> = b.iter().map(|v| XDouble::from_bigint(&dot(v, v))).collect();
    let mut r = vec![vec![XDouble::ZERO; n]; n];
    let mut mu = vec![vec![XDouble::ZERO; n]; n];
    let mut c = vec![XDouble::ZERO; n];
    c[0] = norm2[0];
    let half = XDouble::from_f64(0.51);
    let dl = XDouble::from_f64(delta);
    let mut k = 1usize;
    let mut guard = 0u64;
    while k < n {
        guard += 1;
        assert!(guard < 50_000_000, "floating LLL failed to terminate");
        // Size-reduce b_k against b_{k-1}, …, b_0, recomputing its GS row.
        let mut rounds = 0;
        loop {
            rounds += 1;
            let nk = norm2[k].abs();
            for j in 0..k {
                let mut s = approx_dot(&b[k], &b[j], &bf[k], &bf[j], nk, norm2[j]);
                for i in 0..j {
                    s = s.sub(mu[j][i].mul(r[k][i]));
                }
                r[k][j] = s;
                mu[k][j] = s.div(c[j]);
            }
            let mut ck = norm2[k];
            for j in 0..k {
                ck = ck.sub(mu[k][j].mul(r[k][j]));
            }
            c[k] = ck;
            let mut reduced = false;
            for j in (0..k).rev() {
                if mu[k][j].abs().cmp(half) == Ordering::Greater {
                    let x = mu[k][j].round_to_bigint();
                    if x.is_zero() {
                        continue;
                    }
                    let (lo, hi) = b.split_at_mut(k);
                    for (p, q) in hi[0].iter_mut().zip(&lo[j]) {
                        if !q.is_zero() {
                            *p -= &x * q;
                        }
                    }
                    let xf = XDouble::from_bigint(&x);
                    for i in 0..j {
                        mu[k][i] = mu[k][i].sub(xf.mul(mu[j][i]));
                    }
                    mu[k][j] = mu[k][j].sub(xf);
                    reduced = true;
                }
            }
            if !reduced {
                break;
            }
            bf[k] = approx(&b[k]);
            norm2[k] = XDouble::from_bigint(&dot(&b[k], &b[k]));
            if rounds > 200 {
                break;
            }
        }
        // Lovász test.
        let lhs = dl.mul(c[k - 1]);
        let rhs = c[k].add(mu[k][k - 1].mul(mu[k][k - 1]).mul(c[k - 1]));
        if lhs.cmp(rhs) == Ordering::Greater {
            b.swap(k, k - 1);
            bf.swap(k, k - 1);
            norm2.swap(k, k - 1);
            if k == 1 {
                c[0] = norm2[0];
            } else {
                k -= 1;
            }
        } else {
            k += 1;
        }
    }
    LatticeBasis::new(b)
}

