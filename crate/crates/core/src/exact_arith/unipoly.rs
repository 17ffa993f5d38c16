//! Dense univariate polynomials over Q.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::ArithError;

/// Coefficients low to high; never carries a trailing zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

fn q(x: i64) -> BigRational {
    BigRational::from_integer(x.into())
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }
    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }
    /// The variable itself.
    pub fn var() -> Self {
        UniPoly::new(vec![BigRational::zero(), BigRational::one()])
    }
    pub fn constant(c: BigRational) -> Self {
        UniPoly::new(vec![c])
    }
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }
    pub fn from_i64(c: &[i64]) -> Self {
        UniPoly::new(c.iter().map(|&x| q(x)).collect())
    }
    pub fn from_ints(c: &[BigInt]) -> Self {
        UniPoly::new(c.iter().map(|x| BigRational::from_integer(x.clone())).collect())
    }
    /// Product of (var − r) over the given roots.
    pub fn from_roots(roots: &[i64]) -> Self {
        roots.iter().fold(UniPoly::one(), |acc, &r| &acc * &UniPoly::from_i64(&[-r, 1]))
    }
    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }
    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }
    pub fn lead(&self) -> BigRational {
        self.coeffs.last().cloned().unwrap_or_else(BigRational::zero)
    }
    pub fn scale(&self, c: &BigRational) -> Self {
        UniPoly::new(self.coeffs.iter().map(|x| x * c).collect())
    }
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }
    pub fn eval_int(&self, x: &BigInt) -> BigRational {
        self.eval(&BigRational::from_integer(x.clone()))
    }
    pub fn eval_i64(&self, x: i64) -> BigRational {
        self.eval(&q(x))
    }
    /// p(var + k) by Horner composition.
    pub fn shift(&self, k: i64) -> Self {
        if k == 0 {
            return self.clone();
        }
        let lin = UniPoly::from_i64(&[k, 1]);
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &UniPoly::constant(c.clone());
        }
        acc
    }
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().recip())
    }
    pub fn div_rem(&self, d: &UniPoly) -> Result<(UniPoly, UniPoly), ArithError> {
        let dd = d.degree().ok_or(ArithError::DivisionByZero)?;
        let mut r = self.coeffs.clone();
        let Some(nd) = self.degree() else { return Ok((UniPoly::zero(), UniPoly::zero())) };
        if nd < dd {
            return Ok((UniPoly::zero(), self.clone()));
        }
        let inv = d.lead().recip();
        let mut quo = vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &r[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, dc) in d.coeffs.iter().enumerate() {
                r[k + j] = &r[k + j] - &c * dc;
            }
            quo[k] = c;
        }
        r.truncate(dd);
        Ok((UniPoly::new(quo), UniPoly::new(r)))
    }
    /// Monic gcd over Q (zero if both are zero).
    pub fn gcd(&self, other: &UniPoly) -> UniPoly {
        let (mut a, mut b) = (self.primitive(), other.primitive());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r.primitive();
        }
        a.monic()
    }
    /// Common denominator times self, divided by integer content, leading coefficient positive.
    pub fn primitive(&self) -> UniPoly {
        match self.primitive_ints() {
            Some(v) => UniPoly::from_ints(&v),
            None => UniPoly::zero(),
        }
    }
    /// Integer coefficients of [`Self::primitive`]; None for zero.
    pub fn primitive_ints(&self) -> Option<Vec<BigInt>> {
        if self.is_zero() {
            return None;
        }
        let l = self.coeffs.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
        let ints: Vec<BigInt> = self.coeffs.iter().map(|x| x.numer() * (&l / x.denom())).collect();
        let mut g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
        if ints.last().unwrap().is_negative() {
            g = -g;
        }
        Some(ints.into_iter().map(|x| x / &g).collect())
    }
    /// Integer coefficients if all coefficients are integers.
    pub fn to_ints(&self) -> Option<Vec<BigInt>> {
        self.coeffs.iter().map(|c| c.is_integer().then(|| c.to_integer())).collect()
    }
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_integer())
    }
    /// Integer roots of a polynomial with integer coefficients (or of its primitive part).
    pub fn integer_roots(&self) -> Vec<BigInt> {
        let Some(c) = self.primitive_ints() else { return Vec::new() };
        // Strip factors of the variable: 0 is a root.
        let z = c.iter().take_while(|x| x.is_zero()).count();
        let c = &c[z..];
        let mut roots: Vec<BigInt> = if z > 0 { vec![BigInt::zero()] } else { Vec::new() };
        let p = UniPoly::from_ints(c);
        let c0 = c[0].abs();
        // Candidates divide the constant term; small-bit constants only get full search.
        let cands: Vec<BigInt> = match c0.to_u64() {
            Some(v) if v <= 1 << 40 => divisors(v).into_iter().map(BigInt::from).collect(),
            _ => Vec::new(),
        };
        for d in cands {
            for s in [d.clone(), -d] {
                if p.eval_int(&s).is_zero() {
                    roots.push(s);
                }
            }
        }
        roots.sort();
        roots.dedup();
        roots
    }
    pub fn derivative(&self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c * q(i as i64)).collect())
    }
    pub fn display_in(&self, var: &str) -> String {
        format_poly(&self.coeffs, var)
    }
    pub fn parse_in(s: &str, var: &str) -> Result<UniPoly, ArithError> {
        parse_poly(s, var)
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d * d != n {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("n"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}
impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, o: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(o.coeffs.len());
        UniPoly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}
impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}
impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::new(out)
    }
}
macro_rules! owned_ops {
    ($tr:ident, $m:ident) => {
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, o: UniPoly) -> UniPoly {
                (&self).$m(&o)
            }
        }
    };
}
owned_ops!(Add, add);
owned_ops!(Sub, sub);
owned_ops!(Mul, mul);

fn format_rat(c: &BigRational) -> String {
    if c.is_integer() {
        c.numer().to_string()
    } else {
        format!("{}/{}", c.numer(), c.denom())
    }
}

/// Descending powers: `3*n^2 - n + 1/2`; the zero polynomial prints as `0`.
pub(crate) fn format_poly(coeffs: &[BigRational], var: &str) -> String {
    let mut s = String::new();
    for (k, c) in coeffs.iter().enumerate().rev() {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let a = c.abs();
        if s.is_empty() {
            if neg {
                s.push('-');
            }
        } else {
            s.push_str(if neg { " - " } else { " + " });
        }
        let mono = match k {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{k}"),
        };
        if k == 0 {
            s.push_str(&format_rat(&a));
        } else if a.is_one() {
            s.push_str(&mono);
        } else {
            s.push_str(&format!("{}*{}", format_rat(&a), mono));
        }
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

fn parse_rat(t: &str) -> Result<BigRational, ArithError> {
    let bad = || ArithError::Parse(format!("bad number `{t}`"));
    match t.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.trim().parse().map_err(|_| bad())?;
            let b: BigInt = b.trim().parse().map_err(|_| bad())?;
            if b.is_zero() {
                return Err(bad());
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(t.trim().parse().map_err(|_| bad())?)),
    }
}

/// Parses sums of terms `c`, `c*v`, `v`, `c*v^k`, `v^k` with signs.
pub(crate) fn parse_poly(s: &str, var: &str) -> Result<UniPoly, ArithError> {
    let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if s.is_empty() {
        return Err(ArithError::Parse("empty polynomial".into()));
    }
    let mut terms = Vec::new();
    let mut cur = String::new();
    for (i, ch) in s.chars().enumerate() {
        if (ch == '+' || ch == '-') && i > 0 && !cur.ends_with('^') && !cur.ends_with('*') {
            terms.push(std::mem::take(&mut cur));
        }
        cur.push(ch);
    }
    terms.push(cur);
    let mut coeffs: Vec<BigRational> = Vec::new();
    for t in terms {
        let (sign, body) = match t.strip_prefix('-') {
            Some(b) => (-1, b),
            None => (1, t.strip_prefix('+').unwrap_or(&t)),
        };
        if body.is_empty() {
            return Err(ArithError::Parse(format!("dangling sign in `{s}`")));
        }
        let (c, k) = if let Some(pos) = body.find(var) {
            let (cpart, vpart) = body.split_at(pos);
            let c = if cpart.is_empty() {
                BigRational::one()
            } else {
                parse_rat(cpart.strip_suffix('*').ok_or_else(|| ArithError::Parse(format!("bad term `{body}`")))?)?
            };
            let rest = &vpart[var.len()..];
            let k = if rest.is_empty() {
                1
            } else {
                rest.strip_prefix('^')
                    .and_then(|e| e.parse::<usize>().ok())
                    .ok_or_else(|| ArithError::Parse(format!("bad exponent in `{body}`")))?
            };
            (c, k)
        } else {
            (parse_rat(body)?, 0)
        };
        if coeffs.len() <= k {
            coeffs.resize(k + 1, BigRational::zero());
        }
        coeffs[k] += c * q(sign);
    }
    Ok(UniPoly::new(coeffs))
}
impl Neg for UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        -&self
    }
}
