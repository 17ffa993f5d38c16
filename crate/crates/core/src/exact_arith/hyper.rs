//! Hypergeometric factors h(n) = c · Πᵢ fᵢ(n)^{eᵢ}, used to rescale sequences.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::{factorial, ArithError};

/// Linear form a·n + b.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Lin {
    pub a: i64,
    pub b: i64,
}

impl Lin {
    pub fn at(&self, n: i64) -> i64 {
        self.a * n + self.b
    }
}

impl fmt::Display for Lin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = match self.a {
            0 => String::new(),
            1 => "n".into(),
            -1 => "-n".into(),
            a => format!("{a}n"),
        };
        match (self.a, self.b) {
            (0, b) => write!(f, "{b}"),
            (_, 0) => write!(f, "{var}"),
            (_, b) if b > 0 => write!(f, "{var}+{b}"),
            (_, b) => write!(f, "{var}{b}"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum HyperFactor {
    /// (a·n + b)!
    Factorial(Lin),
    /// a·n + b
    Linear(Lin),
    /// base^n
    Power(BigRational),
    /// Rising factorial x·(x+1)⋯(x+m−1) with m = a·n + b.
    Rising(BigRational, Lin),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hyper {
    pub constant: BigRational,
    pub factors: Vec<(HyperFactor, i32)>,
}

impl Hyper {
    pub fn one() -> Self {
        Hyper { constant: BigRational::one(), factors: Vec::new() }
    }
    pub fn times(mut self, f: HyperFactor, e: i32) -> Self {
        self.factors.push((f, e));
        self
    }
    pub fn scaled(mut self, c: BigRational) -> Self {
        self.constant *= c;
        self
    }
    pub fn inverse(&self) -> Self {
        Hyper {
            constant: self.constant.recip(),
            factors: self.factors.iter().map(|(f, e)| (f.clone(), -e)).collect(),
        }
    }
    /// binomial(a₁n+b₁, a₂n+b₂) as factorials.
    pub fn binomial(top: Lin, bottom: Lin) -> Self {
        let rest = Lin { a: top.a - bottom.a, b: top.b - bottom.b };
        Hyper::one()
            .times(HyperFactor::Factorial(top), 1)
            .times(HyperFactor::Factorial(bottom), -1)
            .times(HyperFactor::Factorial(rest), -1)
    }
    /// Value at n; None where a factorial argument is negative or a zero is inverted.
    pub fn eval(&self, n: i64) -> Option<BigRational> {
        let mut num = BigRational::one();
        let mut den = BigRational::one();
        for (f, e) in &self.factors {
            let v = match f {
                HyperFactor::Factorial(l) => {
                    let m = l.at(n);
                    if m < 0 {
                        return None;
                    }
                    BigRational::from_integer(factorial(m as u64))
                }
                HyperFactor::Linear(l) => BigRational::from_integer(BigInt::from(l.at(n))),
                HyperFactor::Power(b) => {
                    if n < 0 {
                        b.recip().pow(-n as i32)
                    } else {
                        pow_rat(b, n as u64)
                    }
                }
                HyperFactor::Rising(x, l) => {
                    let m = l.at(n);
                    if m < 0 {
                        return None;
                    }
                    let mut acc = BigRational::one();
                    let mut t = x.clone();
                    for _ in 0..m {
                        acc *= &t;
                        t += BigRational::one();
                    }
                    acc
                }
            };
            let target = if *e >= 0 { &mut num } else { &mut den };
            for _ in 0..e.unsigned_abs() {
                *target *= &v;
            }
        }
        if den.is_zero() {
            return None;
        }
        Some(&self.constant * num / den)
    }

    /// Parses products/quotients of `c`, `p/q`, `n!`, `(2n+1)!`, `binomial(3n,n)`,
    /// `(n+1)`, `2^n`, `(5/2)_(n-2)` (rising factorial), each optionally `^k`.
    pub fn parse(s: &str) -> Result<Hyper, ArithError> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let mut p = Parser { s: s.as_bytes(), i: 0 };
        let mut h = Hyper::one();
        let mut sign = 1;
        loop {
            p.factor(&mut h, sign)?;
            match p.peek() {
                None => break,
                Some(b'*') => sign = 1,
                Some(b'/') => sign = -1,
                Some(c) => return Err(ArithError::Parse(format!("unexpected `{}`", c as char))),
            }
            p.i += 1;
        }
        Ok(h)
    }
}

fn pow_rat(b: &BigRational, e: u64) -> BigRational {
    let mut r = BigRational::one();
    let mut base = b.clone();
    let mut e = e;
    while e > 0 {
        if e & 1 == 1 {
            r *= &base;
        }
        base = &base * &base;
        e >>= 1;
    }
    r
}

struct Parser<'a> {
    s: &'a [u8],
    i: usize,
}

impl Parser<'_> {
    fn peek(&self) -> Option<u8> {
        self.s.get(self.i).copied()
    }
    fn err<T>(&self, m: &str) -> Result<T, ArithError> {
        Err(ArithError::Parse(format!("{m} at byte {} of `{}`", self.i, String::from_utf8_lossy(self.s))))
    }
    fn eat(&mut self, t: &str) -> bool {
        if self.s[self.i..].starts_with(t.as_bytes()) {
            self.i += t.len();
            true
        } else {
            false
        }
    }
    fn int(&mut self) -> Option<i64> {
        let st = self.i;
        if self.peek() == Some(b'-') {
            self.i += 1;
        }
        while self.peek().is_some_and(|c| c.is_ascii_digit()) {
            self.i += 1;
        }
        let r = std::str::from_utf8(&self.s[st..self.i]).ok()?.parse().ok();
        if r.is_none() {
            self.i = st;
        }
        r
    }
    fn rat(&mut self) -> Option<BigRational> {
        let a = self.int()?;
        let st = self.i;
        if self.eat("/") {
            if let Some(b) = self.int() {
                if b != 0 {
                    return Some(BigRational::new(a.into(), b.into()));
                }
            }
            self.i = st;
        }
        Some(BigRational::from_integer(a.into()))
    }
    /// Linear form like `3n+1`, `n`, `-2`, `2n-1`.
    fn lin(&mut self) -> Result<Lin, ArithError> {
        let mut l = Lin { a: 0, b: 0 };
        let mut any = false;
        loop {
            let sign = if self.eat("-") {
                -1
            } else {
                if any && !self.eat("+") {
                    break;
                }
                1
            };
            let c = self.int();
            if self.eat("n") {
                l.a += sign * c.unwrap_or(1);
            } else if let Some(c) = c {
                l.b += sign * c;
            } else {
                return self.err("expected linear form");
            }
            any = true;
            if !matches!(self.peek(), Some(b'+') | Some(b'-')) {
                break;
            }
        }
        Ok(l)
    }
    fn exponent(&mut self) -> Result<i32, ArithError> {
        if self.eat("^") {
            match self.int() {
                Some(e) => Ok(e as i32),
                None => self.err("expected exponent"),
            }
        } else {
            Ok(1)
        }
    }
    fn factor(&mut self, h: &mut Hyper, sign: i32) -> Result<(), ArithError> {
        if self.eat("binomial(") {
            let top = self.lin()?;
            if !self.eat(",") {
                return self.err("expected `,`");
            }
            let bot = self.lin()?;
            if !self.eat(")") {
                return self.err("expected `)`");
            }
            let e = self.exponent()? * sign;
            for (f, k) in Hyper::binomial(top, bot).factors {
                h.factors.push((f, k * e));
            }
            return Ok(());
        }
        if self.peek() == Some(b'(') {
            // (x)_(lin): rising factorial with rational x; (lin)! or (lin).
            let save = self.i;
            self.i += 1;
            if let Some(x) = self.rat() {
                if self.eat(")_(") {
                    let l = self.lin()?;
                    if !self.eat(")") {
                        return self.err("expected `)`");
                    }
                    let e = self.exponent()? * sign;
                    h.factors.push((HyperFactor::Rising(x, l), e));
                    return Ok(());
                }
            }
            self.i = save + 1;
            let l = self.lin()?;
            if !self.eat(")") {
                return self.err("expected `)`");
            }
            let f = if self.eat("!") { HyperFactor::Factorial(l) } else { HyperFactor::Linear(l) };
            let e = self.exponent()? * sign;
            h.factors.push((f, e));
            return Ok(());
        }
        if self.eat("n!") {
            let e = self.exponent()? * sign;
            h.factors.push((HyperFactor::Factorial(Lin { a: 1, b: 0 }), e));
            return Ok(());
        }
        if self.eat("n") {
            let e = self.exponent()? * sign;
            h.factors.push((HyperFactor::Linear(Lin { a: 1, b: 0 }), e));
            return Ok(());
        }
        if let Some(c) = self.rat() {
            if self.eat("^n") {
                h.factors.push((HyperFactor::Power(c), sign));
                return Ok(());
            }
            let e = self.exponent()? * sign;
            let v = c.pow(e.abs());
            h.constant *= if e < 0 { v.recip() } else { v };
            return Ok(());
        }
        self.err("expected factor")
    }
}

impl fmt::Display for Hyper {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if !self.constant.is_one() || self.factors.is_empty() {
            parts.push(self.constant.to_string());
        }
        for (fac, e) in &self.factors {
            let base = match fac {
                HyperFactor::Factorial(l) if *l == (Lin { a: 1, b: 0 }) => "n!".to_string(),
                HyperFactor::Factorial(l) => format!("({l})!"),
                HyperFactor::Linear(l) => format!("({l})"),
                HyperFactor::Power(b) => format!("{b}^n"),
                HyperFactor::Rising(x, l) => format!("({x})_({l})"),
            };
            match *e {
                1 => parts.push(base),
                e if e > 0 => parts.push(format!("{base}^{e}")),
                -1 => parts.push(format!("1/{base}")),
                e => parts.push(format!("1/{base}^{}", e.abs())),
            }
        }
        f.write_str(&parts.join("*"))
    }
}
