//! Sparse multivariate polynomials over Z with packed exponent vectors.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::ArithError;

/// Up to 8 variables, 7 bits of exponent each; the top bit of every byte is a
/// guard so that adding two keys detects overflow. Variable 0 occupies the
/// most significant byte, so key order is lexicographic order.
pub const MAX_VARS: usize = 8;
pub const MAX_EXP: u32 = 127;
const GUARD: u64 = 0x8080_8080_8080_8080;

fn slot(i: usize) -> u32 {
    8 * (7 - i as u32)
}

pub fn pack(exps: &[u32]) -> u64 {
    assert!(exps.len() <= MAX_VARS);
    exps.iter().enumerate().fold(0u64, |k, (i, &e)| {
        assert!(e <= MAX_EXP, "exponent {e} exceeds {MAX_EXP}");
        k | ((e as u64) << slot(i))
    })
}

pub fn unpack(key: u64, nvars: usize) -> Vec<u32> {
    (0..nvars).map(|i| ((key >> slot(i)) & 0x7f) as u32).collect()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<u64, BigInt>,
    cap: Option<Vec<u32>>,
}

impl MultiPoly {
    pub fn zero<S: AsRef<str>>(vars: &[S]) -> Self {
        assert!(vars.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        MultiPoly { vars: vars.iter().map(|v| v.as_ref().to_string()).collect(), terms: BTreeMap::new(), cap: None }
    }
    pub fn constant<S: AsRef<str>>(vars: &[S], c: BigInt) -> Self {
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(0, c);
        }
        p
    }
    pub fn one<S: AsRef<str>>(vars: &[S]) -> Self {
        Self::constant(vars, BigInt::one())
    }
    pub fn var<S: AsRef<str>>(vars: &[S], i: usize) -> Self {
        let mut e = vec![0; vars.len()];
        e[i] = 1;
        Self::monomial(vars, &e, BigInt::one())
    }
    pub fn monomial<S: AsRef<str>>(vars: &[S], exps: &[u32], c: BigInt) -> Self {
        assert_eq!(exps.len(), vars.len());
        let mut p = Self::zero(vars);
        if !c.is_zero() {
            p.terms.insert(pack(exps), c);
        }
        p
    }
    /// Attaches a per-variable exponent ceiling, dropping terms above it.
    pub fn with_cap(mut self, cap: Vec<u32>) -> Self {
        assert_eq!(cap.len(), self.vars.len());
        let n = self.vars.len();
        self.terms.retain(|k, _| unpack(*k, n).iter().zip(&cap).all(|(e, c)| e <= c));
        self.cap = Some(cap);
        self
    }
    pub fn cap(&self) -> Option<&[u32]> {
        self.cap.as_deref()
    }
    pub fn vars(&self) -> &[String] {
        &self.vars
    }
    pub fn nvars(&self) -> usize {
        self.vars.len()
    }
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn len(&self) -> usize {
        self.terms.len()
    }
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }
    pub fn terms(&self) -> impl Iterator<Item = (Vec<u32>, &BigInt)> + '_ {
        let n = self.vars.len();
        self.terms.iter().map(move |(k, c)| (unpack(*k, n), c))
    }
    pub fn coeff(&self, exps: &[u32]) -> BigInt {
        self.terms.get(&pack(exps)).cloned().unwrap_or_else(BigInt::zero)
    }
    /// Sum of the coefficients whose exponent in variable `i` is `k`, as a
    /// polynomial over the same variables with that exponent cleared.
    pub fn coeff_of_var(&self, i: usize, k: u32) -> MultiPoly {
        let mut out = Self::zero(&self.vars);
        let mask = !(0x7fu64 << slot(i));
        for (key, c) in &self.terms {
            if ((key >> slot(i)) & 0x7f) as u32 == k {
                out.terms.insert(key & mask, c.clone());
            }
        }
        out
    }
    pub fn degree_in(&self, i: usize) -> Option<u32> {
        self.terms.keys().map(|k| ((k >> slot(i)) & 0x7f) as u32).max()
    }
    fn same_vars(&self, o: &MultiPoly) -> Result<(), ArithError> {
        if self.vars == o.vars {
            Ok(())
        } else {
            Err(ArithError::VariableMismatch(self.vars.clone(), o.vars.clone()))
        }
    }
    fn insert_add(terms: &mut BTreeMap<u64, BigInt>, k: u64, c: BigInt) {
        use std::collections::btree_map::Entry;
        match terms.entry(k) {
            Entry::Vacant(e) => {
                if !c.is_zero() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }
    pub fn add(&self, o: &MultiPoly) -> Result<MultiPoly, ArithError> {
        self.same_vars(o)?;
        let mut out = self.clone();
        for (k, c) in &o.terms {
            Self::insert_add(&mut out.terms, *k, c.clone());
        }
        Ok(out)
    }
    pub fn sub(&self, o: &MultiPoly) -> Result<MultiPoly, ArithError> {
        self.same_vars(o)?;
        let mut out = self.clone();
        for (k, c) in &o.terms {
            Self::insert_add(&mut out.terms, *k, -c);
        }
        Ok(out)
    }
    pub fn add_assign(&mut self, o: &MultiPoly) -> Result<(), ArithError> {
        self.same_vars(o)?;
        for (k, c) in &o.terms {
            Self::insert_add(&mut self.terms, *k, c.clone());
        }
        Ok(())
    }
    /// Sum of all coefficients whose exponent vector satisfies `keep`.
    pub fn coeff_sum(&self, mut keep: impl FnMut(&[u32]) -> bool) -> BigInt {
        self.terms().filter(|(e, _)| keep(e)).map(|(_, c)| c.clone()).sum()
    }
    pub fn neg(&self) -> MultiPoly {
        let mut out = self.clone();
        for c in out.terms.values_mut() {
            *c = -&*c;
        }
        out
    }
    pub fn scale(&self, s: &BigInt) -> MultiPoly {
        let mut out = Self::zero(&self.vars);
        out.cap = self.cap.clone();
        if !s.is_zero() {
            out.terms = self.terms.iter().map(|(k, c)| (*k, c * s)).collect();
        }
        out
    }
    /// Uncapped (apart from the operands' own caps) product.
    pub fn mul(&self, o: &MultiPoly) -> Result<MultiPoly, ArithError> {
        let cap = match (&self.cap, &o.cap) {
            (Some(a), Some(b)) => Some(a.iter().zip(b).map(|(x, y)| *x.min(y)).collect::<Vec<_>>()),
            (a, b) => a.clone().or_else(|| b.clone()),
        };
        mpoly_mul(self, o, cap.as_deref())
    }
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }
    /// Leading term in lexicographic order.
    pub fn lead(&self) -> Option<(u64, &BigInt)> {
        self.terms.iter().next_back().map(|(k, c)| (*k, c))
    }
    /// Exact quotient; errors when `d` does not divide `self`.
    pub fn exact_div(&self, d: &MultiPoly) -> Result<MultiPoly, ArithError> {
        self.same_vars(d)?;
        let (dk, dc) = d.lead().ok_or(ArithError::DivisionByZero)?;
        let dk_exps = unpack(dk, self.nvars());
        let mut rem = self.terms.clone();
        let mut quo = BTreeMap::new();
        while let Some((&rk, rc)) = rem.iter().next_back() {
            let re = unpack(rk, self.nvars());
            if re.iter().zip(&dk_exps).any(|(a, b)| a < b) {
                return Err(ArithError::NotDivisible);
            }
            let (qc, r) = rc.div_rem(dc);
            if !r.is_zero() {
                return Err(ArithError::NotDivisible);
            }
            let qk = rk - dk;
            for (k, c) in &d.terms {
                Self::insert_add(&mut rem, qk + k, -(&qc * c));
            }
            quo.insert(qk, qc);
        }
        Ok(MultiPoly { vars: self.vars.clone(), terms: quo, cap: None })
    }
    /// Substitutes integers for all variables.
    pub fn eval(&self, x: &[BigInt]) -> BigInt {
        let mut s = BigInt::zero();
        for (e, c) in self.terms() {
            let mut t = c.clone();
            for (xi, ei) in x.iter().zip(&e) {
                t *= num_traits::pow(xi.clone(), *ei as usize);
            }
            s += t;
        }
        s
    }
    /// Canonical sign: leading coefficient positive.
    pub fn sign_normalized(&self) -> (MultiPoly, bool) {
        match self.lead() {
            Some((_, c)) if c.is_negative() => (self.neg(), true),
            _ => (self.clone(), false),
        }
    }
}

/// Product with every term whose exponent exceeds `cap` (per variable) dropped.
pub fn mpoly_mul(p: &MultiPoly, q: &MultiPoly, cap: Option<&[u32]>) -> Result<MultiPoly, ArithError> {
    p.same_vars(q)?;
    let n = p.nvars();
    if let Some(c) = cap {
        if c.len() != n {
            return Err(ArithError::VariableMismatch(p.vars.clone(), q.vars.clone()));
        }
    }
    let cap_key = cap.map(|c| pack(&c.iter().map(|&x| x.min(MAX_EXP)).collect::<Vec<_>>()));
    let mut out = MultiPoly::zero(&p.vars);
    for (ka, ca) in &p.terms {
        for (kb, cb) in &q.terms {
            let k = ka + kb;
            assert!(k & GUARD == 0, "exponent overflow in product");
            if let Some(ck) = cap_key {
                // Slot-wise k ≤ ck: borrow into a guard bit means some slot exceeded.
                if ((ck | GUARD) - k) & GUARD != GUARD {
                    continue;
                }
            }
            MultiPoly::insert_add(&mut out.terms, k, ca * cb);
        }
    }
    out.cap = cap.map(|c| c.to_vec());
    Ok(out)
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            if first {
                if neg {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if neg { " - " } else { " + " })?;
            }
            first = false;
            let mono: Vec<String> = e
                .iter()
                .zip(&self.vars)
                .filter(|(e, _)| **e > 0)
                .map(|(e, v)| if *e == 1 { v.clone() } else { format!("{v}^{e}") })
                .collect();
            let a = c.abs();
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{}", mono.join("*"))?;
            } else {
                write!(f, "{a}*{}", mono.join("*"))?;
            }
        }
        Ok(())
    }
}
