use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{OreError, Provenance, Sequence};
use crate::exact_arith::{RatFunc, UniPoly};

/// Σ p_i(n) Sⁱ with S·p(n) = p(n+1)·S.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ShiftOperator {
    coeffs: Vec<UniPoly>,
}

impl ShiftOperator {
    /// Trailing zero coefficients are dropped; the leading one must be nonzero.
    pub fn new(mut coeffs: Vec<UniPoly>) -> Result<Self, OreError> {
        while coeffs.last().is_some_and(UniPoly::is_zero) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(OreError::ZeroOperator);
        }
        Ok(ShiftOperator { coeffs })
    }
    /// `c[i][j]` is the coefficient of nʲ Sⁱ.
    pub fn from_i64(c: &[&[i64]]) -> Self {
        Self::new(c.iter().map(|p| UniPoly::from_i64(p)).collect()).expect("nonzero operator")
    }
    pub fn from_int_matrix(c: &[Vec<BigInt>]) -> Result<Self, OreError> {
        Self::new(c.iter().map(|p| UniPoly::from_ints(p)).collect())
    }
    /// The shift S itself.
    pub fn s() -> Self {
        Self::from_i64(&[&[], &[1]])
    }
    pub fn constant(p: UniPoly) -> Self {
        Self::new(vec![p]).expect("nonzero constant")
    }
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }
    /// Maximum coefficient degree.
    pub fn degree(&self) -> usize {
        self.coeffs.iter().filter_map(UniPoly::degree).max().unwrap_or(0)
    }
    pub fn coeffs(&self) -> &[UniPoly] {
        &self.coeffs
    }
    pub fn coeff(&self, i: usize) -> UniPoly {
        self.coeffs.get(i).cloned().unwrap_or_else(UniPoly::zero)
    }
    pub fn leading(&self) -> &UniPoly {
        self.coeffs.last().unwrap()
    }

    /// Integer, content-free coefficients; the leading coefficient of p_r positive.
    /// Polynomial content is kept.
    pub fn normalized(&self) -> Self {
        let l = self
            .coeffs
            .iter()
            .flat_map(|p| p.coeffs())
            .fold(BigInt::one(), |l, c| l.lcm(c.denom()));
        let ints: Vec<Vec<BigInt>> = self
            .coeffs
            .iter()
            .map(|p| p.coeffs().iter().map(|c| c.numer() * (&l / c.denom())).collect())
            .collect();
        let mut g = ints.iter().flatten().fold(BigInt::zero(), |g, x| g.gcd(x));
        if ints.last().unwrap().last().unwrap().is_negative() {
            g = -g;
        }
        let c = ints.iter().map(|p| p.iter().map(|x| x / &g).collect::<Vec<_>>()).collect::<Vec<_>>();
        Self::from_int_matrix(&c).unwrap()
    }
    /// Divides out the gcd of all coefficient polynomials, then normalizes.
    pub fn without_content(&self) -> Self {
        let g = self.coeffs.iter().fold(UniPoly::zero(), |g, p| g.gcd(p));
        if g.degree().unwrap_or(0) == 0 {
            return self.normalized();
        }
        let c = self.coeffs.iter().map(|p| p.div_rem(&g).unwrap().0).collect();
        Self::new(c).unwrap().normalized()
    }
    pub fn is_integral(&self) -> bool {
        self.coeffs.iter().all(UniPoly::is_integral)
    }

    fn int_coeffs(&self) -> Option<Vec<Vec<BigInt>>> {
        self.coeffs.iter().map(UniPoly::to_ints).collect()
    }

    /// Σᵢ pᵢ(n)·a_{n+i} for each n in the window.
    pub fn apply(&self, a: &Sequence, window: std::ops::RangeInclusive<i64>) -> Result<Vec<BigRational>, OreError> {
        let r = self.order() as i64;
        let (lo, hi) = (*window.start(), *window.end());
        if lo > hi {
            return Ok(Vec::new());
        }
        if lo < a.offset || hi + r > a.last_index() {
            return Err(OreError::WindowOutOfRange { lo, hi, offset: a.offset, last: a.last_index() - r });
        }
        if let Some(ic) = self.int_coeffs() {
            return Ok((lo..=hi)
                .map(|n| {
                    let nb = BigInt::from(n);
                    let mut s = BigInt::zero();
                    for (i, p) in ic.iter().enumerate() {
                        let v = horner_int(p, &nb);
                        if !v.is_zero() {
                            s += v * a.at(n + i as i64);
                        }
                    }
                    BigRational::from_integer(s)
                })
                .collect());
        }
        Ok((lo..=hi)
            .map(|n| {
                let mut s = BigRational::zero();
                for (i, p) in self.coeffs.iter().enumerate() {
                    s += p.eval_i64(n) * BigRational::from_integer(a.at(n + i as i64).clone());
                }
                s
            })
            .collect())
    }
    /// Largest window on which [`Self::apply`] is defined for `a`.
    pub fn full_window(&self, a: &Sequence) -> std::ops::RangeInclusive<i64> {
        a.offset..=a.last_index() - self.order() as i64
    }
    /// True when the operator annihilates `a` on its full window.
    pub fn annihilates(&self, a: &Sequence) -> bool {
        let w = self.full_window(a);
        w.is_empty() || self.apply(a, w).map(|v| v.iter().all(Zero::is_zero)).unwrap_or(false)
    }

    /// The product self·other in the Ore algebra.
    pub fn multiply(&self, other: &ShiftOperator) -> ShiftOperator {
        let mut out = vec![UniPoly::zero(); self.order() + other.order() + 1];
        for (i, m) in self.coeffs.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            for (j, l) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(m * &l.shift(i as i64));
            }
        }
        ShiftOperator::new(out).expect("Ore algebra has no zero divisors")
    }
    pub fn add(&self, other: &ShiftOperator) -> Option<ShiftOperator> {
        let n = self.coeffs.len().max(other.coeffs.len());
        ShiftOperator::new((0..n).map(|i| &self.coeff(i) + &other.coeff(i)).collect()).ok()
    }
    pub fn sub(&self, other: &ShiftOperator) -> Option<ShiftOperator> {
        let n = self.coeffs.len().max(other.coeffs.len());
        ShiftOperator::new((0..n).map(|i| &self.coeff(i) - &other.coeff(i)).collect()).ok()
    }

    /// M = Q·L + R over rational functions in n, order(R) < order(L).
    pub fn right_divide(&self, l: &ShiftOperator) -> RightDivision {
        let rl = l.order();
        let lr: Vec<RatFunc> = l.coeffs.iter().map(|p| RatFunc::from_poly(p.clone())).collect();
        let mut rem: Vec<RatFunc> = self.coeffs.iter().map(|p| RatFunc::from_poly(p.clone())).collect();
        let mut quo = vec![RatFunc::zero(); self.order().saturating_sub(rl) + 1];
        trim(&mut rem);
        while rem.len() > rl {
            let k = rem.len() - 1 - rl;
            let c = rem.last().unwrap() / &lr[rl].shift(k as i64);
            for (i, li) in lr.iter().enumerate() {
                rem[i + k] = &rem[i + k] - &(&c * &li.shift(k as i64));
            }
            debug_assert!(rem.last().unwrap().is_zero());
            quo[k] = &quo[k] + &c;
            trim(&mut rem);
        }
        trim(&mut quo);
        RightDivision { quotient: RatOperator { coeffs: quo }, remainder: RatOperator { coeffs: rem } }
    }

    /// Whether `self` right-divides `m`, by fraction-free pseudo-division
    /// (polynomial arithmetic only, contents removed as we go).
    pub fn is_right_factor(&self, m: &ShiftOperator) -> bool {
        let rl = self.order();
        let l = self.without_content();
        let mut rem: Vec<UniPoly> = m.coeffs.clone();
        let mut shifted_lead: Vec<Option<Vec<UniPoly>>> = Vec::new();
        while rem.len() > rl {
            let k = rem.len() - 1 - rl;
            if shifted_lead.len() <= k {
                shifted_lead.resize(k + 1, None);
            }
            let sl = shifted_lead[k].get_or_insert_with(|| l.coeffs.iter().map(|p| p.shift(k as i64)).collect());
            let top = rem.last().unwrap().clone();
            let g = top.gcd(&sl[rl]);
            let a = sl[rl].div_rem(&g).unwrap().0;
            let b = top.div_rem(&g).unwrap().0;
            for p in rem.iter_mut() {
                *p = &a * p;
            }
            for (i, li) in sl.iter().enumerate() {
                rem[i + k] = &rem[i + k] - &(&b * li);
            }
            debug_assert!(rem.last().unwrap().is_zero());
            while rem.last().is_some_and(UniPoly::is_zero) {
                rem.pop();
            }
            strip_content(&mut rem);
        }
        rem.iter().all(UniPoly::is_zero)
    }

    /// Extends `initial` to index `n_max` using a_{n+r} = −Σ_{i<r} pᵢ(n)a_{n+i}/p_r(n).
    pub fn unroll(&self, initial: &Sequence, n_max: i64) -> Result<Sequence, OreError> {
        let r = self.order();
        if initial.len() < r {
            return Err(OreError::TooFewInitialTerms { needed: r, got: initial.len() });
        }
        let mut terms = initial.terms.clone();
        let ic = self.normalized().int_coeffs().unwrap();
        let mut idx = initial.last_index() + 1;
        while idx <= n_max {
            let n = idx - r as i64;
            let nb = BigInt::from(n);
            let lead = horner_int(&ic[r], &nb);
            if lead.is_zero() {
                return Err(OreError::SingularLeadingCoefficient { n, index: idx });
            }
            let base = terms.len() - r;
            let mut s = BigInt::zero();
            for i in 0..r {
                let v = horner_int(&ic[i], &nb);
                if !v.is_zero() {
                    s += v * &terms[base + i];
                }
            }
            let (quo, rm) = (-s).div_rem(&lead);
            if !rm.is_zero() {
                return Err(OreError::NonIntegerTerm { index: idx, value: BigRational::new(quo * &lead + rm, lead) });
            }
            terms.push(quo);
            idx += 1;
        }
        let mut out = Sequence::new(initial.offset, terms, Provenance::Unrolled);
        out.id = initial.id.clone();
        Ok(out)
    }
}

fn horner_int(p: &[BigInt], x: &BigInt) -> BigInt {
    let mut acc = BigInt::zero();
    for c in p.iter().rev() {
        acc = acc * x + c;
    }
    acc
}

fn trim(v: &mut Vec<RatFunc>) {
    while v.last().is_some_and(RatFunc::is_zero) {
        v.pop();
    }
}

fn strip_content(v: &mut [UniPoly]) {
    let g = v.iter().fold(UniPoly::zero(), |g, p| g.gcd(p));
    if g.is_zero() {
        return;
    }
    for p in v.iter_mut() {
        *p = p.div_rem(&g).unwrap().0;
    }
    let l = v.iter().flat_map(|p| p.coeffs()).fold(BigInt::one(), |l, c| l.lcm(c.denom()));
    let c = v.iter().flat_map(|p| p.coeffs()).fold(BigInt::zero(), |g, c| g.gcd(&(c.numer() * (&l / c.denom()))));
    let f = BigRational::new(l, c);
    for p in v.iter_mut() {
        *p = p.scale(&f);
    }
}

/// An operator with rational-function coefficients (Ore division output).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RatOperator {
    pub coeffs: Vec<RatFunc>,
}

impl RatOperator {
    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(RatFunc::is_zero)
    }
    pub fn order(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }
    pub fn from_operator(l: &ShiftOperator) -> Self {
        RatOperator { coeffs: l.coeffs.iter().map(|p| RatFunc::from_poly(p.clone())).collect() }
    }
    /// Clears denominators and normalizes; None for the zero operator.
    pub fn to_normalized(&self) -> Option<ShiftOperator> {
        if self.is_zero() {
            return None;
        }
        let den = self.coeffs.iter().fold(UniPoly::one(), |acc, c| {
            let g = acc.gcd(c.den());
            &acc * &c.den().div_rem(&g).unwrap().0
        });
        let polys = self
            .coeffs
            .iter()
            .map(|c| {
                let f = den.div_rem(c.den()).unwrap().0;
                &f * c.num()
            })
            .collect();
        Some(ShiftOperator::new(polys).ok()?.normalized())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightDivision {
    pub quotient: RatOperator,
    pub remainder: RatOperator,
}

impl fmt::Display for ShiftOperator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.coeffs.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "{{{}}}", p.display_in("n"))?;
            match i {
                0 => {}
                1 => f.write_str("*S")?,
                _ => write!(f, "*S^{i}")?,
            }
        }
        Ok(())
    }
}

impl FromStr for ShiftOperator {
    type Err = OreError;
    fn from_str(s: &str) -> Result<Self, OreError> {
        let bad = |m: &str| OreError::Parse(m.to_string());
        let mut coeffs: Vec<UniPoly> = Vec::new();
        let mut rest = s.trim();
        let mut first = true;
        while !rest.is_empty() {
            if !first {
                rest = rest.strip_prefix('+').ok_or_else(|| bad("expected `+` between terms"))?.trim_start();
            }
            first = false;
            rest = rest.strip_prefix('{').ok_or_else(|| bad("expected `{`"))?;
            let close = rest.find('}').ok_or_else(|| bad("unclosed `{`"))?;
            let p = UniPoly::parse_in(&rest[..close], "n").map_err(|e| OreError::Parse(e.to_string()))?;
            rest = rest[close + 1..].trim_start();
            let mut k = 0usize;
            if let Some(r) = rest.strip_prefix("*S") {
                k = 1;
                rest = r;
                if let Some(r) = rest.strip_prefix('^') {
                    let digits = r.chars().take_while(char::is_ascii_digit).count();
                    k = r[..digits].parse().map_err(|_| bad("bad power of S"))?;
                    rest = &r[digits..];
                }
                rest = rest.trim_start();
            }
            if coeffs.len() <= k {
                coeffs.resize(k + 1, UniPoly::zero());
            }
            coeffs[k] = &coeffs[k] + &p;
        }
        ShiftOperator::new(coeffs)
    }
}
