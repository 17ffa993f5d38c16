//! Greatest common right divisors of integer operators, via F_p[n]⟨S⟩
//! images, CRT and rational reconstruction.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::exact_arith::{modp, rational_reconstruct, UniPoly};
use crate::ore_shift::ShiftOperator;

type Poly = Vec<u64>;
type Op = Vec<Poly>;

fn trim(p: &mut Poly) {
    while p.last() == Some(&0) {
        p.pop();
    }
}

fn pmul(a: &Poly, b: &Poly, p: u64) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        let xs = modp::ShoupMul::new(x, p);
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = modp::add_mod(out[i + j], xs.mul(y, p), p);
        }
    }
    trim(&mut out);
    out
}

fn psub(a: &Poly, b: &Poly, p: u64) -> Poly {
    let n = a.len().max(b.len());
    let mut out: Poly = (0..n)
        .map(|k| modp::sub_mod(a.get(k).copied().unwrap_or(0), b.get(k).copied().unwrap_or(0), p))
        .collect();
    trim(&mut out);
    out
}

/// Quotient and remainder.
fn pdivrem(a: &Poly, b: &Poly, p: u64) -> (Poly, Poly) {
    let mut r = a.clone();
    if r.len() < b.len() {
        return (Vec::new(), r);
    }
    let inv = modp::inv_mod(*b.last().unwrap(), p);
    let mut q = vec![0u64; r.len() - b.len() + 1];
    for k in (0..q.len()).rev() {
        let c = modp::mul_mod(r[k + b.len() - 1], inv, p);
        q[k] = c;
        if c == 0 {
            continue;
        }
        let cs = modp::ShoupMul::new(c, p);
        for (j, &y) in b.iter().enumerate() {
            r[k + j] = modp::sub_mod(r[k + j], cs.mul(y, p), p);
        }
    }
    r.truncate(b.len() - 1);
    trim(&mut r);
    trim(&mut q);
    (q, r)
}

fn pgcd(a: &Poly, b: &Poly, p: u64) -> Poly {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = pdivrem(&a, &b, p).1;
        a = std::mem::replace(&mut b, r);
    }
    if let Some(&l) = a.last() {
        let inv = modp::inv_mod(l, p);
        for x in a.iter_mut() {
            *x = modp::mul_mod(*x, inv, p);
        }
    }
    a
}

/// p(n + k) by repeated synthetic steps (Taylor shift).
fn pshift(a: &Poly, k: i64, p: u64) -> Poly {
    let mut c = a.clone();
    let kk = modp::i64_mod(k, p);
    if kk == 0 || c.len() < 2 {
        return c;
    }
    let n = c.len();
    for i in 0..n {
        for j in (i..n - 1).rev() {
            let t = modp::mul_mod(c[j + 1], kk, p);
            c[j] = modp::add_mod(c[j], t, p);
        }
    }
    c
}

fn op_trim(a: &mut Op) {
    while a.last().is_some_and(|x| x.is_empty()) {
        a.pop();
    }
}

fn remove_content(a: &mut Op, p: u64) {
    let g = a.iter().fold(Vec::new(), |g, c| pgcd(&g, c, p));
    if g.len() > 1 {
        for c in a.iter_mut() {
            *c = pdivrem(c, &g, p).0;
        }
    }
}

fn prem(mut a: Op, b: &Op, p: u64) -> Op {
    let rb = b.len() - 1;
    while a.len() > rb {
        let k = a.len() - 1 - rb;
        let lb = pshift(&b[rb], k as i64, p);
        let top = a.last().unwrap().clone();
        let g = pgcd(&lb, &top, p);
        let (x, y) = (pdivrem(&lb, &g, p).0, pdivrem(&top, &g, p).0);
        for c in a.iter_mut() {
            *c = pmul(&x, c, p);
        }
        for (i, bi) in b.iter().enumerate() {
            let t = pmul(&y, &pshift(bi, k as i64, p), p);
            a[i + k] = psub(&a[i + k], &t, p);
        }
        op_trim(&mut a);
        remove_content(&mut a, p);
    }
    a
}

fn gcrd_mod(ops: &[Op], p: u64) -> Op {
    let mut g = ops[0].clone();
    for o in &ops[1..] {
        let (mut a, mut b) = if g.len() >= o.len() { (g, o.clone()) } else { (o.clone(), g) };
        while !b.is_empty() {
            let r = prem(a, &b, p);
            a = std::mem::replace(&mut b, r);
        }
        g = a;
    }
    remove_content(&mut g, p);
    let inv = modp::inv_mod(*g.last().unwrap().last().unwrap(), p);
    for c in g.iter_mut() {
        for x in c.iter_mut() {
            *x = modp::mul_mod(*x, inv, p);
        }
    }
    g
}

fn reduce(l: &ShiftOperator, p: u64) -> Op {
    let mut o: Op = l
        .normalized()
        .coeffs()
        .iter()
        .map(|c| {
            let mut v: Poly = c.coeffs().iter().map(|x| modp::bigint_mod(&x.to_integer(), p)).collect();
            trim(&mut v);
            v
        })
        .collect();
    op_trim(&mut o);
    o
}

/// The content-free gcrd of nonzero integer operators, or None when no
/// reconstruction passes `accept` within the prime budget.
pub fn gcrd(ops: &[ShiftOperator], accept: impl Fn(&ShiftOperator) -> bool) -> Option<ShiftOperator> {
    assert!(!ops.is_empty());
    if ops.len() == 1 {
        let g = ops[0].without_content();
        return accept(&g).then_some(g);
    }
    let mut best: Option<Vec<usize>> = None;
    let mut modulus = BigInt::one();
    let mut acc: Vec<Vec<BigInt>> = Vec::new();
    let mut last: Option<ShiftOperator> = None;
    for p in modp::prime_stream().take(400) {
        let imgs: Vec<Op> = ops.iter().map(|l| reduce(l, p)).collect();
        // Skip primes dividing a leading coefficient.
        if imgs.iter().zip(ops).any(|(o, l)| o.len() != l.order() + 1) {
            continue;
        }
        let g = gcrd_mod(&imgs, p);
        let sig: Vec<usize> = g.iter().map(Vec::len).collect();
        let cmp = best.as_ref().map(|b| (sig.len(), sig.iter().sum::<usize>()).cmp(&(b.len(), b.iter().sum())));
        match cmp {
            Some(std::cmp::Ordering::Greater) => continue,
            Some(std::cmp::Ordering::Equal) if best.as_ref() == Some(&sig) => {
                let mm = modp::bigint_mod(&modulus, p);
                let minv = modp::inv_mod(mm, p);
                for (a, c) in acc.iter_mut().zip(&g) {
                    for (k, x) in a.iter_mut().enumerate() {
                        let r = c.get(k).copied().unwrap_or(0);
                        let t = modp::mul_mod(modp::sub_mod(r, modp::bigint_mod(x, p), p), minv, p);
                        *x += &modulus * t;
                    }
                }
                modulus *= p;
            }
            Some(std::cmp::Ordering::Equal) => continue,
            _ => {
                best = Some(sig.clone());
                modulus = BigInt::from(p);
                acc = g.iter().map(|c| c.iter().map(|&x| BigInt::from(x)).collect()).collect();
            }
        }
        let lifted: Option<Vec<UniPoly>> = acc
            .iter()
            .map(|c| c.iter().map(|x| rational_reconstruct(x, &modulus)).collect::<Option<Vec<BigRational>>>().map(UniPoly::new))
            .collect();
        if let Some(cs) = lifted {
            if let Ok(l) = ShiftOperator::new(cs) {
                let l = l.normalized();
                if last.as_ref() == Some(&l) && accept(&l) {
                    return Some(l);
                }
                last = Some(l);
            }
        }
    }
    None
}

