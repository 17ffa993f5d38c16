use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{Flag, GuessReport};
use crate::exact_arith::UniPoly;
use crate::ore_shift::{Sequence, ShiftOperator};

/// Integer roots of `p` in [lo, hi], by exact evaluation.
fn roots_in(p: &UniPoly, lo: i64, hi: i64) -> Vec<i64> {
    let Some(c) = p.to_ints().or_else(|| p.primitive_ints()) else { return Vec::new() };
    (lo..=hi)
        .filter(|&n| {
            let x = BigInt::from(n);
            let mut acc = BigInt::zero();
            for k in c.iter().rev() {
                acc = acc * &x + k;
            }
            acc.is_zero()
        })
        .collect()
}

/// Roots inside the window that at least two coefficient polynomials share.
pub(crate) fn shared_roots(l: &ShiftOperator, lo: i64, hi: i64) -> Vec<i64> {
    let mut count: BTreeMap<i64, usize> = BTreeMap::new();
    let nonzero = l.coeffs().iter().filter(|p| !p.is_zero()).count();
    if nonzero < 2 {
        return Vec::new();
    }
    for p in l.coeffs().iter().filter(|p| !p.is_zero()) {
        for r in roots_in(p, lo, hi) {
            *count.entry(r).or_default() += 1;
        }
    }
    count.into_iter().filter(|&(_, c)| c >= 2).map(|(r, _)| r).collect()
}

/// Plausibility findings for the best candidate of `report` against `a`.
pub fn plausibility(report: &GuessReport, a: &Sequence) -> Vec<Flag> {
    let mut flags = Vec::new();
    let Some(l) = report.candidates.first() else { return flags };
    let r = l.order();
    let roots = shared_roots(l, a.offset, a.last_index());
    if !roots.is_empty() {
        flags.push(Flag::OutlierRoots(roots));
    }
    // Σ pᵢ(n) = 0 means constants are solutions.
    let total = l.coeffs().iter().fold(UniPoly::zero(), |s, p| &s + p);
    if total.is_zero() {
        let last = a.terms.last().unwrap();
        let run = a.terms.iter().rev().take_while(|t| *t == last).count();
        if run > r {
            flags.push(Flag::UltimatelyConstant { from: a.last_index() + 1 - run as i64 });
        }
    }
    let (ro, dd) = (r as i64, l.degree() as i64);
    let surplus = (report.terms_used as i64 - ro) - (ro + 1) * (dd + 1) + 1;
    if surplus < dd + 1 {
        flags.push(Flag::LowConfirmation { surplus });
    }
    if let Some(v) = report.validation.first() {
        if !v.residuals.is_empty() {
            flags.push(if v.passed() { Flag::ConfirmedHoldout } else { Flag::FailedHoldout });
        }
    }
    flags
}
