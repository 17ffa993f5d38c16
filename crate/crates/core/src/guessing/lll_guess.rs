use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};

use super::{
    lll_reduce, lll_reduce_fp, plausibility, prepare, system::AnsatzSystem, validate, GuessConfig, GuessError,
    GuessReport, LatticeBasis, Method,
};
use crate::exact_arith::{full_column_rank_mod, modp, ModularSystem};
use crate::ore_shift::{Sequence, ShiftOperator};

/// Lattices up to this dimension are reduced with exact arithmetic.
const EXACT_LLL_MAX_DIM: usize = 16;
/// Candidates kept per report.
const MAX_CANDIDATES: usize = 8;

/// Cells with at least one equation and at most 4 unknowns per equation, by
/// increasing unknown count, then order.
pub(crate) fn lll_cells(used: usize, cfg: &GuessConfig) -> Vec<(usize, usize)> {
    let mut cells: Vec<(usize, usize)> = match &cfg.cells {
        Some(c) => c.clone(),
        None => (1..=cfg.max_order).flat_map(|r| (0..=cfg.max_degree).map(move |d| (r, d))).collect(),
    };
    cells.retain(|&(r, d)| {
        let e = used.saturating_sub(r);
        r >= 1 && e >= 1 && (r + 1) * (d + 1) <= 4 * e
    });
    cells.sort_by_key(|&(r, d)| ((r + 1) * (d + 1), r));
    cells.dedup();
    cells
}

fn norm2(l: &ShiftOperator) -> BigInt {
    l.coeffs().iter().flat_map(|p| p.coeffs()).map(|c| c.numer() * c.numer()).sum()
}

/// Short kernel vectors of one cell's system, as operators.
pub(crate) fn lll_cell(sys: &AnsatzSystem, scale_bits: u64, cfg: &GuessConfig) -> Vec<ShiftOperator> {
    let (u, e) = (sys.unknowns(), sys.equations());
    let rows: Vec<Vec<BigInt>> = (0..e).map(|k| sys.row(k)).collect();
    let basis = LatticeBasis::new(
        (0..u)
            .map(|k| {
                let mut v = vec![BigInt::zero(); u + e];
                v[k] = BigInt::from(1);
                for (w, row) in rows.iter().enumerate() {
                    v[u + w] = &row[k] << scale_bits as usize;
                }
                v
            })
            .collect(),
    );
    let reduced = if u <= EXACT_LLL_MAX_DIM {
        lll_reduce(&basis, &cfg.lll_delta)
    } else {
        lll_reduce_fp(&basis, cfg.lll_delta.to_f64().unwrap_or(0.75))
    };
    let mut out: Vec<ShiftOperator> = Vec::new();
    for v in reduced.rows {
        if v[u..].iter().any(|x| !x.is_zero()) {
            continue;
        }
        let Some(l) = sys.operator(&v[..u]) else { continue };
        debug_assert!(sys.annihilates(&v[..u]));
        if !out.contains(&l) {
            out.push(l);
        }
    }
    out
}

/// Lattice-reduction guessing: per cell, LLL on [I | K·Aᵀ], harvest the
/// vectors whose scaled block vanishes, validate on the holdout. Returns the
/// first cell with a validated candidate; otherwise the first cell's
/// candidates flagged as failing.
pub fn guess_lll(a: &Sequence, cfg: &GuessConfig) -> Result<Option<GuessReport>, GuessError> {
    let (seq, used) = prepare(a, cfg)?;
    if used < 4 || seq.terms.iter().all(Zero::is_zero) {
        return Ok(None);
    }
    let terms = &seq.terms[..used];
    let scale_bits = cfg.lll_scale_bits.unwrap_or_else(|| seq.terms.iter().map(|t| t.abs().bits()).max().unwrap_or(0) + 64);
    let p0 = modp::primes(1)[0];
    let mut fallback: Option<((usize, usize), Vec<ShiftOperator>)> = None;
    for (r, d) in lll_cells(used, cfg) {
        let sys = AnsatzSystem::new(terms, seq.offset, r, d);
        if full_column_rank_mod(&sys, p0) {
            continue;
        }
        let mut cands = lll_cell(&sys, scale_bits, cfg);
        if cands.is_empty() {
            continue;
        }
        cands.sort_by_key(norm2);
        let (pass, fail): (Vec<_>, Vec<_>) = cands.into_iter().partition(|c| validate(c, &seq, used).passed());
        if !pass.is_empty() {
            return Ok(Some(report(seq.clone(), used, (r, d), pass, cfg)));
        }
        if fallback.is_none() {
            fallback = Some(((r, d), fail));
        }
    }
    Ok(fallback.map(|(cell, c)| report(seq, used, cell, c, cfg)))
}

fn report(seq: Sequence, used: usize, ansatz: (usize, usize), mut cands: Vec<ShiftOperator>, cfg: &GuessConfig) -> GuessReport {
    cands.truncate(MAX_CANDIDATES);
    let validation = cands.iter().map(|c| validate(c, &seq, used)).collect();
    let mut r = GuessReport {
        method: Method::Lll,
        ansatz,
        terms_used: used,
        candidates: cands,
        validation,
        flags: Vec::new(),
        sequence: seq,
        rescale: cfg.shift_ansatz.clone(),
    };
    r.flags = plausibility(&r, &r.sequence);
    r
}
