use num_traits::Zero;

use super::{gcrd, plausibility, prepare, system::AnsatzSystem, validate, GuessConfig, GuessError, GuessReport, Method};
use crate::exact_arith::{full_column_rank_mod, modp, nullspace_modular};
use crate::ore_shift::{Sequence, ShiftOperator};

/// Cells (r, d) with (r+2)(d+1) < used and strictly more equations than
/// unknowns, by increasing (r+2)(d+1), then r.
pub(crate) fn la_cells(used: usize, cfg: &GuessConfig) -> Vec<(usize, usize)> {
    let mut cells: Vec<(usize, usize)> = match &cfg.cells {
        Some(c) => c.clone(),
        None => (1..=cfg.max_order).flat_map(|r| (0..=cfg.max_degree).map(move |d| (r, d))).collect(),
    };
    cells.retain(|&(r, d)| r >= 1 && (r + 2) * (d + 1) < used && used.saturating_sub(r) > (r + 1) * (d + 1));
    cells.sort_by_key(|&(r, d)| ((r + 2) * (d + 1), r));
    cells.dedup();
    cells
}

/// How many further successful cells feed the gcrd when a kernel is one-dimensional.
const EXTRA_CELLS: usize = 2;

fn kernel_ops(terms: &[num_bigint::BigInt], offset: i64, r: usize, d: usize, p0: u64) -> Vec<ShiftOperator> {
    let sys = AnsatzSystem::new(terms, offset, r, d);
    if full_column_rank_mod(&sys, p0) {
        return Vec::new();
    }
    nullspace_modular(&sys).iter().filter_map(|v| sys.operator(v)).collect()
}

/// Linear-algebra guessing over admissible cells; the first cell with a
/// nontrivial kernel wins. With `cfg.minimize`, kernel elements (and those of
/// a few following cells when the kernel is a single operator) are reduced to
/// their greatest common right divisor, which is reported when it still
/// annihilates the data.
pub fn guess_la(a: &Sequence, cfg: &GuessConfig) -> Result<Option<GuessReport>, GuessError> {
    let (seq, used) = prepare(a, cfg)?;
    if used < 4 || seq.terms.iter().all(Zero::is_zero) {
        return Ok(None);
    }
    let terms = &seq.terms[..used];
    let data = seq.prefix(used);
    let p0 = modp::primes(1)[0];
    let cells = la_cells(used, cfg);
    let mut found: Option<((usize, usize), Vec<ShiftOperator>)> = None;
    let mut pool: Vec<ShiftOperator> = Vec::new();
    let mut extra = 0;
    for &(r, d) in &cells {
        if found.is_some() && (pool.len() > 1 || !cfg.minimize || extra >= EXTRA_CELLS) {
            break;
        }
        let ops = kernel_ops(terms, seq.offset, r, d, p0);
        if ops.is_empty() {
            continue;
        }
        if found.is_none() {
            found = Some(((r, d), ops.clone()));
        } else {
            extra += 1;
        }
        pool.extend(ops);
    }
    let Some((ansatz, ops)) = found else { return Ok(None) };
    if cfg.minimize {
        // A cheap cell can hide a lower-order operator of higher degree (a
        // cubic is killed by (S−1)⁴ long before its order-1 operator shows
        // up), so the lowest order with a kernel joins the pool as well.
        let best = pool.iter().map(ShiftOperator::order).min().unwrap_or(ansatz.0);
        'lower: for r in 1..best {
            for &(_, d) in cells.iter().filter(|c| c.0 == r) {
                let ops = kernel_ops(terms, seq.offset, r, d, p0);
                if !ops.is_empty() {
                    pool.extend(ops);
                    break 'lower;
                }
            }
        }
    }
    let mut candidates = ops;
    if cfg.minimize {
        if let Some(g) = gcrd(&pool, |l| l.annihilates(&data)) {
            if !candidates.contains(&g) {
                candidates.insert(0, g);
            }
            candidates.truncate(1);
        }
    }
    let validation = candidates.iter().map(|c| validate(c, &seq, used)).collect();
    let mut report = GuessReport {
        method: Method::La,
        ansatz,
        terms_used: used,
        candidates,
        validation,
        flags: Vec::new(),
        sequence: seq,
        rescale: cfg.shift_ansatz.clone(),
    };
    report.flags = plausibility(&report, &report.sequence);
    Ok(Some(report))
}
