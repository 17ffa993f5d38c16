use super::{guess_la, GuessConfig};
use crate::ore_shift::{OreError, Provenance, Sequence, ShiftOperator};

/// Merges b₀, c₀, b₁, c₁, … into one sequence with the given offset.
pub fn interlace(even: &Sequence, odd: &Sequence, offset: i64) -> Sequence {
    let mut terms = Vec::with_capacity(even.len() + odd.len());
    for k in 0..even.len().max(odd.len()) {
        if let Some(x) = even.terms.get(k) {
            terms.push(x.clone());
        } else {
            break;
        }
        if let Some(y) = odd.terms.get(k) {
            terms.push(y.clone());
        } else {
            break;
        }
    }
    Sequence::new(offset, terms, Provenance::Unrolled)
}

/// Operator for the interlacing of two annihilated subsequences.
///
/// The subsequences bₘ = a_{n₀+2m} and cₘ = a_{n₀+2m+1} (indexed from m = 0)
/// are read from `init`, unrolled with `l_even` and `l_odd`, and guessing runs
/// on growing prefixes of the interlaced sequence. A candidate is returned
/// once it annihilates three times as many terms as were used to find it.
pub fn combine_interlaced(
    l_even: &ShiftOperator,
    l_odd: &ShiftOperator,
    init: &Sequence,
    cfg: &GuessConfig,
) -> Result<Option<ShiftOperator>, OreError> {
    let mut even = init.every(0, 2);
    let mut odd = init.every(1, 2);
    let limit = (cfg.max_order + 2) * (cfg.max_degree + 1) + cfg.max_order + cfg.holdout + 1;
    let mut n = 16usize.min(limit);
    loop {
        let half = (3 * n).div_ceil(2) as i64 + 1;
        even = l_even.unroll(&even, half)?;
        odd = l_odd.unroll(&odd, half)?;
        let full = interlace(&even, &odd, init.offset);
        let guess_on = full.prefix(n);
        if let Ok(Some(rep)) = guess_la(&guess_on, cfg) {
            let check = full.prefix(3 * n);
            if let Some(l) = rep.candidates.iter().find(|l| l.annihilates(&check)) {
                return Ok(Some(l.clone()));
            }
        }
        if n >= limit {
            return Ok(None);
        }
        n = (2 * n).min(limit);
    }
}
