//! Inputs shared by the benchmarks in `benches/`.

use holorec::enumerators::gen_adjacent_permutations;
use holorec::Sequence;

/// 90 terms of A177317, enough for the (3,14) LA cell.
pub fn a177317_terms() -> Sequence {
    gen_adjacent_permutations(5, 89)
}
