//! Generators, brute-force oracles and conjecture evaluators for the sequences.

pub mod a098926;
pub mod a181280;
pub mod a188818;
pub mod a194478;
pub mod a215570;
pub mod a250556;
pub mod a253217;
pub mod a269021;
pub mod a306322;
pub mod a339987;
pub mod adjacent;
pub mod cautionary;
pub mod conjectures;
pub mod kaprekar;
pub mod partition;
pub mod transfer;
pub mod walks;
pub mod young;

pub use a098926::{a098926_matrix, a098926_path, a098926_rook, gen_a098926, permanent_dp, permanent_ryser};
pub use a181280::{a181280_conditions, a181280_count, gen_a181280};
pub use a188818::{a188818_brute, a188818_even, a188818_odd, gen_a188818};
pub use a194478::{a194478_brute, a194478_parts, a194478_quasipolynomial, a194478_term, gen_a194478};
pub use a215570::{a215570_brute, a215570_successors, gen_a215570};
pub use a250556::{a250556_brute, a250556_recurrence, build_a250556_machine, gen_a250556};
pub use a253217::{a253217_count, a253217_naive, a253217_valid, gen_a253217};
pub use a269021::{a269021_brute, a269021_term, gen_a269021, lis_length, syt_count};
pub use a306322::{a306322_brute_either, a306322_dp, a306322_formula, gen_a306322, narayana};
pub use a339987::{a339987_brute, gen_a339987};
pub use adjacent::{adjacent_permutations_brute, gen_adjacent_permutations};
pub use transfer::{
    a199250_system, a264947_system, adjacent_permutation_system, det_bareiss, geometric_system, gf_series, same_fraction, tm_gf,
    tm_terms, Extraction, TransferSystem,
};
pub use conjectures::{
    check_conjecture, conjectures_for, eval_conjecture, factored, ConjectureError, A195806_LAST_CONSTANT,
    A195806_PRINTED_LAST_CONSTANT, ConjectureForm, ConjectureReport, ConjectureSpec,
    CONJECTURE_IDS,
};
pub use cautionary::{a039836_brute, a187990_brute, a187990_closed, gen_a039836, gen_a187990, gen_a237684, gen_cautionary};
pub use kaprekar::{
    a164735_brute, a164735_count, a164735_pattern_count, gen_a164735, kaprekar_map, kaprekar_x, kaprekar_y, KaprekarState,
};
pub use partition::{a195806_count, a195806_raw, a195806_satisfies, a216940_backtrack, a216940_count, gen_a195806, gen_a216940};
pub use walks::{
    a172572_first_brute, a172572_stepset, a172671_stepset, a265234_stepset, chu_vandermonde_lhs, diagonal_walk_counts,
    gen_a265234, gen_orthant_walks, gen_stepset_diagonal, stepset_diagonal_by_powers, sum_a172572, StepSet,
};
pub use young::{gen_young_monotone, young_monotone_brute, young_successors};

use crate::exact_arith::ArithError;

#[derive(Debug, thiserror::Error, PartialEq)]
pub enum EnumError {
    #[error("transfer matrix of dimension {0} is too large for determinant expansion")]
    DimensionTooLarge(usize),
    #[error("count at n={n} is not divisible by {divisor}")]
    NonExactDivision { n: i64, divisor: i64 },
    #[error("n={n} is outside the range {lo}..={hi}")]
    OutOfRange { n: i64, lo: i64, hi: i64 },
    #[error("no generator for {0}")]
    UnknownId(String),
    #[error(transparent)]
    Arith(#[from] ArithError),
}
