//! Recurrence operators in the shift S and their action on sequences.

mod operator;
mod sequence;

use num_rational::BigRational;

pub use operator::{RatOperator, RightDivision, ShiftOperator};
pub use sequence::{Provenance, Sequence};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OreError {
    #[error("operator has no nonzero coefficient")]
    ZeroOperator,
    #[error("window {lo}..={hi} outside the valid range {offset}..={last}")]
    WindowOutOfRange { lo: i64, hi: i64, offset: i64, last: i64 },
    #[error("need {needed} initial terms, got {got}")]
    TooFewInitialTerms { needed: usize, got: usize },
    #[error("leading coefficient vanishes at n = {n} (cannot compute index {index})")]
    SingularLeadingCoefficient { n: i64, index: i64 },
    #[error("unrolled term at index {index} is not an integer: {value}")]
    NonIntegerTerm { index: i64, value: BigRational },
    #[error("parse error: {0}")]
    Parse(String),
}
