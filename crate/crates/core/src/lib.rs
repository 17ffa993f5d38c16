//! Guess, verify and compute linear recurrences with polynomial coefficients.

pub mod enumerators;
pub mod exact_arith;
pub mod guessing;
pub mod ore_shift;
pub mod workbench;

pub use exact_arith::{BigInt, BigRat, MultiPoly, RatMat, UniPoly};
pub use ore_shift::{Provenance, Sequence, ShiftOperator};
