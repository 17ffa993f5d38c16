//! Exact integers, rationals, polynomials and kernels.

mod hyper;
mod linalg;
pub mod modp;
mod multipoly;
mod ratfunc;
mod unipoly;

pub use linalg::{
    full_column_rank_mod, kernel_from_rref, normalize_integer, nullspace, nullspace_fraction_free, nullspace_modular,
    primitive_integer, rank, rank_mod, rational_reconstruct, rref_mod, IntMat, ModularSystem, RatMat,
};
pub use hyper::{Hyper, HyperFactor, Lin};
pub use multipoly::{mpoly_mul, pack, unpack, MultiPoly, MAX_EXP, MAX_VARS};
pub use num_bigint::BigInt;
pub use num_rational::BigRational as BigRat;
pub use ratfunc::RatFunc;
pub use unipoly::UniPoly;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ArithError {
    #[error("variable sets differ: {0:?} vs {1:?}")]
    VariableMismatch(Vec<String>, Vec<String>),
    #[error("division by zero")]
    DivisionByZero,
    #[error("inexact division")]
    NotDivisible,
    #[error("parse error: {0}")]
    Parse(String),
}

/// Binomial coefficient with C(n, k) = 0 outside 0 ≤ k ≤ n.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if k < 0 || n < 0 || k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut r = BigInt::from(1);
    for i in 0..k {
        r = r * (n - i) / (i + 1);
    }
    r
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::from(1), |a, i| a * i)
}
