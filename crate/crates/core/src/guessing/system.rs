//! The ansatz system Σ_{i,j} c_{i,j} nʲ a_{n+i} = 0.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exact_arith::{modp, ModularSystem};
use crate::ore_shift::ShiftOperator;

/// Terms a_{offset}, …; windows n = offset ..= offset + rows − 1.
pub struct AnsatzSystem<'a> {
    pub terms: &'a [BigInt],
    pub offset: i64,
    pub order: usize,
    pub degree: usize,
}

impl<'a> AnsatzSystem<'a> {
    pub fn new(terms: &'a [BigInt], offset: i64, order: usize, degree: usize) -> Self {
        AnsatzSystem { terms, offset, order, degree }
    }
    pub fn unknowns(&self) -> usize {
        (self.order + 1) * (self.degree + 1)
    }
    pub fn equations(&self) -> usize {
        self.terms.len().saturating_sub(self.order)
    }
    /// Column of the monomial nʲ Sⁱ.
    pub fn col(&self, i: usize, j: usize) -> usize {
        i * (self.degree + 1) + j
    }
    /// Exact matrix row for window n.
    pub fn row(&self, k: usize) -> Vec<BigInt> {
        let n = BigInt::from(self.offset + k as i64);
        let mut out = vec![BigInt::zero(); self.unknowns()];
        for i in 0..=self.order {
            let mut v = self.terms[k + i].clone();
            for j in 0..=self.degree {
                out[self.col(i, j)] = v.clone();
                v *= &n;
            }
        }
        out
    }
    pub fn operator(&self, v: &[BigInt]) -> Option<ShiftOperator> {
        let c: Vec<Vec<BigInt>> = (0..=self.order).map(|i| v[self.col(i, 0)..=self.col(i, self.degree)].to_vec()).collect();
        ShiftOperator::from_int_matrix(&c).ok().map(|l| l.normalized())
    }
}

impl ModularSystem for AnsatzSystem<'_> {
    fn nrows(&self) -> usize {
        self.equations()
    }
    fn ncols(&self) -> usize {
        self.unknowns()
    }
    fn reduce(&self, p: u64) -> Vec<u64> {
        let t: Vec<u64> = self.terms.iter().map(|x| modp::bigint_mod(x, p)).collect();
        let (rows, cols) = (self.nrows(), self.ncols());
        let mut m = vec![0u64; rows * cols];
        for k in 0..rows {
            let n = modp::i64_mod(self.offset + k as i64, p);
            for i in 0..=self.order {
                let mut v = t[k + i];
                for j in 0..=self.degree {
                    m[k * cols + self.col(i, j)] = v;
                    v = modp::mul_mod(v, n, p);
                }
            }
        }
        m
    }
    fn annihilates(&self, v: &[BigInt]) -> bool {
        let polys: Vec<&[BigInt]> = (0..=self.order).map(|i| &v[self.col(i, 0)..=self.col(i, self.degree)]).collect();
        (0..self.equations()).all(|k| {
            let n = BigInt::from(self.offset + k as i64);
            let mut s = BigInt::zero();
            for (i, p) in polys.iter().enumerate() {
                let mut acc = BigInt::zero();
                for c in p.iter().rev() {
                    acc = acc * &n + c;
                }
                if !acc.is_zero() {
                    s += acc * &self.terms[k + i];
                }
            }
            s.is_zero()
        })
    }
}
