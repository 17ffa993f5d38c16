//! Exact integral LLL reduction (all Gram–Schmidt data kept as integers).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Rows of a lattice basis, all of the same length.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeBasis {
    pub rows: Vec<Vec<BigInt>>,
}

impl LatticeBasis {
    pub fn new(rows: Vec<Vec<BigInt>>) -> Self {
        let m = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|r| r.len() == m), "ragged lattice basis");
        LatticeBasis { rows }
    }
    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        Self::new(rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect())
    }
    pub fn dim(&self) -> usize {
        self.rows.len()
    }
}

pub fn dot(a: &[BigInt], b: &[BigInt]) -> BigInt {
    a.iter().zip(b).filter(|(x, y)| !x.is_zero() && !y.is_zero()).map(|(x, y)| x * y).sum()
}

fn sub_mul(a: &mut [BigInt], q: &BigInt, b: &[BigInt]) {
    for (x, y) in a.iter_mut().zip(b) {
        if !y.is_zero() {
            *x -= q * y;
        }
    }
}

/// round(a / b) for b > 0.
fn round_div(a: &BigInt, b: &BigInt) -> BigInt {
    (a * BigInt::from(2) + b).div_floor(&(b * BigInt::from(2)))
}

/// LLL-reduces `basis` with parameter `delta` ∈ (1/4, 1].
pub fn lll_reduce(basis: &LatticeBasis, delta: &BigRational) -> LatticeBasis {
    lll_reduce_tracked(basis, delta).0
}

/// As [`lll_reduce`], also returning the unimodular U with U·B = B'.
pub fn lll_reduce_tracked(basis: &LatticeBasis, delta: &BigRational) -> (LatticeBasis, Vec<Vec<BigInt>>) {
    assert!(
        delta > &BigRational::new(1.into(), 4.into()) && delta <= &BigRational::one(),
        "delta must lie in (1/4, 1]"
    );
    let n = basis.dim();
    let mut b = basis.rows.clone();
    let mut u: Vec<Vec<BigInt>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { BigInt::one() } else { BigInt::zero() }).collect())
        .collect();
    if n <= 1 {
        return (LatticeBasis::new(b), u);
    }
    let (dp, dq) = (delta.numer().clone(), delta.denom().clone());
    // 1-based: d[0] = 1, d[i] = Gram determinant of the first i vectors.
    let mut d = vec![BigInt::zero(); n + 1];
    let mut lam = vec![vec![BigInt::zero(); n + 1]; n + 1];
    d[0] = BigInt::one();
    d[1] = dot(&b[0], &b[0]);
    assert!(!d[1].is_zero(), "basis vectors must be linearly independent");
    let mut k = 2usize;
    let mut kmax = 1usize;

    let red = |k: usize, l: usize, b: &mut Vec<Vec<BigInt>>, u: &mut Vec<Vec<BigInt>>, lam: &mut Vec<Vec<BigInt>>, d: &[BigInt]| {
        if (&lam[k][l] * BigInt::from(2)).abs() > d[l] {
            let q = round_div(&lam[k][l], &d[l]);
            let (bl, ul) = (b[l - 1].clone(), u[l - 1].clone());
            sub_mul(&mut b[k - 1], &q, &bl);
            sub_mul(&mut u[k - 1], &q, &ul);
            lam[k][l] -= &q * &d[l];
            for i in 1..l {
                let t = &q * &lam[l][i];
                lam[k][i] -= t;
            }
        }
    };

    while k <= n {
        if k > kmax {
            kmax = k;
            for j in 1..=k {
                let mut s = dot(&b[k - 1], &b[j - 1]);
                for i in 1..j {
                    s = (&d[i] * s - &lam[k][i] * &lam[j][i]) / &d[i - 1];
                }
                if j < k {
                    lam[k][j] = s;
                } else {
                    assert!(!s.is_zero(), "basis vectors must be linearly independent");
                    d[k] = s;
                }
            }
        }
        red(k, k - 1, &mut b, &mut u, &mut lam, &d);
        // Lovász: δ·d_{k-1}² ≤ d_k·d_{k-2} + λ².
        let lhs = &dq * (&d[k] * &d[k - 2] + &lam[k][k - 1] * &lam[k][k - 1]);
        let rhs = &dp * &d[k - 1] * &d[k - 1];
        if lhs < rhs {
            b.swap(k - 1, k - 2);
            u.swap(k - 1, k - 2);
            for j in 1..k - 1 {
                let t = std::mem::take(&mut lam[k][j]);
                lam[k][j] = std::mem::replace(&mut lam[k - 1][j], t);
            }
            let l = lam[k][k - 1].clone();
            let bb = (&d[k - 2] * &d[k] + &l * &l) / &d[k - 1];
            for i in k + 1..=kmax {
                let t = lam[i][k].clone();
                lam[i][k] = (&d[k] * &lam[i][k - 1] - &l * &t) / &d[k - 1];
                lam[i][k - 1] = (&bb * &t + &l * &lam[i][k]) / &d[k];
            }
            d[k - 1] = bb;
            if k > 2 {
                k -= 1;
            }
        } else {
            for l in (1..k - 1).rev() {
                red(k, l, &mut b, &mut u, &mut lam, &d);
            }
            k += 1;
        }
    }
    (LatticeBasis::new(b), u)
}

/// Exact Gram–Schmidt data: (μ, ‖b*ᵢ‖²) over Q, used to check LLL conditions.
pub fn gram_schmidt(basis: &LatticeBasis) -> (Vec<Vec<BigRational>>, Vec<BigRational>) {
    let n = basis.dim();
    let q = |x: &BigInt| BigRational::from_integer(x.clone());
    let rows: Vec<Vec<BigRational>> = basis.rows.iter().map(|r| r.iter().map(q).collect()).collect();
    let mut star: Vec<Vec<BigRational>> = Vec::new();
    let mut mu = vec![vec![BigRational::zero(); n]; n];
    let mut c = Vec::new();
    for i in 0..n {
        let mut v = rows[i].clone();
        for j in 0..i {
            let num: BigRational = rows[i].iter().zip(&star[j]).map(|(a, b)| a * b).sum();
            mu[i][j] = num / &c[j];
            for (x, y) in v.iter_mut().zip(&star[j]) {
                *x -= &mu[i][j] * y;
            }
        }
        c.push(v.iter().map(|x| x * x).sum::<BigRational>());
        star.push(v);
    }
    (mu, c)
}

/// Checks size reduction and the Lovász condition exactly.
pub fn is_lll_reduced(basis: &LatticeBasis, delta: &BigRational) -> bool {
    let (mu, c) = gram_schmidt(basis);
    let half = BigRational::new(1.into(), 2.into());
    for i in 0..basis.dim() {
        for j in 0..i {
            if mu[i][j].abs() > half {
                return false;
            }
        }
        if i > 0 && &c[i] < &((delta - &mu[i][i - 1] * &mu[i][i - 1]) * &c[i - 1]) {
            return false;
        }
    }
    true
}
