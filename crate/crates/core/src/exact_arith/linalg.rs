//! Exact kernels of integer and rational matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::modp::{self, ShoupMul};

/// Dense rational matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct RatMat {
    rows: usize,
    cols: usize,
    data: Vec<BigRational>,
}

impl RatMat {
    pub fn new(rows: usize, cols: usize, data: Vec<BigRational>) -> Self {
        assert!(rows > 0 && cols > 0, "matrix dimensions must be positive");
        assert_eq!(data.len(), rows * cols, "entry count does not match shape");
        RatMat { rows, cols, data }
    }
    pub fn from_rows(rows: Vec<Vec<BigRational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        RatMat::new(r, c, rows.into_iter().flatten().collect())
    }
    pub fn from_i64(rows: &[Vec<i64>]) -> Self {
        RatMat::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
                .collect(),
        )
    }
    pub fn identity(n: usize) -> Self {
        let mut data = vec![BigRational::zero(); n * n];
        for i in 0..n {
            data[i * n + i] = BigRational::one();
        }
        RatMat::new(n, n, data)
    }
    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }
    pub fn get(&self, i: usize, j: usize) -> &BigRational {
        &self.data[i * self.cols + j]
    }
    pub fn mul_vec(&self, v: &[BigRational]) -> Vec<BigRational> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut s = BigRational::zero();
                for j in 0..self.cols {
                    s += self.get(i, j) * &v[j];
                }
                s
            })
            .collect()
    }
    /// Scales every row to integers (row-wise, which keeps the kernel).
    pub fn to_integer_rows(&self) -> IntMat {
        let mut data = Vec::with_capacity(self.data.len());
        for i in 0..self.rows {
            let row = &self.data[i * self.cols..(i + 1) * self.cols];
            let l = row.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
            data.extend(row.iter().map(|x| x.numer() * (&l / x.denom())));
        }
        IntMat { rows: self.rows, cols: self.cols, data }
    }
}

/// Dense integer matrix, row-major.
#[derive(Clone, Debug, PartialEq)]
pub struct IntMat {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<BigInt>,
}

impl IntMat {
    pub fn from_rows(rows: Vec<Vec<BigInt>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |x| x.len());
        assert!(rows.iter().all(|x| x.len() == c), "ragged matrix");
        IntMat { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }
    pub fn row(&self, i: usize) -> &[BigInt] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }
    pub fn mul_vec(&self, v: &[BigInt]) -> Vec<BigInt> {
        (0..self.rows)
            .map(|i| self.row(i).iter().zip(v).map(|(a, b)| a * b).sum())
            .collect()
    }
}

/// A homogeneous system that can be reduced modulo primes and checked exactly.
/// Lets callers avoid materializing huge integer matrices.
pub trait ModularSystem {
    fn nrows(&self) -> usize;
    fn ncols(&self) -> usize;
    /// Row-major image of the matrix modulo `p`.
    fn reduce(&self, p: u64) -> Vec<u64>;
    /// Exact check that `v` lies in the kernel.
    fn annihilates(&self, v: &[BigInt]) -> bool;
}

impl ModularSystem for IntMat {
    fn nrows(&self) -> usize {
        self.rows
    }
    fn ncols(&self) -> usize {
        self.cols
    }
    fn reduce(&self, p: u64) -> Vec<u64> {
        self.data.iter().map(|x| modp::bigint_mod(x, p)).collect()
    }
    fn annihilates(&self, v: &[BigInt]) -> bool {
        self.mul_vec(v).iter().all(Zero::is_zero)
    }
}

/// In-place reduced row echelon form modulo `p`; returns the pivot columns.
pub fn rref_mod(m: &mut [u64], rows: usize, cols: usize, p: u64) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| m[i * cols + c] != 0) else { continue };
        if piv != r {
            for j in 0..cols {
                m.swap(piv * cols + j, r * cols + j);
            }
        }
        let inv = ShoupMul::new(modp::inv_mod(m[r * cols + c], p), p);
        for j in c..cols {
            m[r * cols + j] = inv.mul(m[r * cols + j], p);
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = m[i * cols + c];
            if f == 0 {
                continue;
            }
            let f = ShoupMul::new(f, p);
            let (a, b) = if i < r {
                let (lo, hi) = m.split_at_mut(r * cols);
                (&mut lo[i * cols..(i + 1) * cols], &hi[..cols])
            } else {
                let (lo, hi) = m.split_at_mut(i * cols);
                (&mut hi[..cols], &lo[r * cols..(r + 1) * cols])
            };
            for j in c..cols {
                a[j] = modp::sub_mod(a[j], f.mul(b[j], p), p);
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// Rank modulo `p` by forward elimination only.
pub fn rank_mod(m: &mut [u64], rows: usize, cols: usize, p: u64) -> usize {
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| m[i * cols + c] != 0) else { continue };
        if piv != r {
            for j in 0..cols {
                m.swap(piv * cols + j, r * cols + j);
            }
        }
        let inv = modp::inv_mod(m[r * cols + c], p);
        for i in r + 1..rows {
            let x = m[i * cols + c];
            if x == 0 {
                continue;
            }
            let f = ShoupMul::new(modp::mul_mod(x, inv, p), p);
            let (lo, hi) = m.split_at_mut(i * cols);
            let b = &lo[r * cols..(r + 1) * cols];
            let a = &mut hi[..cols];
            for j in c..cols {
                a[j] = modp::sub_mod(a[j], f.mul(b[j], p), p);
            }
        }
        r += 1;
    }
    r
}

/// Kernel basis read off an RREF: one vector per free column, with a 1 there.
pub fn kernel_from_rref(m: &[u64], cols: usize, pivots: &[usize], p: u64) -> Vec<Vec<u64>> {
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = (p - m[i * cols + f]) % p;
            }
            v
        })
        .collect()
}

/// Rational number p/q with |p|, q ≤ √(m/2) and q·residue ≡ p (mod m).
pub fn rational_reconstruct(residue: &BigInt, modulus: &BigInt) -> Option<BigRational> {
    if modulus <= &BigInt::one() || residue.is_negative() || residue >= modulus {
        return None;
    }
    let bound = (modulus / 2u32).sqrt();
    let (mut r0, mut r1) = (modulus.clone(), residue.clone());
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let (q, r2) = r0.div_rem(&r1);
        let t2 = &t0 - &q * &t1;
        r0 = std::mem::replace(&mut r1, r2);
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() || t1.abs() > bound || !t1.gcd(modulus).is_one() {
        return None;
    }
    Some(BigRational::new(r1, t1))
}

/// Clears denominators, divides by content and makes the first nonzero entry positive.
pub fn primitive_integer(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&l / x.denom())).collect();
    normalize_integer(ints)
}

pub fn normalize_integer(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return v;
    }
    let neg = v.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative());
    for x in v.iter_mut() {
        *x = &*x / &g;
        if neg {
            *x = -&*x;
        }
    }
    v
}

/// Outcome of a modular image: rank signature and kernel residues.
struct Image {
    pivots: Vec<usize>,
    kernel: Vec<Vec<u64>>,
}

fn image<S: ModularSystem>(sys: &S, p: u64) -> Image {
    let (rows, cols) = (sys.nrows(), sys.ncols());
    let mut m = sys.reduce(p);
    let pivots = rref_mod(&mut m, rows, cols, p);
    let kernel = kernel_from_rref(&m, cols, &pivots, p);
    Image { pivots, kernel }
}

/// True when the system has full column rank modulo one prime; this proves
/// the kernel is trivial.
pub fn full_column_rank_mod<S: ModularSystem>(sys: &S, p: u64) -> bool {
    let (rows, cols) = (sys.nrows(), sys.ncols());
    if rows < cols {
        return false;
    }
    let mut m = sys.reduce(p);
    rank_mod(&mut m, rows, cols, p) == cols
}

/// Kernel basis via modular images, CRT, rational reconstruction and an
/// exact certificate. The basis is the echelon one (a unit entry at each
/// free column), normalized with [`normalize_integer`].
pub fn nullspace_modular<S: ModularSystem>(sys: &S) -> Vec<Vec<BigInt>> {
    let cols = sys.ncols();
    let mut stream = modp::prime_stream();
    let mut best: Option<Vec<usize>> = None;
    let mut modulus = BigInt::one();
    let mut acc: Vec<Vec<BigInt>> = Vec::new();
    let mut hard = (0usize, 0usize);
    for _round in 0..4096 {
        let p = stream.next().unwrap();
        let img = image(sys, p);
        if img.pivots.len() == cols {
            return Vec::new();
        }
        let better = match &best {
            None => true,
            Some(b) => img.pivots.len() > b.len() || (img.pivots.len() == b.len() && img.pivots < *b),
        };
        let same = best.as_ref() == Some(&img.pivots);
        if better && !same {
            best = Some(img.pivots.clone());
            modulus = BigInt::from(p);
            acc = img.kernel.iter().map(|v| v.iter().map(|&x| BigInt::from(x)).collect()).collect();
        } else if same {
            let mm = modp::bigint_mod(&modulus, p);
            let minv = modp::inv_mod(mm, p);
            for (a, v) in acc.iter_mut().zip(&img.kernel) {
                for (x, &r) in a.iter_mut().zip(v) {
                    let xm = modp::bigint_mod(x, p);
                    let t = modp::mul_mod(modp::sub_mod(r, xm, p), minv, p);
                    if t != 0 {
                        *x += &modulus * t;
                    }
                }
            }
            modulus *= p;
        } else {
            continue;
        }
        if let Some(vs) = try_lift(&acc, &modulus, &mut hard) {
            if vs.iter().all(|v| sys.annihilates(v)) {
                return vs;
            }
        }
    }
    panic!("modular nullspace did not stabilize");
}

fn try_lift(acc: &[Vec<BigInt>], m: &BigInt, hard: &mut (usize, usize)) -> Option<Vec<Vec<BigInt>>> {
    // Probe the entry that failed last time before doing all the work.
    if let Some(x) = acc.get(hard.0).and_then(|v| v.get(hard.1)) {
        rational_reconstruct(x, m)?;
    }
    let mut out = Vec::with_capacity(acc.len());
    for (i, v) in acc.iter().enumerate() {
        let mut q = Vec::with_capacity(v.len());
        for (j, x) in v.iter().enumerate() {
            match rational_reconstruct(x, m) {
                Some(r) => q.push(r),
                None => {
                    *hard = (i, j);
                    return None;
                }
            }
        }
        out.push(primitive_integer(&q));
    }
    Some(out)
}

/// Kernel basis by integer-only Gauss–Jordan elimination (rows kept primitive).
/// Slow but independent of the modular machinery.
pub fn nullspace_fraction_free(a: &IntMat) -> Vec<Vec<BigInt>> {
    let (rows, cols) = (a.rows, a.cols);
    let mut m: Vec<Vec<BigInt>> = (0..rows).map(|i| a.row(i).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(piv, r);
        for i in 0..rows {
            if i == r || m[i][c].is_zero() {
                continue;
            }
            let (pv, f) = (m[r][c].clone(), m[i][c].clone());
            let g = pv.gcd(&f);
            let (pv, f) = (pv / &g, f / &g);
            let new: Vec<BigInt> = (0..cols).map(|j| &pv * &m[i][j] - &f * &m[r][j]).collect();
            m[i] = normalize_row(new);
        }
        pivots.push(c);
        r += 1;
    }
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![BigRational::zero(); cols];
            v[f] = BigRational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -BigRational::new(m[i][f].clone(), m[i][pc].clone());
            }
            primitive_integer(&v)
        })
        .collect()
}

fn normalize_row(v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() || g.is_one() {
        v
    } else {
        v.into_iter().map(|x| x / &g).collect()
    }
}

/// Systems at most this many entries go straight to the fraction-free path.
const TINY: usize = 48;

/// Right kernel of `a`, each vector primitive integral with positive leading entry.
pub fn nullspace(a: &RatMat) -> Vec<Vec<BigRational>> {
    let ints = a.to_integer_rows();
    let basis = if a.rows() * a.cols() <= TINY {
        nullspace_fraction_free(&ints)
    } else {
        nullspace_modular(&ints)
    };
    basis
        .into_iter()
        .map(|v| v.into_iter().map(BigRational::from_integer).collect())
        .collect()
}

/// Exact rank via the kernel dimension.
pub fn rank(a: &RatMat) -> usize {
    a.cols() - nullspace(a).len()
}
