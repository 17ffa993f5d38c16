//! Transfer matrices with catalytic variables.

use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::EnumError;
use crate::exact_arith::{mpoly_mul, MultiPoly};
use crate::ore_shift::{Provenance, Sequence};

/// Word length at which term n is read.
pub type LengthRule = Arc<dyn Fn(u64) -> usize + Send + Sync>;
/// Reads term n off the counting polynomial p_L.
pub type ReadRule = Arc<dyn Fn(&MultiPoly, u64) -> BigInt + Send + Sync>;
/// Exponent ceilings that suffice for every term up to n_max.
pub type CapRule = Arc<dyn Fn(u64) -> Vec<u32> + Send + Sync>;

#[derive(Clone)]
pub struct Extraction {
    pub length: LengthRule,
    pub read: ReadRule,
    pub cap: CapRule,
}

/// p_L = v_init · M^{L−1} · v_final for L ≥ 1 and p_0 = 1.
#[derive(Clone)]
pub struct TransferSystem {
    pub states: Vec<String>,
    pub vars: Vec<String>,
    pub matrix: Vec<Vec<MultiPoly>>,
    pub v_init: Vec<MultiPoly>,
    pub v_final: Vec<MultiPoly>,
    pub extraction: Extraction,
    pub offset: i64,
    /// The generating function is Σ_k (v_init M^k v_final) t^{k + gf_shift}.
    pub gf_shift: u32,
}

impl TransferSystem {
    pub fn dim(&self) -> usize {
        self.states.len()
    }

    /// Counting polynomials p_1, …, p_len, truncated at `cap`.
    pub fn polys(&self, len: usize, cap: Option<&[u32]>) -> Vec<MultiPoly> {
        let mut out = Vec::with_capacity(len);
        let mut v: Vec<MultiPoly> = self.v_init.iter().map(|p| truncate(p, cap)).collect();
        for l in 1..=len {
            if l > 1 {
                v = self.step(&v, cap);
            }
            let mut p = MultiPoly::zero(&self.vars);
            for (a, b) in v.iter().zip(&self.v_final) {
                p.add_assign(&mpoly_mul(a, b, cap).expect("same variables")).expect("same variables");
            }
            out.push(p);
        }
        out
    }

    fn step(&self, v: &[MultiPoly], cap: Option<&[u32]>) -> Vec<MultiPoly> {
        let d = self.dim();
        let mut out = vec![MultiPoly::zero(&self.vars); d];
        for (i, vi) in v.iter().enumerate() {
            if vi.is_zero() {
                continue;
            }
            for (j, o) in out.iter_mut().enumerate() {
                let m = &self.matrix[i][j];
                if !m.is_zero() {
                    o.add_assign(&mpoly_mul(vi, m, cap).expect("same variables")).expect("same variables");
                }
            }
        }
        out
    }
}

fn truncate(p: &MultiPoly, cap: Option<&[u32]>) -> MultiPoly {
    match cap {
        Some(c) => p.clone().with_cap(c.to_vec()),
        None => p.clone(),
    }
}

/// Terms a_offset..=a_{n_max} by iterating v ← v·M with exponents capped.
pub fn tm_terms(sys: &TransferSystem, n_max: u64) -> Sequence {
    let ex = &sys.extraction;
    let cap = (ex.cap)(n_max);
    let first = sys.offset.max(0) as u64;
    let len = (ex.length)(n_max);
    let polys = sys.polys(len, Some(&cap));
    let one = MultiPoly::one(&sys.vars);
    let terms = (first..=n_max)
        .map(|n| {
            let l = (ex.length)(n);
            let p = if l == 0 { &one } else { &polys[l - 1] };
            (ex.read)(p, n)
        })
        .collect();
    Sequence::new(first as i64, terms, Provenance::Generator)
}

pub const TM_GF_MAX_DIM: usize = 16;

/// The generating function as (numerator, denominator) over `vars` + [t],
/// via Cramer's rule on I − tM: each entry of (I − tM)⁻¹ v_final is a
/// determinant with one column replaced by v_final.
pub fn tm_gf(sys: &TransferSystem) -> Result<(MultiPoly, MultiPoly), EnumError> {
    let d = sys.dim();
    if d > TM_GF_MAX_DIM {
        return Err(EnumError::DimensionTooLarge(d));
    }
    let mut vars = sys.vars.clone();
    vars.push("t".into());
    let nv = vars.len();
    let lift = |p: &MultiPoly| -> MultiPoly {
        let mut out = MultiPoly::zero(&vars);
        for (mut e, c) in p.terms() {
            e.push(0);
            out.add_assign(&MultiPoly::monomial(&vars, &e, c.clone())).unwrap();
        }
        out
    };
    let t = MultiPoly::var(&vars, nv - 1);
    let a: Vec<Vec<MultiPoly>> = (0..d)
        .map(|i| {
            (0..d)
                .map(|j| {
                    let tm = lift(&sys.matrix[i][j]).mul(&t).unwrap().neg();
                    if i == j {
                        tm.add(&MultiPoly::one(&vars)).unwrap()
                    } else {
                        tm
                    }
                })
                .collect()
        })
        .collect();
    // F = v_init · y with (I − tM) y = v_final.
    let den = det_bareiss(a.clone());
    let fin: Vec<MultiPoly> = sys.v_final.iter().map(&lift).collect();
    let mut num = MultiPoly::zero(&vars);
    for (k, vi) in sys.v_init.iter().enumerate() {
        if vi.is_zero() {
            continue;
        }
        let mut ak = a.clone();
        for (row, f) in ak.iter_mut().zip(&fin) {
            row[k] = f.clone();
        }
        num.add_assign(&lift(vi).mul(&det_bareiss(ak)).unwrap()).unwrap();
    }
    let mut e = vec![0; nv];
    e[nv - 1] = sys.gf_shift;
    num = num.mul(&MultiPoly::monomial(&vars, &e, BigInt::one())).unwrap();
    Ok((num, den))
}

/// Fraction-free determinant over Z[vars].
pub fn det_bareiss(mut a: Vec<Vec<MultiPoly>>) -> MultiPoly {
    let n = a.len();
    if n == 0 {
        return MultiPoly::one::<&str>(&[]);
    }
    let vars = a[0][0].vars().to_vec();
    let mut prev = MultiPoly::one(&vars);
    let mut sign = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return MultiPoly::zero(&vars);
        };
        if p != k {
            a.swap(p, k);
            sign = !sign;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let x = a[k][k].mul(&a[i][j]).unwrap().sub(&a[i][k].mul(&a[k][j]).unwrap()).unwrap();
                a[i][j] = x.exact_div(&prev).expect("Bareiss division is exact");
            }
            a[i][k] = MultiPoly::zero(&vars);
        }
        prev = a[k][k].clone();
    }
    if sign {
        prev.neg()
    } else {
        prev
    }
}

/// Coefficients of tᵏ, k < len, of num/den where den has constant term ±1 in
/// t (the last variable). Other exponents are capped at `cap`.
pub fn gf_series(num: &MultiPoly, den: &MultiPoly, len: usize, cap: Option<&[u32]>) -> Vec<MultiPoly> {
    let ti = num.nvars() - 1;
    let cap_full: Option<Vec<u32>> = cap.map(|c| {
        let mut c = c.to_vec();
        c.push(0);
        c
    });
    let capr = cap_full.as_deref();
    let split = |p: &MultiPoly| -> Vec<MultiPoly> {
        let deg = p.degree_in(ti).unwrap_or(0);
        (0..=deg).map(|k| truncate(&p.coeff_of_var(ti, k), capr)).collect()
    };
    let ns = split(num);
    let ds = split(den);
    let d0 = ds[0].coeff(&vec![0; num.nvars()]);
    assert!(ds[0].len() == 1 && (d0 == BigInt::one() || d0 == -BigInt::one()), "denominator must start with ±1");
    let mut c: Vec<MultiPoly> = Vec::with_capacity(len);
    for k in 0..len {
        let mut acc = ns.get(k).cloned().unwrap_or_else(|| MultiPoly::zero(num.vars()));
        for j in 1..ds.len().min(k + 1) {
            acc = acc.sub(&mpoly_mul(&ds[j], &c[k - j], capr).unwrap()).unwrap();
        }
        c.push(if d0 == BigInt::one() { acc } else { acc.neg() });
    }
    c
}

/// Cross-multiplication equality of two fractions.
pub fn same_fraction(a: &(MultiPoly, MultiPoly), b: &(MultiPoly, MultiPoly)) -> bool {
    a.0.mul(&b.1).unwrap() == b.0.mul(&a.1).unwrap()
}

fn names(prefix: &str, k: usize) -> Vec<String> {
    (1..=k).map(|i| format!("{prefix}{i}")).collect()
}

/// Words over {1..m} using every letter n times with neighbours differing by at
/// most one. Variables x1..x_{m−1}; the count of m is implied by the length.
pub fn adjacent_permutation_system(m: usize) -> TransferSystem {
    assert!(m >= 1);
    let vars = names("x", m - 1);
    let weight = |j: usize| if j + 1 < m { MultiPoly::var(&vars, j) } else { MultiPoly::one(&vars) };
    let matrix = (0..m)
        .map(|i| (0..m).map(|j| if i.abs_diff(j) <= 1 { weight(j) } else { MultiPoly::zero(&vars) }).collect())
        .collect();
    let mm = m as u64;
    TransferSystem {
        states: (1..=m).map(|i| i.to_string()).collect(),
        v_init: (0..m).map(weight).collect(),
        v_final: vec![MultiPoly::one(&vars); m],
        matrix,
        extraction: Extraction {
            length: Arc::new(move |n| (mm * n) as usize),
            read: Arc::new(move |p, n| p.coeff(&vec![n as u32; m - 1])),
            cap: Arc::new(move |n| vec![n as u32; m - 1]),
        },
        vars,
        offset: 0,
        gf_shift: 0,
    }
}

/// The 12 rows (i, j), i ≠ j, over {0..3}.
pub fn a199250_states() -> Vec<(u8, u8)> {
    (0..4u8).flat_map(|i| (0..4u8).filter(move |&j| j != i).map(move |j| (i, j))).collect()
}

/// n×2 arrays over {0..3}, values introduced in row-major order, value
/// counts within one of each other, no equal horizontal or vertical neighbours.
pub fn a199250_system() -> TransferSystem {
    let vars: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    let st = a199250_states();
    let weight = |s: (u8, u8)| {
        let mut e = [0u32; 3];
        for v in [s.0, s.1] {
            if v < 3 {
                e[v as usize] += 1;
            }
        }
        MultiPoly::monomial(&vars, &e, BigInt::one())
    };
    let matrix = st
        .iter()
        .map(|&a| {
            st.iter()
                .map(|&b| if a.0 == b.0 || a.1 == b.1 { MultiPoly::zero(&vars) } else { weight(b) })
                .collect()
        })
        .collect();
    let mut v_init = vec![MultiPoly::zero(&vars); st.len()];
    v_init[0] = weight((0, 1));
    TransferSystem {
        states: st.iter().map(|(a, b)| format!("({a},{b})")).collect(),
        matrix,
        v_init,
        v_final: vec![MultiPoly::one(&vars); st.len()],
        extraction: Extraction {
            length: Arc::new(|n| n as usize),
            read: Arc::new(a199250_read),
            cap: Arc::new(|n| vec![n.div_ceil(2) as u32; 3]),
        },
        vars,
        offset: 1,
        gf_shift: 1,
    }
}

/// Balanced coefficient sum of p_n halved (the 2 ↔ 3 symmetry); n = 1 is the
/// exceptional single row (0, 1).
pub fn a199250_read(p: &MultiPoly, n: u64) -> BigInt {
    if n == 1 {
        return BigInt::one();
    }
    let k = (n / 2) as u32;
    let total = 2 * n as u32;
    let s = p.coeff_sum(|e| {
        let w = total - e.iter().sum::<u32>();
        let counts = [e[0], e[1], e[2], w];
        if n % 2 == 0 {
            counts.iter().all(|&c| c == k)
        } else {
            counts.iter().all(|&c| c == k || c == k + 1) && counts.iter().filter(|&&c| c == k).count() == 2
        }
    });
    let (q, r) = s.div_rem(&BigInt::from(2));
    assert!(r.is_zero(), "odd balanced count");
    q
}

/// The single-state system M = (x) with ⟨xⁿ⟩ read at length n.
pub fn geometric_system() -> TransferSystem {
    let vars = vec!["x".to_string()];
    let x = MultiPoly::var(&vars, 0);
    TransferSystem {
        states: vec!["s".into()],
        matrix: vec![vec![x.clone()]],
        v_init: vec![x],
        v_final: vec![MultiPoly::one(&vars)],
        extraction: Extraction {
            length: Arc::new(|n| n as usize),
            read: Arc::new(|p, n| p.coeff(&[n as u32])),
            cap: Arc::new(|n| vec![n as u32]),
        },
        vars,
        offset: 0,
        gf_shift: 0,
    }
}

/// 4×n arrays holding n copies of each of 0..3 with no equal horizontal
/// neighbours; states are the 256 columns. The count is divided by 4! for
/// the order in which values are introduced.
pub fn a264947_system() -> TransferSystem {
    let vars: Vec<String> = ["x", "y", "z"].iter().map(|s| s.to_string()).collect();
    let cols: Vec<[u8; 4]> = (0..256u32).map(|c| std::array::from_fn(|i| ((c >> (2 * i)) & 3) as u8)).collect();
    let weight = |c: &[u8; 4]| {
        let mut e = [0u32; 3];
        for &v in c {
            if v < 3 {
                e[v as usize] += 1;
            }
        }
        MultiPoly::monomial(&vars, &e, BigInt::one())
    };
    let matrix = cols
        .iter()
        .map(|a| {
            cols.iter()
                .map(|b| if a.iter().zip(b).all(|(x, y)| x != y) { weight(b) } else { MultiPoly::zero(&vars) })
                .collect()
        })
        .collect();
    TransferSystem {
        states: cols.iter().map(|c| format!("{}{}{}{}", c[0], c[1], c[2], c[3])).collect(),
        v_init: cols.iter().map(weight).collect(),
        v_final: vec![MultiPoly::one(&vars); cols.len()],
        matrix,
        extraction: Extraction {
            length: Arc::new(|n| n as usize),
            read: Arc::new(|p, n| {
                let (q, r) = p.coeff(&[n as u32; 3]).div_rem(&BigInt::from(24));
                assert!(r.is_zero(), "count not divisible by 24");
                q
            }),
            cap: Arc::new(|n| vec![n as u32; 3]),
        },
        vars,
        offset: 1,
        gf_shift: 0,
    }
}
