//! Permanents of the (n+2)×(n+2) all-ones matrix with zeros along the path
//! from the top-left corner that alternately takes two steps right and two down.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::exact_arith::factorial;
use crate::ore_shift::{Provenance, Sequence};

/// Zero cells in path order.
pub fn a098926_path(m: usize) -> Vec<(usize, usize)> {
    let mut cells = vec![(0, 0)];
    let (mut i, mut j) = (0usize, 0usize);
    'walk: loop {
        for (di, dj) in [(0, 1), (0, 1), (1, 0), (1, 0)] {
            i += di;
            j += dj;
            if i >= m || j >= m {
                break 'walk;
            }
            cells.push((i, j));
        }
    }
    cells
}

pub fn a098926_matrix(n: u64) -> Vec<Vec<i64>> {
    let m = n as usize + 2;
    let mut a = vec![vec![1i64; m]; m];
    for (i, j) in a098926_path(m) {
        a[i][j] = 0;
    }
    a
}

/// Ryser's formula, subsets visited in Gray-code order so each step updates
/// the row sums by one column.
pub fn permanent_ryser(a: &[Vec<i64>]) -> BigInt {
    let m = a.len();
    // Partial sums stay below 2^m · m^m, inside i128 for m ≤ 22.
    assert!((1..=22).contains(&m));
    let mut row_sums = vec![0i64; m];
    let mut total: i128 = 0;
    let mut in_set = vec![false; m];
    for g in 1u64..1 << m {
        let col = g.trailing_zeros() as usize;
        let sign = if in_set[col] { -1 } else { 1 };
        in_set[col] = !in_set[col];
        for (s, row) in row_sums.iter_mut().zip(a) {
            *s += sign * row[col];
        }
        let size = (g ^ (g >> 1)).count_ones() as usize;
        let prod: i128 = row_sums.iter().map(|&x| x as i128).product();
        if (m - size) % 2 == 0 {
            total += prod;
        } else {
            total -= prod;
        }
    }
    BigInt::from(total)
}

/// Row-by-row DP over the set of used columns.
pub fn permanent_dp(a: &[Vec<i64>]) -> BigInt {
    let m = a.len();
    assert!(m <= 22);
    let mut ways = vec![BigInt::zero(); 1 << m];
    ways[0] = BigInt::from(1);
    for mask in 0usize..1 << m {
        if ways[mask].is_zero() {
            continue;
        }
        let row = mask.count_ones() as usize;
        if row == m {
            continue;
        }
        let w = ways[mask].clone();
        for (c, &x) in a[row].iter().enumerate() {
            if mask >> c & 1 == 0 && x != 0 {
                ways[mask | 1 << c] += &w * x;
            }
        }
    }
    ways[(1 << m) - 1].clone()
}

/// perm(J − Z) = Σ_k (−1)^k r_k (m−k)! with r_k the rook numbers of the zero
/// path. Consecutive path cells share a row or a column and no row or column
/// is revisited, so the rook numbers follow from a scan along the path.
pub fn a098926_rook(n: u64) -> BigInt {
    let m = n as usize + 2;
    let path = a098926_path(m);
    // rooks[(row busy, col busy)][k]
    let mut st = [[vec![BigInt::zero(); m + 1], vec![BigInt::zero(); m + 1]], [vec![BigInt::zero(); m + 1], vec![BigInt::zero(); m + 1]]];
    st[0][0][0] = BigInt::from(1);
    for (idx, &(i, _)) in path.iter().enumerate() {
        if idx > 0 {
            let (pi, _) = path[idx - 1];
            let mut moved = [[vec![BigInt::zero(); m + 1], vec![BigInt::zero(); m + 1]], [vec![BigInt::zero(); m + 1], vec![BigInt::zero(); m + 1]]];
            for r in 0..2 {
                for c in 0..2 {
                    // Keep the shared line's flag, clear the new one.
                    let (nr, nc) = if pi == i { (r, 0) } else { (0, c) };
                    for k in 0..=m {
                        let v = std::mem::take(&mut st[r][c][k]);
                        moved[nr][nc][k] += v;
                    }
                }
            }
            st = moved;
        }
        let mut placed = vec![BigInt::zero(); m + 1];
        for k in 0..m {
            placed[k + 1] = st[0][0][k].clone();
        }
        for k in 0..=m {
            st[1][1][k] += &placed[k];
        }
    }
    let mut total = BigInt::zero();
    for k in 0..=m {
        let rk: BigInt = (0..2).flat_map(|r| (0..2).map(move |c| (r, c))).map(|(r, c)| st[r][c][k].clone()).sum();
        let term = rk * factorial((m - k) as u64);
        if k % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// Terms a_1..=a_{n_max} by Ryser's formula.
pub fn gen_a098926(n_max: u64) -> Sequence {
    Sequence::new(1, (1..=n_max).map(|n| permanent_ryser(&a098926_matrix(n))).collect(), Provenance::Generator)
}
