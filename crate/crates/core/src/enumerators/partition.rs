//! Arrays cut out by linear equations and inequalities: the size-5 triangle
//! with equal line sums, and the size-4 hexagon that increases towards E, SW, SE.

use num_bigint::BigInt;

use crate::ore_shift::{Provenance, Sequence};

/// Solutions with every entry in {0..m}. Free: c21, c22, c31, c32, c33, c53,
/// c41; the other five entries follow from the equations.
pub fn a195806_count(m: u64) -> BigInt {
    let m = m as i64;
    let inb = |x: i64| (0..=m).contains(&x);
    let mut count = 0u64;
    for c21 in 0..=m {
        for c22 in 0..=m {
            let s2 = c21 + c22;
            for c31 in 0..=m {
                for c32 in 0..=m {
                    for c33 in 0..=m {
                        for c53 in 0..=m {
                            let c42 = c32 + c33 - c53;
                            let c43 = c31 + c32 - c53;
                            if !inb(c42) || !inb(c43) {
                                continue;
                            }
                            for c41 in 0..=m {
                                let c52 = s2 - c41;
                                let c44 = c21 + c31 + c41 - c22 - c33;
                                let c54 = s2 - c44;
                                if !(inb(c52) && inb(c44) && inb(c54)) {
                                    continue;
                                }
                                let row4 = c41 + c42 + c43 + c44;
                                if row4 == c22 + c32 + c42 + c52
                                    && row4 == c21 + c32 + c43 + c54
                                    && c52 + c53 + c54 == c21 + c31 + c41
                                {
                                    count += 1;
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    BigInt::from(count)
}

/// The displayed system checked on a full assignment
/// [c21, c22, c31, c32, c33, c41, c42, c43, c44, c52, c53, c54].
pub fn a195806_satisfies(c: &[i64; 12]) -> bool {
    let [c21, c22, c31, c32, c33, c41, c42, c43, c44, c52, c53, c54] = *c;
    let e1 = [c21 + c22, c41 + c52, c54 + c44];
    let e2 = [c31 + c32 + c33, c31 + c42 + c53, c33 + c43 + c53];
    let e3 = [c41 + c42 + c43 + c44, c22 + c32 + c42 + c52, c21 + c32 + c43 + c54];
    let e4 = [c21 + c31 + c41, c52 + c53 + c54, c22 + c33 + c44];
    [e1, e2, e3, e4].iter().all(|e| e[0] == e[1] && e[1] == e[2])
}

/// Raw enumeration of {0..m}^12.
pub fn a195806_raw(m: u64) -> BigInt {
    let b = m as i64 + 1;
    let mut count = 0u64;
    for code in 0..b.pow(12) {
        let mut c = [0i64; 12];
        let mut x = code;
        for v in c.iter_mut() {
            *v = x % b;
            x /= b;
        }
        count += a195806_satisfies(&c) as u64;
    }
    BigInt::from(count)
}

/// Terms a_0..=a_{n_max}, where a_k counts entries in {0..k+1}.
pub fn gen_a195806(n_max: u64) -> Sequence {
    Sequence::new(0, (0..=n_max).map(|k| a195806_count(k + 1)).collect(), Provenance::Generator)
}

/// Row lengths of the hexagon from north to south.
pub const HEX_ROWS: [usize; 7] = [4, 5, 6, 7, 6, 5, 4];

fn nondecreasing_rows(len: usize, m: u8) -> Vec<Vec<u8>> {
    fn go(len: usize, m: u8, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        let lo = cur.last().copied().unwrap_or(0);
        for v in lo..=m {
            cur.push(v);
            go(len, m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(len, m, &mut Vec::new(), &mut out);
    out
}

/// Whether `lower` may sit directly south of `upper`. Every upper cell is
/// bounded by its SW and SE neighbours; since rows increase eastwards only
/// the western of the two matters when the rows widen, the eastern when they narrow.
fn hex_fits(upper: &[u8], lower: &[u8]) -> bool {
    if lower.len() > upper.len() {
        upper.iter().zip(lower).all(|(u, l)| l >= u)
    } else {
        lower.iter().zip(&upper[1..]).all(|(l, u)| l >= u)
    }
}

/// Row-by-row DP over nondecreasing rows.
pub fn a216940_count(m: u64) -> BigInt {
    let m = m as u8;
    let mut rows = nondecreasing_rows(HEX_ROWS[0], m);
    let mut w: Vec<u128> = vec![1; rows.len()];
    for &len in &HEX_ROWS[1..] {
        let next_rows = nondecreasing_rows(len, m);
        let next_w = next_rows
            .iter()
            .map(|lo| rows.iter().zip(&w).filter(|(up, _)| hex_fits(up, lo)).map(|(_, x)| x).sum())
            .collect();
        rows = next_rows;
        w = next_w;
    }
    BigInt::from(w.iter().sum::<u128>())
}

/// Cell-by-cell backtracking over the hexagon in (x, y) coordinates, rows
/// y = 3..=−3 with x = 0..7−|y|; every order relation is an explicit edge.
pub fn a216940_backtrack(m: u64) -> BigInt {
    let mut cells: Vec<(i32, i32)> = Vec::new();
    for y in (-3..=3).rev() {
        for x in 0..7 - (y as i32).abs() {
            cells.push((x, y));
        }
    }
    let at = |p: (i32, i32)| cells.iter().position(|&q| q == p);
    // (a, b): value at a ≤ value at b.
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for (i, &(x, y)) in cells.iter().enumerate() {
        let (sw, se) = if y >= 1 { ((x, y - 1), (x + 1, y - 1)) } else { ((x - 1, y - 1), (x, y - 1)) };
        for q in [(x + 1, y), sw, se] {
            if let Some(j) = at(q) {
                edges.push((i, j));
            }
        }
    }
    // Lower bounds for cell k from the edges into it; all sources come earlier.
    let preds: Vec<Vec<usize>> = (0..cells.len())
        .map(|k| {
            let p: Vec<usize> = edges.iter().filter(|e| e.1 == k).map(|e| e.0).collect();
            assert!(p.iter().all(|&a| a < k));
            p
        })
        .collect();
    fn go(k: usize, m: u8, vals: &mut Vec<u8>, preds: &[Vec<usize>]) -> u64 {
        if k == preds.len() {
            return 1;
        }
        let lo = preds[k].iter().map(|&a| vals[a]).max().unwrap_or(0);
        let mut total = 0;
        for v in lo..=m {
            vals.push(v);
            total += go(k + 1, m, vals, preds);
            vals.pop();
        }
        total
    }
    BigInt::from(go(0, m as u8, &mut Vec::new(), &preds))
}

/// Terms a_1..=a_{n_max}, entries in {0..n}.
pub fn gen_a216940(n_max: u64) -> Sequence {
    Sequence::new(1, (1..=n_max).map(a216940_count).collect(), Provenance::Generator)
}
