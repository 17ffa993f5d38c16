//! Arrays v ∈ {0..3}^{n+2} whose second differences combine to 0 under some
//! sign vector.
//!
//! A state is (v_{k−1}, v_k, S) where S ⊆ {0..19} holds the absolute values of
//! all signed sums of the second differences so far. Sums beyond 19 can be
//! dropped: any zero combination that climbs past 19 has another that does not.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::ore_shift::{Provenance, Sequence, ShiftOperator};

pub const BOUND: u32 = 19;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct State {
    pub prev: u8,
    pub last: u8,
    /// Bit s set when s is a reachable |signed sum|.
    pub sums: u32,
}

impl State {
    pub fn accepting(&self) -> bool {
        self.sums & 1 == 1
    }

    /// Appending c; None when no signed sum stays within the bound.
    pub fn push(&self, c: u8) -> Option<State> {
        let d = self.prev as i32 - 2 * self.last as i32 + c as i32;
        let mut out = 0u32;
        for s in 0..=BOUND as i32 {
            if self.sums >> s & 1 == 1 {
                for t in [(s + d).abs(), (s - d).abs()] {
                    if t <= BOUND as i32 {
                        out |= 1 << t;
                    }
                }
            }
        }
        (out != 0).then_some(State { prev: self.last, last: c, sums: out })
    }
}

pub struct Machine {
    pub states: Vec<State>,
    /// successor[i][c]: index of the state after appending digit c.
    pub successor: Vec<[Option<usize>; 4]>,
    /// States of the length-3 arrays, with multiplicity.
    pub init: Vec<(usize, u64)>,
}

/// Forward closure from the successors of the 16 length-2 seeds.
pub fn build_a250556_machine() -> Machine {
    let mut index: HashMap<State, usize> = HashMap::new();
    let mut states = Vec::new();
    let mut init: HashMap<usize, u64> = HashMap::new();
    let mut stack = Vec::new();
    let mut intern = |s: State, states: &mut Vec<State>, stack: &mut Vec<usize>| -> usize {
        *index.entry(s).or_insert_with(|| {
            states.push(s);
            stack.push(states.len() - 1);
            states.len() - 1
        })
    };
    for a in 0..4u8 {
        for b in 0..4u8 {
            let seed = State { prev: a, last: b, sums: 1 };
            for c in 0..4u8 {
                if let Some(t) = seed.push(c) {
                    let i = intern(t, &mut states, &mut stack);
                    *init.entry(i).or_insert(0) += 1;
                }
            }
        }
    }
    let mut succ: HashMap<usize, [Option<usize>; 4]> = HashMap::new();
    while let Some(i) = stack.pop() {
        let s = states[i];
        let mut row = [None; 4];
        for c in 0..4u8 {
            if let Some(t) = s.push(c) {
                row[c as usize] = Some(intern(t, &mut states, &mut stack));
            }
        }
        succ.insert(i, row);
    }
    let successor = (0..states.len()).map(|i| succ[&i]).collect();
    let mut init: Vec<(usize, u64)> = init.into_iter().collect();
    init.sort();
    Machine { states, successor, init }
}

impl Machine {
    pub fn len(&self) -> usize {
        self.states.len()
    }
    pub fn is_empty(&self) -> bool {
        self.states.is_empty()
    }
    /// Every (state, digit) pair has at most one successor by construction;
    /// checks that the table agrees with the transition rule.
    pub fn is_deterministic(&self) -> bool {
        self.states.iter().zip(&self.successor).all(|(s, row)| {
            (0..4u8).all(|c| match (s.push(c), row[c as usize]) {
                (Some(t), Some(j)) => self.states[j] == t,
                (None, None) => true,
                _ => false,
            })
        })
    }

    /// Terms a_1..=a_{n_max}.
    pub fn terms(&self, n_max: u64) -> Sequence {
        let mut v = vec![BigInt::zero(); self.len()];
        for &(i, k) in &self.init {
            v[i] += k;
        }
        let mut out = Vec::with_capacity(n_max as usize);
        for n in 1..=n_max {
            if n > 1 {
                let mut w = vec![BigInt::zero(); self.len()];
                for (i, x) in v.iter().enumerate() {
                    if x.is_zero() {
                        continue;
                    }
                    for j in self.successor[i].iter().flatten() {
                        w[*j] += x;
                    }
                }
                v = w;
            }
            out.push(self.states.iter().zip(&v).filter(|(s, _)| s.accepting()).map(|(_, x)| x).sum());
        }
        Sequence::new(1, out, Provenance::Generator)
    }
}

pub fn gen_a250556(n_max: u64) -> Sequence {
    build_a250556_machine().terms(n_max)
}

/// Unbounded signed-sum search over every array; independent of the bound.
pub fn a250556_brute(n: u64) -> BigInt {
    let len = n as usize + 2;
    let mut count = 0u64;
    let mut v = vec![0i32; len];
    for code in 0..4u64.pow(len as u32) {
        let mut c = code;
        for x in v.iter_mut() {
            *x = (c % 4) as i32;
            c /= 4;
        }
        // Signed sums lie in [−6n, 6n]; track them as a bitset offset by 6n.
        let off = 6 * n as i64;
        let mut sums = vec![false; (2 * off + 1) as usize];
        sums[off as usize] = true;
        for k in 0..n as usize {
            let d = (v[k] - 2 * v[k + 1] + v[k + 2]) as i64;
            let mut next = vec![false; sums.len()];
            for (i, &b) in sums.iter().enumerate() {
                if b {
                    for t in [i as i64 + d, i as i64 - d] {
                        if (0..sums.len() as i64).contains(&t) {
                            next[t as usize] = true;
                        }
                    }
                }
            }
            sums = next;
        }
        if sums[off as usize] {
            count += 1;
        }
    }
    BigInt::from(count)
}

/// The constant-coefficient recurrence read off the generating function's denominator.
pub fn a250556_recurrence() -> ShiftOperator {
    let c: [i64; 18] = [-32, 56, -28, 36, 8, -84, 44, -58, 73, 1, -4, 8, -42, 26, -12, 14, -7, 1];
    let rows: Vec<Vec<i64>> = c.iter().map(|&x| vec![x]).collect();
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    ShiftOperator::from_i64(&refs)
}
