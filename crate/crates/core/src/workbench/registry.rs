//! Every implemented sequence with its calibrated offset, generator, oracle,
//! conjectures and the published table row.

use num_bigint::BigInt;

use crate::enumerators::*;
use crate::ore_shift::{Provenance, Sequence};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    /// Recurrence proven.
    P,
    /// D-finiteness proven, recurrence not.
    D,
    /// Open.
    O,
}

/// A published table row: N, M, L, r, d and the status mark; `None` for "?" or "--".
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PaperRow {
    pub n: usize,
    pub m: Option<usize>,
    pub l: Option<usize>,
    pub order: Option<usize>,
    pub degree: Option<usize>,
    pub status: Status,
}

#[derive(Clone, Copy, Debug)]
pub struct Oracle {
    pub term: fn(u64) -> BigInt,
    /// Largest index the oracle is meant for.
    pub max: u64,
}

#[derive(Clone, Copy, Debug)]
pub struct RegistryEntry {
    pub id: &'static str,
    pub offset: i64,
    /// Terms offset..=n_max.
    pub generator: fn(u64) -> Sequence,
    pub oracle: Option<Oracle>,
    pub paper: Option<PaperRow>,
    /// The first terms as printed in the table.
    pub first_terms: &'static [i64],
    /// Largest index computed for the report.
    pub report_max: u64,
}

impl RegistryEntry {
    pub fn conjectures(&self) -> Vec<ConjectureSpec> {
        conjectures_for(self.id)
    }
    pub fn terms(&self, n_max: u64) -> Sequence {
        (self.generator)(n_max).with_id(self.id)
    }
    /// Oracle values for offset..=min(n_max, oracle.max).
    pub fn oracle_terms(&self, n_max: u64) -> Option<Sequence> {
        let o = self.oracle?;
        let hi = n_max.min(o.max);
        let terms: Vec<BigInt> = (self.offset.max(0) as u64..=hi).map(o.term).collect();
        (!terms.is_empty()).then(|| Sequence::new(self.offset, terms, Provenance::Oracle).with_id(self.id))
    }
}

const fn row(n: usize, m: Option<usize>, l: Option<usize>, order: Option<usize>, degree: Option<usize>, status: Status) -> Option<PaperRow> {
    Some(PaperRow { n, m, l, order, degree, status })
}

const fn full(n: usize, m: usize, l: usize, r: usize, d: usize, status: Status) -> Option<PaperRow> {
    row(n, Some(m), Some(l), Some(r), Some(d), status)
}

fn oracle(term: fn(u64) -> BigInt, max: u64) -> Option<Oracle> {
    Some(Oracle { term, max })
}

fn a177317(n: u64) -> Sequence {
    gen_adjacent_permutations(5, n)
}
fn a199250(n: u64) -> Sequence {
    tm_terms(&a199250_system(), n)
}
fn a264947(n: u64) -> Sequence {
    tm_terms(&a264947_system(), n)
}
fn a172572(n: u64) -> Sequence {
    gen_orthant_walks(&a172572_stepset(), n)
}
fn a172671(n: u64) -> Sequence {
    gen_orthant_walks(&a172671_stepset(), n)
}
fn a181198(n: u64) -> Sequence {
    gen_young_monotone(4, n)
}
fn a181199(n: u64) -> Sequence {
    gen_young_monotone(5, n)
}
fn a098926_dp(n: u64) -> BigInt {
    permanent_dp(&a098926_matrix(n))
}
fn a265234_powers(n: u64) -> BigInt {
    stepset_diagonal_by_powers(&a265234_stepset(), 1, n) / 24
}
fn a177317_brute(n: u64) -> BigInt {
    adjacent_permutations_brute(5, n)
}
fn a188818_direct(n: u64) -> BigInt {
    a188818_brute(n, None)
}
fn a195806_direct(k: u64) -> BigInt {
    a195806_raw(k + 1)
}
fn a339987_total(n: u64) -> BigInt {
    let (c, d) = a339987_brute(n);
    c + d
}
fn a181198_brute(n: u64) -> BigInt {
    young_monotone_brute(4, n as usize)
}
fn a181199_brute(n: u64) -> BigInt {
    young_monotone_brute(5, n as usize)
}
fn a164735_direct(n: u64) -> BigInt {
    a164735_brute(n as u32)
}

pub fn registry() -> Vec<RegistryEntry> {
    use Status::*;
    vec![
        RegistryEntry {
            id: "A187990",
            offset: 1,
            generator: gen_a187990,
            oracle: oracle(a187990_brute, 6),
            paper: row(50, None, None, Some(1), Some(3), P),
            first_terms: &[117, 181, 260, 355, 467],
            report_max: 50,
        },
        RegistryEntry {
            id: "A177317",
            offset: 0,
            generator: a177317,
            oracle: oracle(a177317_brute, 2),
            paper: full(29, 60, 22, 3, 14, P),
            first_terms: &[1, 2, 48, 2288, 135040],
            report_max: 90,
        },
        RegistryEntry {
            id: "A199250",
            offset: 1,
            generator: a199250,
            oracle: None,
            paper: full(56, 98, 56, 8, 18, P),
            first_terms: &[1, 1, 14, 21, 424, 571],
            report_max: 40,
        },
        RegistryEntry {
            id: "A250556",
            offset: 1,
            generator: gen_a250556,
            oracle: oracle(a250556_brute, 6),
            paper: full(47, 58, 47, 9, 8, P),
            first_terms: &[8, 60, 302, 1516, 7126],
            report_max: 120,
        },
        RegistryEntry {
            id: "A264947",
            offset: 1,
            generator: a264947,
            oracle: None,
            paper: row(20, None, None, None, None, D),
            first_terms: &[1, 60, 3201, 184740],
            report_max: 8,
        },
        RegistryEntry {
            id: "A265234",
            offset: 1,
            generator: gen_a265234,
            oracle: oracle(a265234_powers, 5),
            paper: full(31, 56, 27, 6, 6, P),
            first_terms: &[1, 43, 2592, 184740],
            report_max: 64,
        },
        RegistryEntry {
            id: "A172572",
            offset: 1,
            generator: a172572,
            oracle: oracle(sum_a172572, 8),
            paper: full(33, 44, 17, 3, 9, D),
            first_terms: &[90, 67950, 90291600],
            report_max: 33,
        },
        RegistryEntry {
            id: "A172671",
            offset: 1,
            generator: a172671,
            oracle: None,
            paper: full(33, 75, 25, 4, 13, D),
            first_terms: &[90, 202410, 747558000],
            report_max: 40,
        },
        RegistryEntry {
            id: "A188818",
            offset: 1,
            generator: gen_a188818,
            oracle: oracle(a188818_direct, 4),
            paper: full(32, 55, 26, 5, 10, P),
            first_terms: &[2, 9, 48, 256, 1360],
            report_max: 64,
        },
        RegistryEntry {
            id: "A306322",
            offset: 0,
            generator: gen_a306322,
            oracle: oracle(a306322_dp, 7),
            paper: full(41, 63, 30, 4, 14, P),
            first_terms: &[1, 0, 0, 25, 386, 4657],
            report_max: 100,
        },
        RegistryEntry {
            id: "A195806",
            offset: 0,
            generator: gen_a195806,
            oracle: oracle(a195806_direct, 1),
            paper: full(32, 41, 30, 4, 10, D),
            first_terms: &[16, 105, 496, 1759, 5052],
            report_max: 14,
        },
        RegistryEntry {
            id: "A216940",
            offset: 1,
            generator: gen_a216940,
            oracle: oracle(a216940_backtrack, 3),
            paper: full(37, 44, 29, 1, 23, D),
            first_terms: &[260, 27768, 1664244],
            report_max: 8,
        },
        RegistryEntry {
            id: "A194478",
            offset: 1,
            generator: gen_a194478,
            oracle: oracle(a194478_brute, 5),
            paper: full(32, 35, 19, 2, 12, P),
            first_terms: &[0, 0, 0, 1, 337, 8733],
            report_max: 60,
        },
        RegistryEntry {
            id: "A215570",
            offset: 0,
            generator: gen_a215570,
            oracle: oracle(a215570_brute, 3),
            paper: full(48, 68, 27, 3, 15, O),
            first_terms: &[1, 35, 18720, 19369350],
            report_max: 16,
        },
        RegistryEntry {
            id: "A339987",
            offset: 1,
            generator: gen_a339987,
            oracle: oracle(a339987_total, 4),
            paper: full(40, 70, 24, 5, 10, O),
            first_terms: &[1, 4, 90, 8400, 1426950],
            report_max: 80,
        },
        RegistryEntry {
            id: "A269021",
            offset: 0,
            generator: gen_a269021,
            oracle: oracle(a269021_brute, 4),
            paper: full(42, 108, 28, 4, 21, O),
            first_terms: &[1, 2, 23, 588, 24553],
            report_max: 30,
        },
        RegistryEntry {
            id: "A181198",
            offset: 1,
            generator: a181198,
            oracle: oracle(a181198_brute, 3),
            paper: full(27, 33, 14, 2, 9, O),
            first_terms: &[1, 1, 8, 169, 6392],
            report_max: 60,
        },
        RegistryEntry {
            id: "A181199",
            offset: 1,
            generator: a181199,
            oracle: oracle(a181199_brute, 2),
            paper: full(26, 103, 34, 3, 24, O),
            first_terms: &[1, 1, 16, 985, 141696],
            report_max: 40,
        },
        RegistryEntry {
            id: "A181280",
            offset: 1,
            generator: gen_a181280,
            oracle: None,
            paper: full(27, 32, 26, 10, 1, O),
            first_terms: &[0, 0, 0, 58, 1629, 28924],
            report_max: 7,
        },
        RegistryEntry {
            id: "A253217",
            offset: 1,
            generator: gen_a253217,
            oracle: oracle(a253217_naive, 5),
            paper: full(37, 53, 27, 5, 9, O),
            first_terms: &[0, 0, 1, 19, 268, 3568],
            report_max: 16,
        },
        RegistryEntry {
            id: "A098926",
            offset: 1,
            generator: gen_a098926,
            oracle: oracle(a098926_dp, 12),
            paper: full(34, 55, 26, 8, 7, O),
            first_terms: &[0, 2, 12, 90, 556, 5242],
            report_max: 20,
        },
        RegistryEntry {
            id: "A164735",
            offset: 1,
            generator: gen_a164735,
            oracle: oracle(a164735_direct, 6),
            paper: full(70, 80, 66, 15, 4, O),
            first_terms: &[0, 0, 0, 0, 0, 0, 0, 1, 0, 4],
            report_max: 30,
        },
        RegistryEntry {
            id: "A237684",
            offset: 1,
            generator: gen_a237684,
            oracle: None,
            paper: None,
            first_terms: &[1, 1, 1, 1, 1, 1, 2, 1, 2, 2],
            report_max: 100,
        },
        RegistryEntry {
            id: "A039836",
            offset: 1,
            generator: gen_a039836,
            oracle: oracle(a039836_brute, 12),
            paper: None,
            first_terms: &[1, 2, 3, 3, 4, 4, 4, 5],
            report_max: 40,
        },
    ]
}

pub fn lookup(id: &str) -> Option<RegistryEntry> {
    registry().into_iter().find(|e| e.id == id)
}
