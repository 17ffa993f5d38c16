use holorec::enumerators::*;
use holorec::exact_arith::{binomial, BigInt, MultiPoly};
use holorec::workbench::{lookup, registry};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn big(v: i64) -> BigInt {
    BigInt::from(v)
}

fn ints(s: &holorec::Sequence) -> Vec<BigInt> {
    s.terms.clone()
}

#[test]
fn generators_match_oracles() {
    for e in registry() {
        let Some(o) = e.oracle else { continue };
        let want = e.oracle_terms(o.max).unwrap();
        let got = e.terms(o.max);
        assert_eq!(got.offset, want.offset, "{}", e.id);
        assert_eq!(got.terms, want.terms, "{}", e.id);
    }
}

#[test]
fn registry_offsets_are_generator_offsets() {
    for e in registry() {
        let s = e.terms(e.offset.max(0) as u64 + 2);
        assert_eq!(s.offset, e.offset, "{}", e.id);
    }
}

// Drops the trailing t exponent from a series coefficient.
fn drop_t(p: &MultiPoly, vars: &[String]) -> MultiPoly {
    let mut out = MultiPoly::zero(vars);
    for (mut e, c) in p.terms() {
        assert_eq!(e.pop(), Some(0));
        out.add_assign(&MultiPoly::monomial(vars, &e, c.clone())).unwrap();
    }
    out
}

fn series_matches_powers(sys: &TransferSystem, steps: usize, cap: &[u32]) {
    let (num, den) = tm_gf(sys).unwrap();
    let series = gf_series(&num, &den, steps + sys.gf_shift as usize, Some(cap));
    let polys = sys.polys(steps, Some(cap));
    for (l, p) in polys.iter().enumerate() {
        // p_L sits at t^{L−1+gf_shift}.
        let k = l + sys.gf_shift as usize;
        assert_eq!(drop_t(&series[k], &sys.vars), p.clone().with_cap(cap.to_vec()).without_cap(), "L={}", l + 1);
    }
}

trait WithoutCap {
    fn without_cap(self) -> MultiPoly;
}

impl WithoutCap for MultiPoly {
    fn without_cap(self) -> MultiPoly {
        let mut out = MultiPoly::zero(self.vars());
        for (e, c) in self.terms() {
            out.add_assign(&MultiPoly::monomial(self.vars(), &e, c.clone())).unwrap();
        }
        out
    }
}

#[test]
fn gf_series_reproduces_matrix_powers() {
    series_matches_powers(&adjacent_permutation_system(3), 15, &[6, 6]);
    series_matches_powers(&a199250_system(), 15, &[8, 8, 8]);
    series_matches_powers(&geometric_system(), 10, &[12]);
}

#[test]
fn a199250_gf_is_the_closed_form() {
    let vars: Vec<String> = ["x", "y", "z", "t"].iter().map(|s| s.to_string()).collect();
    let m = |e: [u32; 4], c: i64| MultiPoly::monomial(&vars, &e, big(c));
    let mut num = MultiPoly::zero(&vars);
    for t in [m([1, 1, 0, 1], 1), m([1, 1, 1, 2], 1)] {
        num.add_assign(&t).unwrap();
    }
    let mut den = MultiPoly::zero(&vars);
    for t in [
        m([0, 0, 0, 0], 1),
        m([1, 0, 0, 1], -1),
        m([0, 1, 0, 1], -1),
        m([1, 1, 0, 1], -1),
        m([0, 0, 1, 1], -1),
        m([1, 0, 1, 1], -1),
        m([0, 1, 1, 1], -1),
        m([1, 1, 1, 2], -7),
    ] {
        den.add_assign(&t).unwrap();
    }
    let got = tm_gf(&a199250_system()).unwrap();
    assert!(same_fraction(&got, &(num, den)));
}

#[test]
fn transfer_terms_agree_with_uncapped_polys() {
    // The cap only drops monomials that can never reach a read coefficient.
    let sys = adjacent_permutation_system(3);
    let capped = tm_terms(&sys, 6);
    let full = sys.polys(18, None);
    for n in 1..=6u64 {
        assert_eq!(capped.at(n as i64), &full[3 * n as usize - 1].coeff(&[n as u32, n as u32]));
    }
    assert!(tm_terms(&geometric_system(), 9).terms.iter().all(|t| t.is_one()));
}

#[test]
fn a177317_first_terms() {
    let a = gen_adjacent_permutations(5, 4);
    assert_eq!(a.offset, 0);
    assert_eq!(ints(&a), [1, 2, 48, 2288, 135040].map(big));
    // Three letters: words in 1,2,3 with every letter n times.
    assert_eq!(adjacent_permutations_brute(3, 2), gen_adjacent_permutations(3, 2).at(2).clone());
}

#[test]
fn tm_gf_refuses_large_systems() {
    assert!(matches!(tm_gf(&a264947_system()), Err(EnumError::DimensionTooLarge(256))));
}

proptest! {
    #[test]
    fn chu_vandermonde(m in 0i64..30, n in 0i64..30, r in 0i64..40) {
        prop_assert_eq!(chu_vandermonde_lhs(m, n, r), binomial(m + n, r));
    }
}

#[test]
fn a172572_sum_and_walks() {
    let walks = gen_orthant_walks(&a172572_stepset(), 6);
    for n in 1..=6 {
        assert_eq!(&sum_a172572(n as u64), walks.at(n), "n={n}");
    }
    assert_eq!(&a172572_first_brute(), walks.at(1));
    assert!(a172572_stepset().is_symmetric());
    assert_eq!(a172572_stepset().steps.len(), 15);
    assert_eq!(a172671_stepset().steps.len(), 21);
}

#[test]
fn stepset_powers_match_walks() {
    let s = a265234_stepset();
    let c = diagonal_walk_counts(&s, 1, 4);
    for n in 0..=4 {
        assert_eq!(stepset_diagonal_by_powers(&s, 1, n), c[n as usize]);
    }
    let s = a172671_stepset();
    let c = diagonal_walk_counts(&s, 3, 2);
    assert_eq!(stepset_diagonal_by_powers(&s, 3, 2), c[2]);
}

#[test]
fn a250556_machine() {
    let m = build_a250556_machine();
    assert_eq!(m.len(), 2484);
    assert!(m.is_deterministic());
    let a = m.terms(8);
    for n in 1..=5 {
        assert_eq!(a.at(n), &a250556_brute(n as u64));
    }
    let l = a250556_recurrence();
    assert_eq!((l.order(), l.degree()), (17, 0));
}

proptest! {
    #[test]
    fn a250556_push_shifts_the_window(prev in 0u8..4, last in 0u8..4, sums in 1u32..(1 << 20), c in 0u8..4) {
        let s = holorec::enumerators::a250556::State { prev, last, sums };
        if let Some(t) = s.push(c) {
            prop_assert_eq!((t.prev, t.last), (last, c));
            prop_assert!(t.sums < 1 << 20);
        }
    }
}

#[test]
fn kaprekar_worked_cycle() {
    assert_eq!(kaprekar_map(64308654), 83208762);
    assert_eq!(kaprekar_map(83208762), 86526432);
    assert_eq!(kaprekar_map(86526432), 64308654);
    assert_eq!(kaprekar_y(0, 1, 0), 64308654);
    assert_eq!(gen_a164735(8).at(8), &big(1));
}

proptest! {
    #[test]
    fn kaprekar_x_rotates(m in 0usize..2, a in 0usize..3, b in 0usize..3, c in 1usize..4, d in 1usize..4, e in 1usize..3) {
        let x = kaprekar_x(m, a, b, c, d, e);
        let y = kaprekar_x(m, c - 1, b, d, a + 1, e);
        let z = kaprekar_x(m, d - 1, b, a + 1, c, e);
        prop_assert_eq!(kaprekar_map(x), y);
        prop_assert_eq!(kaprekar_map(y), z);
        prop_assert_eq!(kaprekar_map(z), x);
        prop_assert_eq!(x == y, a + 1 == c && c == d);
    }

    #[test]
    fn kaprekar_y_is_a_three_cycle(a in 0usize..4, b in 1usize..4, c in 0usize..4) {
        let y = kaprekar_y(a, b, c);
        let k1 = kaprekar_map(y);
        prop_assert_ne!(k1, y);
        prop_assert_eq!(kaprekar_map(kaprekar_map(k1)), y);
    }
}

#[test]
fn kaprekar_pattern_count_matches_cycles() {
    let a = gen_a164735(24);
    for n in 3..=24 {
        assert_eq!(&a164735_pattern_count(n), a.at(n), "n={n}");
    }
}

#[test]
fn conjecture_evaluations() {
    let one = |id: &str| conjectures_for(id).into_iter().next().unwrap();
    assert_eq!(eval_conjecture(&one("A194478"), 4), Ok(big(1)));
    assert_eq!(eval_conjecture(&one("A194478"), 5), Ok(big(337)));
    assert_eq!(eval_conjecture(&one("A181280"), 4), Ok(big(58)));
    assert_eq!(eval_conjecture(&one("A164735"), 8), Ok(big(1)));
    assert_eq!(eval_conjecture(&one("A181280"), 3), Err(ConjectureError::OutOfRange { n: 3, from: 4 }));
    assert!(matches!(eval_conjecture(&one("A172572"), 3), Err(ConjectureError::NotExplicit(_))));
    for id in CONJECTURE_IDS {
        assert!(!conjectures_for(id).is_empty(), "{id}");
    }
}

#[test]
fn a195806_printed_constant_is_not_integral() {
    // The n ≡ 5 (mod 6) branch at n = 5, evaluated directly.
    let n = 5i64;
    let head = 130 * n.pow(6) + 1560 * n.pow(5) + 8125 * n.pow(4) + 23400 * n.pow(3);
    let branch = |c: i64| head + 40788 * n * n + 42256 * n + c;
    assert_ne!(branch(A195806_PRINTED_LAST_CONSTANT) % 1296, 0);
    assert_eq!(branch(A195806_LAST_CONSTANT) % 1296, 0);
    assert_eq!(big(branch(A195806_LAST_CONSTANT) / 1296), gen_a195806(5).at(5).clone());
}

#[test]
fn small_conjectures_agree() {
    for id in ["A194478", "A181198", "A181199", "A098926", "A164735", "A339987"] {
        let e = lookup(id).unwrap();
        let a = e.terms(16);
        for spec in e.conjectures() {
            let rep = check_conjecture(&spec, &a).unwrap();
            assert!(rep.agrees(), "{id}: {rep:?}");
            assert_eq!(rep.largest_verified, Some(a.last_index()));
        }
    }
}

#[test]
fn perturbed_terms_are_caught() {
    let e = lookup("A181198").unwrap();
    let mut a = e.terms(20);
    let k = a.len() - 3;
    a.terms[k] += 1;
    let rep = check_conjecture(&e.conjectures()[0], &a).unwrap();
    assert!(!rep.agrees());
    assert!(rep.largest_verified.unwrap() < a.last_index());
}

#[test]
fn factored_expands_products() {
    let p = factored("-2*(n+1)^2*(n-3)");
    // −2(n+1)²(n−3) at n = 2 is 18.
    assert_eq!(p.eval_i64(2), holorec::BigRat::from_integer(big(18)));
    assert_eq!(p.degree(), Some(3));
}

#[test]
fn young_successors_example() {
    let got = young_successors(&[5, 3, 2, 0], 6);
    assert_eq!(got, vec![vec![6, 3, 2, 0], vec![5, 4, 2, 0], vec![5, 3, 2, 1]]);
    for (k, n) in [(4, 3), (5, 2)] {
        assert_eq!(gen_young_monotone(k, n as u64).at(n), &young_monotone_brute(k, n as usize));
    }
}

#[test]
fn a215570_successor_example() {
    let s = a215570_successors([3, 2, 0, 1, 4]);
    assert!(!s.is_empty());
    for t in &s {
        let moved: u32 = t.iter().zip([3, 2, 0, 1, 4]).map(|(x, y)| x.abs_diff(y)).sum();
        assert_eq!(moved, 1);
    }
    let a = gen_a215570(4);
    for n in 0..=3 {
        assert_eq!(a.at(n), &a215570_brute(n as u64));
    }
}

#[test]
fn a181280_example_matrix() {
    let rows = [0b01011, 0b10000, 0b11001, 0b11110];
    assert!(a181280_conditions(&rows));
    // Swapping two rows breaks the increasing order.
    assert!(!a181280_conditions(&[0b10000, 0b01011, 0b11001, 0b11110]));
    assert_eq!(a181280_count(4), big(58));
}

#[test]
fn a253217_example_array() {
    let a: Vec<Vec<i32>> = [
        [0, 1, 1, 2, 3, 4, 5, 5],
        [1, 1, 2, 2, 3, 4, 5, 5],
        [2, 2, 2, 2, 3, 4, 5, 5],
        [2, 2, 3, 3, 3, 4, 5, 5],
        [3, 3, 3, 3, 3, 4, 5, 5],
        [4, 4, 4, 4, 4, 4, 5, 5],
        [4, 5, 5, 5, 5, 5, 5, 5],
        [5, 5, 5, 5, 5, 5, 5, 5],
    ]
    .iter()
    .map(|r| r.to_vec())
    .collect();
    assert!(a253217_valid(&a));
    let mut b = a.clone();
    b[7][7] = 4;
    assert!(!a253217_valid(&b));
    for n in 1..=5 {
        assert_eq!(a253217_count(n), a253217_naive(n), "n={n}");
    }
}

#[test]
fn a098926_example_matrix() {
    let want: [[i64; 10]; 10] = [
        [0, 0, 0, 1, 1, 1, 1, 1, 1, 1],
        [1, 1, 0, 1, 1, 1, 1, 1, 1, 1],
        [1, 1, 0, 0, 0, 1, 1, 1, 1, 1],
        [1, 1, 1, 1, 0, 1, 1, 1, 1, 1],
        [1, 1, 1, 1, 0, 0, 0, 1, 1, 1],
        [1, 1, 1, 1, 1, 1, 0, 1, 1, 1],
        [1, 1, 1, 1, 1, 1, 0, 0, 0, 1],
        [1, 1, 1, 1, 1, 1, 1, 1, 0, 1],
        [1, 1, 1, 1, 1, 1, 1, 1, 0, 0],
        [1, 1, 1, 1, 1, 1, 1, 1, 1, 1],
    ];
    let m = a098926_matrix(8);
    assert_eq!(m, want.iter().map(|r| r.to_vec()).collect::<Vec<_>>());
    let a8 = gen_a098926(8).at(8).clone();
    assert_eq!(permanent_ryser(&m), a8);
    assert_eq!(permanent_dp(&m), a8);
    assert_eq!(a098926_rook(8), a8);
}

#[test]
fn a194478_formula_and_brute() {
    for n in 1..=5u64 {
        assert_eq!(a194478_term(n), a194478_brute(n));
    }
    for n in 1..=40i64 {
        assert_eq!(holorec::BigRat::from_integer(a194478_term(n as u64)), a194478_quasipolynomial(n));
    }
}

#[test]
fn a188818_product_and_brute() {
    for n in 2..=4u64 {
        assert_eq!(a188818_even(n) * a188818_odd(n), a188818_brute(n, None));
        assert_eq!(a188818_even(n), a188818_brute(n, Some(0)));
    }
    assert_eq!(gen_a188818(1).at(1), &a188818_brute(1, None));
}

#[test]
fn a306322_formula_and_dp() {
    let a = gen_a306322(8);
    for n in 0..=5 {
        assert_eq!(a.at(n), &a306322_dp(n as u64));
        if n >= 1 {
            assert_eq!(a.at(n), &a306322_formula(n as u64));
        }
    }
    assert_eq!(narayana(2, 2), big(3));
    assert_eq!(narayana(3, 2), narayana(2, 3));
}

#[test]
fn a269021_lis_and_tableaux() {
    assert_eq!(lis_length(&[3, 1, 4, 2, 5]), 3);
    assert_eq!(syt_count(&[2, 1]), big(2));
    assert_eq!(syt_count(&[3, 2]), big(5));
    for n in 0..=4 {
        assert_eq!(a269021_term(n), a269021_brute(n));
    }
}

#[test]
fn cautionary_a187990() {
    let a = gen_a187990(27);
    assert_eq!(a.at(27), &big(9256));
    assert_eq!(a187990_closed(27), big(9256));
    assert_eq!(gen_cautionary("A237684", 3).unwrap().len(), 3);
    assert!(matches!(gen_cautionary("A000001", 3), Err(EnumError::UnknownId(_))));
}

#[test]
fn partition_counts_agree() {
    for m in 0..=2 {
        assert_eq!(a216940_count(m), a216940_backtrack(m));
    }
    assert!(a195806_count(0) >= BigInt::zero());
}
