use holorec::exact_arith::{BigInt, BigRat, UniPoly};
use holorec::ore_shift::*;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn op(s: &str) -> ShiftOperator {
    s.parse().unwrap()
}

fn powers_of_two(len: usize) -> Sequence {
    Sequence::new(0, (0..len).map(|k| BigInt::from(1) << k).collect(), Provenance::Generator)
}

#[test]
fn apply_kills_powers_of_two() {
    let l = op("{-2} + {1}*S");
    let a = powers_of_two(12);
    assert!(l.apply(&a, 0..=10).unwrap().iter().all(Zero::is_zero));
    assert!(matches!(l.apply(&a, 0..=11), Err(OreError::WindowOutOfRange { .. })));
}

#[test]
fn s_times_n() {
    let n = ShiftOperator::constant(UniPoly::var());
    assert_eq!(ShiftOperator::s().multiply(&n), op("{0} + {n + 1}*S"));
    assert_eq!(op("{-2} + {1}*S").multiply(&op("{-1} + {1}*S")), op("{2} + {-3}*S + {1}*S^2"));
}

#[test]
fn text_round_trip() {
    for t in [
        "{n - 8} + {-2*n + 14}*S + {2*n - 10}*S^2 + {-n + 4}*S^3",
        "{-2} + {1}*S",
        "{0} + {n + 1}*S",
        "{1/2*n^2 - 3} + {0}*S + {n}*S^2",
    ] {
        let l = op(t);
        assert_eq!(l.to_string(), t);
    }
    assert!("{n} + S".parse::<ShiftOperator>().is_err());
    assert!("{0}".parse::<ShiftOperator>().is_err());
}

#[test]
fn right_divide_self() {
    let l = op("{n^2 + 1} + {-3*n}*S + {2}*S^2");
    let d = l.right_divide(&l);
    assert!(d.remainder.is_zero());
    assert_eq!(d.quotient.to_normalized().unwrap(), op("{1}"));
}

#[test]
fn right_factor_basic() {
    let a = op("{-2} + {1}*S");
    let b = op("{-3} + {1}*S");
    assert!(!a.is_right_factor(&b));
    assert!(a.is_right_factor(&b.multiply(&a)));
}

#[test]
fn unroll_powers_of_two() {
    let l = op("{-2} + {1}*S");
    let s = l.unroll(&Sequence::from_i64(0, &[1]), 5).unwrap();
    assert_eq!(s.terms, [1, 2, 4, 8, 16, 32].map(BigInt::from).to_vec());
    assert_eq!(s.provenance, Provenance::Unrolled);
}

#[test]
fn unroll_reports_singular_and_nonintegral() {
    // n·a_{n+1} = a_n is singular at n = 0.
    let l = op("{-1} + {n}*S");
    assert_eq!(
        l.unroll(&Sequence::from_i64(0, &[1]), 3),
        Err(OreError::SingularLeadingCoefficient { n: 0, index: 1 })
    );
    let l = op("{-1} + {2}*S");
    assert!(matches!(l.unroll(&Sequence::from_i64(0, &[1]), 3), Err(OreError::NonIntegerTerm { index: 1, .. })));
}

/// Independent evaluator: every coefficient evaluated in rationals.
fn naive_apply(l: &ShiftOperator, a: &[BigInt], offset: i64, n: i64) -> BigRat {
    let mut s = BigRat::zero();
    for i in 0..=l.order() {
        let p = l.coeff(i);
        let mut v = BigRat::zero();
        let mut pw = BigRat::one();
        for c in p.coeffs() {
            v += c * &pw;
            pw *= BigRat::from_integer(BigInt::from(n));
        }
        s += v * BigRat::from_integer(a[(n - offset) as usize + i].clone());
    }
    s
}

fn arb_op(max_r: usize, max_d: usize) -> impl Strategy<Value = ShiftOperator> {
    prop::collection::vec(prop::collection::vec(-4i64..5, 0..=max_d + 1), 1..=max_r + 1).prop_filter_map("zero", |c| {
        ShiftOperator::new(c.iter().map(|p| UniPoly::from_i64(p)).collect()).ok()
    })
}

fn arb_seq(len: usize) -> impl Strategy<Value = Sequence> {
    prop::collection::vec(-50i64..50, len).prop_map(|t| Sequence::from_i64(-2, &t))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn apply_matches_naive(l in arb_op(3, 3), a in arb_seq(14)) {
        let w = l.full_window(&a);
        let got = l.apply(&a, w.clone()).unwrap();
        for (k, n) in w.enumerate() {
            prop_assert_eq!(&got[k], &naive_apply(&l, &a.terms, a.offset, n));
        }
    }

    #[test]
    fn multiply_is_composition(m in arb_op(3, 2), l in arb_op(3, 2), a in arb_seq(16)) {
        let ml = m.multiply(&l);
        let w = ml.full_window(&a);
        let inner = l.apply(&a, l.full_window(&a)).unwrap();
        let inner = Sequence::new(a.offset, inner.iter().map(|x| x.to_integer()).collect(), Provenance::Generator);
        prop_assert_eq!(ml.apply(&a, w.clone()).unwrap(), m.apply(&inner, w).unwrap());
    }

    #[test]
    fn associativity(a in arb_op(2, 2), b in arb_op(2, 2), c in arb_op(2, 2)) {
        prop_assert_eq!(a.multiply(&b).multiply(&c), a.multiply(&b.multiply(&c)));
    }

    #[test]
    fn divide_round_trip(m in arb_op(3, 2), l in arb_op(3, 2)) {
        let ml = m.multiply(&l);
        let d = ml.right_divide(&l);
        prop_assert!(d.remainder.is_zero());
        let q: Vec<_> = d.quotient.coeffs.iter().map(|c| c.as_poly().unwrap()).collect();
        prop_assert_eq!(ShiftOperator::new(q).unwrap(), m);
        prop_assert!(l.is_right_factor(&ml));
    }

    #[test]
    fn division_invariant(m in arb_op(4, 2), l in arb_op(2, 2)) {
        let d = m.right_divide(&l);
        prop_assert!(d.remainder.order().map_or(true, |o| o < l.order()));
        // M − Q·L = R, checked coefficientwise over rational functions.
        let lr = holorec::ore_shift::RatOperator::from_operator(&l);
        let mut acc = holorec::ore_shift::RatOperator::from_operator(&m).coeffs;
        for (k, qk) in d.quotient.coeffs.iter().enumerate() {
            for (i, li) in lr.coeffs.iter().enumerate() {
                let t = qk * &li.shift(k as i64);
                if acc.len() <= i + k { acc.resize(i + k + 1, Default::default()); }
                acc[i + k] = &acc[i + k] - &t;
            }
        }
        for (i, c) in acc.iter().enumerate() {
            let r = d.remainder.coeffs.get(i).cloned().unwrap_or_default();
            prop_assert_eq!(c, &r);
        }
        prop_assert_eq!(l.is_right_factor(&m), d.remainder.is_zero());
    }

    #[test]
    fn annihilation_transport(m in arb_op(2, 2), init in prop::collection::vec(1i64..20, 1)) {
        // a_n = 3^n·c is killed by S − 3; so is every left multiple.
        let l = op("{-3} + {1}*S");
        let a = l.unroll(&Sequence::from_i64(0, &init), 14).unwrap();
        prop_assert!(l.annihilates(&a));
        prop_assert!(m.multiply(&l).annihilates(&a));
    }

    #[test]
    fn unroll_then_apply(l in arb_op(3, 2), init in prop::collection::vec(-9i64..10, 3)) {
        let l = l.normalized();
        let r = l.order();
        prop_assume!(r >= 1);
        // Keep leading coefficients unit so unrolled terms stay integral.
        let mut c: Vec<UniPoly> = l.coeffs().to_vec();
        c[r] = UniPoly::from_i64(&[1]);
        let l = ShiftOperator::new(c).unwrap();
        let s = l.unroll(&Sequence::from_i64(0, &init[..r]), 12).unwrap();
        prop_assert!(l.annihilates(&s));
    }

    #[test]
    fn print_parse(l in arb_op(4, 4)) {
        prop_assert_eq!(l.to_string().parse::<ShiftOperator>().unwrap(), l);
    }
}

#[test]
fn a187990_order_one() {
    // (n−27)(n−26)(n³+39n²+260n+402)·S − (n−27)(n−26)(n³+42n²+341n+702)
    let f = UniPoly::from_roots(&[26, 27]);
    let p = UniPoly::from_i64(&[402, 260, 39, 1]);
    let l = ShiftOperator::new(vec![-(&f * &p.shift(1)), &f * &p]).unwrap().normalized();
    // Unrolling across the roots 26, 27 is singular, so unroll the content-free part.
    let core = l.without_content();
    assert_eq!(core.order(), 1);
    assert_eq!(core.degree(), 3);
    let s = core.unroll(&Sequence::from_i64(1, &[117]), 27).unwrap();
    assert_eq!(s.at(27), &BigInt::from(9256));
    assert_eq!(s.at(5), &BigInt::from(467));
    assert!(matches!(l.unroll(&Sequence::from_i64(1, &[117]), 27), Err(OreError::SingularLeadingCoefficient { n: 26, .. })));
}
