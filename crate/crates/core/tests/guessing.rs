use holorec::exact_arith::{BigInt, BigRat, UniPoly};
use holorec::guessing::*;
use holorec::ore_shift::{Provenance, Sequence, ShiftOperator};
use num_traits::{One, Signed, Zero};
use proptest::prelude::*;

fn q(a: i64, b: i64) -> BigRat {
    BigRat::new(a.into(), b.into())
}

fn pow2(len: usize) -> Sequence {
    Sequence::new(0, (0..len).map(|k| BigInt::from(1) << k).collect(), Provenance::Generator)
}

#[test]
fn la_finds_powers_of_two() {
    let rep = guess_la(&pow2(10), &GuessConfig::bounds(3, 3)).unwrap().unwrap();
    assert_eq!(rep.best().to_string(), "{-2} + {1}*S");
    assert_eq!(rep.method, Method::La);
    let (r, d) = rep.ansatz;
    assert!((r + 2) * (d + 1) < rep.terms_used);
}

#[test]
fn holdout_confirmation_only() {
    let cfg = GuessConfig::bounds(2, 2).with_holdout(6);
    let rep = guess_la(&pow2(16), &cfg).unwrap().unwrap();
    assert_eq!(rep.flags, vec![Flag::ConfirmedHoldout]);
    let text = rep.to_text();
    assert!(text.contains("flags CONFIRMED_HOLDOUT"));
    assert!(text.contains("operator {-2} + {1}*S"));
}

#[test]
fn lll_finds_powers_of_two_and_rejects_zero() {
    let rep = guess_lll(&pow2(12), &GuessConfig::bounds(2, 2)).unwrap().unwrap();
    assert_eq!(rep.best().to_string(), "{-2} + {1}*S");
    let zero = Sequence::from_i64(0, &[0; 12]);
    assert!(guess_lll(&zero, &GuessConfig::bounds(2, 2)).unwrap().is_none());
    assert!(guess_la(&zero, &GuessConfig::bounds(2, 2)).unwrap().is_none());
}

#[test]
fn factorials_order_one() {
    let mut t = vec![BigInt::one()];
    for n in 1..30 {
        let x = t.last().unwrap() * n;
        t.push(x);
    }
    let a = Sequence::new(0, t, Provenance::Generator);
    let rep = guess_la(&a, &GuessConfig::bounds(3, 3)).unwrap().unwrap();
    assert_eq!(rep.best().to_string(), "{-n - 1} + {1}*S");
}

#[test]
fn rescaled_catalan() {
    // Catalan numbers divided by binomial(2n, n) are 1/(n+1): not integral, so rescaling aborts.
    let cat: Vec<i64> = vec![1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862, 16796, 58786, 208012, 742900, 2674440, 9694845, 35357670];
    let a = Sequence::from_i64(0, &cat);
    let cfg = GuessConfig { shift_ansatz: Some("binomial(2n,n)".parse_hyper()), ..GuessConfig::bounds(2, 2) };
    assert!(matches!(guess_la(&a, &cfg), Err(GuessError::NonExactDivision(1))));
    // (n+1)·Cₙ = binomial(2n, n), and dividing Cₙ·(n+1)! by n! is exact.
    let cfg = GuessConfig { shift_ansatz: Some("1/(n+1)".parse_hyper()), ..GuessConfig::bounds(2, 2) };
    let rep = guess_la(&a, &cfg).unwrap().unwrap();
    assert_eq!(rep.best().order(), 1);
}

trait ParseHyper {
    fn parse_hyper(&self) -> holorec::exact_arith::Hyper;
}
impl ParseHyper for str {
    fn parse_hyper(&self) -> holorec::exact_arith::Hyper {
        holorec::exact_arith::Hyper::parse(self).unwrap()
    }
}

#[test]
fn lll_examples() {
    let b = LatticeBasis::from_i64(&[vec![1, 0, 1000003], vec![0, 1, 999999]]);
    let (r, u) = lll_reduce_tracked(&b, &q(3, 4));
    let n0: BigInt = r.rows[0].iter().map(|x| x * x).sum();
    assert!(n0 < BigInt::from(1_000_000i64));
    assert!(is_lll_reduced(&r, &q(3, 4)));
    check_unimodular(&b, &r, &u);
    // Orthogonal input comes back up to sign.
    let o = LatticeBasis::from_i64(&[vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 5]]);
    let ro = lll_reduce(&o, &q(3, 4));
    for (a, b) in ro.rows.iter().zip(&o.rows) {
        assert!(a == b || a.iter().zip(b).all(|(x, y)| x == &-y));
    }
}

fn det(m: &[Vec<BigInt>]) -> BigRat {
    let n = m.len();
    let mut a: Vec<Vec<BigRat>> = m.iter().map(|r| r.iter().map(|x| BigRat::from_integer(x.clone())).collect()).collect();
    let mut d = BigRat::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else { return BigRat::zero() };
        if p != c {
            a.swap(p, c);
            d = -d;
        }
        d *= a[c][c].clone();
        for i in c + 1..n {
            let f = &a[i][c] / &a[c][c];
            for j in c..n {
                let t = &f * &a[c][j];
                a[i][j] -= t;
            }
        }
    }
    d
}

fn check_unimodular(b: &LatticeBasis, r: &LatticeBasis, u: &[Vec<BigInt>]) {
    let n = b.dim();
    for i in 0..n {
        let row: Vec<BigInt> = (0..b.rows[0].len())
            .map(|c| (0..n).map(|k| &u[i][k] * &b.rows[k][c]).sum())
            .collect();
        assert_eq!(row, r.rows[i]);
    }
    assert_eq!(det(u).abs(), BigRat::one());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]
    #[test]
    fn lll_random(rows in prop::collection::vec(prop::collection::vec(-200i64..200, 5), 4)) {
        let b = LatticeBasis::from_i64(&rows);
        prop_assume!(!det(&gram(&b)).is_zero());
        let (r, u) = lll_reduce_tracked(&b, &q(3, 4));
        prop_assert!(is_lll_reduced(&r, &q(3, 4)));
        check_unimodular(&b, &r, &u);
        let f = lll_reduce_fp(&b, 0.75);
        // Same lattice: equal Gram determinants and f expressed in r integrally.
        prop_assert_eq!(det(&gram(&f)), det(&gram(&r)));
        // Floating-point reduction uses η = 0.51 rather than 1/2.
        let (mu, c) = gram_schmidt(&f);
        for i in 1..f.dim() {
            for j in 0..i {
                prop_assert!(mu[i][j].abs() <= q(51, 100));
            }
            prop_assert!(c[i] >= (q(7, 10) - &mu[i][i - 1] * &mu[i][i - 1]) * &c[i - 1]);
        }
    }

    #[test]
    fn lll_2d_shortest(a in (-60i64..60, -60i64..60), b in (-60i64..60, -60i64..60)) {
        prop_assume!(a.0 * b.1 - a.1 * b.0 != 0);
        let basis = LatticeBasis::from_i64(&[vec![a.0, a.1], vec![b.0, b.1]]);
        let r = lll_reduce(&basis, &q(1, 1));
        let n0: BigInt = r.rows[0].iter().map(|x| x * x).sum();
        let mut best: Option<i64> = None;
        for x in -60i64..=60 {
            for y in -60i64..=60 {
                if x == 0 && y == 0 { continue; }
                let v = (x * a.0 + y * b.0, x * a.1 + y * b.1);
                let n = v.0 * v.0 + v.1 * v.1;
                best = Some(best.map_or(n, |b| b.min(n)));
            }
        }
        // With δ = 1 the reduction in dimension 2 is Lagrange–Gauss reduction.
        prop_assert_eq!(n0, BigInt::from(best.unwrap()));
    }
}

fn gram(b: &LatticeBasis) -> Vec<Vec<BigInt>> {
    b.rows.iter().map(|x| b.rows.iter().map(|y| x.iter().zip(y).map(|(p, q)| p * q).sum()).collect()).collect()
}

#[test]
fn xdouble_roundtrip() {
    let big = num_traits::pow(BigInt::from(3), 900);
    let x = XDouble::from_bigint(&big);
    assert!((x.log2() - 900.0 * 3f64.log2()).abs() < 1e-9);
    let y = x.mul(x).div(x);
    assert!((y.log2() - x.log2()).abs() < 1e-9);
    assert_eq!(XDouble::from_f64(2.6).round_to_bigint(), BigInt::from(3));
    assert_eq!(XDouble::from_f64(-2.4).round_to_bigint(), BigInt::from(-2));
}

#[test]
fn interlace_examples() {
    let even = ShiftOperator::from_i64(&[&[-2], &[1]]);
    let odd = ShiftOperator::from_i64(&[&[-3], &[1]]);
    let init = Sequence::from_i64(0, &[1, 1]);
    let l = combine_interlaced(&even, &odd, &init, &GuessConfig::bounds(4, 2)).unwrap().unwrap();
    let a = Sequence::from_i64(0, &[1, 1, 2, 3, 4, 9, 8, 27, 16, 81, 32, 243, 64, 729]);
    assert!(l.annihilates(&a));
    // No order-2 polynomial operator exists for this interlacing; order 4 is minimal.
    assert_eq!(l.order(), 4);
    let one = ShiftOperator::from_i64(&[&[-1], &[1]]);
    let c = combine_interlaced(&one, &one, &Sequence::from_i64(0, &[5, 5]), &GuessConfig::bounds(2, 2)).unwrap().unwrap();
    assert_eq!(c, one);
    let _ = UniPoly::zero();
}

fn planted() -> impl Strategy<Value = (ShiftOperator, Vec<i64>)> {
    (1usize..=3, 0usize..=3).prop_flat_map(|(r, d)| {
        // A unit leading coefficient keeps every unrolled term an integer.
        let lower = prop::collection::vec(prop::collection::vec(-9i64..=9, d + 1), r);
        let init = prop::collection::vec(-20i64..=20, r);
        (lower, init).prop_map(|(mut c, init)| {
            c.push(vec![1]);
            let refs: Vec<&[i64]> = c.iter().map(|v| v.as_slice()).collect();
            (ShiftOperator::from_i64(&refs), init)
        })
    })
}

fn as_column(l: &ShiftOperator, r: usize, d: usize) -> Option<Vec<BigRat>> {
    if l.order() > r || l.degree() > d {
        return None;
    }
    let mut v = vec![BigRat::zero(); (r + 1) * (d + 1)];
    for (i, p) in l.coeffs().iter().enumerate() {
        for (j, c) in p.coeffs().iter().enumerate() {
            v[i * (d + 1) + j] = c.clone();
        }
    }
    Some(v)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(50))]
    #[test]
    fn la_recovers_planted((l, init) in planted()) {
        let long = l.unroll(&Sequence::from_i64(0, &init), 159).unwrap();
        prop_assume!(long.terms.iter().any(|x| !x.is_zero()));
        let a = long.prefix(80);
        let cfg = GuessConfig::bounds(4, 4);
        let rep = guess_la(&a, &cfg).unwrap().expect("planted operator must be found");
        let (r, d) = rep.ansatz;
        prop_assert!((r + 2) * (d + 1) < rep.terms_used);
        for c in &rep.candidates {
            prop_assert!(c.annihilates(&a.prefix(rep.terms_used)));
        }
        let best = rep.best();
        prop_assert!(best.is_right_factor(&l) || l.is_right_factor(best) || best.annihilates(&long));
    }

    #[test]
    fn lll_candidates_lie_in_la_kernel((l, init) in planted()) {
        let a = l.unroll(&Sequence::from_i64(0, &init), 59).unwrap();
        prop_assume!(a.terms.iter().any(|x| !x.is_zero()));
        let cfg = GuessConfig::bounds(3, 3);
        prop_assume!(guess_la(&a, &cfg).unwrap().is_some());
        let rep = guess_lll(&a, &cfg).unwrap().expect("LLL must succeed where LA does");
        let (r, d) = rep.ansatz;
        let used = &a.terms[..rep.terms_used];
        let sys = AnsatzSystem::new(used, a.offset, r, d);
        let rows: Vec<Vec<BigRat>> = (0..sys.equations())
            .map(|k| sys.row(k).into_iter().map(BigRat::from_integer).collect())
            .collect();
        let kernel = holorec::exact_arith::nullspace(&holorec::exact_arith::RatMat::from_rows(rows));
        prop_assert!(!kernel.is_empty());
        for c in &rep.candidates {
            let v = as_column(c, r, d).unwrap();
            let base = holorec::exact_arith::RatMat::from_rows(kernel.clone());
            let mut ext = kernel.clone();
            ext.push(v);
            let ext = holorec::exact_arith::RatMat::from_rows(ext);
            // v is in the span iff appending it leaves the row rank unchanged.
            prop_assert_eq!(row_rank(&base), row_rank(&ext));
        }
    }
}

fn row_rank(m: &holorec::exact_arith::RatMat) -> usize {
    let t: Vec<Vec<BigRat>> = (0..m.cols()).map(|j| (0..m.rows()).map(|i| m.get(i, j).clone()).collect()).collect();
    holorec::exact_arith::rank(&holorec::exact_arith::RatMat::from_rows(t))
}
