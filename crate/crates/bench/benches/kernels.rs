use criterion::{criterion_group, criterion_main, Criterion};
use holorec::enumerators::*;
use holorec::exact_arith::{nullspace, RatMat};
use holorec::guessing::{guess_la, guess_lll, AnsatzSystem, GuessConfig};
use holorec::BigRat;
use holorec_bench::a177317_terms;
use std::hint::black_box;

fn enumerators(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerators");
    g.sample_size(10);
    g.bench_function("a250556 1000 terms", |b| {
        let m = build_a250556_machine();
        b.iter(|| m.terms(black_box(1000)))
    });
    g.bench_function("a177317 40 terms", |b| b.iter(|| gen_adjacent_permutations(5, black_box(40))));
    g.bench_function("a265234 24 terms", |b| b.iter(|| gen_a265234(black_box(24))));
    g.bench_function("a098926 ryser n=14", |b| {
        let m = a098926_matrix(14);
        b.iter(|| permanent_ryser(black_box(&m)))
    });
    g.finish();
}

fn guessing(c: &mut Criterion) {
    let a = a177317_terms();
    let mut g = c.benchmark_group("guessing");
    g.sample_size(10);
    g.bench_function("nullspace (3,14) on 90 terms", |b| {
        let sys = AnsatzSystem::new(&a.terms, a.offset, 3, 14);
        let rows: Vec<Vec<BigRat>> =
            (0..sys.equations()).map(|k| sys.row(k).into_iter().map(BigRat::from_integer).collect()).collect();
        let m = RatMat::from_rows(rows);
        b.iter(|| nullspace(black_box(&m)))
    });
    g.bench_function("guess_la (3,14) cell", |b| {
        let cfg = GuessConfig::bounds(3, 14).with_cells(vec![(3, 14)]);
        b.iter(|| guess_la(black_box(&a), &cfg))
    });
    g.bench_function("guess_lll (3,14) on 29 terms", |b| {
        let p = a.prefix(29);
        let cfg = GuessConfig::bounds(3, 14).with_holdout(2).with_cells(vec![(3, 14)]);
        b.iter(|| guess_lll(black_box(&p), &cfg))
    });
    g.finish();
}

criterion_group!(benches, enumerators, guessing);
criterion_main!(benches);
