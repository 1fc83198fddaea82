use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use locvol::{
    certifiable_corpus, check_surface_lct_bound, enumerate_acc, int, lct_ideal, minimize_nvol,
    rat, valuation_ideal, CorpusParams, CorpusShape, LogPair, MonomialValuation,
};
use locvol_bench::{cusp_pair, half_set, mixed_pair};

fn bench_minimize(c: &mut Criterion) {
    let cusp = cusp_pair(10).unwrap();
    let mixed = mixed_pair().unwrap();
    c.bench_function("minimize_cusp_k10", |b| {
        b.iter(|| minimize_nvol(black_box(&cusp)).unwrap())
    });
    c.bench_function("minimize_mixed_three_curves", |b| {
        b.iter(|| minimize_nvol(black_box(&mixed)).unwrap())
    });
}

fn bench_enumerate(c: &mut Criterion) {
    let coeffs = half_set();
    let eps = rat(1, 10);
    c.bench_function("enumerate_box2", |b| {
        b.iter(|| enumerate_acc(black_box(&coeffs), 2, black_box(&eps)).unwrap())
    });
}

fn bench_ideals(c: &mut Criterion) {
    let v = MonomialValuation::from_integers(2, 3).unwrap();
    let pair = LogPair::empty();
    c.bench_function("valuation_ideal_multiplicity_m60", |b| {
        b.iter(|| {
            let ideal = valuation_ideal(black_box(&v), &int(60)).unwrap();
            ideal.multiplicity().unwrap()
        })
    });
    c.bench_function("lct_valuation_ideal_m60", |b| {
        b.iter(|| {
            let ideal = valuation_ideal(black_box(&v), &int(60)).unwrap();
            lct_ideal(black_box(&pair), &ideal).unwrap()
        })
    });
}

fn bench_corpus(c: &mut Criterion) {
    let corpus = certifiable_corpus(CorpusParams::new(CorpusShape::Mixed, 20, 11)).unwrap();
    c.bench_function("lct_bound_corpus_20", |b| {
        b.iter(|| check_surface_lct_bound(black_box(&corpus)))
    });
}

criterion_group!(benches, bench_minimize, bench_enumerate, bench_ideals, bench_corpus);
criterion_main!(benches);
