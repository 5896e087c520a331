use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use qminor_bench::reversed_word;
use qminor_core::flagspace::{eliminate, FlagContext};
use qminor_core::gammapaths::{enumerate_paths, theta_via_paths, GammaGraph};
use qminor_core::qalgebra::qcommute_exponent;
use qminor_core::{Engine, IndexSet, Laurent, SurroundsWitness};

fn straightening(c: &mut Criterion) {
    let word = reversed_word(4, 6);
    c.bench_function("straighten degree 6 in M_q(4)", |b| {
        b.iter(|| Engine::desk().straighten(black_box(&word), &Laurent::one(), 4).unwrap())
    });
}

fn minors(c: &mut Criterion) {
    let j = IndexSet::from([1, 4]);
    let i = IndexSet::from([2, 3, 5]);
    c.bench_function("qcommute [14][235] in M_q(5)", |b| {
        b.iter(|| qcommute_exponent(&Engine::desk(), black_box(&j), black_box(&i), 5).unwrap())
    });
}

fn elimination(c: &mut Criterion) {
    let ctx = FlagContext::canonical(2, 1, 4).unwrap();
    c.bench_function("eliminate |J| = 3, |I| = 4", |b| b.iter(|| eliminate(black_box(&ctx)).unwrap()));
}

fn paths(c: &mut Criterion) {
    let j = IndexSet::range(5);
    let w = SurroundsWitness::split_of(&j, &IndexSet::range(2)).unwrap();
    c.bench_function("enumerate paths |J| = 5", |b| b.iter(|| enumerate_paths(black_box(&j), &w)));
    let g = GammaGraph::from_split(&j, &IndexSet::range(2), 6).unwrap();
    c.bench_function("signed path sum |J| = 5", |b| b.iter(|| theta_via_paths(black_box(&g)).unwrap()));
}

criterion_group!(benches, straightening, minors, elimination, paths);
criterion_main!(benches);
