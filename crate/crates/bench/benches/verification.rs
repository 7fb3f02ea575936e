use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use supercongruence::engine::{run_sweep, SweepSpec};
use supercongruence::lemmas::{f_independence_check, g_independence_check};
use supercongruence::qseries::{cross_derive, eta_quotient_expand, EtaQuotientSpec, ModularPair};
use supercongruence::{SequenceId, SequenceTable};

fn tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("table_extend");
    for id in [SequenceId::Apery, SequenceId::S, SequenceId::T] {
        group.bench_with_input(BenchmarkId::from_parameter(id), &id, |b, &id| {
            b.iter(|| {
                let mut t = SequenceTable::new(id);
                t.extend_to(black_box(500));
                t
            })
        });
    }
    group.finish();
}

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for id in [SequenceId::S, SequenceId::T] {
        let spec = SweepSpec::theorem(id, 53, 10);
        group.bench_with_input(BenchmarkId::from_parameter(id), &spec, |b, spec| {
            b.iter(|| run_sweep(spec).unwrap())
        });
    }
    group.finish();
}

fn lemmas(c: &mut Criterion) {
    c.bench_function("F_independence_p53", |b| {
        b.iter(|| f_independence_check(black_box(53), 10).unwrap())
    });
    c.bench_function("G_independence_p43", |b| {
        b.iter(|| g_independence_check(black_box(43), 10).unwrap())
    });
}

fn qseries(c: &mut Criterion) {
    let apery_z = EtaQuotientSpec::new(&[(2, 7), (3, 7), (1, -5), (6, -5)]);
    c.bench_function("eta_quotient_64", |b| {
        b.iter(|| eta_quotient_expand(&apery_z, black_box(64)).unwrap())
    });
    let mut group = c.benchmark_group("cross_derive");
    for pair in ModularPair::ALL {
        group.bench_with_input(
            BenchmarkId::from_parameter(format!("{pair:?}")),
            &pair,
            |b, &pair| b.iter(|| cross_derive(pair, 12, 32).unwrap()),
        );
    }
    group.finish();
}

criterion_group!(benches, tables, sweeps, lemmas, qseries);
criterion_main!(benches);
