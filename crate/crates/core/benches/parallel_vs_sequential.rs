use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dicube::category::{build_en, nerve_complex};
use dicube::chains::enumerate_chains;
use dicube::complexes::YComplex;
use dicube::cover::verify_cover;
use dicube::homology::homology;
use dicube::orders::{OrderClass, OrderUniverse};
use dicube::{Caps, Execution};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn chains(c: &mut Criterion) {
    let caps = Caps::default();
    let y = YComplex::new(4, &caps).unwrap();
    let mut group = c.benchmark_group("cube_chains_y4");
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| enumerate_chains(black_box(&y.complex), &caps, exec).unwrap())
        });
    }
    group.finish();
}

fn en(c: &mut Criterion) {
    let caps = Caps::default();
    let mut group = c.benchmark_group("build_e5");
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| build_en(black_box(5), &caps, exec).unwrap())
        });
    }
    group.finish();
}

fn nerve_homology(c: &mut Criterion) {
    let caps = Caps::default();
    let e4 = build_en(4, &caps, Execution::Parallel).unwrap();
    let mut group = c.benchmark_group("e4_nerve_homology");
    group.sample_size(20);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| {
                let cx = nerve_complex(black_box(&e4.category), &caps, exec).unwrap();
                homology(&cx, exec).unwrap()
            })
        });
    }
    group.finish();
}

fn double_orders(c: &mut Criterion) {
    let caps = Caps::default();
    let mut group = c.benchmark_group("double_orders_4");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| OrderUniverse::new(black_box(4), OrderClass::Double, &caps, exec).unwrap())
        });
    }
    group.finish();
}

fn cover(c: &mut Criterion) {
    let caps = Caps::default();
    let mut group = c.benchmark_group("cover_3");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &exec| {
            b.iter(|| verify_cover(black_box(3), 200, 1, &caps, exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, chains, en, nerve_homology, double_orders, cover);
criterion_main!(benches);
