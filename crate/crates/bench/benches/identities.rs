use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fibprod::engine::Engine;
use fibprod::fiblucas::{fib, phi_power};
use fibprod::{GoldenExt, IdentityId, Params};

fn sequences(c: &mut Criterion) {
    let mut group = c.benchmark_group("fib");
    for n in [100i64, 10_000, 1_000_000] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| fib(black_box(n))));
    }
    group.finish();
    c.bench_function("phi_power/1000", |b| b.iter(|| phi_power(black_box(1000))));
    c.bench_function("golden_decimal/50", |b| b.iter(|| black_box(GoldenExt::phi()).to_decimal(50)));
}

fn products(c: &mut Criterion) {
    let engine = Engine::default();
    let id: IdentityId = "T1.4".parse().unwrap();
    let mut group = c.benchmark_group("partial_product");
    for (n, q) in [(1, 1), (3, 3)] {
        let params = Params::new(n, q).unwrap();
        for big_n in [25u64, 100] {
            group.bench_with_input(BenchmarkId::new(format!("n{n}q{q}"), big_n), &big_n, |b, &big_n| {
                b.iter(|| engine.partial_product(id, params, big_n))
            });
        }
    }
    group.finish();

    let params = Params::new(2, 2).unwrap();
    let alternating: IdentityId = "T4.6".parse().unwrap();
    c.bench_function("verify_exact/T4.6/N40", |b| b.iter(|| engine.verify_exact(alternating, params, 40)));
    c.bench_function("verify_limit/T4.6/N40", |b| b.iter(|| engine.verify_limit(alternating, params, 40)));
}

criterion_group!(benches, sequences, products);
criterion_main!(benches);
