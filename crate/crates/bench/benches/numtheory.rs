use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_bigint::BigUint;
use powg::certify::dnb_table;
use powg::numtheory::lcm_range;

fn lcm(c: &mut Criterion) {
    let mut g = c.benchmark_group("lcm_range");
    for n in [1_000u64, 100_000, 6561] {
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| lcm_range(black_box(n)))
        });
    }
    g.finish();
}

fn dnb(c: &mut Criterion) {
    let v = BigUint::from(3u32);
    c.bench_function("dnb_table/k4", |b| {
        b.iter(|| dnb_table(black_box(&v), 4).unwrap())
    });
}

criterion_group!(benches, lcm, dnb);
criterion_main!(benches);
