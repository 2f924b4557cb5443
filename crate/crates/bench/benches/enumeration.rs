use criterion::{criterion_group, criterion_main, Criterion};
use polyadic_bench::{gf13_gray_image, gf3_gray_image};

fn min_distance(c: &mut Criterion) {
    // [78, 18]: only a budgeted search is feasible
    let g3 = gf3_gray_image();
    c.bench_function("min_distance gf3 [78,18] budget 1e5", |b| b.iter(|| g3.min_distance(100_000)));
    // 13^6 codewords per iteration
    let g13 = gf13_gray_image();
    let mut g = c.benchmark_group("exhaustive");
    g.sample_size(10);
    g.bench_function("min_distance gf13 [18,6]", |b| b.iter(|| g13.min_distance(u64::MAX)));
    g.bench_function("weight_enumerator gf13 [18,6]", |b| b.iter(|| g13.weight_enumerator(u64::MAX)));
    g.finish();
}

criterion_group!(benches, min_distance);
criterion_main!(benches);
