use criterion::{criterion_group, criterion_main, Criterion};
use polyadic_core::reference::{example3, Instance};
use polyadic_core::verify;

fn construction(c: &mut Criterion) {
    let spec = example3();
    c.bench_function("build gf13 instance", |b| b.iter(|| Instance::build(&spec).unwrap()));
    let mut g = c.benchmark_group("suites");
    g.sample_size(10);
    g.bench_function("table1", |b| b.iter(|| verify::table1(10_000_000)));
    g.finish();
}

criterion_group!(benches, construction);
criterion_main!(benches);
