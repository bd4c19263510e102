use criterion::{criterion_group, criterion_main, Criterion};

use esscert_core::essential::essential_scan;
use esscert_core::runner::{run, Config, Group};
use esscert_core::{Pipeline, Window};

fn bench_pipeline(c: &mut Criterion) {
    let mut group = c.benchmark_group("pipeline");
    group.sample_size(10);
    group.bench_function("einf-16x12", |b| {
        b.iter(|| {
            let pl = Pipeline::new(Window::new(16, 12)).unwrap();
            pl.einf().unwrap().quotient_dim(esscert_core::Bidegree::new(8, 6)).unwrap()
        })
    });
    let pl = Pipeline::new(Window::new(16, 12)).unwrap();
    let einf = pl.einf().unwrap();
    group.bench_function("essential-scan", |b| b.iter(|| essential_scan(einf).unwrap()));
    let config = Config::new(16, 12, &[Group::Group]).unwrap();
    group.bench_function("group-checks", |b| b.iter(|| run(&config).unwrap()));
    group.finish();
}

criterion_group!(benches, bench_pipeline);
criterion_main!(benches);
