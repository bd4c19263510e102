use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use esscert_core::linalg::{intersect, rank, Vector};
use esscert_core::Scalar16;

fn random_rows(rng: &mut ChaCha8Rng, n: usize, m: usize) -> Vec<Vector> {
    (0..n)
        .map(|_| {
            let xs: Vec<Scalar16> = (0..m).map(|_| Scalar16::all().nth(rng.gen_range(0..16)).unwrap()).collect();
            Vector::from_scalars(&xs)
        })
        .collect()
}

fn bench_scalars(c: &mut Criterion) {
    let xs: Vec<Scalar16> = Scalar16::all().collect();
    c.bench_function("gf16/multiply-all-pairs", |b| {
        b.iter(|| {
            let mut acc = Scalar16::ZERO;
            for &x in &xs {
                for &y in &xs {
                    acc += x * y;
                }
            }
            std::hint::black_box(acc)
        })
    });
}

fn bench_echelon(c: &mut Criterion) {
    let mut group = c.benchmark_group("linalg/rank");
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in [32, 128, 256] {
        let rows = random_rows(&mut rng, n, n);
        group.bench_with_input(BenchmarkId::from_parameter(n), &rows, |b, rows| {
            b.iter(|| rank(rows, n))
        });
    }
    group.finish();

    let a = random_rows(&mut rng, 96, 128);
    let bb = random_rows(&mut rng, 96, 128);
    c.bench_function("linalg/intersect-96x128", |b| b.iter(|| intersect(&a, &bb, 128)));
}

criterion_group!(benches, bench_scalars, bench_echelon);
criterion_main!(benches);
