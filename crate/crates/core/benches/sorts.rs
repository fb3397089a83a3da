use criterion::{criterion_group, criterion_main, BatchSize, BenchmarkId, Criterion};
use sortlab_core::datagen::{generate, DataCase, DEFAULT_RANGE};
use sortlab_core::sort::{run, AlgorithmId, DEFAULT_CUTOFF};

fn bench_cases(c: &mut Criterion) {
    for case in [DataCase::Average, DataCase::Best, DataCase::Worst, DataCase::HalfSorted] {
        let mut group = c.benchmark_group(format!("sort/{case}"));
        for n in [500usize, 2500] {
            let d = generate(case, n, 42, DEFAULT_RANGE).unwrap();
            for alg in AlgorithmId::ALL {
                group.bench_with_input(BenchmarkId::new(alg.name(), n), &d.values, |b, values| {
                    b.iter_batched_ref(
                        || values.clone(),
                        |a| run(alg, a, DEFAULT_CUTOFF),
                        BatchSize::SmallInput,
                    );
                });
            }
        }
        group.finish();
    }
}

criterion_group!(benches, bench_cases);
criterion_main!(benches);
