use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use lcreg_core::{
    component_matrix, initial_decomposition, lefschetz_power, module_gb, rank, top_hilbert, FieldSpec,
    ModuleOrder, Presentation,
};

fn slice_rank(c: &mut Criterion) {
    let mut group = c.benchmark_group("slice_rank");
    for field in [FieldSpec::Rationals, FieldSpec::PrimeField(32003)] {
        let f = lefschetz_power(3, 2, field).unwrap();
        let p = Presentation::build(&f, -6).unwrap();
        let slice = component_matrix(&p, 4);
        group.bench_function(BenchmarkId::from_parameter(field), |b| b.iter(|| rank(black_box(&slice.matrix))));
    }
    group.finish();
}

fn hilbert_function(c: &mut Criterion) {
    let mut group = c.benchmark_group("top_hilbert");
    group.sample_size(10);
    for (n, r, j) in [(2, 2, -6), (3, 1, -6), (3, 3, -5)] {
        let f = lefschetz_power(n, r, FieldSpec::Rationals).unwrap();
        let p = Presentation::build(&f, j).unwrap();
        group.bench_function(BenchmarkId::from_parameter(format!("n{n}_r{r}_j{j}")), |b| {
            b.iter(|| top_hilbert(black_box(&p), 60))
        });
    }
    group.finish();
}

fn groebner(c: &mut Criterion) {
    let mut group = c.benchmark_group("groebner");
    group.sample_size(10);
    let f = lefschetz_power(3, 1, FieldSpec::Rationals).unwrap();
    let p = Presentation::build(&f, -6).unwrap();
    group.bench_function("module_gb_n3_j-6", |b| b.iter(|| module_gb(black_box(&p), ModuleOrder::default())));
    group.bench_function("initial_decomposition_n3_j-6", |b| b.iter(|| initial_decomposition(black_box(&p))));
    group.finish();
}

criterion_group!(benches, slice_rank, hilbert_function, groebner);
criterion_main!(benches);
