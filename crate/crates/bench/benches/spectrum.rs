use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use acspec_bench::spectrum_workloads;
use acspec_core::equivalences::{class_count, RelationId, Universe};
use acspec_core::spectrum::{exponentiation_sanity, fine_spectrum, spectrum, SpectrumKind, SpectrumOptions};
use acspec_core::terms::enumerate_full_linear_terms;

fn spectra(c: &mut Criterion) {
    let mut group = c.benchmark_group("spectrum");
    group.sample_size(10);
    let opts = SpectrumOptions::default();
    for w in spectrum_workloads() {
        let g = w.groupoid();
        group.bench_function(BenchmarkId::from_parameter(w.label()), |b| {
            b.iter(|| spectrum(&g, black_box(w.n), w.kind, &opts).unwrap().count)
        });
    }
    group.finish();
}

fn fine(c: &mut Criterion) {
    let g = acspec_core::groupoids::lookup("rps").unwrap();
    let opts = SpectrumOptions::default();
    c.bench_function("fine/rps/ac/6", |b| {
        b.iter(|| fine_spectrum(&g, 6, SpectrumKind::Ac, &opts).unwrap().class_count())
    });
}

fn relations(c: &mut Criterion) {
    let mut group = c.benchmark_group("class_count");
    group.sample_size(10);
    for r in [RelationId::KLDepth(3, 3), RelationId::KDepth(4), RelationId::CommutativeUnordered] {
        group.bench_function(BenchmarkId::from_parameter(format!("{r}/F_7")), |b| {
            b.iter(|| class_count(r, 7, Universe::FullLinearTerms).unwrap())
        });
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    c.bench_function("enumerate/F_6", |b| {
        b.iter(|| enumerate_full_linear_terms(6).unwrap().iter().map(|t| t.leaf_count()).sum::<usize>())
    });
}

fn sanity(c: &mut Criterion) {
    let mut group = c.benchmark_group("exponentiation_sanity");
    group.sample_size(10);
    group.bench_function("n5/100", |b| b.iter(|| exponentiation_sanity(5, 100, 1).unwrap().passed()));
    group.finish();
}

criterion_group!(benches, spectra, fine, relations, enumeration, sanity);
criterion_main!(benches);
