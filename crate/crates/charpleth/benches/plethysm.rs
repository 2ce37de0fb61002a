//! Classwise plethysm throughput, sequential (one rayon thread) against
//! the default parallel pool.  Exact arithmetic makes the two paths
//! bitwise identical; only the wall time differs.

use criterion::{criterion_group, criterion_main, Criterion};

use charpleth::chartab::ClassFunction;
use charpleth::extraspecial::{self};
use charpleth::plethysm::sym_power;
use charpleth::tablegen::{extraspecial_table, ExtraspecialVariant};

fn bench_sym4_extraspecial(c: &mut Criterion) {
    // 3^(1+4): 83 classes, faithful degree 9 character
    let table = extraspecial_table(3, 2, ExtraspecialVariant::OddExponentP).unwrap();
    let chi = (0..table.irreducible_count())
        .map(|i| ClassFunction::irreducible(&table, i))
        .find(|f| f.degree() == charpleth::exactnum::Cyclotomic::from_int(9))
        .unwrap();

    let mut group = c.benchmark_group("sym4_extraspecial_3_2");
    #[cfg(feature = "parallel")]
    {
        let seq = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        group.bench_function("sequential", |b| {
            b.iter(|| seq.install(|| sym_power(&chi, 4).unwrap()))
        });
        group.bench_function("parallel", |b| b.iter(|| sym_power(&chi, 4).unwrap()));
    }
    #[cfg(not(feature = "parallel"))]
    group.bench_function("sequential-fallback", |b| b.iter(|| sym_power(&chi, 4).unwrap()));
    group.finish();
}

fn bench_fixed_dims(c: &mut Criterion) {
    let mut group = c.benchmark_group("extraspecial_fixed_dims_2_3_4");
    #[cfg(feature = "parallel")]
    {
        let seq = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        group.bench_function("sequential", |b| {
            b.iter(|| seq.install(|| extraspecial::extraspecial_fixed_dims(2, 3, 4).unwrap()))
        });
        group.bench_function("parallel", |b| {
            b.iter(|| extraspecial::extraspecial_fixed_dims(2, 3, 4).unwrap())
        });
    }
    #[cfg(not(feature = "parallel"))]
    group.bench_function("sequential-fallback", |b| {
        b.iter(|| extraspecial::extraspecial_fixed_dims(2, 3, 4).unwrap())
    });
    group.finish();
}

/// Full orthogonality validation of the 34-class table: the heaviest
/// per-row work in the crate, and the case where the class-parallel
/// split pays off.
fn bench_validate_sp43(c: &mut Criterion) {
    let table = charpleth::fixtures::sp4_3().unwrap();
    let mut group = c.benchmark_group("validate_sp4_3");
    group.sample_size(20);
    #[cfg(feature = "parallel")]
    {
        let seq = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        group.bench_function("sequential", |b| {
            b.iter(|| seq.install(|| assert!(table.validate().is_pass())))
        });
        group.bench_function("parallel", |b| b.iter(|| assert!(table.validate().is_pass())));
    }
    #[cfg(not(feature = "parallel"))]
    group.bench_function("sequential-fallback", |b| {
        b.iter(|| assert!(table.validate().is_pass()))
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_sym4_extraspecial,
    bench_fixed_dims,
    bench_validate_sp43
);
criterion_main!(benches);
