use codegree_bench::{case, grassmannian, staircase_skew};
use codegree_core::dual_degrees::katz_kleiman;
use codegree_core::kac_gradings::scan_classification;
use codegree_core::symmetric_functions::{lr_coefficients, skew_syt_count};
use codegree_core::theta_matrix_models::verify_case;
use criterion::{black_box, criterion_group, criterion_main, Criterion};

fn codegrees(c: &mut Criterion) {
    let g48 = grassmannian(4, 8);
    c.bench_function("katz_kleiman G(4,8)", |b| b.iter(|| katz_kleiman(black_box(&g48)).unwrap()));
}

fn symmetric(c: &mut Criterion) {
    let (mu, nu) = staircase_skew(8);
    c.bench_function("skew_syt_count staircase 8", |b| {
        b.iter(|| skew_syt_count(black_box(&mu), black_box(&nu)))
    });
    let (small, _) = staircase_skew(6);
    c.bench_function("lr_coefficients (3,2,1)^2", |b| {
        b.iter(|| lr_coefficients(black_box(&small), black_box(&small), None))
    });
}

fn gradings(c: &mut Criterion) {
    let mut g = c.benchmark_group("slow");
    g.sample_size(10);
    g.bench_function("scan_classification r8", |b| b.iter(|| scan_classification(8).unwrap()));
    let sl4 = case("sl:outer-sym:4");
    g.bench_function("verify_case sl:outer-sym:4", |b| b.iter(|| verify_case(&sl4, 1).unwrap()));
    g.finish();
}

criterion_group!(benches, codegrees, symmetric, gradings);
criterion_main!(benches);
