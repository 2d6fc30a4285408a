use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use odcodes::build_field;
use odcodes::codes::min_distance;
use odcodes::orderdomain::verify_gp;
use odcodes::varieties::{affine_points, grassmannian_data};
use odcodes_bench::{hermitian, hermitian_c1, limits};

fn groebner(c: &mut Criterion) {
    let f = build_field(3, 1).unwrap();
    let mut g = c.benchmark_group("groebner");
    g.sample_size(10);
    g.bench_function("pluecker_g24", |b| b.iter(|| grassmannian_data(2, 4, black_box(&f), &limits()).unwrap()));
    g.bench_function("pluecker_g35", |b| b.iter(|| grassmannian_data(3, 5, black_box(&f), &limits()).unwrap()));
    g.finish();
}

fn distance(c: &mut Criterion) {
    let mut g = c.benchmark_group("min_distance");
    for (r, q) in [(2, 2), (4, 2), (2, 3)] {
        let code = hermitian_c1(r, q);
        g.bench_function(format!("herm_{r}_{q}"), |b| b.iter(|| min_distance(black_box(&code), &limits()).unwrap()));
    }
    g.finish();
}

fn points(c: &mut Criterion) {
    let mut g = c.benchmark_group("points");
    for (r, q) in [(3, 2), (2, 3)] {
        let (p, _) = hermitian(r, q);
        g.bench_function(format!("herm_{r}_{q}"), |b| {
            b.iter(|| affine_points(p.ring(), black_box(p.ideal()), &limits()).unwrap())
        });
    }
    g.finish();
}

fn criterion_check(c: &mut Criterion) {
    let (p, _) = hermitian(3, 2);
    c.bench_function("verify_gp/herm_3_2", |b| b.iter(|| verify_gp(black_box(&p), None, &limits()).unwrap()));
}

criterion_group!(benches, groebner, distance, points, criterion_check);
criterion_main!(benches);
