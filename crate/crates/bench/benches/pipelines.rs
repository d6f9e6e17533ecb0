use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use hypjohnson_bench::{genus, handle_square, standard_descriptor};
use hypjohnson_core::derivations::{annihilation_residue, phi, pi_hat, pi_lambda2};
use hypjohnson_core::free_lie::{bracket, theta_lie, LieElement};
use hypjohnson_core::span::{canonical_family, class_matrix, weierstrass_rank};
use hypjohnson_core::symplectic::Letter;
use hypjohnson_core::{derivation_kernel, tau_tilde};

fn bench_bracket(c: &mut Criterion) {
    let mut group = c.benchmark_group("bracket");
    for g in [2usize, 3, 4] {
        let gen = genus(g);
        let t = theta_lie(gen);
        let x = LieElement::letter(gen, Letter::a(1));
        let deg3 = bracket(&t, &x);
        group.bench_with_input(BenchmarkId::new("theta_letter_deg3", g), &g, |b, _| {
            b.iter(|| bracket(&deg3, &x));
        });
    }
    group.finish();
}

fn bench_phi_pipeline(c: &mut Criterion) {
    let mut group = c.benchmark_group("phi_pipeline");
    for g in [2usize, 3, 4] {
        let gen = genus(g);
        let square = handle_square(gen, &[1]);
        group.bench_with_input(BenchmarkId::new("phi", g), &g, |b, _| {
            b.iter(|| phi(&square));
        });
        group.bench_with_input(BenchmarkId::new("pi_lambda2_phi", g), &g, |b, _| {
            b.iter(|| pi_lambda2(&phi(&square)));
        });
        group.bench_with_input(BenchmarkId::new("residue", g), &g, |b, _| {
            let d = phi(&square);
            b.iter(|| annihilation_residue(&d));
        });
        group.bench_with_input(BenchmarkId::new("pi_hat", g), &g, |b, _| {
            b.iter(|| pi_hat(&square));
        });
    }
    group.finish();
}

fn bench_twist_values(c: &mut Criterion) {
    let mut group = c.benchmark_group("twist");
    for g in [2usize, 3] {
        let gen = genus(g);
        let d = standard_descriptor(gen);
        group.bench_with_input(BenchmarkId::new("tau_tilde", g), &g, |b, _| {
            b.iter(|| tau_tilde(&d, 1).expect("valid point"));
        });
    }
    group.finish();
}

fn bench_span_rank(c: &mut Criterion) {
    let mut group = c.benchmark_group("span");
    group.sample_size(20);
    for g in [2usize, 3] {
        let gen = genus(g);
        group.bench_with_input(BenchmarkId::new("canonical_rank", g), &g, |b, _| {
            b.iter(|| {
                let m = class_matrix(&canonical_family(gen)).expect("family");
                weierstrass_rank(&m)
            });
        });
    }
    group.finish();
}

fn bench_derivation_kernel(c: &mut Criterion) {
    let mut group = c.benchmark_group("derivation_kernel");
    group.sample_size(10);
    for g in [2usize, 3] {
        let gen = genus(g);
        group.bench_with_input(BenchmarkId::new("der2", g), &g, |b, _| {
            b.iter(|| derivation_kernel(gen, 2).dim());
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_bracket,
    bench_phi_pipeline,
    bench_twist_values,
    bench_span_rank,
    bench_derivation_kernel
);
criterion_main!(benches);
