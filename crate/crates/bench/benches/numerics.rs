use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use zetalab_core::{
    bernoulli_table, gamma, gamma_weierstrass, parse_rational, sieve_primes, zeta_dirichlet,
    zeta_euler_product, ApproxReal, EulerProductMode, GammaArgument, Precision, ZetaArgument,
};

fn bernoulli(c: &mut Criterion) {
    let mut group = c.benchmark_group("bernoulli_table");
    for n in [50usize, 200] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| {
            b.iter(|| bernoulli_table(black_box(n)))
        });
    }
    group.finish();
}

fn sieve(c: &mut Criterion) {
    let mut group = c.benchmark_group("sieve_primes");
    for limit in [10_000u64, 1_000_000] {
        group.bench_with_input(BenchmarkId::from_parameter(limit), &limit, |b, &limit| {
            b.iter(|| sieve_primes(black_box(limit)))
        });
    }
    group.finish();
}

fn zeta(c: &mut Criterion) {
    let p = Precision::default();
    let s = ZetaArgument::from_f64(2.0, 0.0, p).unwrap();
    let complex = ZetaArgument::from_f64(2.0, 3.0, p).unwrap();
    let mut group = c.benchmark_group("zeta");
    group.sample_size(20);
    group.bench_function("dirichlet_real_1e4", |b| b.iter(|| zeta_dirichlet(&s, 10_000, p).unwrap()));
    group.bench_function("dirichlet_complex_1e3", |b| b.iter(|| zeta_dirichlet(&complex, 1_000, p).unwrap()));
    group.bench_function("euler_product_1e4", |b| {
        b.iter(|| zeta_euler_product(&s, 10_000, EulerProductMode::Rigorous, p).unwrap())
    });
    group.finish();
}

fn gamma_routes(c: &mut Criterion) {
    let p = Precision::default();
    let third = GammaArgument::exact(parse_rational("1/3").unwrap()).unwrap();
    let half = GammaArgument::exact(parse_rational("5/2").unwrap()).unwrap();
    let mut group = c.benchmark_group("gamma");
    group.sample_size(10);
    group.bench_function("closed_form_5_2", |b| b.iter(|| gamma(&half, p).unwrap()));
    group.bench_function("weierstrass_1e3", |b| {
        let s = ApproxReal::from_f64(1.5, p);
        b.iter(|| gamma_weierstrass(&s, 1_000, p).unwrap())
    });
    group.bench_function("dispatcher_1_3", |b| b.iter(|| gamma(&third, p).unwrap()));
    group.finish();
}

criterion_group!(benches, bernoulli, sieve, zeta, gamma_routes);
criterion_main!(benches);
