use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};

use vacuakit::nucleation::normalization_constant;
use vacuakit::vacua::{classify_vacua, scan_critical_points};
use vacuakit_bench::{mass_sweep, reference_setup};
use vacuakit_cli::config::RunConfig;
use vacuakit_cli::report::build_report;

fn scan(c: &mut Criterion) {
    let (p, lo, hi) = reference_setup();
    c.bench_function("scan_critical_points/4096", |b| {
        b.iter(|| scan_critical_points(black_box(&p), lo, hi, 4096).unwrap())
    });
    c.bench_function("locate_and_classify/1024", |b| {
        b.iter(|| {
            let pts = scan_critical_points(&p, lo, hi, 1024).unwrap();
            classify_vacua(&pts, &p).unwrap()
        })
    });
}

fn quadrature(c: &mut Criterion) {
    c.bench_function("normalization_constant", |b| {
        b.iter(|| normalization_constant(black_box(0.0995), black_box(24.39)).unwrap())
    });
}

fn report(c: &mut Criterion) {
    let cfg = RunConfig::default();
    c.bench_function("build_report", |b| b.iter(|| build_report(black_box(&cfg))));
    let masses = mass_sweep(32);
    c.bench_function("report_mass_sweep/32", |b| {
        b.iter(|| {
            masses
                .iter()
                .map(|&m| {
                    let mut cfg = RunConfig::default();
                    cfg.params.inflaton_mass = m;
                    build_report(&cfg)
                })
                .count()
        })
    });
}

criterion_group!(benches, scan, quadrature, report);
criterion_main!(benches);
