use std::collections::BTreeMap;

use criterion::{criterion_group, criterion_main, Criterion};
use dualsurf_bench::{base_point, quartic};
use dualsurf_core::curvature::{hessian_determinant, hessian_matrix};
use dualsurf_core::plucker::{dejonquieres_count, DeJonquieresProblem};
use dualsurf_core::polarity::polar;
use dualsurf_core::properties::{run_all, PropertyConfig};
use dualsurf_core::salmon::{dual_surface_table, symbolic_degree, verify_dual_relations};
use dualsurf_core::Field;

fn kernel(c: &mut Criterion) {
    let prime = Field::prime(2_147_483_647).expect("prime in range");
    for (label, field) in [("Q", Field::Rational), ("Fp", prime)] {
        let f = quartic(field);
        let a = base_point(field);
        let hessian = hessian_matrix(&f);
        c.bench_function(&format!("bareiss 4x4 quartic hessian {label}"), |b| {
            b.iter(|| hessian.bareiss().expect("square"))
        });
        c.bench_function(&format!("hessian determinant quartic {label}"), |b| {
            b.iter(|| hessian_determinant(&f).expect("surface"))
        });
        c.bench_function(&format!("second polar quartic {label}"), |b| {
            b.iter(|| polar(&f, &a, 2).expect("order below degree"))
        });
    }
    c.bench_function("symbolic dual table", |b| {
        b.iter(|| dual_surface_table(&symbolic_degree()).expect("table"))
    });
    c.bench_function("symbolic dual relations", |b| {
        b.iter(|| verify_dual_relations(&symbolic_degree()).expect("relations"))
    });
    let problem = DeJonquieresProblem::new(12, 3, BTreeMap::from([(2, 3), (3, 2)])).expect("valid problem");
    c.bench_function("de jonquieres count", |b| b.iter(|| dejonquieres_count(&problem)));
}

fn properties(c: &mut Criterion) {
    let mut group = c.benchmark_group("properties");
    group.sample_size(10);
    group.bench_function("all suites, 5 instances over Q", |b| {
        b.iter(|| run_all(&PropertyConfig::new(7, 5, Field::Rational)).expect("suites run"))
    });
    group.finish();
}

criterion_group!(benches, kernel, properties);
criterion_main!(benches);
