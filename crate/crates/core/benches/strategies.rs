use std::sync::Arc;

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use intval_core::exact::{binomial_polynomial, int, rat};
use intval_core::membership::{certificate_phi, certificate_report, member_int_with, member_intval_on_with};
use intval_core::{sample, Order, RatPolynomial, Strategy};

const STRATEGIES: [(&str, Strategy); 2] = [("sequential", Strategy::Sequential), ("parallel", Strategy::Parallel)];

fn order(name: &str) -> Arc<Order> {
    Arc::new(Order::builtin(name).unwrap())
}

fn quartic() -> RatPolynomial {
    RatPolynomial::new(vec![int(0), int(0), rat(1, 2), int(0), rat(1, 2)])
}

/// `(X^(p^2) - X)(X^p - X)/p`, which vanishes on `M_2(F_p)`.
fn m2_vanishing(p: u32) -> RatPolynomial {
    let x = RatPolynomial::x();
    let a = &RatPolynomial::monomial(int(1), (p * p) as usize) - &x;
    let b = &RatPolynomial::monomial(int(1), p as usize) - &x;
    (&a * &b).scale(&rat(1, p as i64))
}

fn bench_member_int(c: &mut Criterion) {
    let mut group = c.benchmark_group("member_int");
    // Members of Int(A), so every residue is visited.
    let cases = [
        ("hurwitz/p3", order("hurwitz"), m2_vanishing(3)),
        ("matrix2/p5", order("matrix(2)"), m2_vanishing(5)),
        ("lipschitz/quartic", order("lipschitz"), quartic()),
    ];
    for (label, o, f) in &cases {
        assert!(member_int_with(f, o, Strategy::Sequential).unwrap().is_yes(), "{label}");
        for (name, s) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, label), &s, |b, &s| {
                b.iter(|| member_int_with(black_box(f), o, s).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_intval(c: &mut Criterion) {
    let o = order("matrix(3)");
    let mut rng = sample::rng(0);
    let elements = sample::elements(&mut rng, &o, 20, 200);
    let f = binomial_polynomial(2);
    let mut group = c.benchmark_group("intval_on_200");
    for (name, s) in STRATEGIES {
        group.bench_function(name, |b| b.iter(|| member_intval_on_with(black_box(&f), &elements, s).unwrap()));
    }
    group.finish();
}

fn bench_certificate(c: &mut Criterion) {
    let o = order("quadratic(-3)");
    let f = quartic();
    let phi = certificate_phi(&f, &o).unwrap();
    let mut rng = sample::rng(1);
    let elements = sample::elements(&mut rng, &o, 20, 100);
    let mut group = c.benchmark_group("certificate_report_100");
    group.sample_size(10);
    for (name, s) in STRATEGIES {
        group.bench_function(name, |b| b.iter(|| certificate_report(&phi, &f, &o, &elements, s).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, bench_member_int, bench_intval, bench_certificate);
criterion_main!(benches);
