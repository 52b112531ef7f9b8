use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_bigint::BigInt;

use qea_core::lops::{catalog_lmatrix, compare_under_evaluation, lminus_from_sets, LKind};
use qea_core::ncalg::{coproduct, Letter};
use qea_core::pairing::dual_pair_basis;
use qea_core::reps::Representation;
use qea_core::rmatrix::{check_ybe, pair_sets_for, RMatrix, DEFAULT_MAX_HEIGHT};
use qea_core::{Algebra, NcExpr, Rational};

fn scalars(c: &mut Criterion) {
    let g = Algebra::g2();
    let x = &g.qnum_i(1, 6) - &g.omega(0);
    let y = &g.qnum_i(1, 3) + &g.scalars().sqrt().unwrap();
    c.bench_function("scalar mul+div", |b| b.iter(|| black_box(&x * &y).try_div(black_box(&y)).unwrap()));
}

fn coproducts(c: &mut Criterion) {
    let g = Algebra::g2();
    let w = NcExpr::word(&g, vec![Letter::E(0), Letter::E(1), Letter::F(1), Letter::E(0)]);
    c.bench_function("coproduct, word of length 4", |b| b.iter(|| coproduct(black_box(&w))));
}

fn dual_bases(c: &mut Criterion) {
    let mut group = c.benchmark_group("dual pair basis");
    group.sample_size(10);
    let g = Algebra::g2();
    for beta in [vec![1, 2], vec![2, 3], vec![2, 4]] {
        group.bench_with_input(BenchmarkId::new("G2", format!("{beta:?}")), &beta, |b, beta| {
            b.iter(|| dual_pair_basis(&g, beta).unwrap())
        });
    }
    group.finish();
}

fn r_matrices(c: &mut Criterion) {
    let mut group = c.benchmark_group("R build");
    group.sample_size(10);
    for n in 1..=3 {
        let rep = Representation::minimal_an(n).unwrap();
        group.bench_function(BenchmarkId::new("A", n), |b| b.iter(|| RMatrix::build(&rep, DEFAULT_MAX_HEIGHT).unwrap()));
    }
    group.finish();

    let mut group = c.benchmark_group("YBE");
    group.sample_size(10);
    let a3 = RMatrix::build(&Representation::minimal_an(3).unwrap(), DEFAULT_MAX_HEIGHT).unwrap();
    group.bench_function("A3 exact", |b| b.iter(|| check_ybe(&a3, None)));
    let g2 = RMatrix::build(&Representation::minimal_g2(), DEFAULT_MAX_HEIGHT).unwrap();
    let two = [Rational::from_integer(BigInt::from(2))];
    group.bench_function("G2 at v = 2", |b| b.iter(|| check_ybe(&g2, Some(&two))));
    group.finish();
}

fn g2_catalog(c: &mut Criterion) {
    let rep = Representation::minimal_g2();
    let sq = Representation::tensor_square(rep.algebra());
    let sets = pair_sets_for(&rep, DEFAULT_MAX_HEIGHT).unwrap();
    let lm = lminus_from_sets(&rep, &sets).unwrap();
    let cat = catalog_lmatrix(rep.algebra(), LKind::Minus).unwrap();
    let mut group = c.benchmark_group("G2 L-");
    group.sample_size(10);
    group.bench_function("slice from pair sets", |b| b.iter(|| lminus_from_sets(&rep, &sets).unwrap()));
    group.bench_function("slice = closed form, tensor square", |b| b.iter(|| compare_under_evaluation(&lm, &cat, &[&sq])));
    group.finish();
}

criterion_group!(benches, scalars, coproducts, dual_bases, r_matrices, g2_catalog);
criterion_main!(benches);
