use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use howe_bench::staircase;
use howe_core::crystals::multiplicity_oracle;
use howe_core::ensembles::{measure_table, most_probable_diagram, sample_gl_one, Pair};
use howe_core::limitshape::{limit_curve, ShapeSeries};
use howe_core::multiplicity::{
    mult_det_a_q, mult_det_bc_q, mult_prod_a_q, verify_duality, DualitySpec, LieType, Series,
};

fn multiplicities(c: &mut Criterion) {
    let l = staircase(5, 5);
    c.bench_function("det_a_q 5x5 staircase", |b| b.iter(|| mult_det_a_q(black_box(&l), 5, 5)));
    c.bench_function("prod_a_q 5x5 staircase", |b| b.iter(|| mult_prod_a_q(black_box(&l), 5, 5)));
    c.bench_function("det_bc_q 4x4 staircase", |b| b.iter(|| mult_det_bc_q(black_box(&staircase(4, 4)), 4, 4, 1)));
    let spec = DualitySpec::new(Series::BC, 3, 3, 1).unwrap();
    c.bench_function("verify_duality BC 3x3", |b| b.iter(|| verify_duality(black_box(spec))));
}

fn oracle(c: &mut Criterion) {
    c.bench_function("crystal oracle D n=2 4 factors", |b| b.iter(|| multiplicity_oracle(LieType::D, 2, black_box(4))));
}

fn measures(c: &mut Criterion) {
    c.bench_function("measure_table GL 5x5", |b| b.iter(|| measure_table(Pair::Gl, 5, black_box(5))));
    c.bench_function("measure_table O-SO 5x5", |b| b.iter(|| measure_table(Pair::OSo, 5, black_box(5))));
    c.bench_function("dual RSK sample GL 50x150", |b| {
        let mut i = 0;
        b.iter(|| {
            i += 1;
            sample_gl_one(50, 150, 1, black_box(i))
        })
    });
    c.bench_function("most_probable GL 30x90", |b| b.iter(|| most_probable_diagram(Pair::Gl, 30, black_box(90))));
}

fn shapes(c: &mut Criterion) {
    c.bench_function("limit curve c=3, 400 points", |b| b.iter(|| limit_curve(black_box(3.0), ShapeSeries::Gl, 400)));
}

criterion_group!(benches, multiplicities, oracle, measures, shapes);
criterion_main!(benches);
