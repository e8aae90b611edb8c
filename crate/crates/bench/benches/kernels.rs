use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use fused_specht::blocks::BlockBasis;
use fused_specht::bpz::bsa_operator;
use fused_specht::poly::antisymmetrize;
use fused_specht::specht::{fused_specht_combinatorial, fused_specht_limit, specht};
use fused_specht::virasoro::verify_singular;
use fused_specht::{Filling, Valences};

fn fused(c: &mut Criterion) {
    let f = Filling::with_content(vec![vec![1, 2], vec![1, 3], vec![2, 4]], &"2,2,1,1".parse().unwrap()).unwrap();
    c.bench_function("fused_limit_2211", |b| b.iter(|| fused_specht_limit(black_box(&f)).unwrap()));
    c.bench_function("fused_combinatorial_2211", |b| b.iter(|| fused_specht_combinatorial(black_box(&f))));
    let g: Filling = "1,1,2,3;2,3,4,4".parse().unwrap();
    c.bench_function("fused_limit_2222", |b| b.iter(|| fused_specht_limit(black_box(&g)).unwrap()));
}

fn antisym(c: &mut Criterion) {
    let t: Filling = "1,3,5,7;2,4,6,8".parse().unwrap();
    let p = specht(&t.transpose()).unwrap();
    let v: Valences = "2,2,2,2".parse().unwrap();
    c.bench_function("antisymmetrize_8_vars", |b| b.iter(|| antisymmetrize(black_box(&v), black_box(&p)).unwrap()));
}

fn blocks(c: &mut Criterion) {
    let v: Valences = "2,2,2,2".parse().unwrap();
    c.bench_function("block_basis_2222", |b| b.iter(|| BlockBasis::new(black_box(&v)).unwrap()));
    let basis = BlockBasis::new(&v).unwrap();
    let f = basis.elements[1].function.clone();
    c.bench_function("null_vector_order3", |b| b.iter(|| bsa_operator(0, black_box(&v), black_box(&f)).unwrap()));
}

fn virasoro(c: &mut Criterion) {
    c.bench_function("singular_level_6", |b| b.iter(|| verify_singular(black_box(6))));
}

criterion_group! {
    name = kernels;
    config = Criterion::default().sample_size(10);
    targets = fused, antisym, blocks, virasoro
}
criterion_main!(kernels);
