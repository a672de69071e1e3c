use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use sect_shell::{
    partial_permutation, sect_covers, verify_el_sect, Clan, Limits, Partition, SectPoset,
};

fn build(c: &mut Criterion) {
    let staircase: Partition = "3,2,1".parse().unwrap();
    let rectangle = Partition::rectangle(3, 3);
    c.bench_function("build (3,3) staircase", |b| {
        b.iter(|| SectPoset::build(3, 3, black_box(&staircase)).unwrap())
    });
    c.bench_function("build (3,3) rectangle", |b| {
        b.iter(|| SectPoset::build(3, 3, black_box(&rectangle)).unwrap())
    });
}

fn covers_and_phi(c: &mut Criterion) {
    let clan = Clan::parse("12+3++-3-1-2", 6, 6).unwrap();
    c.bench_function("sect covers, n=12", |b| {
        b.iter(|| sect_covers(black_box(&clan)))
    });
    c.bench_function("phi, n=12", |b| {
        b.iter(|| partial_permutation(black_box(&clan)))
    });
}

fn verify(c: &mut Criterion) {
    let poset = SectPoset::build(3, 3, &Partition::rectangle(3, 3)).unwrap();
    let mut group = c.benchmark_group("verify-el");
    group.sample_size(10);
    group.bench_function("(3,3,3)", |b| {
        b.iter(|| verify_el_sect(black_box(&poset), Limits::default()))
    });
    group.finish();
}

criterion_group!(benches, build, covers_and_phi, verify);
criterion_main!(benches);
