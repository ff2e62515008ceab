use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use qsum_core::enumerate::{canonical_form, enumerate_graphs, min_f_by_edges, EnumSpec};
use qsum_core::exact::charpoly_int;
use qsum_core::exact::IntMatrix;
use qsum_core::graph::{complete, cycle, star_plus};
use qsum_core::{eig_sym, matrix_of, CertifiedF, Graph, MatrixKind};

fn petersen() -> Graph {
    let mut pairs: Vec<(usize, usize)> = (0..5).map(|i| (i, (i + 1) % 5)).collect();
    pairs.extend((0..5).map(|i| (5 + i, 5 + (i + 2) % 5)));
    pairs.extend((0..5).map(|i| (i, i + 5)));
    Graph::from_edge_list(10, &pairs).unwrap()
}

fn jacobi(c: &mut Criterion) {
    let mut group = c.benchmark_group("jacobi");
    for a in [10, 30, 60] {
        let q = matrix_of(&star_plus(a).unwrap(), MatrixKind::Signless);
        group.bench_with_input(BenchmarkId::new("star-plus", a), &q, |b, q| b.iter(|| eig_sym(black_box(q)).unwrap()));
    }
    group.finish();
}

fn charpoly(c: &mut Criterion) {
    let mut group = c.benchmark_group("charpoly");
    for (name, g) in [("petersen", petersen()), ("K8", complete(8).unwrap()), ("C12", cycle(12).unwrap())] {
        let m = IntMatrix::from_matrix(matrix_of(&g, MatrixKind::Signless).as_matrix()).unwrap();
        group.bench_function(name, |b| b.iter(|| charpoly_int(black_box(&m))));
    }
    group.bench_function("certified-f petersen", |b| b.iter(|| CertifiedF::new(black_box(&petersen())).unwrap()));
    group.finish();
}

fn canonical(c: &mut Criterion) {
    let mut group = c.benchmark_group("canonical-form");
    for (name, g) in [("petersen", petersen()), ("K8", complete(8).unwrap()), ("star-plus-12", star_plus(12).unwrap())] {
        group.bench_function(name, |b| b.iter(|| canonical_form(black_box(&g)).unwrap()));
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    group.bench_function("vertices-7", |b| b.iter(|| enumerate_graphs(&EnumSpec::vertices(7)).unwrap().len()));
    group.bench_function("edges-7", |b| b.iter(|| enumerate_graphs(&EnumSpec::edges(7)).unwrap().len()));
    group.bench_function("min-f-edges-6", |b| b.iter(|| min_f_by_edges(6).unwrap()));
    group.finish();
}

criterion_group!(benches, jacobi, charpoly, canonical, enumeration);
criterion_main!(benches);
