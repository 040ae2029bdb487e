use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;
use tmrec::jfraction_from_moments;
use tmrec::recmat::{builtin, minimize, rec_product};
use tmrec::thuemorse::{hankel, hankel_determinants, i_tau};

fn determinants(c: &mut Criterion) {
    let mut group = c.benchmark_group("hankel_det");
    for n in [32usize, 64, 128] {
        let coeffs: Vec<_> = (0..2 * n as u64).map(i_tau).collect();
        let h = hankel(|k| coeffs[k].clone(), 0, n);
        group.bench_with_input(BenchmarkId::new("bareiss", n), &h, |b, h| {
            b.iter(|| black_box(h.det_bareiss().unwrap()))
        });
        group.bench_with_input(BenchmarkId::new("leading_minors", n), &coeffs, |b, c| {
            b.iter(|| black_box(hankel_determinants(c, 0, n)))
        });
    }
    group.sample_size(10);
    let coeffs: Vec<_> = (0..32u64).map(i_tau).collect();
    let h = hankel(|k| coeffs[k].clone(), 0, 16);
    group.bench_function("field/16", |b| b.iter(|| black_box(h.det_field().unwrap())));
    group.finish();
}

fn presentations(c: &mut Criterion) {
    let h = builtin("H").unwrap();
    let mut group = c.benchmark_group("recmat");
    for n in [4usize, 6] {
        group.bench_with_input(BenchmarkId::new("unfold_H", n), &n, |b, &n| {
            b.iter(|| black_box(h.unfold(n)))
        });
    }
    let lu = rec_product(&builtin("L").unwrap(), &builtin("U").unwrap()).unwrap();
    group.bench_function("minimize_LU", |b| b.iter(|| black_box(minimize(&lu))));
    group.finish();
}

fn jfraction(c: &mut Criterion) {
    let moments: Vec<_> = (0..=256u64).map(i_tau).collect();
    c.bench_function("jfraction/128", |b| {
        b.iter(|| black_box(jfraction_from_moments(&moments, 128).unwrap()))
    });
}

criterion_group!(benches, determinants, presentations, jfraction);
criterion_main!(benches);
