//! Benchmarks for the combinatorial layer: words, coset enumeration and
//! Reidemeister–Schreier rewriting.

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use pi1_core::fixtures;
use pi1_core::presentations::{tietze_simplify, Presentation, TietzeLimits};
use pi1_core::subgroups::{coset_table_from_cyclic_hom, reidemeister_schreier, todd_coxeter};
use pi1_core::words::{artin_automorphism, BraidWord, Word};

fn bench_word_reduction(c: &mut Criterion) {
    // a long zig-zag word with heavy cancellation
    let letters: Vec<i32> = (0..2000)
        .map(|i| {
            let g = (i % 4) + 1;
            if (i / 4) % 2 == 0 {
                g
            } else {
                -g
            }
        })
        .collect();
    c.bench_function("word_reduce_2000", |b| {
        b.iter(|| Word::from_letters(black_box(letters.iter().copied())))
    });
}

fn bench_artin(c: &mut Criterion) {
    let braid = BraidWord::new(6, (0..30).map(|i| (i % 5) + 1).collect()).unwrap();
    c.bench_function("artin_automorphism_30_letters", |b| {
        b.iter(|| artin_automorphism(black_box(&braid)))
    });
}

fn bench_todd_coxeter(c: &mut Criterion) {
    // A4 = <a,b | a^3, b^3, (ab)^2>: 12 cosets with coincidences
    let p = Presentation::new(
        vec!["a".into(), "b".into()],
        vec![
            Word::gen(0).pow(3),
            Word::gen(1).pow(3),
            Word::gen(0).concat(&Word::gen(1)).pow(2),
        ],
    )
    .unwrap();
    c.bench_function("todd_coxeter_a4", |b| {
        b.iter(|| todd_coxeter(black_box(&p), &[], 10_000).unwrap())
    });
}

fn bench_rs_pipeline(c: &mut Criterion) {
    let start = fixtures::tilde_g1();
    c.bench_function("rs_index2_tilde_g1", |b| {
        b.iter(|| {
            let table = coset_table_from_cyclic_hom(&start, &[0, 1, 0, 0], 2).unwrap();
            reidemeister_schreier(black_box(&start), &table, &TietzeLimits::default()).unwrap()
        })
    });
}

fn bench_tietze(c: &mut Criterion) {
    let p = fixtures::tilde_g1();
    let table = coset_table_from_cyclic_hom(&p, &[0, 1, 0, 0], 2).unwrap();
    let rs = reidemeister_schreier(&p, &table, &TietzeLimits::default()).unwrap();
    c.bench_function("tietze_simplify_kernel", |b| {
        b.iter(|| tietze_simplify(black_box(&rs.raw), &TietzeLimits::default()))
    });
}

criterion_group!(
    benches,
    bench_word_reduction,
    bench_artin,
    bench_todd_coxeter,
    bench_rs_pipeline,
    bench_tietze
);
criterion_main!(benches);
