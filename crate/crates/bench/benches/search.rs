use criterion::{criterion_group, criterion_main, Criterion};

use grpfact_bench::{group, shape};
use grpfact_core::catalog::Catalog;
use grpfact_core::classify::classify_catalog;
use grpfact_core::engine::{chain_peel_strategy, exact_cover_search, exhaustive_search, sandwich_strategy};
use grpfact_core::SearchBudget;

fn searches(c: &mut Criterion) {
    let budget = SearchBudget::default();
    let a4 = group("A4");
    let s = shape("2,3,2");
    c.bench_function("exhaustive A4 (2,3,2)", |b| b.iter(|| exhaustive_search(&a4, &s, &budget).unwrap()));

    let g36 = group("C3 x A4");
    let s = shape("2,9,2");
    c.bench_function("exact cover C3 x A4 (2,9,2)", |b| b.iter(|| exact_cover_search(&g36, &s, &budget).unwrap()));

    let a5 = group("A5");
    let s = shape("2,15,2");
    c.bench_function("exact cover A5 (2,15,2)", |b| b.iter(|| exact_cover_search(&a5, &s, &budget).unwrap()));

    let s = shape("4,5,3");
    c.bench_function("exact cover A5 (4,5,3)", |b| b.iter(|| exact_cover_search(&a5, &s, &budget).unwrap()));
}

fn constructions(c: &mut Criterion) {
    let s4 = group("S4");
    let s = shape("2,2,3,2");
    c.bench_function("chain peel S4 (2,2,3,2)", |b| b.iter(|| chain_peel_strategy(&s4, &s)));

    let s5 = group("S5");
    let s = shape("2,2,5,2,3");
    c.bench_function("sandwich S5 (2,2,5,2,3)", |b| b.iter(|| sandwich_strategy(&s5, &s)));
}

fn classification(c: &mut Criterion) {
    let cat = Catalog::builtin();
    let budget = SearchBudget::default();
    let mut g = c.benchmark_group("classify");
    g.sample_size(10);
    g.bench_function("catalog to order 60", |b| b.iter(|| classify_catalog(&cat, 60, &budget, None).unwrap()));
    g.finish();
}

criterion_group!(benches, searches, constructions, classification);
criterion_main!(benches);
