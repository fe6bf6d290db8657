use criterion::{criterion_group, criterion_main, Criterion};
use modcat_bench::{bundle, d6};
use modcat_core::cat_d::CategoryD;
use modcat_core::chartable::character_table;
use modcat_core::modular::{build_modular_data, s_tilde};
use modcat_core::oracle::{build_all, s_tilde_oracle};

fn tables(c: &mut Criterion) {
    let b = bundle("d6");
    c.bench_function("character table D6", |x| x.iter(|| character_table(&b.group).unwrap()));
    let q = bundle("q8");
    c.bench_function("character table Q8", |x| x.iter(|| character_table(&q.group).unwrap()));
}

fn category(c: &mut Criterion) {
    let b = bundle("d6");
    c.bench_function("simples D6", |x| x.iter(|| CategoryD::new(&b.factor).unwrap()));
}

fn modular(c: &mut Criterion) {
    let cat = d6();
    let mut g = c.benchmark_group("modular");
    g.sample_size(10);
    g.bench_function("S~ D6", |x| x.iter(|| s_tilde(&cat)));
    g.bench_function("modular data D6", |x| x.iter(|| build_modular_data(&cat)));
    g.finish();
}

fn oracle(c: &mut Criterion) {
    let cat = d6();
    let mods = build_all(&cat).unwrap();
    let mut g = c.benchmark_group("oracle");
    g.sample_size(10);
    g.bench_function("explicit modules D6", |x| x.iter(|| build_all(&cat).unwrap()));
    g.bench_function("double braiding trace 6+- x 5+-", |x| {
        x.iter(|| s_tilde_oracle(&cat.f, &mods[30], &mods[25]).unwrap())
    });
    g.finish();
}

criterion_group!(benches, tables, category, modular, oracle);
criterion_main!(benches);
