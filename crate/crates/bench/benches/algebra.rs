use criterion::{black_box, criterion_group, criterion_main, Criterion};
use disingquandle::families::enumerate::collect_disingquandles;
use disingquandle::{find_isomorphism, validate_oriented_disingquandle};
use disingquandle_bench::structures;

fn validation(c: &mut Criterion) {
    for (name, d) in structures() {
        c.bench_function(&format!("validate/{name}"), |b| b.iter(|| validate_oriented_disingquandle(black_box(&d))));
    }
}

fn isomorphism(c: &mut Criterion) {
    let (_, d) = &structures()[0];
    let perm: Vec<usize> = (0..d.size()).map(|x| (3 * x + 7) % d.size()).collect();
    let image = d.relabel(&perm).unwrap();
    c.bench_function("iso/z10_canonical", |b| b.iter(|| find_isomorphism(black_box(d), black_box(&image))));
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate");
    group.sample_size(10);
    group.bench_function("order_3", |b| b.iter(|| collect_disingquandles(black_box(3), u64::MAX).0.len()));
    group.finish();
}

criterion_group!(benches, validation, isomorphism, enumeration);
criterion_main!(benches);
