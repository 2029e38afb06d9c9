use std::hint::black_box;
use std::sync::atomic::{AtomicUsize, Ordering};

use criterion::{criterion_group, criterion_main, Criterion};
use twistlink_bench::{disk_graphs, pretzels};
use twistlink_core::graph::{check_disk_lemma_by_doubling, for_each_graph};
use twistlink_core::{
    augment, check_disk_lemma, checkerboard, double, reduce_twists, search_counterexamples, twist_regions,
    validate_augmented, ColorFilter, Constraints, Context, DoubleMode, Lemma,
};

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    g.sample_size(10);
    for (name, context, max) in [
        ("sphere_8", Context::Sphere, 8),
        ("disk_7", Context::Disk, 7),
        ("torus_7", Context::Torus, 7),
    ] {
        g.bench_function(name, |b| {
            b.iter(|| {
                let n = AtomicUsize::new(0);
                for_each_graph(context, max, &Constraints::none(), |_| {
                    n.fetch_add(1, Ordering::Relaxed);
                })
                .unwrap();
                n.into_inner()
            })
        });
    }
    g.finish();
}

fn campaigns(c: &mut Criterion) {
    let mut g = c.benchmark_group("campaign");
    g.sample_size(10);
    g.bench_function("sphere_9", |b| {
        b.iter(|| search_counterexamples(Lemma::Sphere, 9).unwrap())
    });
    g.bench_function("torus_8", |b| {
        b.iter(|| search_counterexamples(Lemma::Torus, 8).unwrap())
    });
    g.finish();
}

fn disk_checks(c: &mut Criterion) {
    let graphs = disk_graphs(6);
    let mut g = c.benchmark_group("disk_6");
    g.bench_function("direct", |b| {
        b.iter(|| graphs.iter().filter(|x| check_disk_lemma(x).holds()).count())
    });
    g.bench_function("by_doubling", |b| {
        b.iter(|| {
            graphs
                .iter()
                .filter(|x| check_disk_lemma_by_doubling(x).holds())
                .count()
        })
    });
    g.bench_function("double", |b| {
        b.iter(|| {
            graphs
                .iter()
                .map(|x| double(x, DoubleMode::DiskToSphere).unwrap().edge_count())
                .sum::<usize>()
        })
    });
    g.finish();
}

fn diagrams(c: &mut Criterion) {
    let ds = pretzels(&[10, 40, 120]);
    let mut g = c.benchmark_group("diagram");
    g.bench_function("twist_regions", |b| {
        b.iter(|| {
            ds.iter()
                .map(|d| twist_regions(d, &checkerboard(d)).len())
                .sum::<usize>()
        })
    });
    g.bench_function("augment_reduce_validate", |b| {
        b.iter(|| {
            for d in &ds {
                let l = augment(d, &checkerboard(d), 4, ColorFilter::Blue).unwrap();
                let li = reduce_twists(&l, 2).unwrap();
                black_box(validate_augmented(&li));
            }
        })
    });
    g.finish();
}

criterion_group!(benches, enumeration, campaigns, disk_checks, diagrams);
criterion_main!(benches);
