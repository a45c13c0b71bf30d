//! Construction throughput on fuzz-sized carriers: the three subspace
//! routes, the closure round trip, and the three initial-topology routes.

use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use fintop::closure::{closure_from_topology, topology_from_closure};
use fintop::initial::{
    initial_topology_direct, initial_topology_via_closure, initial_topology_via_image,
    FiniteFunction,
};
use fintop::set::Carrier;
use fintop::subspace::{subspace_topology, subspace_topology_canonical, subspace_via_closure};
use fintop_bench::{sample_subset, seeded_topologies};

fn subspace(c: &mut Criterion) {
    let inputs = seeded_topologies(10, 0..32);
    let y = sample_subset(Carrier::new(10).unwrap());
    let mut group = c.benchmark_group("subspace n=10");
    group.bench_function("direct", |b| {
        b.iter(|| {
            for t in &inputs {
                black_box(subspace_topology(t, y));
            }
        })
    });
    group.bench_function("canonical", |b| {
        b.iter(|| {
            for t in &inputs {
                black_box(subspace_topology_canonical(t, y));
            }
        })
    });
    group.bench_function("via-closure", |b| {
        b.iter(|| {
            for t in &inputs {
                black_box(subspace_via_closure(t, y));
            }
        })
    });
    group.finish();
}

fn closure_round_trip(c: &mut Criterion) {
    let inputs = seeded_topologies(10, 0..32);
    c.bench_function("closure round trip n=10", |b| {
        b.iter(|| {
            for t in &inputs {
                let op = closure_from_topology(t);
                black_box(topology_from_closure(&op));
            }
        })
    });
}

fn initial(c: &mut Criterion) {
    let carrier = Carrier::new(10).unwrap();
    let dom = Carrier::new(8).unwrap();
    let inputs = seeded_topologies(10, 0..32);
    let f = FiniteFunction::new(dom, carrier, vec![0, 2, 4, 6, 8, 1, 3, 5]).unwrap();
    let mut group = c.benchmark_group("initial n=10 dom=8");
    group.bench_function("direct", |b| {
        b.iter(|| {
            for t in &inputs {
                black_box(initial_topology_direct(t, &f));
            }
        })
    });
    group.bench_function("via-image", |b| {
        b.iter(|| {
            for t in &inputs {
                black_box(initial_topology_via_image(t, &f));
            }
        })
    });
    group.bench_function("via-closure", |b| {
        b.iter(|| {
            for t in &inputs {
                black_box(initial_topology_via_closure(t, &f));
            }
        })
    });
    group.finish();
}

criterion_group!(benches, subspace, closure_round_trip, initial);
criterion_main!(benches);
