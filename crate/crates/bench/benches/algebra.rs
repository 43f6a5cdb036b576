use criterion::{black_box, criterion_group, criterion_main, Criterion};

use grpfact_bench::group;
use grpfact_core::gf2::{mul, set_sum};
use grpfact_core::subgroups::all_subgroups;
use grpfact_core::SubsetMask;

fn convolution(c: &mut Criterion) {
    let g = group("S5");
    let u = set_sum(&g, SubsetMask::from_indices((0..120).step_by(3)));
    let v = set_sum(&g, SubsetMask::from_indices((0..120).step_by(7)));
    c.bench_function("gf2 mul S5", |b| b.iter(|| mul(&g, black_box(u), black_box(v)).unwrap()));
}

fn lattices(c: &mut Criterion) {
    let ids = ["S4", "C2 x S4", "A5"];
    let mut grp = c.benchmark_group("subgroup lattice");
    grp.sample_size(10);
    for id in ids {
        // rebuild each time: the lattice is cached on the group
        grp.bench_function(id, |b| b.iter(|| all_subgroups(&group(id)).len()));
    }
    grp.finish();
}

criterion_group!(benches, convolution, lattices);
criterion_main!(benches);
