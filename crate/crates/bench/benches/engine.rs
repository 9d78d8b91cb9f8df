use criterion::{black_box, criterion_group, criterion_main, Criterion};
use stokes_core::orbits::orbit_bfs;
use stokes_core::verify::squared_via_cells;
use stokes_core::{enum_standard_graphs, SectorConfig, Sign, StandardGraph};

fn corpus(n: usize, sub: &[usize], mc: usize) -> Vec<StandardGraph> {
    enum_standard_graphs(&SectorConfig::new(n, sub.iter().copied()).unwrap(), mc)
}

fn squared_moves(c: &mut Criterion) {
    let graphs = corpus(7, &[1, 4], 1);
    let dominant = graphs[0].config().dominant();
    c.bench_function("act_squared n7 corpus", |b| {
        b.iter(|| {
            for g in &graphs {
                for &j in &dominant {
                    black_box(g.act_squared(j, Sign::Plus).unwrap());
                }
            }
        })
    });
    let small = &graphs[..20];
    c.bench_function("act_basic squared via cells, 20 graphs", |b| {
        b.iter(|| {
            for g in small {
                for &j in &dominant {
                    black_box(squared_via_cells(g, j, Sign::Minus).unwrap());
                }
            }
        })
    });
}

fn enumeration(c: &mut Criterion) {
    let cfg = SectorConfig::new(8, [0, 2, 4, 6]).unwrap();
    c.bench_function("enumerate n8 alternating mc1", |b| b.iter(|| black_box(enum_standard_graphs(&cfg, 1))));
}

fn contraction(c: &mut Criterion) {
    let graphs = corpus(7, &[1, 4], 1);
    c.bench_function("to_single_junction n7 corpus", |b| {
        b.iter(|| {
            for g in &graphs {
                black_box(g.to_single_junction().unwrap());
            }
        })
    });
    let graphs = corpus(8, &[0, 2, 4, 6], 1);
    c.bench_function("to_one_y n8 alternating corpus", |b| {
        b.iter(|| {
            for g in &graphs {
                black_box(g.to_one_y().unwrap());
            }
        })
    });
}

fn orbits(c: &mut Criterion) {
    let g = corpus(6, &[0, 3], 0).remove(0);
    let mut group = c.benchmark_group("orbit");
    group.sample_size(10);
    group.bench_function("bfs n6 bound 2", |b| b.iter(|| black_box(orbit_bfs(&g, 2))));
    group.finish();
}

criterion_group!(benches, squared_moves, enumeration, contraction, orbits);
criterion_main!(benches);
