use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use hypercolor::conflict::{exact_p, greedy_color, random_local_partition, ConflictSolver};
use hypercolor::palette::{
    lll_resample_color, prune_bad_colors, random_list_assignment, solve_list_coloring,
    DEFAULT_EPSILON,
};
use hypercolor::stats::trial_rng;
use hypercolor::{Budget, ColorDegreeTable};
use hypercolor_bench::{complete_graph, linear_triple_system};

fn conflict_solver(c: &mut Criterion) {
    let mut group = c.benchmark_group("conflict_solve");
    for (n, k) in [(20, 3), (60, 5), (100, 6)] {
        let h = complete_graph(n);
        let solver = ConflictSolver::new(&h);
        let partition = random_local_partition(&h, k, &mut trial_rng(0, 0)).unwrap();
        group.bench_with_input(BenchmarkId::new(format!("K{n}"), k), &partition, |b, p| {
            b.iter(|| {
                solver
                    .solve(black_box(p), Budget::nodes(1_000_000))
                    .unwrap()
            })
        });
    }
    group.finish();
}

fn greedy(c: &mut Criterion) {
    let h = linear_triple_system(3000, 6);
    let partition = random_local_partition(&h, 4, &mut trial_rng(0, 0)).unwrap();
    let order = h.degeneracy_order();
    c.bench_function("greedy_linear_3000", |b| {
        b.iter(|| greedy_color(&h, black_box(&partition), &order))
    });
}

fn exact_oracle(c: &mut Criterion) {
    let h = complete_graph(4);
    c.bench_function("exact_p_K4_k2", |b| {
        b.iter(|| exact_p(black_box(&h), 2).unwrap())
    });
}

fn palette(c: &mut Criterion) {
    let h = linear_triple_system(2000, 5);
    let lists = random_list_assignment(&h, 4, 20, &mut trial_rng(0, 0)).unwrap();
    let mut group = c.benchmark_group("palette_linear_2000");
    group.bench_function("color_degrees", |b| {
        b.iter(|| ColorDegreeTable::new(&h, black_box(&lists)).unwrap())
    });
    group.bench_function("prune", |b| {
        b.iter(|| prune_bad_colors(&h, black_box(&lists), DEFAULT_EPSILON).unwrap())
    });
    group.bench_function("backtrack", |b| {
        b.iter(|| solve_list_coloring(&h, black_box(&lists), Budget::nodes(1_000_000)).unwrap())
    });
    group.bench_function("resample", |b| {
        b.iter(|| lll_resample_color(&h, &lists, &mut trial_rng(1, 0), 100_000).unwrap())
    });
    group.finish();
}

criterion_group!(benches, conflict_solver, greedy, exact_oracle, palette);
criterion_main!(benches);
