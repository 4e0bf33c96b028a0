mod common;

use hypercolor::hypergraph::gen_disjoint_cliques;
use hypercolor::lab::{
    emit_csv, parse_csv, run_experiment, write_csv, ExperimentConfig, ExperimentKind, Family,
    ScanRow, CSV_HEADER,
};
use hypercolor::palette::{random_list_assignment, solve_list_coloring};
use hypercolor::stats::{trial_rng, with_threads, Estimate};
use hypercolor::{Budget, Error};
use proptest::prelude::*;

use common::brute_list_colorable;

fn threshold(n_values: Vec<usize>, k_values: Vec<u32>) -> ExperimentConfig {
    let mut config = ExperimentConfig::new(ExperimentKind::Threshold, Family::CompleteGraph);
    config.n_values = n_values;
    config.k_values = k_values;
    config.trials = 40;
    config
}

fn small_configs() -> Vec<ExperimentConfig> {
    let mut degeneracy =
        ExperimentConfig::new(ExperimentKind::Degeneracy, Family::SequentialDegenerate);
    degeneracy.n_values = vec![40];
    degeneracy.degeneracy = 5;
    degeneracy.k_values = vec![2, 3];
    degeneracy.coefficients = vec![1.5];
    degeneracy.trials = 30;
    let mut clique = ExperimentConfig::new(ExperimentKind::Counterexample, Family::DisjointCliques);
    clique.n_values = vec![3, 10, 50];
    clique.k_values = vec![2];
    clique.sigma = Some(4);
    clique.trials = 300;
    let mut sparsify = ExperimentConfig::new(ExperimentKind::Sparsify, Family::RandomLinear);
    sparsify.n_values = vec![100];
    sparsify.r = 3;
    sparsify.max_degree = 4;
    sparsify.c_const = 9.0;
    sparsify.a_const = Some(2.0);
    sparsify.trials = 20;
    vec![
        threshold(vec![6, 12], vec![1, 2, 3, 4]),
        degeneracy,
        clique,
        sparsify,
    ]
}

fn render(rows: &[ScanRow]) -> Vec<u8> {
    let mut bytes = Vec::new();
    write_csv(rows, &mut bytes).unwrap();
    bytes
}

#[test]
fn rows_round_trip_and_respect_their_intervals() {
    for config in small_configs() {
        let rows = run_experiment(&config).unwrap();
        assert!(!rows.is_empty());
        let bytes = render(&rows);
        let parsed = parse_csv(bytes.as_slice()).unwrap();
        assert_eq!(render(&parsed), bytes, "{}", config.kind.name());
        for row in &rows {
            let e = &row.estimate;
            assert!(e.ci_low <= e.p_hat && e.p_hat <= e.ci_high, "{row:?}");
            assert_eq!(e.successes + e.failures + e.timeouts, config.trials);
            assert_eq!(row.seed, config.seed);
        }
    }
}

#[test]
fn same_seed_same_bytes_any_thread_count() {
    for mut config in small_configs() {
        config.record_elapsed = false;
        config.seed = 99;
        let base = render(&with_threads(1, || run_experiment(&config)).unwrap());
        for threads in [3, 8] {
            let again = render(&with_threads(threads, || run_experiment(&config)).unwrap());
            assert_eq!(again, base, "{} at {threads} threads", config.kind.name());
        }
    }
}

#[test]
fn k1_rows_report_zero() {
    let rows = run_experiment(&threshold(vec![2, 5, 9], vec![1])).unwrap();
    assert!(rows.iter().all(|row| row.estimate.p_hat == 0.0));
}

#[test]
fn threshold_rows_follow_grid_order() {
    let rows = run_experiment(&threshold(vec![8], vec![1, 2, 3, 4, 5])).unwrap();
    let text = String::from_utf8(render(&rows)).unwrap();
    assert_eq!(text.lines().count(), 6);
    assert!(rows.windows(2).all(|w| w[0].k < w[1].k));
}

#[test]
fn emit_csv_writes_header_for_no_rows() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.csv");
    emit_csv(&[], &path).unwrap();
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        format!("{}\n", CSV_HEADER.join(","))
    );
    let missing = dir.path().join("no/such/dir.csv");
    assert!(emit_csv(&[], missing).unwrap_err().is_io());
}

/// Single clique of order 2 with 1-lists from {1, 2}: failure iff both
/// vertices draw the same color, probability 1/2.
#[test]
fn single_clique_rate_matches_same_list_probability() {
    let mut config = ExperimentConfig::new(ExperimentKind::Counterexample, Family::DisjointCliques);
    config.n_values = vec![2];
    config.k_values = vec![1];
    config.sigma = Some(2);
    config.trials = 20_000;
    let row = &run_experiment(&config).unwrap()[0];
    assert_eq!(row.ref_value, 0.5);
    let se = (0.25 / 20_000f64).sqrt();
    assert!(
        (row.estimate.p_hat - 0.5).abs() <= 3.0 * se,
        "{}",
        row.estimate.p_hat
    );
}

/// The per-clique same-list criterion agrees with an actual list-coloring
/// decision on the whole disjoint union.
#[test]
fn same_list_criterion_agrees_with_solver() {
    let mut seen = [0usize; 2];
    for (k, r, sigma, cliques) in [(2, 2, 3, 3), (2, 2, 4, 2), (2, 3, 3, 2), (3, 2, 4, 1)] {
        let h = gen_disjoint_cliques(cliques, k, r).unwrap();
        let order = k * (r - 1) + 1;
        for t in 0..300 {
            let lists = random_list_assignment(&h, k, sigma, &mut trial_rng(t, 0)).unwrap();
            let blocked = (0..cliques).any(|c| {
                (c * order + 1..(c + 1) * order).all(|v| lists.list(v) == lists.list(c * order))
            });
            let solved = solve_list_coloring(&h, &lists, Budget::unlimited()).unwrap();
            assert_eq!(solved.is_sat(), !blocked, "k={k} r={r} trial {t}");
            assert_eq!(brute_list_colorable(&h, &lists), !blocked);
            seen[usize::from(blocked)] += 1;
        }
    }
    assert!(seen[0] > 0 && seen[1] > 0, "{seen:?}");
}

#[test]
fn heavy_timeouts_flag_the_row() {
    let mut config = threshold(vec![60], vec![5]);
    config.timeout_ms = 1;
    config.trials = 20;
    let row = &run_experiment(&config).unwrap()[0];
    assert!(row.estimate.timeout_fraction() > 0.05);
    assert!(row.is_invalid());
    assert!(row.extra.ends_with(";INVALID"));
}

#[test]
fn invalid_configs_are_rejected() {
    let mut bad_c = small_configs().pop().unwrap();
    bad_c.c_const = 8.0;
    assert!(matches!(run_experiment(&bad_c), Err(Error::Config(_))));
    let mut no_trials = threshold(vec![5], vec![2]);
    no_trials.trials = 0;
    assert!(matches!(run_experiment(&no_trials), Err(Error::Config(_))));
    let empty_grid = threshold(vec![], vec![2]);
    assert!(matches!(run_experiment(&empty_grid), Err(Error::Config(_))));
}

proptest! {
    #[test]
    fn estimate_invariants(s in 0u64..500, f in 0u64..500, t in 0u64..50) {
        prop_assume!(s + f + t > 0);
        let e = Estimate::from_counts(s, f, t);
        prop_assert_eq!(e.trials(), s + f + t);
        prop_assert!(0.0 <= e.ci_low && e.ci_low <= e.p_hat);
        prop_assert!(e.p_hat <= e.ci_high && e.ci_high <= 1.0);
    }
}
