use std::time::Instant;

use num_traits::ToPrimitive;

use super::{ExperimentConfig, ExperimentKind, Family, PruneSummary, ScanRow};
use crate::conflict::{estimate_p_with, theory_bounds, ConflictSolver, SolveStatus};
use crate::error::{Error, Result};
use crate::hypergraph::{
    gen_complete_uniform, gen_disjoint_cliques, gen_random_linear, gen_sequential_degenerate,
    Hypergraph,
};
use crate::palette::{
    clique_same_list_probability, lll_resample_color, prune_bad_colors, random_list_assignment,
    solve_list_coloring,
};
use crate::stats::{run_trials, trial_rng, Estimate};
use crate::Color;

/// Resampling budget of the local-lemma fallback, per edge.
const RESAMPLES_PER_EDGE: u64 = 10;

/// `(2^r e r)^(1/(r-1))`: palette constants must exceed it.
pub fn min_legal_c(r: usize) -> f64 {
    let rf = r as f64;
    (2f64.powi(r as i32) * std::f64::consts::E * rf).powf(1.0 / (rf - 1.0))
}

/// `ceil(C * delta^(1/(r-1)))`.
pub fn sparsification_sigma(c: f64, delta: usize, r: usize) -> Color {
    (c * (delta as f64).powf(1.0 / (r as f64 - 1.0))).ceil() as Color
}

/// `ceil(c * (d / ln d)^(1/r))`.
pub fn degeneracy_k(c: f64, d: usize, r: usize) -> Color {
    let d = d as f64;
    (c * (d / d.ln()).powf(1.0 / r as f64)).ceil() as Color
}

/// Dispatches on `config.kind` after validation.
pub fn run_experiment(config: &ExperimentConfig) -> Result<Vec<ScanRow>> {
    match config.kind {
        ExperimentKind::Threshold => run_threshold_scan(config),
        ExperimentKind::Degeneracy => run_degeneracy_experiment(config),
        ExperimentKind::Counterexample => run_counterexample_experiment(config),
        ExperimentKind::Sparsify => run_sparsification_experiment(config),
    }
}

fn ensure_kind(config: &ExperimentConfig, kind: ExperimentKind) -> Result<()> {
    if config.kind != kind {
        return Err(Error::Config(format!(
            "expected a {} config, got {}",
            kind.name(),
            config.kind.name()
        )));
    }
    config.validate()
}

struct RowBuilder<'a> {
    config: &'a ExperimentConfig,
    start: Instant,
}

impl<'a> RowBuilder<'a> {
    fn start(config: &'a ExperimentConfig) -> Self {
        RowBuilder {
            config,
            start: Instant::now(),
        }
    }

    #[allow(clippy::too_many_arguments)]
    fn finish(
        self,
        n: usize,
        k: Color,
        sigma: Option<Color>,
        mut extra: String,
        estimate: Estimate,
        ref_value: f64,
        prune: Option<PruneSummary>,
    ) -> ScanRow {
        let elapsed_ms = if self.config.record_elapsed {
            self.start.elapsed().as_millis() as u64
        } else {
            0
        };
        let mut row = ScanRow {
            experiment: self.config.kind.name().to_string(),
            family: self.config.family.name().to_string(),
            n,
            r: self.config.r,
            k,
            sigma,
            extra: String::new(),
            estimate,
            ref_value,
            seed: self.config.seed,
            elapsed_ms,
            prune,
        };
        if row.is_invalid() {
            extra.push_str(";INVALID");
        }
        row.extra = extra;
        row
    }
}

/// Estimates `p(H, k)` on complete graphs or complete `r`-uniform
/// hypergraphs over the `n x k` grid. `ref_value` is the predicted
/// threshold for the family.
pub fn run_threshold_scan(config: &ExperimentConfig) -> Result<Vec<ScanRow>> {
    ensure_kind(config, ExperimentKind::Threshold)?;
    let mut rows = Vec::new();
    for &n in &config.n_values {
        let h = gen_complete_uniform(n, config.r)?;
        let bounds = theory_bounds(&h);
        let reference = match config.family {
            Family::CompleteGraph => bounds.threshold_complete_graph,
            _ => bounds.threshold_complete_uniform,
        }
        .unwrap_or(f64::NAN);
        let solver = ConflictSolver::new(&h);
        for &k in &config.k_values {
            let row = RowBuilder::start(config);
            let estimate =
                estimate_p_with(&solver, k, config.trials, config.seed, config.budget())?;
            let extra = format!("m={}", h.num_edges());
            rows.push(row.finish(n, k, None, extra, estimate, reference, None));
        }
    }
    Ok(rows)
}

/// Estimates `p(H, k)` on sequentially built `d`-degenerate hypergraphs,
/// one hypergraph per `n` generated from the master seed. Palette sizes
/// come from `k_values` and from `coefficients` through [`degeneracy_k`];
/// rows are in ascending `k`. `ref_value` is `(r d / ln d)^(1/r)`.
pub fn run_degeneracy_experiment(config: &ExperimentConfig) -> Result<Vec<ScanRow>> {
    ensure_kind(config, ExperimentKind::Degeneracy)?;
    let (d, r) = (config.degeneracy, config.r);
    let scale = (d as f64 / (d as f64).ln()).powf(1.0 / r as f64);
    let mut ks: Vec<Color> = config
        .coefficients
        .iter()
        .map(|&c| degeneracy_k(c, d, r))
        .chain(config.k_values.iter().copied())
        .collect();
    ks.sort_unstable();
    ks.dedup();
    let reference = (r as f64 * d as f64 / (d as f64).ln()).powf(1.0 / r as f64);

    let mut rows = Vec::new();
    for &n in &config.n_values {
        let h = gen_sequential_degenerate(n, r, d, config.seed)?;
        let actual = h.degeneracy_order().degeneracy;
        let solver = ConflictSolver::new(&h);
        for &k in &ks {
            let row = RowBuilder::start(config);
            let estimate =
                estimate_p_with(&solver, k, config.trials, config.seed, config.budget())?;
            let extra = format!(
                "d={d};degeneracy={actual};c={}",
                super::format_g(f64::from(k) / scale)
            );
            rows.push(row.finish(n, k, None, extra, estimate, reference, None));
        }
    }
    Ok(rows)
}

/// Disjoint cliques of order `k(r-1)+1`, one per `k(r-1)+1` requested
/// vertices, with random `(k, sigma)`-lists. A clique is not `L`-colorable
/// exactly when all of its lists coincide, so a trial counts as a success
/// when some clique has a single common list, i.e. when the hypergraph is
/// NOT `L`-colorable. `ref_value` is `1 - (1 - P)^cliques` with `P` from
/// [`clique_same_list_probability`].
pub fn run_counterexample_experiment(config: &ExperimentConfig) -> Result<Vec<ScanRow>> {
    ensure_kind(config, ExperimentKind::Counterexample)?;
    let (k, r) = (config.k_values[0] as usize, config.r);
    let order = k * (r - 1) + 1;
    let clique_degree = binomial(k * (r - 1), r - 1);
    let sigma = config
        .sigma
        .unwrap_or_else(|| sparsification_sigma(config.c_const, clique_degree, r));
    let p_clique = clique_same_list_probability(k, r, sigma)?
        .to_f64()
        .expect("probability fits in f64");

    let mut rows = Vec::new();
    for &n in &config.n_values {
        let row = RowBuilder::start(config);
        let cliques = n / order;
        let h = gen_disjoint_cliques(cliques, k, r)?;
        let outcomes = run_trials(config.trials, |t| {
            let mut rng = trial_rng(config.seed, t);
            let lists = random_list_assignment(&h, k, sigma, &mut rng)
                .expect("1 <= k <= sigma checked above");
            (0..cliques).any(|c| {
                let first = lists.list(c * order);
                (c * order + 1..(c + 1) * order).all(|v| lists.list(v) == first)
            })
        });
        let failures = outcomes.iter().filter(|&&bad| bad).count() as u64;
        let estimate = Estimate::from_counts(failures, config.trials - failures, 0);
        let reference = 1.0 - (1.0 - p_clique).powi(cliques as i32);
        let extra = format!("cliques={cliques};clique_order={order};event=not_colorable");
        rows.push(row.finish(n, k as Color, Some(sigma), extra, estimate, reference, None));
    }
    Ok(rows)
}

/// Random linear `r`-uniform hypergraphs (one per `n`, generated from the
/// master seed) with random `(k, sigma)`-lists, `sigma` from the `C` rule.
/// Each trial optionally measures bad-color pruning, then decides
/// `L`-colorability of the drawn lists with the backtracking solver and, on
/// timeout, the local-lemma resampler. `ref_value` is the smallest legal
/// `C`.
pub fn run_sparsification_experiment(config: &ExperimentConfig) -> Result<Vec<ScanRow>> {
    ensure_kind(config, ExperimentKind::Sparsify)?;
    let (r, delta) = (config.r, config.max_degree);
    let sigma = config
        .sigma
        .unwrap_or_else(|| sparsification_sigma(config.c_const, delta, r));
    let mut rows = Vec::new();
    for &n in &config.n_values {
        let h = gen_random_linear(n, r, delta, config.seed)?;
        let ks: Vec<Color> = if config.k_values.is_empty() {
            let a = config.a_const.expect("validated");
            vec![(a * (n as f64).ln().powf(1.0 / r as f64)).ceil() as Color]
        } else {
            config.k_values.clone()
        };
        for k in ks {
            if k > sigma {
                return Err(Error::Config(format!("k = {k} exceeds sigma = {sigma}")));
            }
            let row = RowBuilder::start(config);
            let trials = run_trials(config.trials, |t| sparsify_trial(config, &h, k, sigma, t));
            let mut counts = [0u64; 3];
            let mut prune: Option<PruneSummary> = None;
            let mut heavy_free = 0usize;
            let mut total_fraction = 0.0;
            let mut pairs = 0usize;
            for trial in &trials {
                counts[trial.status] += 1;
                if let Some(p) = &trial.prune {
                    let s = prune.get_or_insert(PruneSummary {
                        threshold: p.threshold,
                        mean_bad_fraction: 0.0,
                        max_bad_fraction: 0.0,
                        share_below_alpha: 0.0,
                        alpha: config.bad_fraction_alpha,
                    });
                    s.max_bad_fraction = s.max_bad_fraction.max(p.max);
                    heavy_free += p.below;
                    total_fraction += p.sum;
                    pairs += p.vertices;
                }
            }
            if let Some(s) = prune.as_mut() {
                if pairs > 0 {
                    s.mean_bad_fraction = total_fraction / pairs as f64;
                    s.share_below_alpha = heavy_free as f64 / pairs as f64;
                } else {
                    s.share_below_alpha = 1.0;
                }
            }
            let estimate = Estimate::from_counts(counts[0], counts[1], counts[2]);
            let mut extra = format!(
                "delta={delta};max_degree={};m={};C={}",
                h.max_degree(),
                h.num_edges(),
                super::format_g(config.c_const)
            );
            if let Some(s) = &prune {
                extra.push_str(&format!(
                    ";prune_threshold={};mean_bad={};max_bad={};share_below_{}={}",
                    super::format_g(s.threshold),
                    super::format_g(s.mean_bad_fraction),
                    super::format_g(s.max_bad_fraction),
                    super::format_g(s.alpha),
                    super::format_g(s.share_below_alpha)
                ));
            }
            rows.push(row.finish(n, k, Some(sigma), extra, estimate, min_legal_c(r), prune));
        }
    }
    Ok(rows)
}

struct TrialPrune {
    threshold: f64,
    max: f64,
    sum: f64,
    below: usize,
    vertices: usize,
}

struct SparsifyTrial {
    /// 0 colorable, 1 not colorable, 2 undecided.
    status: usize,
    prune: Option<TrialPrune>,
}

fn sparsify_trial(
    config: &ExperimentConfig,
    h: &Hypergraph,
    k: Color,
    sigma: Color,
    t: u64,
) -> SparsifyTrial {
    let mut rng = trial_rng(config.seed, t);
    let lists =
        random_list_assignment(h, k as usize, sigma, &mut rng).expect("1 <= k <= sigma checked");
    let prune = config.prune.then(|| {
        let (_, report) = prune_bad_colors(h, &lists, config.epsilon).expect("epsilon validated");
        TrialPrune {
            threshold: report.threshold,
            max: report.max_bad_fraction(),
            sum: report.bad_fraction.iter().sum(),
            below: report
                .bad_fraction
                .iter()
                .filter(|&&f| f < config.bad_fraction_alpha)
                .count(),
            vertices: report.bad_fraction.len(),
        }
    });
    let out = solve_list_coloring(h, &lists, config.budget()).expect("lists built for h");
    let status = match out.status {
        SolveStatus::Sat(_) => 0,
        SolveStatus::Unsat => 1,
        SolveStatus::Timeout => {
            let budget = RESAMPLES_PER_EDGE * h.num_edges() as u64;
            let retry = lll_resample_color(h, &lists, &mut rng, budget).expect("nonempty lists");
            if retry.is_sat() {
                0
            } else {
                2
            }
        }
    };
    SparsifyTrial { status, prune }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constants() {
        // (8e * 3)^(1/2)
        assert!(
            (min_legal_c(3) - 8.077_05).abs() < 1e-5,
            "{}",
            min_legal_c(3)
        );
        assert_eq!(sparsification_sigma(9.0, 25, 3), 45);
        assert_eq!(degeneracy_k(2.0, 60, 2), 8);
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(2, 1), 2);
    }

    fn threshold(n: usize, ks: Vec<Color>) -> ExperimentConfig {
        let mut c = ExperimentConfig::new(ExperimentKind::Threshold, Family::CompleteGraph);
        c.n_values = vec![n];
        c.k_values = ks;
        c.trials = 30;
        c.record_elapsed = false;
        c
    }

    #[test]
    fn threshold_rows_in_grid_order() {
        let rows = run_threshold_scan(&threshold(12, vec![1, 2, 3, 4])).unwrap();
        assert_eq!(rows.len(), 4);
        assert!(rows.windows(2).all(|w| w[0].k < w[1].k));
        assert_eq!(rows[0].estimate.p_hat, 0.0);
        assert!(rows
            .iter()
            .all(|r| r.estimate.timeouts == 0 && r.elapsed_ms == 0));
        assert_eq!(rows[0].extra, "m=66");
    }

    #[test]
    fn kind_mismatch_rejected() {
        let mut c = threshold(5, vec![2]);
        c.kind = ExperimentKind::Degeneracy;
        assert!(run_threshold_scan(&c).is_err());
    }

    #[test]
    fn zero_cliques_never_fail() {
        let mut c = ExperimentConfig::new(ExperimentKind::Counterexample, Family::DisjointCliques);
        c.n_values = vec![2, 3];
        c.k_values = vec![2];
        c.sigma = Some(4);
        c.trials = 50;
        let rows = run_counterexample_experiment(&c).unwrap();
        assert_eq!(rows[0].estimate.successes, 0);
        assert_eq!(rows[0].ref_value, 0.0);
        assert!(rows[1].extra.starts_with("cliques=1;"));
    }

    #[test]
    fn sigma_from_c_rule() {
        // k = 2, r = 2: clique degree 2, sigma = ceil(2 * 2) = 4
        let mut c = ExperimentConfig::new(ExperimentKind::Counterexample, Family::DisjointCliques);
        c.n_values = vec![3];
        c.k_values = vec![2];
        c.c_const = 2.0;
        c.trials = 10;
        let rows = run_counterexample_experiment(&c).unwrap();
        assert_eq!(rows[0].sigma, Some(4));
        assert!((rows[0].ref_value - 1.0 / 36.0).abs() < 1e-15);
    }

    #[test]
    fn invalid_flag_on_timeouts() {
        let mut c = threshold(40, vec![4]);
        c.timeout_ms = 0;
        let rows = run_threshold_scan(&c).unwrap();
        assert_eq!(rows[0].estimate.timeouts, 30);
        assert!(rows[0].is_invalid());
        assert!(rows[0].extra.ends_with(";INVALID"));
    }

    #[test]
    fn small_sparsification_run() {
        let mut c = ExperimentConfig::new(ExperimentKind::Sparsify, Family::RandomLinear);
        c.n_values = vec![200];
        c.r = 3;
        c.max_degree = 4;
        c.c_const = 9.0;
        c.k_values = vec![5];
        c.trials = 10;
        let rows = run_sparsification_experiment(&c).unwrap();
        let row = &rows[0];
        assert_eq!(row.sigma, Some(18));
        assert_eq!(row.estimate.successes, 10);
        let p = row.prune.unwrap();
        assert!(p.max_bad_fraction >= p.mean_bad_fraction);
        assert!((0.0..=1.0).contains(&p.share_below_alpha));
    }
}
