//! Seeded Monte Carlo experiments and their CSV output.
//!
//! Every experiment walks a fixed grid, estimates one probability per grid
//! point and emits one [`ScanRow`] per point in grid order. All randomness
//! flows from the master seed: hypergraphs are generated from it directly
//! and trial `t` draws from [`trial_rng`](crate::stats::trial_rng)`(seed, t)`.
//! Solver budgets are node counts, so results never depend on machine speed
//! or worker count.

mod experiments;
mod output;

use std::fmt;
use std::str::FromStr;

pub use experiments::{
    degeneracy_k, min_legal_c, run_counterexample_experiment, run_degeneracy_experiment,
    run_experiment, run_sparsification_experiment, run_threshold_scan, sparsification_sigma,
};
pub use output::{
    emit_csv, format_g, parse_csv, write_csv, write_estimate_csv, EstimateRecord, CSV_HEADER,
    ESTIMATE_HEADER,
};

use crate::conflict::Budget;
use crate::error::{Error, Result};
use crate::stats::Estimate;
use crate::Color;

/// Search nodes granted per millisecond of nominal timeout. Calibrated on the
/// K_100 and degenerate-graph scans, which explore roughly 450 to 700 nodes
/// per millisecond in an optimized build.
pub const NODES_PER_MS: u64 = 500;

/// Default nominal per-trial timeout.
pub const DEFAULT_TIMEOUT_MS: u64 = 5_000;

/// Rows whose timeout share exceeds this are flagged invalid.
pub const MAX_TIMEOUT_FRACTION: f64 = 0.05;

/// Node budget equivalent to `timeout_ms`.
pub fn node_budget(timeout_ms: u64) -> Budget {
    Budget::nodes(timeout_ms.saturating_mul(NODES_PER_MS))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExperimentKind {
    Threshold,
    Degeneracy,
    Counterexample,
    Sparsify,
}

impl ExperimentKind {
    pub fn name(self) -> &'static str {
        match self {
            ExperimentKind::Threshold => "threshold",
            ExperimentKind::Degeneracy => "degeneracy",
            ExperimentKind::Counterexample => "counterexample",
            ExperimentKind::Sparsify => "sparsify",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Family {
    CompleteGraph,
    CompleteUniform,
    SequentialDegenerate,
    DisjointCliques,
    RandomLinear,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::CompleteGraph => "complete_graph",
            Family::CompleteUniform => "complete_uniform",
            Family::SequentialDegenerate => "sequential_degenerate",
            Family::DisjointCliques => "disjoint_cliques",
            Family::RandomLinear => "random_linear",
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [
            Family::CompleteGraph,
            Family::CompleteUniform,
            Family::SequentialDegenerate,
            Family::DisjointCliques,
            Family::RandomLinear,
        ]
        .into_iter()
        .find(|f| f.name() == s)
        .ok_or_else(|| Error::Config(format!("unknown family `{s}`")))
    }
}

/// Parameters of one experiment. Fields unused by an experiment kind are
/// ignored.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentConfig {
    pub kind: ExperimentKind,
    pub family: Family,
    pub n_values: Vec<usize>,
    pub r: usize,
    /// Palette or list sizes. Degeneracy scans merge these with
    /// `coefficients`; sparsification falls back to `a_const` when empty.
    pub k_values: Vec<Color>,
    /// Degeneracy scans: `k = ceil(c * (d / ln d)^(1/r))` per coefficient.
    pub coefficients: Vec<f64>,
    /// Target degeneracy of the sequential generator.
    pub degeneracy: usize,
    /// Maximum degree of random linear hypergraphs.
    pub max_degree: usize,
    /// Palette constant in `sigma = ceil(C * Delta^(1/(r-1)))`.
    pub c_const: f64,
    /// List size constant in `k = ceil(A * (ln n)^(1/r))`.
    pub a_const: Option<f64>,
    /// Explicit universe size, overriding the `C` rule.
    pub sigma: Option<Color>,
    pub epsilon: f64,
    pub prune: bool,
    /// Bad-color share that counts as heavy pruning at a vertex.
    pub bad_fraction_alpha: f64,
    pub trials: u64,
    pub seed: u64,
    pub timeout_ms: u64,
    /// Write measured wall-clock time; 0 otherwise.
    pub record_elapsed: bool,
}

impl ExperimentConfig {
    /// Defaults for `kind`; grids are left empty.
    pub fn new(kind: ExperimentKind, family: Family) -> Self {
        ExperimentConfig {
            kind,
            family,
            n_values: Vec::new(),
            r: 2,
            k_values: Vec::new(),
            coefficients: Vec::new(),
            degeneracy: 0,
            max_degree: 0,
            c_const: 0.0,
            a_const: None,
            sigma: None,
            epsilon: crate::palette::DEFAULT_EPSILON,
            prune: true,
            bad_fraction_alpha: 0.25,
            trials: 100,
            seed: 0,
            timeout_ms: DEFAULT_TIMEOUT_MS,
            record_elapsed: true,
        }
    }

    pub fn budget(&self) -> Budget {
        node_budget(self.timeout_ms)
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Config(msg));
        if self.n_values.is_empty() {
            return fail("n range is empty".into());
        }
        if self.trials == 0 {
            return fail("trials must be >= 1".into());
        }
        if self.r < 2 {
            return fail(format!("uniformity must be >= 2, got {}", self.r));
        }
        if self.k_values.contains(&0) {
            return fail("palette sizes must be >= 1".into());
        }
        let expected = match self.kind {
            ExperimentKind::Threshold => &[Family::CompleteGraph, Family::CompleteUniform][..],
            ExperimentKind::Degeneracy => &[Family::SequentialDegenerate],
            ExperimentKind::Counterexample => &[Family::DisjointCliques],
            ExperimentKind::Sparsify => &[Family::RandomLinear],
        };
        if !expected.contains(&self.family) {
            return fail(format!(
                "family {} is not valid for the {} experiment",
                self.family,
                self.kind.name()
            ));
        }
        match self.kind {
            ExperimentKind::Threshold => {
                if self.k_values.is_empty() {
                    return fail("k range is empty".into());
                }
                if self.family == Family::CompleteGraph && self.r != 2 {
                    return fail("complete_graph family needs r = 2".into());
                }
            }
            ExperimentKind::Degeneracy => {
                if self.k_values.is_empty() && self.coefficients.is_empty() {
                    return fail("need k values or coefficients".into());
                }
                if self.degeneracy < 3 {
                    return fail("degeneracy scans need d >= 3".into());
                }
                if self.coefficients.iter().any(|c| c.is_nan() || *c <= 0.0) {
                    return fail("coefficients must be > 0".into());
                }
            }
            ExperimentKind::Counterexample => {
                if self.k_values.len() != 1 {
                    return fail("counterexample needs exactly one k".into());
                }
                if self.sigma.is_none() && (self.c_const.is_nan() || self.c_const <= 0.0) {
                    return fail("need sigma or a positive C".into());
                }
            }
            ExperimentKind::Sparsify => {
                let min_c = min_legal_c(self.r);
                if self.c_const.is_nan() || self.c_const <= min_c {
                    return fail(format!(
                        "C = {} must exceed (2^r e r)^(1/(r-1)) = {min_c:.6} for r = {}",
                        self.c_const, self.r
                    ));
                }
                if self.max_degree == 0 {
                    return fail("maximum degree must be >= 1".into());
                }
                if self.k_values.is_empty() && self.a_const.is_none() {
                    return fail("need k values or the constant A".into());
                }
                if self.epsilon.is_nan() || self.epsilon <= 0.0 {
                    return fail("epsilon must be > 0".into());
                }
            }
        }
        Ok(())
    }
}

/// Aggregated pruning statistics over all (trial, vertex) pairs of a row.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PruneSummary {
    pub threshold: f64,
    pub mean_bad_fraction: f64,
    pub max_bad_fraction: f64,
    /// Share of (trial, vertex) pairs whose bad fraction is below `alpha`.
    pub share_below_alpha: f64,
    pub alpha: f64,
}

/// One grid point of an experiment.
#[derive(Clone, Debug, PartialEq)]
pub struct ScanRow {
    pub experiment: String,
    pub family: String,
    pub n: usize,
    pub r: usize,
    pub k: Color,
    pub sigma: Option<Color>,
    /// `;`-separated `key=value` annotations.
    pub extra: String,
    pub estimate: Estimate,
    pub ref_value: f64,
    pub seed: u64,
    pub elapsed_ms: u64,
    pub prune: Option<PruneSummary>,
}

impl ScanRow {
    pub fn trials(&self) -> u64 {
        self.estimate.trials()
    }

    /// More than 5% of the trials timed out.
    pub fn is_invalid(&self) -> bool {
        self.estimate.timeout_fraction() > MAX_TIMEOUT_FRACTION
    }
}
