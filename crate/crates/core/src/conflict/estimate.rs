use super::{random_local_partition, Budget, ConflictSolver, SolveStatus};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::stats::{run_trials, trial_rng, Estimate};
use crate::Color;

/// Monte Carlo estimate of the probability that `h` is conflict colorable
/// under a random local `k`-partition. Trial `t` samples its partition from
/// [`trial_rng`]`(seed, t)`; trials run on the current rayon pool.
pub fn estimate_p(
    h: &Hypergraph,
    k: Color,
    trials: u64,
    seed: u64,
    budget: Budget,
) -> Result<Estimate> {
    estimate_p_with(&ConflictSolver::new(h), k, trials, seed, budget)
}

/// Same as [`estimate_p`] with a prebuilt solver.
pub fn estimate_p_with(
    solver: &ConflictSolver<'_>,
    k: Color,
    trials: u64,
    seed: u64,
    budget: Budget,
) -> Result<Estimate> {
    if trials == 0 {
        return Err(Error::invalid("trials must be >= 1"));
    }
    if k == 0 {
        return Err(Error::invalid("palette size k must be >= 1"));
    }
    let h = solver.hypergraph();
    let statuses = run_trials(trials, |t| {
        let mut rng = trial_rng(seed, t);
        let c = random_local_partition(h, k, &mut rng).expect("k >= 1 checked above");
        match solver
            .solve(&c, budget)
            .expect("partition built for this host")
            .status
        {
            SolveStatus::Sat(_) => 0u8,
            SolveStatus::Unsat => 1,
            SolveStatus::Timeout => 2,
        }
    });
    let mut counts = [0u64; 3];
    for s in statuses {
        counts[s as usize] += 1;
    }
    Ok(Estimate::from_counts(counts[0], counts[1], counts[2]))
}
