//! Seeded trial streams, order-independent parallel trials and binomial
//! estimates.

use num_rational::Ratio;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

/// Two-sided 95% normal quantile.
pub const Z_95: f64 = 1.959_963_984_540_054;

/// Random stream for trial `trial` under master seed `seed`.
///
/// Every trial gets its own ChaCha stream, so a trial's randomness depends
/// only on `(seed, trial)` and never on scheduling.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

/// Runs `trial(t)` for `t in 0..trials` on the current rayon pool and returns
/// the results in trial order.
pub fn run_trials<T, F>(trials: u64, trial: F) -> Vec<T>
where
    T: Send,
    F: Fn(u64) -> T + Sync + Send,
{
    (0..trials).into_par_iter().map(trial).collect()
}

/// Runs `op` inside a dedicated pool of `threads` workers (0 = rayon's
/// default size).
pub fn with_threads<R, F>(threads: usize, op: F) -> R
where
    R: Send,
    F: FnOnce() -> R + Send,
{
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .expect("thread pool")
        .install(op)
}

/// Aggregated outcome of repeated yes/no trials. Timeouts are counted but
/// excluded from `p_hat` and the interval.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Estimate {
    pub successes: u64,
    pub failures: u64,
    pub timeouts: u64,
    pub p_hat: f64,
    pub ci_low: f64,
    pub ci_high: f64,
}

impl Estimate {
    pub fn from_counts(successes: u64, failures: u64, timeouts: u64) -> Self {
        let decided = successes + failures;
        let (p_hat, ci_low, ci_high) = if decided == 0 {
            (0.0, 0.0, 1.0)
        } else {
            let p = successes as f64 / decided as f64;
            let (lo, hi) = wilson_interval(successes, decided, Z_95);
            (p, lo.min(p), hi.max(p))
        };
        Estimate {
            successes,
            failures,
            timeouts,
            p_hat,
            ci_low,
            ci_high,
        }
    }

    pub fn trials(&self) -> u64 {
        self.successes + self.failures + self.timeouts
    }

    pub fn decided(&self) -> u64 {
        self.successes + self.failures
    }

    pub fn timeout_fraction(&self) -> f64 {
        match self.trials() {
            0 => 0.0,
            t => self.timeouts as f64 / t as f64,
        }
    }

    /// `successes / (successes + failures)`, if any trial was decided.
    pub fn p_hat_exact(&self) -> Option<Ratio<u64>> {
        (self.decided() > 0).then(|| Ratio::new(self.successes, self.decided()))
    }

    /// Binomial standard error of `p_hat`.
    pub fn std_error(&self) -> f64 {
        match self.decided() {
            0 => 0.0,
            d => (self.p_hat * (1.0 - self.p_hat) / d as f64).sqrt(),
        }
    }
}

/// Wilson score interval for `successes` out of `n`. The endpoints are
/// exactly 0 and 1 at `successes = 0` and `successes = n`.
pub fn wilson_interval(successes: u64, n: u64, z: f64) -> (f64, f64) {
    assert!(n > 0 && successes <= n);
    let n = n as f64;
    let p = successes as f64 / n;
    let z2 = z * z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    let lo = if successes == 0 {
        0.0
    } else {
        (center - half).max(0.0)
    };
    let hi = if successes as f64 == n {
        1.0
    } else {
        (center + half).min(1.0)
    };
    (lo, hi)
}
