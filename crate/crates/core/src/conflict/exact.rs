//! Exhaustive oracles for tiny instances.

use num_bigint::BigInt;
use num_rational::{BigRational, Ratio};
use num_traits::{One, Zero};

use super::{first_violation, LocalKPartition};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::Color;

/// Default cap on enumerated (partition, coloring) pairs.
pub const DEFAULT_ENUMERATION_LIMIT: u128 = 10_000_000;

/// Result of [`chi_single_conflict`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ChiResult {
    Exact(Color),
    ExceedsMax,
}

fn pow_checked(base: u128, exp: usize) -> u128 {
    u32::try_from(exp)
        .ok()
        .and_then(|e| base.checked_pow(e))
        .unwrap_or(u128::MAX)
}

fn ensure_within(work: u128, limit: u128) -> Result<()> {
    if work > limit {
        Err(Error::TooLarge { work, limit })
    } else {
        Ok(())
    }
}

/// Advances `digits` (entries in `1..=k`) like an odometer; false on wrap.
fn advance(digits: &mut [Color], k: Color) -> bool {
    for d in digits.iter_mut() {
        if *d < k {
            *d += 1;
            return true;
        }
        *d = 1;
    }
    false
}

fn has_conflict_coloring(h: &Hypergraph, c: &LocalKPartition, colors: &mut [Color]) -> bool {
    colors.fill(1);
    loop {
        if first_violation(h, c, colors).is_none() {
            return true;
        }
        if !advance(colors, c.k()) {
            return false;
        }
    }
}

/// Calls `f` on every local `k`-partition of `h` (`k^(rm)` of them) until it
/// returns false. Returns false if stopped early.
pub fn for_each_partition(
    h: &Hypergraph,
    k: Color,
    limit: u128,
    mut f: impl FnMut(&LocalKPartition) -> bool,
) -> Result<bool> {
    if k == 0 {
        return Err(Error::invalid("palette size k must be >= 1"));
    }
    let entries = h.num_edges() * h.uniformity();
    ensure_within(pow_checked(k as u128, entries), limit)?;
    let mut c = LocalKPartition::new(k, h.uniformity(), vec![1; entries])?;
    loop {
        if !f(&c) {
            return Ok(false);
        }
        if !advance(&mut c.tuples, k) {
            return Ok(true);
        }
    }
}

/// Number of conflict colorings of `h` under `c`, by enumerating all `k^n`
/// colorings.
pub fn count_conflict_colorings(h: &Hypergraph, c: &LocalKPartition) -> Result<u64> {
    c.check_host(h)?;
    ensure_within(
        pow_checked(c.k() as u128, h.num_vertices()),
        DEFAULT_ENUMERATION_LIMIT,
    )?;
    let mut colors = vec![1; h.num_vertices()];
    let mut count = 0;
    loop {
        if first_violation(h, c, &colors).is_none() {
            count += 1;
        }
        if !advance(&mut colors, c.k()) {
            return Ok(count);
        }
    }
}

/// Exact probability that a uniformly random local `k`-partition of `h` is
/// conflict colorable, with the default enumeration limit.
pub fn exact_p(h: &Hypergraph, k: Color) -> Result<Ratio<u64>> {
    exact_p_with_limit(h, k, DEFAULT_ENUMERATION_LIMIT)
}

pub fn exact_p_with_limit(h: &Hypergraph, k: Color, limit: u128) -> Result<Ratio<u64>> {
    if k == 0 {
        return Err(Error::invalid("palette size k must be >= 1"));
    }
    let partitions = pow_checked(k as u128, h.num_edges() * h.uniformity());
    let colorings = pow_checked(k as u128, h.num_vertices());
    ensure_within(partitions.saturating_mul(colorings), limit)?;
    let mut colors = vec![1; h.num_vertices()];
    let mut good = 0u64;
    for_each_partition(h, k, limit, |c| {
        if has_conflict_coloring(h, c, &mut colors) {
            good += 1;
        }
        true
    })?;
    Ok(Ratio::new(good, partitions as u64))
}

/// Smallest `k <= k_max` such that every local `k`-partition of `h` is
/// conflict colorable.
pub fn chi_single_conflict(h: &Hypergraph, k_max: Color) -> Result<ChiResult> {
    let mut colors = vec![1; h.num_vertices()];
    for k in 1..=k_max {
        let partitions = pow_checked(k as u128, h.num_edges() * h.uniformity());
        let colorings = pow_checked(k as u128, h.num_vertices());
        ensure_within(
            partitions.saturating_mul(colorings),
            DEFAULT_ENUMERATION_LIMIT,
        )?;
        let all = for_each_partition(h, k, DEFAULT_ENUMERATION_LIMIT, |c| {
            has_conflict_coloring(h, c, &mut colors)
        })?;
        if all {
            return Ok(ChiResult::Exact(k));
        }
    }
    Ok(ChiResult::ExceedsMax)
}

/// `k^n (1 - 1/k^r)^m`, exactly.
pub fn expected_colorings(n: usize, m: usize, k: Color, r: usize) -> Result<BigRational> {
    if k == 0 {
        return Err(Error::invalid("palette size k must be >= 1"));
    }
    let k = BigInt::from(k);
    let kr = num_traits::pow(k.clone(), r);
    let survive = BigRational::new(kr.clone() - BigInt::one(), kr);
    let mut value = BigRational::from_integer(num_traits::pow(k, n));
    if m > 0 && survive.is_zero() {
        return Ok(BigRational::zero());
    }
    value *= num_traits::pow(survive, m);
    Ok(value)
}
