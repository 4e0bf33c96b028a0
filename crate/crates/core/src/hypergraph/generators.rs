use std::collections::HashSet;

use itertools::Itertools;
use rand::seq::index;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::Hypergraph;
use crate::error::{Error, Result};

/// Rejection attempts per unit of `n * max_degree` in [`gen_random_linear`].
const LINEAR_ATTEMPTS_PER_SLOT: usize = 50;

/// All `C(n, r)` `r`-subsets of `0..n`.
pub fn gen_complete_uniform(n: usize, r: usize) -> Result<Hypergraph> {
    if r < 2 || r > n {
        return Err(Error::invalid(format!(
            "complete uniform hypergraph needs 2 <= r <= n, got n={n}, r={r}"
        )));
    }
    let vertices: Vec<usize> = (0..n).combinations(r).flatten().collect();
    Ok(Hypergraph::from_canonical(n, r, vertices))
}

/// `r` parts of `part_size` vertices (part `p` holds ids
/// `p*part_size..(p+1)*part_size`); every transversal is an edge.
pub fn gen_complete_r_partite(r: usize, part_size: usize) -> Result<Hypergraph> {
    if r < 2 || part_size == 0 {
        return Err(Error::invalid(format!(
            "complete r-partite hypergraph needs r >= 2 and part_size >= 1, got r={r}, part_size={part_size}"
        )));
    }
    let vertices: Vec<usize> = (0..r)
        .map(|p| p * part_size..(p + 1) * part_size)
        .multi_cartesian_product()
        .flatten()
        .collect();
    Ok(Hypergraph::from_canonical(r * part_size, r, vertices))
}

/// Disjoint union of `num_cliques` complete `r`-uniform hypergraphs on
/// `k(r-1)+1` vertices each.
pub fn gen_disjoint_cliques(num_cliques: usize, k: usize, r: usize) -> Result<Hypergraph> {
    if k == 0 || r < 2 {
        return Err(Error::invalid(format!(
            "disjoint cliques need k >= 1 and r >= 2, got k={k}, r={r}"
        )));
    }
    let order = k * (r - 1) + 1;
    let mut vertices = Vec::new();
    for c in 0..num_cliques {
        let base = c * order;
        vertices.extend((base..base + order).combinations(r).flatten());
    }
    Ok(Hypergraph::from_canonical(num_cliques * order, r, vertices))
}

/// Random linear hypergraph with maximum degree at most `max_degree`.
///
/// Uniform `r`-subsets are proposed `50 * n * max_degree` times; a proposal
/// is kept iff it shares no vertex pair with an accepted edge and none of its
/// vertices is already at the degree cap.
pub fn gen_random_linear(n: usize, r: usize, max_degree: usize, seed: u64) -> Result<Hypergraph> {
    if r < 2 || n < r {
        return Err(Error::invalid(format!(
            "random linear hypergraph needs 2 <= r <= n, got n={n}, r={r}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut degree = vec![0usize; n];
    let mut pairs: HashSet<(usize, usize)> = HashSet::new();
    let mut edges: Vec<Vec<usize>> = Vec::new();
    let attempts = LINEAR_ATTEMPTS_PER_SLOT * n * max_degree;
    let mut edge = Vec::with_capacity(r);
    for _ in 0..attempts {
        edge.clear();
        edge.extend(index::sample(&mut rng, n, r).iter());
        edge.sort_unstable();
        if edge.iter().any(|&v| degree[v] >= max_degree) {
            continue;
        }
        let fresh = edge
            .iter()
            .tuple_combinations()
            .all(|(&u, &v)| !pairs.contains(&(u, v)));
        if !fresh {
            continue;
        }
        for (&u, &v) in edge.iter().tuple_combinations() {
            pairs.insert((u, v));
        }
        for &v in &edge {
            degree[v] += 1;
        }
        edges.push(edge.clone());
    }
    Hypergraph::new(n, r, edges)
}

/// Random `r`-uniform hypergraph built by adding vertices `0..n` in order;
/// vertex `i` opens `min(d, C(i, r-1))` distinct edges to earlier vertices.
/// The identity ordering therefore has every back degree at most `d`.
pub fn gen_sequential_degenerate(n: usize, r: usize, d: usize, seed: u64) -> Result<Hypergraph> {
    if r < 2 {
        return Err(Error::invalid(format!("uniformity must be >= 2, got {r}")));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for i in 0..n {
        let available = binomial_saturating(i, r - 1);
        if available <= d {
            for mut tail in (0..i).combinations(r - 1) {
                tail.push(i);
                edges.push(tail);
            }
            continue;
        }
        let mut chosen: HashSet<Vec<usize>> = HashSet::with_capacity(d);
        let mut picked = Vec::with_capacity(d);
        while picked.len() < d {
            let mut tail = index::sample(&mut rng, i, r - 1).into_vec();
            tail.sort_unstable();
            if chosen.insert(tail.clone()) {
                picked.push(tail);
            }
        }
        for mut tail in picked {
            tail.push(i);
            edges.push(tail);
        }
    }
    Hypergraph::new(n, r, edges)
}

fn binomial_saturating(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for j in 0..k {
        acc = acc * (n - j) as u128 / (j + 1) as u128;
        if acc > usize::MAX as u128 {
            return usize::MAX;
        }
    }
    acc as usize
}
