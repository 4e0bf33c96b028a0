//! Random tiny instances and brute-force oracles shared by the integration
//! tests.

#![allow(dead_code)]

use hypercolor::palette::ListAssignment;
use hypercolor::{Color, Hypergraph};
use itertools::Itertools;
use proptest::prelude::*;
use rand::seq::index;
use rand::Rng;

/// Every `r`-subset of `0..n` becomes an edge with probability `p`.
pub fn random_hypergraph<R: Rng>(rng: &mut R, n: usize, r: usize, p: f64) -> Hypergraph {
    let edges = (0..n)
        .combinations(r)
        .filter(|_| rng.random_bool(p))
        .collect();
    Hypergraph::new(n, r, edges).expect("subsets of 0..n are valid edges")
}

/// Lists of size `k` from `1..=sigma`, uniform per vertex.
pub fn random_lists<R: Rng>(rng: &mut R, n: usize, k: usize, sigma: Color) -> ListAssignment {
    let lists = (0..n)
        .map(|_| {
            index::sample(rng, sigma as usize, k)
                .iter()
                .map(|i| i as Color + 1)
                .collect()
        })
        .collect();
    ListAssignment::new(sigma, lists).expect("distinct colors in range")
}

/// Calls `f` on every coloring picking one color per vertex from `choices`.
/// Stops early when `f` returns false.
pub fn for_each_choice(choices: &[Vec<Color>], mut f: impl FnMut(&[Color]) -> bool) {
    let mut idx = vec![0usize; choices.len()];
    let mut colors: Vec<Color> = choices.iter().map(|c| c[0]).collect();
    loop {
        if !f(&colors) {
            return;
        }
        let mut v = 0;
        loop {
            if v == choices.len() {
                return;
            }
            idx[v] += 1;
            if idx[v] < choices[v].len() {
                colors[v] = choices[v][idx[v]];
                break;
            }
            idx[v] = 0;
            colors[v] = choices[v][0];
            v += 1;
        }
    }
}

/// Whether some choice of colors from the lists leaves no edge
/// monochromatic.
pub fn brute_list_colorable(h: &Hypergraph, lists: &ListAssignment) -> bool {
    if lists.lists().iter().any(Vec::is_empty) {
        return false;
    }
    let mut found = false;
    for_each_choice(lists.lists(), |colors| {
        found = h
            .edges()
            .all(|e| e.iter().any(|&u| colors[u] != colors[e[0]]));
        !found
    });
    found
}

/// Tiny hypergraph from an inclusion mask over all `r`-subsets.
pub fn tiny_hypergraph(max_n: usize) -> impl Strategy<Value = Hypergraph> {
    (2usize..=max_n, 2usize..=3)
        .prop_filter("r <= n", |(n, r)| r <= n)
        .prop_flat_map(|(n, r)| {
            let subsets = (0..n).combinations(r).count();
            (
                Just(n),
                Just(r),
                prop::collection::vec(any::<bool>(), subsets),
            )
        })
        .prop_map(|(n, r, mask)| {
            let edges = (0..n)
                .combinations(r)
                .zip(mask)
                .filter_map(|(e, keep)| keep.then_some(e))
                .collect();
            Hypergraph::new(n, r, edges).unwrap()
        })
}

/// Tiny `r`-uniform hypergraph with at most `max_edges` edges.
pub fn sparse_hypergraph(
    max_n: usize,
    r: usize,
    max_edges: usize,
) -> impl Strategy<Value = Hypergraph> {
    (r..=max_n).prop_flat_map(move |n| {
        let all: Vec<Vec<usize>> = (0..n).combinations(r).collect();
        let cap = max_edges.min(all.len());
        prop::sample::subsequence(all, 0..=cap)
            .prop_map(move |edges| Hypergraph::new(n, r, edges).unwrap())
    })
}
