//! Immutable `r`-uniform hypergraphs.
//!
//! Vertices are the dense ids `0..n`. Every edge is stored as an ascending
//! list of exactly `r` distinct ids and the edge list itself is kept in
//! lexicographic order, so two hypergraphs with the same edge set compare
//! and serialize identically.

mod degeneracy;
mod density;
mod generators;
pub(crate) mod io;

use std::collections::HashSet;

pub use degeneracy::DegeneracyOrder;
pub use density::{MaxDensity, DEFAULT_EXHAUSTIVE_LIMIT};
pub use generators::{
    gen_complete_r_partite, gen_complete_uniform, gen_disjoint_cliques, gen_random_linear,
    gen_sequential_degenerate,
};
pub use io::load;

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    r: usize,
    /// Flattened edges, `r` ids per edge.
    vertices: Vec<usize>,
    /// `incidence[v]` lists the edges containing `v`, ascending.
    incidence: Vec<Vec<usize>>,
}

impl Hypergraph {
    /// Builds and validates a hypergraph. Each edge is sorted and the edge
    /// list is put into canonical order.
    pub fn new(n: usize, r: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        if r < 2 {
            return Err(Error::validation(format!(
                "uniformity must be >= 2, got {r}"
            )));
        }
        let mut edges = edges;
        for (i, edge) in edges.iter_mut().enumerate() {
            if edge.len() != r {
                return Err(Error::validation(format!(
                    "edge {i} has {} vertices, expected {r}",
                    edge.len()
                )));
            }
            edge.sort_unstable();
            if let Some(&v) = edge.iter().find(|&&v| v >= n) {
                return Err(Error::validation(format!(
                    "edge {i}: vertex {v} out of range 0..{n}"
                )));
            }
            if edge.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::validation(format!("edge {i} repeats a vertex")));
            }
        }
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::validation(format!("duplicate edge {:?}", w[0])));
        }
        Ok(Self::from_canonical(n, r, edges.concat()))
    }

    /// Trusted constructor for already sorted, deduplicated edge lists.
    pub(crate) fn from_canonical(n: usize, r: usize, vertices: Vec<usize>) -> Self {
        debug_assert_eq!(vertices.len() % r, 0);
        let mut incidence = vec![Vec::new(); n];
        for (e, edge) in vertices.chunks_exact(r).enumerate() {
            for &v in edge {
                incidence[v].push(e);
            }
        }
        Hypergraph {
            n,
            r,
            vertices,
            incidence,
        }
    }

    pub fn edgeless(n: usize, r: usize) -> Result<Self> {
        Self::new(n, r, Vec::new())
    }

    #[inline]
    pub fn num_vertices(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn uniformity(&self) -> usize {
        self.r
    }

    #[inline]
    pub fn num_edges(&self) -> usize {
        self.vertices.len() / self.r
    }

    #[inline]
    pub fn edge(&self, e: usize) -> &[usize] {
        &self.vertices[e * self.r..(e + 1) * self.r]
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = &[usize]> + '_ {
        self.vertices.chunks_exact(self.r)
    }

    /// Edges containing `v`, in canonical order.
    #[inline]
    pub fn incident(&self, v: usize) -> &[usize] {
        &self.incidence[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.incidence[v].len()
    }

    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    /// Average vertex degree `r * m / n`.
    pub fn average_degree(&self) -> f64 {
        if self.n == 0 {
            return 0.0;
        }
        (self.r * self.num_edges()) as f64 / self.n as f64
    }

    /// Position of `v` inside edge `e`, if present.
    #[inline]
    pub fn position_in_edge(&self, e: usize, v: usize) -> Option<usize> {
        self.edge(e).binary_search(&v).ok()
    }

    /// True iff every pair of vertices lies in at most one common edge.
    pub fn is_linear(&self) -> bool {
        let mut pairs = HashSet::new();
        self.edges().all(|edge| {
            for (i, &u) in edge.iter().enumerate() {
                for &v in &edge[i + 1..] {
                    if !pairs.insert((u, v)) {
                        return false;
                    }
                }
            }
            true
        })
    }

    /// Hypergraph on the same vertex set keeping only the edges for which
    /// `keep` returns true.
    pub fn filter_edges(&self, mut keep: impl FnMut(usize, &[usize]) -> bool) -> Hypergraph {
        let mut vertices = Vec::new();
        for (e, edge) in self.edges().enumerate() {
            if keep(e, edge) {
                vertices.extend_from_slice(edge);
            }
        }
        Hypergraph::from_canonical(self.n, self.r, vertices)
    }

    /// Removes vertex `v` and every edge through it. Higher ids shift down
    /// by one so the result stays dense.
    pub fn remove_vertex(&self, v: usize) -> Hypergraph {
        assert!(v < self.n, "vertex {v} out of range");
        let mut vertices = Vec::new();
        for edge in self.edges() {
            if edge.contains(&v) {
                continue;
            }
            vertices.extend(edge.iter().map(|&u| if u > v { u - 1 } else { u }));
        }
        Hypergraph::from_canonical(self.n - 1, self.r, vertices)
    }

    pub fn degeneracy_order(&self) -> DegeneracyOrder {
        DegeneracyOrder::compute(self)
    }
}

impl std::fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Hypergraph")
            .field("n", &self.n)
            .field("r", &self.r)
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}
