//! Fixed instances shared by the benchmarks.

use hypercolor::hypergraph::{gen_complete_uniform, gen_random_linear};
use hypercolor::Hypergraph;

/// Complete graph on `n` vertices.
pub fn complete_graph(n: usize) -> Hypergraph {
    gen_complete_uniform(n, 2).expect("n >= 2")
}

/// Random linear 3-uniform hypergraph with maximum degree `delta`, seed 0.
pub fn linear_triple_system(n: usize, delta: usize) -> Hypergraph {
    gen_random_linear(n, 3, delta, 0).expect("n >= 3")
}
