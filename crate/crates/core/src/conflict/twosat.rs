use std::time::Instant;

use petgraph::algo::tarjan_scc;
use petgraph::graph::{DiGraph, NodeIndex};

use super::{first_violation, Coloring, LocalKPartition, SolveOutcome, SolveStatus};
use crate::hypergraph::Hypergraph;

/// Decides a graph (`r = 2`) with a local 2-partition by 2-SAT.
///
/// Literal `2v + (j-1)` reads "v has color j". An edge `uv` with conflict
/// pair `(a, b)` is the clause `not (u = a and v = b)`, i.e. the implications
/// `u = a -> v = 3-b` and `v = b -> u = 3-a`. The instance is satisfiable
/// iff no vertex has both literals in one strongly connected component.
///
/// Panics unless `r = 2` and `k = 2`.
pub fn solve_two_sat(h: &Hypergraph, c: &LocalKPartition) -> SolveOutcome {
    assert!(
        h.uniformity() == 2 && c.k() == 2,
        "2-SAT path needs r = 2 and k = 2"
    );
    let start = Instant::now();
    let n = h.num_vertices();
    let lit = |v: usize, color: u32| NodeIndex::new(2 * v + color as usize - 1);

    let mut graph: DiGraph<(), ()> = DiGraph::with_capacity(2 * n, 2 * h.num_edges());
    for _ in 0..2 * n {
        graph.add_node(());
    }
    for (edge, tuple) in h.edges().zip(c.tuples()) {
        let (u, v) = (edge[0], edge[1]);
        let (a, b) = (tuple[0], tuple[1]);
        graph.add_edge(lit(u, a), lit(v, 3 - b), ());
        graph.add_edge(lit(v, b), lit(u, 3 - a), ());
    }

    // components come out in reverse topological order
    let mut component = vec![0usize; 2 * n];
    for (i, scc) in tarjan_scc(&graph).iter().enumerate() {
        for node in scc {
            component[node.index()] = i;
        }
    }

    let mut colors = Vec::with_capacity(n);
    let mut sat = true;
    for v in 0..n {
        let (one, two) = (component[2 * v], component[2 * v + 1]);
        if one == two {
            sat = false;
            break;
        }
        colors.push(if one < two { 1 } else { 2 });
    }

    let status = if sat {
        assert_eq!(
            first_violation(h, c, &colors),
            None,
            "2-SAT assignment violates the partition"
        );
        SolveStatus::Sat(Coloring(colors))
    } else {
        SolveStatus::Unsat
    };
    SolveOutcome {
        status,
        nodes_explored: 2 * n as u64,
        elapsed: start.elapsed(),
    }
}
