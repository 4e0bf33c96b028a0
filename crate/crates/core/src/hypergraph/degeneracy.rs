use std::collections::BTreeSet;

use super::Hypergraph;

/// Vertex ordering from minimum-degree peeling.
///
/// `back_degrees[i]` is the number of edges containing `order[i]` whose
/// vertices all sit at positions `<= i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DegeneracyOrder {
    pub order: Vec<usize>,
    pub back_degrees: Vec<usize>,
    pub degeneracy: usize,
}

impl DegeneracyOrder {
    /// Repeatedly removes a vertex of minimum degree (lowest id on ties)
    /// together with its edges. Removed vertices are prepended, so the first
    /// vertex peeled ends up last.
    pub fn compute(h: &Hypergraph) -> Self {
        let n = h.num_vertices();
        let mut degree: Vec<usize> = (0..n).map(|v| h.degree(v)).collect();
        let mut alive_edge = vec![true; h.num_edges()];
        let mut queue: BTreeSet<(usize, usize)> = (0..n).map(|v| (degree[v], v)).collect();

        let mut order = vec![0; n];
        let mut back_degrees = vec![0; n];
        for slot in (0..n).rev() {
            let (d, v) = queue
                .pop_first()
                .expect("queue holds every unpeeled vertex");
            order[slot] = v;
            back_degrees[slot] = d;
            for &e in h.incident(v) {
                if !alive_edge[e] {
                    continue;
                }
                alive_edge[e] = false;
                for &u in h.edge(e) {
                    if u != v {
                        queue.remove(&(degree[u], u));
                        degree[u] -= 1;
                        queue.insert((degree[u], u));
                    }
                }
            }
        }
        let degeneracy = back_degrees.iter().copied().max().unwrap_or(0);
        DegeneracyOrder {
            order,
            back_degrees,
            degeneracy,
        }
    }

    /// `position[v]` = index of `v` in `order`.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.order.len()];
        for (i, &v) in self.order.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    /// Identity ordering `0..n` with its back degrees.
    pub fn identity(h: &Hypergraph) -> Self {
        Self::from_order(h, (0..h.num_vertices()).collect())
    }

    /// Back degrees of an arbitrary vertex permutation.
    pub fn from_order(h: &Hypergraph, order: Vec<usize>) -> Self {
        assert_eq!(order.len(), h.num_vertices());
        let mut pos = vec![usize::MAX; order.len()];
        for (i, &v) in order.iter().enumerate() {
            assert!(pos[v] == usize::MAX, "order is not a permutation");
            pos[v] = i;
        }
        let mut back_degrees = vec![0; order.len()];
        for edge in h.edges() {
            let last = edge
                .iter()
                .map(|&v| pos[v])
                .max()
                .expect("edges are nonempty");
            back_degrees[last] += 1;
        }
        let degeneracy = back_degrees.iter().copied().max().unwrap_or(0);
        DegeneracyOrder {
            order,
            back_degrees,
            degeneracy,
        }
    }
}
