use super::{Coloring, LocalKPartition};
use crate::hypergraph::{DegeneracyOrder, Hypergraph};
use crate::Color;

/// Greedy run with the availability indicators of every step.
#[derive(Clone, Debug)]
pub struct GreedyTrace {
    pub coloring: Coloring,
    /// `available[i][j-1]` is true iff color `j` was free for `order[i]`.
    pub available: Vec<Vec<bool>>,
}

/// Colors vertices along `order`. The first vertex gets color 1; every later
/// vertex gets the smallest color not blocked by an edge whose other vertices
/// are already colored with their conflict colors, or 1 if all are blocked.
///
/// The result may violate the partition; callers must check it.
pub fn greedy_color(h: &Hypergraph, c: &LocalKPartition, order: &DegeneracyOrder) -> Coloring {
    run(h, c, order, |_, _| {})
}

pub fn greedy_trace(h: &Hypergraph, c: &LocalKPartition, order: &DegeneracyOrder) -> GreedyTrace {
    let mut available = Vec::with_capacity(h.num_vertices());
    let coloring = run(h, c, order, |_, blocked| {
        available.push(blocked.iter().map(|&b| !b).collect());
    });
    GreedyTrace {
        coloring,
        available,
    }
}

fn run(
    h: &Hypergraph,
    c: &LocalKPartition,
    order: &DegeneracyOrder,
    mut observe: impl FnMut(usize, &[bool]),
) -> Coloring {
    let k = c.k() as usize;
    let mut colors: Vec<Color> = vec![0; h.num_vertices()];
    let mut blocked = vec![false; k];
    for (i, &v) in order.order.iter().enumerate() {
        blocked.iter_mut().for_each(|b| *b = false);
        if i > 0 {
            for &e in h.incident(v) {
                let edge = h.edge(e);
                let tuple = c.tuple(e);
                let mut own = 0;
                let matched = edge.iter().zip(tuple).all(|(&u, &t)| {
                    if u == v {
                        own = t;
                        true
                    } else {
                        colors[u] == t
                    }
                });
                if matched {
                    blocked[own as usize - 1] = true;
                }
            }
        }
        observe(i, &blocked);
        colors[v] = blocked
            .iter()
            .position(|&b| !b)
            .map_or(1, |j| j as Color + 1);
    }
    Coloring(colors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conflict::check_conflict_coloring;
    use crate::hypergraph::gen_complete_uniform;

    #[test]
    fn triangle_all_ones() {
        let h = gen_complete_uniform(3, 2).unwrap();
        let c = LocalKPartition::from_tuples(2, 2, &[vec![1, 1], vec![1, 1], vec![1, 1]]).unwrap();
        let order = DegeneracyOrder::from_order(&h, vec![0, 1, 2]);
        // v0 <- 1; v1 blocked from 1 by {0,1}; v2: {0,2} blocks 1, {1,2} does
        // not match since v1 has 2
        let phi = greedy_color(&h, &c, &order);
        assert_eq!(phi.0, vec![1, 2, 2]);
        assert_eq!(check_conflict_coloring(&h, &c, &phi).unwrap(), None);
    }

    #[test]
    fn empty_list_falls_back_to_one() {
        let h = Hypergraph::new(2, 2, vec![vec![0, 1]]).unwrap();
        let c = LocalKPartition::from_tuples(1, 2, &[vec![1, 1]]).unwrap();
        let order = DegeneracyOrder::from_order(&h, vec![0, 1]);
        let trace = greedy_trace(&h, &c, &order);
        assert_eq!(trace.coloring.0, vec![1, 1]);
        assert_eq!(trace.available, vec![vec![true], vec![false]]);
        assert_eq!(
            check_conflict_coloring(&h, &c, &trace.coloring).unwrap(),
            Some(0)
        );
    }

    #[test]
    fn edgeless_is_all_ones() {
        let h = Hypergraph::edgeless(4, 3).unwrap();
        let c = LocalKPartition::new(5, 3, vec![]).unwrap();
        let phi = greedy_color(&h, &c, &h.degeneracy_order());
        assert_eq!(phi.0, vec![1; 4]);
    }
}
