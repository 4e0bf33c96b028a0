//! Reductions from list coloring to conflict coloring.
//!
//! An `L`-coloring is adapted to an edge coloring `alpha` if no edge has all
//! of its vertices colored `alpha(e)`.

use super::{Coloring, LocalKPartition};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::palette::ListAssignment;
use crate::Color;

/// Maps colors `1..=k` at each vertex back to the vertex's list, in list
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListRelabeling {
    lists: Vec<Vec<Color>>,
}

impl ListRelabeling {
    /// `phi(v) = j` becomes the `j`-th color of `L(v)`.
    pub fn pull_back(&self, coloring: &Coloring) -> Result<Coloring> {
        if coloring.len() != self.lists.len() {
            return Err(Error::invalid(format!(
                "coloring has {} entries for {} vertices",
                coloring.len(),
                self.lists.len()
            )));
        }
        coloring
            .0
            .iter()
            .zip(&self.lists)
            .enumerate()
            .map(|(v, (&j, list))| {
                (j as usize)
                    .checked_sub(1)
                    .and_then(|i| list.get(i).copied())
                    .ok_or_else(|| Error::invalid(format!("color {j} out of range at vertex {v}")))
            })
            .collect::<Result<Vec<_>>>()
            .map(Coloring)
    }
}

/// First edge whose vertices are all colored `alpha(e)`.
pub fn check_adapted(h: &Hypergraph, alpha: &[Color], colors: &[Color]) -> Option<usize> {
    h.edges()
        .zip(alpha)
        .position(|(edge, &a)| edge.iter().all(|&v| colors[v] == a))
}

/// Local `k`-partition whose conflict colorings pull back to `alpha`-adapted
/// `L`-colorings: `c_v(e)` is the list position of `alpha(e)` in `L(v)`, or
/// the first position when `L(v)` misses `alpha(e)`. Lists must all have the
/// same nonzero size `k`.
pub fn reduce_adapted_to_conflict(
    h: &Hypergraph,
    lists: &ListAssignment,
    alpha: &[Color],
) -> Result<(LocalKPartition, ListRelabeling)> {
    lists.check_host(h)?;
    if alpha.len() != h.num_edges() {
        return Err(Error::invalid(format!(
            "edge coloring has {} entries for {} edges",
            alpha.len(),
            h.num_edges()
        )));
    }
    if let Some(v) = lists.lists().iter().position(Vec::is_empty) {
        return Err(Error::invalid(format!("vertex {v} has an empty list")));
    }
    let k = lists
        .uniform_size()
        .ok_or_else(|| Error::invalid("lists must all have the same size"))?;
    let mut tuples = Vec::with_capacity(h.num_edges() * h.uniformity());
    for (edge, &a) in h.edges().zip(alpha) {
        for &v in edge {
            let pos = lists.list(v).binary_search(&a).unwrap_or(0);
            tuples.push(pos as Color + 1);
        }
    }
    let partition = LocalKPartition::new(k as Color, h.uniformity(), tuples)?;
    let relabel = ListRelabeling {
        lists: lists.lists().to_vec(),
    };
    Ok((partition, relabel))
}

/// For lists whose co-edge pairs share at most one color: drops edges whose
/// lists have no common color and colors each remaining edge by its common
/// color. An `alpha`-adapted `L`-coloring of the result is a proper
/// `L`-coloring of `h`.
pub fn reduce_separation_to_adapted(
    h: &Hypergraph,
    lists: &ListAssignment,
) -> Result<(Hypergraph, Vec<Color>)> {
    lists.check_host(h)?;
    let mut alpha = Vec::new();
    let mut keep = Vec::with_capacity(h.num_edges());
    for edge in h.edges() {
        for (i, &u) in edge.iter().enumerate() {
            for &w in &edge[i + 1..] {
                let shared = lists
                    .list(u)
                    .iter()
                    .filter(|&&c| lists.contains(w, c))
                    .count();
                if shared > 1 {
                    return Err(Error::validation(format!(
                        "lists of {u} and {w} share {shared} colors"
                    )));
                }
            }
        }
        let common = lists
            .list(edge[0])
            .iter()
            .copied()
            .find(|&c| edge[1..].iter().all(|&u| lists.contains(u, c)));
        keep.push(common.is_some());
        alpha.extend(common);
    }
    let mut flags = keep.into_iter();
    let reduced = h.filter_edges(|_, _| flags.next().unwrap_or(false));
    Ok((reduced, alpha))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conflict::{solve_conflict, Budget};

    fn edge() -> Hypergraph {
        Hypergraph::new(2, 2, vec![vec![0, 1]]).unwrap()
    }

    #[test]
    fn adapted_on_shared_color() {
        let l = ListAssignment::new(2, vec![vec![1, 2]; 2]).unwrap();
        let (c, relabel) = reduce_adapted_to_conflict(&edge(), &l, &[1]).unwrap();
        assert_eq!(c.tuple(0), &[1, 1]);
        let out = solve_conflict(&edge(), &c, Budget::unlimited()).unwrap();
        let colors = relabel.pull_back(out.coloring().unwrap()).unwrap();
        assert_eq!(check_adapted(&edge(), &[1], &colors.0), None);
    }

    #[test]
    fn adapted_fallback_to_first_color() {
        let l = ListAssignment::new(5, vec![vec![2, 4], vec![3, 5]]).unwrap();
        let (c, _) = reduce_adapted_to_conflict(&edge(), &l, &[1]).unwrap();
        assert_eq!(c.tuple(0), &[1, 1]);
        let (c, _) = reduce_adapted_to_conflict(&edge(), &l, &[4]).unwrap();
        assert_eq!(c.tuple(0), &[2, 1]);
    }

    #[test]
    fn adapted_errors() {
        let uneven = ListAssignment::new(3, vec![vec![1, 2], vec![3]]).unwrap();
        assert!(reduce_adapted_to_conflict(&edge(), &uneven, &[1]).is_err());
        let empty = ListAssignment::new(3, vec![vec![], vec![]]).unwrap();
        assert!(reduce_adapted_to_conflict(&edge(), &empty, &[1]).is_err());
        let l = ListAssignment::new(2, vec![vec![1, 2]; 2]).unwrap();
        assert!(reduce_adapted_to_conflict(&edge(), &l, &[]).is_err());
    }

    #[test]
    fn pull_back_follows_list_order() {
        let relabel = ListRelabeling {
            lists: vec![vec![3, 7], vec![1, 9]],
        };
        assert_eq!(
            relabel.pull_back(&Coloring(vec![2, 1])).unwrap().0,
            vec![7, 1]
        );
        assert!(relabel.pull_back(&Coloring(vec![3, 1])).is_err());
        assert!(relabel.pull_back(&Coloring(vec![0, 1])).is_err());
    }

    #[test]
    fn separation_cases() {
        let l = ListAssignment::new(3, vec![vec![1, 2], vec![1, 3]]).unwrap();
        let (h2, alpha) = reduce_separation_to_adapted(&edge(), &l).unwrap();
        assert_eq!(h2, edge());
        assert_eq!(alpha, vec![1]);

        let l = ListAssignment::new(4, vec![vec![1, 2], vec![3, 4]]).unwrap();
        let (h2, alpha) = reduce_separation_to_adapted(&edge(), &l).unwrap();
        assert_eq!(h2.num_edges(), 0);
        assert_eq!(h2.num_vertices(), 2);
        assert!(alpha.is_empty());

        let l = ListAssignment::new(2, vec![vec![1, 2]; 2]).unwrap();
        assert!(reduce_separation_to_adapted(&edge(), &l).is_err());
    }
}
