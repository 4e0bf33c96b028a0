use std::collections::BTreeSet;
use std::time::Instant;

use rand::seq::IndexedRandom;
use rand::Rng;

use super::{first_list_violation, ListAssignment};
use crate::conflict::{Coloring, SolveOutcome, SolveStatus};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::Color;

/// Moser-Tardos resampling: draw every color uniformly from its list, then
/// repeatedly resample the vertices of the first monochromatic edge (in
/// canonical order). `nodes_explored` counts resampled edges; more than
/// `max_resamples` of them is a timeout.
pub fn lll_resample_color<R: Rng + ?Sized>(
    h: &Hypergraph,
    lists: &ListAssignment,
    rng: &mut R,
    max_resamples: u64,
) -> Result<SolveOutcome> {
    lists.check_host(h)?;
    if let Some(v) = lists.lists().iter().position(Vec::is_empty) {
        return Err(Error::invalid(format!("vertex {v} has an empty list")));
    }
    let start = Instant::now();
    let draw = |v: usize, rng: &mut R| *lists.list(v).choose(rng).expect("nonempty list");
    let mut colors: Vec<Color> = (0..h.num_vertices()).map(|v| draw(v, rng)).collect();
    let mono = |colors: &[Color], e: usize| {
        let edge = h.edge(e);
        edge.iter().all(|&u| colors[u] == colors[edge[0]])
    };
    let mut bad: BTreeSet<usize> = (0..h.num_edges()).filter(|&e| mono(&colors, e)).collect();

    let mut resamples = 0u64;
    let status = loop {
        let Some(&e) = bad.first() else {
            break SolveStatus::Sat(Coloring(colors));
        };
        if resamples == max_resamples {
            break SolveStatus::Timeout;
        }
        resamples += 1;
        for &v in h.edge(e) {
            colors[v] = draw(v, rng);
        }
        for &v in h.edge(e) {
            for &f in h.incident(v) {
                if mono(&colors, f) {
                    bad.insert(f);
                } else {
                    bad.remove(&f);
                }
            }
        }
    };

    if let SolveStatus::Sat(coloring) = &status {
        assert_eq!(
            first_list_violation(h, lists, &coloring.0),
            None,
            "resampling produced an invalid list coloring"
        );
    }
    Ok(SolveOutcome {
        status,
        nodes_explored: resamples,
        elapsed: start.elapsed(),
    })
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::hypergraph::gen_random_linear;
    use crate::palette::{check_list_coloring, drgas_sufficient, random_list_assignment};

    #[test]
    fn edgeless_needs_no_resampling() {
        let h = Hypergraph::edgeless(4, 3).unwrap();
        let l = ListAssignment::new(3, vec![vec![1, 2, 3]; 4]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let out = lll_resample_color(&h, &l, &mut rng, 0).unwrap();
        assert!(out.is_sat());
        assert_eq!(out.nodes_explored, 0);
    }

    #[test]
    fn unsat_instance_times_out() {
        let h = Hypergraph::new(2, 2, vec![vec![0, 1]]).unwrap();
        let l = ListAssignment::new(1, vec![vec![1]; 2]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let out = lll_resample_color(&h, &l, &mut rng, 50).unwrap();
        assert!(out.is_timeout());
        assert_eq!(out.nodes_explored, 50);
    }

    #[test]
    fn empty_list_rejected() {
        let h = Hypergraph::edgeless(2, 2).unwrap();
        let l = ListAssignment::new(1, vec![vec![1], vec![]]).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert!(lll_resample_color(&h, &l, &mut rng, 10).is_err());
    }

    #[test]
    fn sufficient_instances_color() {
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let h = gen_random_linear(60, 3, 3, 2).unwrap();
        let l = random_list_assignment(&h, 6, 30, &mut rng).unwrap();
        assert!(drgas_sufficient(&h, &l).unwrap());
        let out = lll_resample_color(&h, &l, &mut rng, 10 * h.num_edges() as u64).unwrap();
        let coloring = out.coloring().unwrap();
        assert_eq!(check_list_coloring(&h, &l, coloring).unwrap(), None);
    }
}
