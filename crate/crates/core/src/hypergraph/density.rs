use num_rational::Ratio;

use super::Hypergraph;
use crate::error::{Error, Result};

/// Largest vertex count for which [`Hypergraph::max_density`] enumerates
/// every vertex subset by default.
pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 20;

/// Maximum edge density over nonempty induced subhypergraphs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct MaxDensity {
    pub value: Ratio<u64>,
    /// False when `value` is only the peeling lower bound.
    pub exact: bool,
}

impl Hypergraph {
    /// `m / n`.
    pub fn density(&self) -> Result<Ratio<u64>> {
        if self.num_vertices() == 0 {
            return Err(Error::invalid("density of an empty vertex set"));
        }
        Ok(Ratio::new(
            self.num_edges() as u64,
            self.num_vertices() as u64,
        ))
    }

    /// Exact by subset enumeration when `n <= exhaustive_limit`, otherwise the
    /// best `m'/n'` seen along the minimum-degree peeling.
    pub fn max_density(&self, exhaustive_limit: usize) -> Result<MaxDensity> {
        let n = self.num_vertices();
        if n == 0 {
            return Err(Error::invalid("density of an empty vertex set"));
        }
        if n <= exhaustive_limit && n < 64 {
            Ok(MaxDensity {
                value: self.max_density_exhaustive(),
                exact: true,
            })
        } else {
            Ok(MaxDensity {
                value: self.max_density_peeling(),
                exact: false,
            })
        }
    }

    fn max_density_exhaustive(&self) -> Ratio<u64> {
        let n = self.num_vertices();
        let masks: Vec<u64> = self
            .edges()
            .map(|edge| edge.iter().fold(0u64, |m, &v| m | (1 << v)))
            .collect();
        let mut best = Ratio::new(0, 1);
        for subset in 1u64..(1u64 << n) {
            let inside = masks.iter().filter(|&&m| m & !subset == 0).count() as u64;
            let d = Ratio::new(inside, u64::from(subset.count_ones()));
            if d > best {
                best = d;
            }
        }
        best
    }

    fn max_density_peeling(&self) -> Ratio<u64> {
        let order = self.degeneracy_order();
        // order[..=i] is the vertex set left after peeling n-1-i vertices,
        // and it spans exactly back_degrees[..=i] edges.
        let mut edges = 0u64;
        let mut best = Ratio::new(0, 1);
        for (i, &b) in order.back_degrees.iter().enumerate() {
            edges += b as u64;
            let d = Ratio::new(edges, i as u64 + 1);
            if d > best {
                best = d;
            }
        }
        best
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hypergraph::{gen_complete_r_partite, gen_complete_uniform};

    #[test]
    fn triangle() {
        let k3 = gen_complete_uniform(3, 2).unwrap();
        assert_eq!(k3.density().unwrap(), Ratio::new(1, 1));
        let md = k3.max_density(DEFAULT_EXHAUSTIVE_LIMIT).unwrap();
        assert_eq!(md.value, Ratio::new(1, 1));
        assert!(md.exact);
    }

    #[test]
    fn complete_graph_k5() {
        let k5 = gen_complete_uniform(5, 2).unwrap();
        assert_eq!(k5.max_density(20).unwrap().value, Ratio::new(2, 1));
    }

    #[test]
    fn k4_plus_isolated_vertex() {
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                edges.push(vec![u, v]);
            }
        }
        let h = Hypergraph::new(5, 2, edges).unwrap();
        assert_eq!(h.density().unwrap(), Ratio::new(6, 5));
        let md = h.max_density(20).unwrap();
        assert_eq!(md.value, Ratio::new(3, 2));
        // peeling drops the isolated vertex first and finds the same value
        let lb = h.max_density(0).unwrap();
        assert!(!lb.exact);
        assert_eq!(lb.value, Ratio::new(3, 2));
    }

    #[test]
    fn vertex_transitive_families_are_balanced() {
        for h in [
            gen_complete_uniform(6, 3).unwrap(),
            gen_complete_uniform(7, 2).unwrap(),
            gen_complete_r_partite(3, 2).unwrap(),
            gen_complete_r_partite(2, 4).unwrap(),
        ] {
            let md = h.max_density(20).unwrap();
            assert!(md.exact);
            assert_eq!(md.value, h.density().unwrap());
        }
    }

    #[test]
    fn empty_vertex_set_is_an_error() {
        let h = Hypergraph::edgeless(0, 2).unwrap();
        assert!(h.density().is_err());
        assert!(h.max_density(20).is_err());
    }
}
