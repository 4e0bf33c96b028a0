//! Single conflict coloring.
//!
//! A local `k`-partition assigns every edge an `r`-tuple of conflict colors,
//! one per vertex of the edge (in the edge's ascending vertex order). A
//! coloring is a conflict coloring if no edge sees every one of its
//! vertices colored with that vertex's conflict color.

mod bounds;
mod estimate;
mod exact;
mod greedy;
mod reduce;
mod solver;
mod twosat;

use std::fmt;
use std::time::Duration;

use rand::Rng;

pub use bounds::{ceil_root_product, theory_bounds, TheoryBounds};
pub use estimate::{estimate_p, estimate_p_with};
pub use exact::{
    chi_single_conflict, count_conflict_colorings, exact_p, exact_p_with_limit, expected_colorings,
    for_each_partition, ChiResult, DEFAULT_ENUMERATION_LIMIT,
};
pub use greedy::{greedy_color, greedy_trace, GreedyTrace};
pub use reduce::{
    check_adapted, reduce_adapted_to_conflict, reduce_separation_to_adapted, ListRelabeling,
};
pub use solver::{solve_conflict, ConflictSolver};
pub use twosat::solve_two_sat;

use crate::error::{Error, Result};
use crate::hypergraph::io::{content_lines, parse_numbers};
use crate::hypergraph::Hypergraph;
pub use crate::stats::Estimate;
use crate::Color;

/// Per-edge conflict tuples with entries in `1..=k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalKPartition {
    k: Color,
    r: usize,
    tuples: Vec<Color>,
}

impl LocalKPartition {
    pub fn new(k: Color, r: usize, tuples: Vec<Color>) -> Result<Self> {
        if k == 0 {
            return Err(Error::invalid("palette size k must be >= 1"));
        }
        if r == 0 || !tuples.len().is_multiple_of(r) {
            return Err(Error::validation(format!(
                "{} entries do not split into {r}-tuples",
                tuples.len()
            )));
        }
        if let Some(c) = tuples.iter().find(|&&c| c == 0 || c > k) {
            return Err(Error::validation(format!(
                "conflict color {c} outside 1..={k}"
            )));
        }
        Ok(LocalKPartition { k, r, tuples })
    }

    /// Builds from one tuple per edge.
    pub fn from_tuples(k: Color, r: usize, tuples: &[Vec<Color>]) -> Result<Self> {
        if let Some(t) = tuples.iter().find(|t| t.len() != r) {
            return Err(Error::validation(format!(
                "tuple {t:?} does not have arity {r}"
            )));
        }
        Self::new(k, r, tuples.concat())
    }

    #[inline]
    pub fn k(&self) -> Color {
        self.k
    }

    #[inline]
    pub fn uniformity(&self) -> usize {
        self.r
    }

    #[inline]
    pub fn num_edges(&self) -> usize {
        self.tuples.len() / self.r
    }

    /// `tuple(e)[i]` is the conflict color of the `i`-th vertex of edge `e`.
    #[inline]
    pub fn tuple(&self, e: usize) -> &[Color] {
        &self.tuples[e * self.r..(e + 1) * self.r]
    }

    pub fn tuples(&self) -> impl Iterator<Item = &[Color]> + '_ {
        self.tuples.chunks_exact(self.r)
    }

    /// Conflict color of vertex `v` on edge `e`.
    pub fn conflict_color(&self, h: &Hypergraph, e: usize, v: usize) -> Option<Color> {
        h.position_in_edge(e, v).map(|i| self.tuple(e)[i])
    }

    pub(crate) fn check_host(&self, h: &Hypergraph) -> Result<()> {
        if self.r != h.uniformity() || self.num_edges() != h.num_edges() {
            return Err(Error::invalid(format!(
                "partition has {} tuples of arity {}, hypergraph has {} edges of size {}",
                self.num_edges(),
                self.r,
                h.num_edges(),
                h.uniformity()
            )));
        }
        Ok(())
    }

    /// Parses the text format: header `k`, then one line of `r` colors per
    /// edge of `h`, in canonical edge order.
    pub fn parse(text: &str, h: &Hypergraph) -> Result<Self> {
        let mut lines = content_lines(text);
        let (line_no, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing header"))?;
        let header: Vec<Color> = parse_numbers(line_no, header)?;
        let [k] = header[..] else {
            return Err(Error::parse(line_no, "header must be `k`"));
        };
        let mut tuples = Vec::with_capacity(h.num_edges() * h.uniformity());
        let mut count = 0;
        for (line_no, line) in lines {
            let tuple: Vec<Color> = parse_numbers(line_no, line)?;
            if tuple.len() != h.uniformity() {
                return Err(Error::parse(
                    line_no,
                    format!("expected {} colors", h.uniformity()),
                ));
            }
            tuples.extend(tuple);
            count += 1;
        }
        if count != h.num_edges() {
            return Err(Error::validation(format!(
                "expected {} tuples, found {count}",
                h.num_edges()
            )));
        }
        Self::new(k, h.uniformity(), tuples)
    }
}

impl fmt::Display for LocalKPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.k)?;
        for t in self.tuples() {
            let line: Vec<String> = t.iter().map(Color::to_string).collect();
            writeln!(f, "{}", line.join(" "))?;
        }
        Ok(())
    }
}

/// Each edge's tuple drawn uniformly from `[k]^r`, edges in canonical order.
pub fn random_local_partition<R: Rng + ?Sized>(
    h: &Hypergraph,
    k: Color,
    rng: &mut R,
) -> Result<LocalKPartition> {
    if k == 0 {
        return Err(Error::invalid("palette size k must be >= 1"));
    }
    let tuples = (0..h.num_edges() * h.uniformity())
        .map(|_| rng.random_range(1..=k))
        .collect();
    Ok(LocalKPartition {
        k,
        r: h.uniformity(),
        tuples,
    })
}

/// A total vertex coloring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Coloring(pub Vec<Color>);

impl Coloring {
    #[inline]
    pub fn color(&self, v: usize) -> Color {
        self.0[v]
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn as_slice(&self) -> &[Color] {
        &self.0
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(Color::to_string).collect();
        f.write_str(&parts.join(" "))
    }
}

/// First edge (canonical order) on which `coloring` hits every conflict
/// color, or `None` for a conflict coloring.
pub fn check_conflict_coloring(
    h: &Hypergraph,
    c: &LocalKPartition,
    coloring: &Coloring,
) -> Result<Option<usize>> {
    c.check_host(h)?;
    if coloring.len() != h.num_vertices() {
        return Err(Error::invalid(format!(
            "coloring has {} entries for {} vertices",
            coloring.len(),
            h.num_vertices()
        )));
    }
    if let Some(x) = coloring.0.iter().find(|&&x| x == 0 || x > c.k()) {
        return Err(Error::invalid(format!("color {x} outside 1..={}", c.k())));
    }
    Ok(first_violation(h, c, &coloring.0))
}

pub(crate) fn first_violation(
    h: &Hypergraph,
    c: &LocalKPartition,
    colors: &[Color],
) -> Option<usize> {
    h.edges()
        .zip(c.tuples())
        .position(|(edge, tuple)| edge.iter().zip(tuple).all(|(&v, &t)| colors[v] == t))
}

/// Work limit for the backtracking solvers.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Budget {
    /// Maximum number of search nodes (value assignments).
    pub max_nodes: Option<u64>,
    /// Wall-clock cap. Results under a time cap depend on machine speed.
    pub max_time: Option<Duration>,
}

impl Budget {
    pub fn unlimited() -> Self {
        Budget::default()
    }

    pub fn nodes(max_nodes: u64) -> Self {
        Budget {
            max_nodes: Some(max_nodes),
            max_time: None,
        }
    }

    pub fn time(max_time: Duration) -> Self {
        Budget {
            max_nodes: None,
            max_time: Some(max_time),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SolveStatus {
    Sat(Coloring),
    Unsat,
    Timeout,
}

#[derive(Clone, Debug)]
pub struct SolveOutcome {
    pub status: SolveStatus,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

impl SolveOutcome {
    pub fn is_sat(&self) -> bool {
        matches!(self.status, SolveStatus::Sat(_))
    }

    pub fn is_unsat(&self) -> bool {
        matches!(self.status, SolveStatus::Unsat)
    }

    pub fn is_timeout(&self) -> bool {
        matches!(self.status, SolveStatus::Timeout)
    }

    pub fn coloring(&self) -> Option<&Coloring> {
        match &self.status {
            SolveStatus::Sat(c) => Some(c),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    use super::*;
    use crate::hypergraph::gen_complete_uniform;

    fn single_edge() -> Hypergraph {
        Hypergraph::new(2, 2, vec![vec![0, 1]]).unwrap()
    }

    #[test]
    fn k1_partition_is_all_ones() {
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let c = random_local_partition(&single_edge(), 1, &mut rng).unwrap();
        assert_eq!(c.tuple(0), &[1, 1]);
        assert!(random_local_partition(&single_edge(), 0, &mut rng).is_err());
    }

    #[test]
    fn tuples_are_uniform() {
        let h = single_edge();
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        let samples = 100_000;
        let mut counts = [0u32; 4];
        for _ in 0..samples {
            let c = random_local_partition(&h, 2, &mut rng).unwrap();
            let t = c.tuple(0);
            counts[((t[0] - 1) * 2 + (t[1] - 1)) as usize] += 1;
        }
        for &count in &counts {
            let freq = f64::from(count) / samples as f64;
            assert!((freq - 0.25).abs() <= 0.01, "{counts:?}");
        }
    }

    #[test]
    fn edges_are_independent() {
        let h = gen_complete_uniform(3, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let samples = 100_000;
        let mut both = 0u32;
        for _ in 0..samples {
            let c = random_local_partition(&h, 2, &mut rng).unwrap();
            if c.tuple(0) == [1, 1] && c.tuple(1) == [1, 1] {
                both += 1;
            }
        }
        let p = 1.0 / 16.0;
        let se = (p * (1.0 - p) / samples as f64).sqrt();
        let freq = f64::from(both) / samples as f64;
        assert!((freq - p).abs() <= 3.0 * se, "{freq}");
    }

    #[test]
    fn conflict_check() {
        let h = single_edge();
        let c = LocalKPartition::from_tuples(2, 2, &[vec![1, 2]]).unwrap();
        assert_eq!(
            check_conflict_coloring(&h, &c, &Coloring(vec![1, 2])).unwrap(),
            Some(0)
        );
        assert_eq!(
            check_conflict_coloring(&h, &c, &Coloring(vec![1, 1])).unwrap(),
            None
        );
        let edgeless = Hypergraph::edgeless(3, 2).unwrap();
        let empty = LocalKPartition::new(2, 2, vec![]).unwrap();
        assert_eq!(
            check_conflict_coloring(&edgeless, &empty, &Coloring(vec![2, 1, 2])).unwrap(),
            None
        );
    }

    #[test]
    fn conflict_check_rejects_mismatches() {
        let h = single_edge();
        let c = LocalKPartition::from_tuples(2, 2, &[vec![1, 2]]).unwrap();
        assert!(check_conflict_coloring(&h, &c, &Coloring(vec![1])).is_err());
        assert!(check_conflict_coloring(&h, &c, &Coloring(vec![1, 3])).is_err());
        let wrong_arity = LocalKPartition::from_tuples(2, 3, &[vec![1, 2, 1]]).unwrap();
        assert!(check_conflict_coloring(&h, &wrong_arity, &Coloring(vec![1, 1])).is_err());
    }

    #[test]
    fn partition_text_round_trip() {
        let h = gen_complete_uniform(3, 2).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let c = random_local_partition(&h, 3, &mut rng).unwrap();
        let text = c.to_string();
        assert_eq!(LocalKPartition::parse(&text, &h).unwrap(), c);
        assert!(LocalKPartition::parse("3\n1 2\n", &h).is_err());
        assert!(LocalKPartition::parse("2\n1 2\n1 3\n1 1\n", &h).is_err());
    }
}
