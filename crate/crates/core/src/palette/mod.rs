//! List coloring from random palettes.

mod degrees;
mod lll;
mod prune;
mod solver;
mod tails;

use std::fmt;

use rand::seq::index;
use rand::Rng;

pub use degrees::{ColorDegreeTable, DcolSemantics};
pub use lll::lll_resample_color;
pub use prune::{prune_bad_colors, prune_threshold, PruneEntry, PruneReport, DEFAULT_EPSILON};
pub use solver::solve_list_coloring;
pub use tails::{
    chernoff_lower_tail, chernoff_upper_tail, clique_same_list_probability, drgas_sufficient,
};

use crate::error::{Error, Result};
use crate::hypergraph::io::{content_lines, parse_numbers};
use crate::hypergraph::Hypergraph;
use crate::{Color, Coloring};

/// Color lists over the universe `1..=sigma`, one ascending list per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ListAssignment {
    sigma: Color,
    lists: Vec<Vec<Color>>,
}

impl ListAssignment {
    /// Sorts each list and rejects duplicates or colors outside `1..=sigma`.
    pub fn new(sigma: Color, mut lists: Vec<Vec<Color>>) -> Result<Self> {
        for (v, list) in lists.iter_mut().enumerate() {
            list.sort_unstable();
            if list.windows(2).any(|w| w[0] == w[1]) {
                return Err(Error::validation(format!(
                    "list of vertex {v} repeats a color"
                )));
            }
            if let Some(&c) = list.iter().find(|&&c| c == 0 || c > sigma) {
                return Err(Error::validation(format!(
                    "vertex {v}: color {c} outside 1..={sigma}"
                )));
            }
        }
        Ok(ListAssignment { sigma, lists })
    }

    #[inline]
    pub fn sigma(&self) -> Color {
        self.sigma
    }

    #[inline]
    pub fn list(&self, v: usize) -> &[Color] {
        &self.lists[v]
    }

    pub fn lists(&self) -> &[Vec<Color>] {
        &self.lists
    }

    pub fn num_vertices(&self) -> usize {
        self.lists.len()
    }

    #[inline]
    pub fn contains(&self, v: usize, color: Color) -> bool {
        self.lists[v].binary_search(&color).is_ok()
    }

    /// Smallest list size (0 for an empty assignment).
    pub fn min_size(&self) -> usize {
        self.lists.iter().map(Vec::len).min().unwrap_or(0)
    }

    /// Every list has exactly `k` colors.
    pub fn uniform_size(&self) -> Option<usize> {
        let k = self.lists.first().map_or(0, Vec::len);
        self.lists.iter().all(|l| l.len() == k).then_some(k)
    }

    pub(crate) fn check_host(&self, h: &Hypergraph) -> Result<()> {
        if self.lists.len() != h.num_vertices() {
            return Err(Error::invalid(format!(
                "list assignment covers {} vertices, hypergraph has {}",
                self.lists.len(),
                h.num_vertices()
            )));
        }
        Ok(())
    }

    /// Parses the text format: header `sigma`, then per vertex a line
    /// `v k c_1 ... c_k`.
    pub fn parse(text: &str) -> Result<Self> {
        let mut lines = content_lines(text);
        let (line_no, header) = lines
            .next()
            .ok_or_else(|| Error::parse(1, "missing header"))?;
        let header: Vec<Color> = parse_numbers(line_no, header)?;
        let [sigma] = header[..] else {
            return Err(Error::parse(line_no, "header must be `sigma`"));
        };
        let mut lists = Vec::new();
        for (line_no, line) in lines {
            let nums: Vec<usize> = parse_numbers(line_no, line)?;
            let (v, k) = match nums[..] {
                [v, k, ..] => (v, k),
                _ => return Err(Error::parse(line_no, "expected `v k c_1 ... c_k`")),
            };
            if v != lists.len() {
                return Err(Error::parse(
                    line_no,
                    format!("expected vertex {}", lists.len()),
                ));
            }
            if nums.len() != k + 2 {
                return Err(Error::parse(line_no, format!("expected {k} colors")));
            }
            let list = nums[2..]
                .iter()
                .map(|&c| Color::try_from(c).map_err(|_| Error::parse(line_no, "color too large")))
                .collect::<Result<Vec<_>>>()?;
            lists.push(list);
        }
        Self::new(sigma, lists)
    }
}

impl fmt::Display for ListAssignment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.sigma)?;
        for (v, list) in self.lists.iter().enumerate() {
            write!(f, "{v} {}", list.len())?;
            for c in list {
                write!(f, " {c}")?;
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Random `(k, sigma)`-list assignment: every vertex independently receives
/// a uniform `k`-subset of `1..=sigma`, vertices sampled in id order.
pub fn random_list_assignment<R: Rng + ?Sized>(
    h: &Hypergraph,
    k: usize,
    sigma: Color,
    rng: &mut R,
) -> Result<ListAssignment> {
    if k == 0 || k > sigma as usize {
        return Err(Error::invalid(format!(
            "need 1 <= k <= sigma, got k={k}, sigma={sigma}"
        )));
    }
    let lists = (0..h.num_vertices())
        .map(|_| {
            let mut list: Vec<Color> = index::sample(rng, sigma as usize, k)
                .iter()
                .map(|i| i as Color + 1)
                .collect();
            list.sort_unstable();
            list
        })
        .collect();
    Ok(ListAssignment { sigma, lists })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ListViolation {
    NotInList { vertex: usize, color: Color },
    Monochromatic { edge: usize },
}

/// First vertex colored outside its list, else the first monochromatic
/// edge, else `None`.
pub fn check_list_coloring(
    h: &Hypergraph,
    lists: &ListAssignment,
    coloring: &Coloring,
) -> Result<Option<ListViolation>> {
    lists.check_host(h)?;
    if coloring.len() != h.num_vertices() {
        return Err(Error::invalid(format!(
            "coloring has {} entries for {} vertices",
            coloring.len(),
            h.num_vertices()
        )));
    }
    Ok(first_list_violation(h, lists, &coloring.0))
}

pub(crate) fn first_list_violation(
    h: &Hypergraph,
    lists: &ListAssignment,
    colors: &[Color],
) -> Option<ListViolation> {
    if let Some((vertex, &color)) = colors
        .iter()
        .enumerate()
        .find(|&(v, &c)| !lists.contains(v, c))
    {
        return Some(ListViolation::NotInList { vertex, color });
    }
    h.edges()
        .position(|edge| edge.iter().all(|&v| colors[v] == colors[edge[0]]))
        .map(|edge| ListViolation::Monochromatic { edge })
}
