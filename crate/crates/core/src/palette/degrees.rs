use super::ListAssignment;
use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::Color;

/// How the edge color-degree aggregates colors over the lists of an edge.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum DcolSemantics {
    /// Each color present in at least one list of the edge counts once.
    #[default]
    Union,
    /// Each color counts once per vertex of the edge whose list holds it.
    Multiset,
}

/// Color degrees of a hypergraph under a list assignment.
///
/// `vertex_color(v, c)` counts edges through `v` whose every vertex lists `c`.
/// `edge_color(e, c)` sums `vertex_color` over the vertices of `e`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColorDegreeTable {
    sigma: Color,
    /// Row-major `n x sigma`, column `c - 1`.
    vertex_color: Vec<u64>,
    /// Row-major `m x sigma`.
    edge_color: Vec<u64>,
    edge_total: Vec<u64>,
    delta_col: u64,
}

impl ColorDegreeTable {
    pub fn new(h: &Hypergraph, lists: &ListAssignment) -> Result<Self> {
        Self::with_semantics(h, lists, DcolSemantics::Union)
    }

    pub fn with_semantics(
        h: &Hypergraph,
        lists: &ListAssignment,
        semantics: DcolSemantics,
    ) -> Result<Self> {
        lists.check_host(h)?;
        let s = lists.sigma() as usize;
        let mut vertex_color = vec![0u64; h.num_vertices() * s];
        for edge in h.edges() {
            // colors listed by every vertex of the edge
            for &c in lists.list(edge[0]) {
                if edge[1..].iter().all(|&u| lists.contains(u, c)) {
                    for &u in edge {
                        vertex_color[u * s + c as usize - 1] += 1;
                    }
                }
            }
        }

        let mut edge_color = vec![0u64; h.num_edges() * s];
        let mut edge_total = Vec::with_capacity(h.num_edges());
        let mut present = vec![false; s];
        for (e, edge) in h.edges().enumerate() {
            let row = &mut edge_color[e * s..(e + 1) * s];
            for &u in edge {
                for (slot, &d) in row.iter_mut().zip(&vertex_color[u * s..(u + 1) * s]) {
                    *slot += d;
                }
            }
            let total = match semantics {
                DcolSemantics::Union => {
                    present.fill(false);
                    for &u in edge {
                        for &c in lists.list(u) {
                            present[c as usize - 1] = true;
                        }
                    }
                    row.iter()
                        .zip(&present)
                        .filter(|(_, &p)| p)
                        .map(|(&d, _)| d)
                        .sum()
                }
                DcolSemantics::Multiset => edge
                    .iter()
                    .flat_map(|&u| lists.list(u))
                    .map(|&c| row[c as usize - 1])
                    .sum(),
            };
            edge_total.push(total);
        }
        let delta_col = edge_total.iter().copied().max().unwrap_or(0);
        Ok(ColorDegreeTable {
            sigma: lists.sigma(),
            vertex_color,
            edge_color,
            edge_total,
            delta_col,
        })
    }

    pub fn sigma(&self) -> Color {
        self.sigma
    }

    /// `d_c(v)`; zero for colors outside `1..=sigma`.
    pub fn vertex_color(&self, v: usize, c: Color) -> u64 {
        self.lookup(&self.vertex_color, v, c)
    }

    pub fn edge_color(&self, e: usize, c: Color) -> u64 {
        self.lookup(&self.edge_color, e, c)
    }

    pub fn edge_total(&self, e: usize) -> u64 {
        self.edge_total[e]
    }

    pub fn delta_col(&self) -> u64 {
        self.delta_col
    }

    fn lookup(&self, table: &[u64], row: usize, c: Color) -> u64 {
        if c == 0 || c > self.sigma {
            return 0;
        }
        let s = self.sigma as usize;
        table[row * s + c as usize - 1]
    }
}
