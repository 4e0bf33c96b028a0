use std::io::Write;

use super::{ColorDegreeTable, ListAssignment};
use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::Color;

pub const DEFAULT_EPSILON: f64 = 0.1;

/// `(1 + eps) * delta * (k / sigma)^(r-1)`.
pub fn prune_threshold(delta: usize, k: usize, sigma: Color, r: usize, eps: f64) -> f64 {
    (1.0 + eps) * delta as f64 * (k as f64 / f64::from(sigma)).powi(r as i32 - 1)
}

/// One listed color at one vertex.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct PruneEntry {
    pub vertex: usize,
    pub color: Color,
    pub degree: u64,
    pub threshold: f64,
    pub removed: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct PruneReport {
    pub threshold: f64,
    /// Vertex-major, colors ascending; one entry per listed color.
    pub entries: Vec<PruneEntry>,
    /// Removed colors over original list size, per vertex (0 for empty lists).
    pub bad_fraction: Vec<f64>,
}

impl PruneReport {
    pub fn removed_count(&self) -> usize {
        self.entries.iter().filter(|e| e.removed).count()
    }

    pub fn max_bad_fraction(&self) -> f64 {
        self.bad_fraction.iter().copied().fold(0.0, f64::max)
    }

    /// Share of vertices whose bad fraction is strictly below `alpha`.
    pub fn share_below(&self, alpha: f64) -> f64 {
        if self.bad_fraction.is_empty() {
            return 1.0;
        }
        let below = self.bad_fraction.iter().filter(|&&f| f < alpha).count();
        below as f64 / self.bad_fraction.len() as f64
    }

    /// CSV with header `vertex,color,degree,threshold,removed`.
    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["vertex", "color", "degree", "threshold", "removed"])?;
        for e in &self.entries {
            w.write_record([
                e.vertex.to_string(),
                e.color.to_string(),
                e.degree.to_string(),
                e.threshold.to_string(),
                e.removed.to_string(),
            ])?;
        }
        w.flush()?;
        Ok(())
    }
}

/// Removes every color whose vertex color degree exceeds
/// [`prune_threshold`] with `k` the smallest list size and `delta` the
/// maximum degree of `h`.
pub fn prune_bad_colors(
    h: &Hypergraph,
    lists: &ListAssignment,
    eps: f64,
) -> Result<(ListAssignment, PruneReport)> {
    if eps.is_nan() || eps <= 0.0 {
        return Err(Error::invalid(format!("epsilon must be > 0, got {eps}")));
    }
    let table = ColorDegreeTable::new(h, lists)?;
    let threshold = prune_threshold(
        h.max_degree(),
        lists.min_size(),
        lists.sigma(),
        h.uniformity(),
        eps,
    );
    let mut entries = Vec::new();
    let mut bad_fraction = Vec::with_capacity(lists.num_vertices());
    let mut pruned = Vec::with_capacity(lists.num_vertices());
    for (v, list) in lists.lists().iter().enumerate() {
        let mut kept = Vec::with_capacity(list.len());
        for &color in list {
            let degree = table.vertex_color(v, color);
            let removed = degree as f64 > threshold;
            if !removed {
                kept.push(color);
            }
            entries.push(PruneEntry {
                vertex: v,
                color,
                degree,
                threshold,
                removed,
            });
        }
        let dropped = list.len() - kept.len();
        bad_fraction.push(if list.is_empty() {
            0.0
        } else {
            dropped as f64 / list.len() as f64
        });
        pruned.push(kept);
    }
    let pruned = ListAssignment {
        sigma: lists.sigma(),
        lists: pruned,
    };
    Ok((
        pruned,
        PruneReport {
            threshold,
            entries,
            bad_fraction,
        },
    ))
}
