use std::time::Instant;

use super::twosat::solve_two_sat;
use super::{first_violation, Budget, Coloring, LocalKPartition, SolveOutcome, SolveStatus};
use crate::error::Result;
use crate::hypergraph::{DegeneracyOrder, Hypergraph};
use crate::Color;

/// How often (in nodes) the wall clock is consulted.
const CLOCK_STRIDE: u64 = 4096;

/// Complete backtracking search for conflict colorings.
///
/// The next variable is an uncolored vertex with the fewest unbanned
/// colors, ties broken by degeneracy order; values are tried in ascending
/// order. Whenever all but one vertex of an edge carry their conflict
/// colors, the remaining vertex loses its conflict color from its domain; a
/// wiped out domain triggers immediate backtracking. `r = 2, k = 2` instances go
/// through the implication-graph 2-SAT decision instead.
///
/// The solver only borrows the hypergraph and can be shared across threads.
pub struct ConflictSolver<'h> {
    h: &'h Hypergraph,
    order: DegeneracyOrder,
    /// Per vertex: `(edge, index of the vertex inside the edge)`.
    slots: Vec<Vec<(u32, u32)>>,
}

impl<'h> ConflictSolver<'h> {
    pub fn new(h: &'h Hypergraph) -> Self {
        let slots = (0..h.num_vertices())
            .map(|v| {
                h.incident(v)
                    .iter()
                    .map(|&e| {
                        let i = h.position_in_edge(e, v).expect("incident edge contains v");
                        (e as u32, i as u32)
                    })
                    .collect()
            })
            .collect();
        ConflictSolver {
            h,
            order: h.degeneracy_order(),
            slots,
        }
    }

    pub fn hypergraph(&self) -> &'h Hypergraph {
        self.h
    }

    pub fn order(&self) -> &DegeneracyOrder {
        &self.order
    }

    pub fn solve(&self, c: &LocalKPartition, budget: Budget) -> Result<SolveOutcome> {
        c.check_host(self.h)?;
        if self.h.uniformity() == 2 && c.k() == 2 {
            return Ok(solve_two_sat(self.h, c));
        }
        Ok(self.backtrack(c, budget))
    }

    /// The backtracking search alone, without the 2-SAT shortcut.
    pub fn solve_backtracking(&self, c: &LocalKPartition, budget: Budget) -> Result<SolveOutcome> {
        c.check_host(self.h)?;
        Ok(self.backtrack(c, budget))
    }

    fn backtrack(&self, c: &LocalKPartition, budget: Budget) -> SolveOutcome {
        let start = Instant::now();
        let n = self.h.num_vertices();
        let k = c.k();
        let mut search = Search {
            h: self.h,
            c,
            slots: &self.slots,
            k: k as usize,
            colors: vec![0; n],
            banned: vec![0; n * k as usize],
            free: vec![k; n],
            matched: vec![0; self.h.num_edges()],
        };
        let order = &self.order.order;
        let mut stack: Vec<usize> = Vec::with_capacity(n);
        let mut next: Vec<Color> = vec![1; n + 1];
        let mut nodes = 0u64;
        let mut level = 0usize;

        let status = 'search: loop {
            if level == n {
                break SolveStatus::Sat(Coloring(search.colors.clone()));
            }
            if stack.len() == level {
                stack.push(search.select(order));
                next[level] = 1;
            }
            let v = stack[level];
            let mut placed = false;
            while next[level] <= k {
                let color = next[level];
                next[level] += 1;
                if search.is_banned(v, color) {
                    continue;
                }
                nodes += 1;
                if budget.max_nodes.is_some_and(|cap| nodes > cap)
                    || (nodes.is_multiple_of(CLOCK_STRIDE)
                        && budget.max_time.is_some_and(|cap| start.elapsed() >= cap))
                {
                    break 'search SolveStatus::Timeout;
                }
                if search.assign(v, color) {
                    placed = true;
                    break;
                }
                search.unassign(v);
            }
            if placed {
                level += 1;
                continue;
            }
            stack.pop();
            if level == 0 {
                break SolveStatus::Unsat;
            }
            level -= 1;
            search.unassign(stack[level]);
        };

        if let SolveStatus::Sat(coloring) = &status {
            assert_eq!(
                first_violation(self.h, c, &coloring.0),
                None,
                "backtracking produced an invalid conflict coloring"
            );
        }
        SolveOutcome {
            status,
            nodes_explored: nodes,
            elapsed: start.elapsed(),
        }
    }
}

/// Decides conflict colorability of `h` under `c`.
pub fn solve_conflict(h: &Hypergraph, c: &LocalKPartition, budget: Budget) -> Result<SolveOutcome> {
    ConflictSolver::new(h).solve(c, budget)
}

struct Search<'a> {
    h: &'a Hypergraph,
    c: &'a LocalKPartition,
    slots: &'a [Vec<(u32, u32)>],
    k: usize,
    /// 0 = uncolored.
    colors: Vec<Color>,
    /// `banned[v*k + j-1]` counts edges forbidding color `j` at `v`.
    banned: Vec<u32>,
    /// Number of unbanned colors per vertex.
    free: Vec<Color>,
    /// Vertices of each edge currently colored with their conflict color.
    matched: Vec<u32>,
}

impl Search<'_> {
    #[inline]
    fn is_banned(&self, v: usize, color: Color) -> bool {
        self.banned[v * self.k + color as usize - 1] > 0
    }

    /// Uncolored vertex with the fewest free colors, earliest in `order` on
    /// ties.
    fn select(&self, order: &[usize]) -> usize {
        let mut best = usize::MAX;
        let mut best_free = Color::MAX;
        for &v in order {
            if self.colors[v] == 0 && self.free[v] < best_free {
                best = v;
                best_free = self.free[v];
                if best_free == 1 {
                    break;
                }
            }
        }
        best
    }

    /// The single vertex of `e` not carrying its conflict color.
    #[inline]
    fn unmatched(&self, e: usize) -> (usize, Color) {
        self.h
            .edge(e)
            .iter()
            .zip(self.c.tuple(e))
            .find(|&(&u, &t)| self.colors[u] != t)
            .map(|(&u, &t)| (u, t))
            .expect("edge with r-1 matches has one unmatched vertex")
    }

    /// Colors `v`, posting bans. Returns false if some uncolored vertex is
    /// left without colors; the caller must still `unassign`.
    fn assign(&mut self, v: usize, color: Color) -> bool {
        self.colors[v] = color;
        let last = self.h.uniformity() as u32 - 1;
        let mut ok = true;
        for &(e, i) in &self.slots[v] {
            let e = e as usize;
            if self.c.tuple(e)[i as usize] != color {
                continue;
            }
            self.matched[e] += 1;
            if self.matched[e] == last {
                let (w, t) = self.unmatched(e);
                let slot = &mut self.banned[w * self.k + t as usize - 1];
                *slot += 1;
                if *slot == 1 {
                    self.free[w] -= 1;
                    if self.free[w] == 0 && self.colors[w] == 0 {
                        ok = false;
                    }
                }
            }
        }
        ok
    }

    fn unassign(&mut self, v: usize) {
        let color = self.colors[v];
        let last = self.h.uniformity() as u32 - 1;
        for &(e, i) in &self.slots[v] {
            let e = e as usize;
            if self.c.tuple(e)[i as usize] != color {
                continue;
            }
            if self.matched[e] == last {
                let (w, t) = self.unmatched(e);
                let slot = &mut self.banned[w * self.k + t as usize - 1];
                *slot -= 1;
                if *slot == 0 {
                    self.free[w] += 1;
                }
            }
            self.matched[e] -= 1;
        }
        self.colors[v] = 0;
    }
}
