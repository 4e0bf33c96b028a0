use std::time::Instant;

use super::{first_list_violation, ListAssignment};
use crate::conflict::{Budget, Coloring, SolveOutcome, SolveStatus};
use crate::error::Result;
use crate::hypergraph::Hypergraph;
use crate::Color;

const CLOCK_STRIDE: u64 = 4096;

/// Decides `L`-colorability by backtracking. The next variable is an
/// uncolored vertex with the fewest unbanned colors, ties broken by
/// degeneracy order, and its list is tried in ascending order. An edge with
/// `r-1` vertices colored `c` bans `c` at its last uncolored vertex.
pub fn solve_list_coloring(
    h: &Hypergraph,
    lists: &ListAssignment,
    budget: Budget,
) -> Result<SolveOutcome> {
    lists.check_host(h)?;
    let start = Instant::now();
    let n = h.num_vertices();
    let mut offsets = Vec::with_capacity(n + 1);
    offsets.push(0);
    for list in lists.lists() {
        offsets.push(offsets.last().unwrap() + list.len());
    }
    let mut search = Search {
        h,
        lists,
        banned: vec![0; *offsets.last().unwrap()],
        free: lists.lists().iter().map(Vec::len).collect(),
        offsets,
        colors: vec![0; n],
    };

    let order = h.degeneracy_order().order;
    let mut stack: Vec<usize> = Vec::with_capacity(n);
    // next list index to try at each level
    let mut next = vec![0usize; n + 1];
    let mut nodes = 0u64;
    let mut level = 0usize;
    let status = 'search: loop {
        if level == 0 && search.free.contains(&0) {
            // an empty list
            break SolveStatus::Unsat;
        }
        if level == n {
            break SolveStatus::Sat(Coloring(search.colors.clone()));
        }
        if stack.len() == level {
            stack.push(search.select(&order));
            next[level] = 0;
        }
        let v = stack[level];
        let list = lists.list(v);
        let mut placed = false;
        while next[level] < list.len() {
            let idx = next[level];
            next[level] += 1;
            if search.banned[search.offsets[v] + idx] > 0 {
                continue;
            }
            nodes += 1;
            if budget.max_nodes.is_some_and(|cap| nodes > cap)
                || (nodes.is_multiple_of(CLOCK_STRIDE)
                    && budget.max_time.is_some_and(|cap| start.elapsed() >= cap))
            {
                break 'search SolveStatus::Timeout;
            }
            if search.assign(v, list[idx]) {
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
            first_list_violation(h, lists, &coloring.0),
            None,
            "backtracking produced an invalid list coloring"
        );
    }
    Ok(SolveOutcome {
        status,
        nodes_explored: nodes,
        elapsed: start.elapsed(),
    })
}

struct Search<'a> {
    h: &'a Hypergraph,
    lists: &'a ListAssignment,
    /// Start of each vertex's slice in `banned`.
    offsets: Vec<usize>,
    /// Per (vertex, list index): number of edges forbidding that color.
    banned: Vec<u32>,
    free: Vec<usize>,
    /// 0 = uncolored.
    colors: Vec<Color>,
}

impl Search<'_> {
    fn select(&self, order: &[usize]) -> usize {
        let mut best = usize::MAX;
        let mut best_free = usize::MAX;
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

    /// If every other vertex of `e` but one carries `color` and that one is
    /// uncolored, returns it.
    fn forced(&self, e: usize, v: usize, color: Color) -> Option<usize> {
        let mut open = None;
        for &u in self.h.edge(e) {
            if u == v {
                continue;
            }
            match self.colors[u] {
                0 if open.is_none() => open = Some(u),
                c if c == color => {}
                _ => return None,
            }
        }
        open
    }

    /// Returns false on a domain wipeout; the caller must still `unassign`.
    fn assign(&mut self, v: usize, color: Color) -> bool {
        self.colors[v] = color;
        let mut ok = true;
        for &e in self.h.incident(v) {
            let Some(w) = self.forced(e, v, color) else {
                continue;
            };
            let Ok(idx) = self.lists.list(w).binary_search(&color) else {
                continue;
            };
            let slot = &mut self.banned[self.offsets[w] + idx];
            *slot += 1;
            if *slot == 1 {
                self.free[w] -= 1;
                ok &= self.free[w] > 0;
            }
        }
        ok
    }

    fn unassign(&mut self, v: usize) {
        let color = self.colors[v];
        for &e in self.h.incident(v) {
            let Some(w) = self.forced(e, v, color) else {
                continue;
            };
            let Ok(idx) = self.lists.list(w).binary_search(&color) else {
                continue;
            };
            let slot = &mut self.banned[self.offsets[w] + idx];
            *slot -= 1;
            if *slot == 0 {
                self.free[w] += 1;
            }
        }
        self.colors[v] = 0;
    }
}
