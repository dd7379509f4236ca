use std::collections::BinaryHeap;

use super::paths::{a_longest_path, backward_depths, child_lists, forward_depths};
use crate::error::{Error, Result};
use crate::graph::DagAdjacency;
use crate::NodeIndex;

/// Largest removal budget the exact search accepts.
pub const MAX_EXACT_BUDGET: usize = 5;
/// Cap on `N^(e-1)`, the worst-case number of branches of the exact search.
pub const MAX_EXACT_BRANCHES: u64 = 10_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RobustnessMode {
    /// `residual_depth` is the minimum over all removal sets within budget.
    Exact,
    /// `residual_depth` comes from one attack set, an upper bound on the minimum.
    AttackUpperBound,
}

/// Result of a depth-robustness probe.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RobustnessReport {
    pub e: usize,
    pub worst_set: Vec<NodeIndex>,
    pub residual_depth: usize,
    pub mode: RobustnessMode,
}

/// Integer path length demanded by a real-valued depth target, `⌈d⌉`
/// (0 for negative targets).
pub fn required_depth(d: f64) -> usize {
    if d <= 0.0 {
        0
    } else {
        (d - 1e-9).ceil() as usize
    }
}

/// Exact `min_{|S| <= e} longest_path(G - S)`.
///
/// Any set that lowers the depth must hit every longest path, so the search
/// branches only on the nodes of one longest path. The last removal is
/// resolved for all candidates at once: a path avoiding `k` lies entirely
/// before `k`, entirely after it, or crosses it on a single edge.
pub fn depth_robustness_exact(g: &DagAdjacency, e: usize) -> Result<RobustnessReport> {
    let n = g.n();
    if e > MAX_EXACT_BUDGET {
        return Err(Error::Refused(format!(
            "removal budget {e} exceeds the exact-search limit of {MAX_EXACT_BUDGET}"
        )));
    }
    if e > 1 {
        let branches = (n as u64).checked_pow(e as u32 - 1).unwrap_or(u64::MAX);
        if branches > MAX_EXACT_BRANCHES {
            return Err(Error::Refused(format!(
                "exact search with budget {e} on {n} nodes exceeds {MAX_EXACT_BRANCHES} branches"
            )));
        }
    }
    let search = Search {
        g,
        children: child_lists(g),
    };
    let mut alive = vec![true; n];
    let (residual_depth, mut set) = search.min_residual(&mut alive, e);
    set.sort_unstable();
    Ok(RobustnessReport {
        e,
        worst_set: set.into_iter().map(|s| s + 1).collect(),
        residual_depth,
        mode: RobustnessMode::Exact,
    })
}

struct Search<'a> {
    g: &'a DagAdjacency,
    children: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn min_residual(&self, alive: &mut [bool], budget: usize) -> (usize, Vec<usize>) {
        let fwd = forward_depths(self.g, alive);
        let depth = fwd.iter().flatten().copied().max().unwrap_or(0);
        if budget == 0 || depth == 0 {
            return (depth, Vec::new());
        }
        if budget == 1 {
            return self.best_single(alive, &fwd);
        }
        let mut best = (depth, Vec::new());
        for s in a_longest_path(self.g, &fwd) {
            alive[s] = false;
            let (d, mut set) = self.min_residual(alive, budget - 1);
            alive[s] = true;
            if d < best.0 {
                set.push(s);
                best = (d, set);
                if d == 0 {
                    break;
                }
            }
        }
        best
    }

    /// Best single removal among live nodes (0-based), ties to the smallest label.
    fn best_single(&self, alive: &[bool], fwd: &[Option<usize>]) -> (usize, Vec<usize>) {
        let n = alive.len();
        let bwd = backward_depths(&self.children, alive);

        // suffix[k]: longest path starting strictly after k
        let mut suffix = vec![0usize; n + 1];
        for k in (0..n).rev() {
            suffix[k] = suffix[k + 1].max(bwd[k].unwrap_or(0));
        }

        let mut best: Option<(usize, usize)> = None;
        let mut prefix = 0usize;
        // (value, head): crossing paths through edge (u, head) with u < k < head
        let mut open: BinaryHeap<(usize, usize)> = BinaryHeap::new();
        for k in 0..n {
            if k > 0 {
                let u = k - 1;
                if let Some(fu) = fwd[u] {
                    for &w in &self.children[u] {
                        if let Some(gw) = bwd[w] {
                            open.push((fu + 1 + gw, w));
                        }
                    }
                }
            }
            while open.peek().is_some_and(|&(_, w)| w <= k) {
                open.pop();
            }
            if alive[k] {
                let crossing = open.peek().map_or(0, |&(val, _)| val);
                let residual = prefix.max(suffix[k + 1]).max(crossing);
                if best.is_none_or(|(d, _)| residual < d) {
                    best = Some((residual, k));
                }
            }
            prefix = prefix.max(fwd[k].unwrap_or(0));
        }
        match best {
            Some((d, k)) => (d, vec![k]),
            None => (0, Vec::new()),
        }
    }
}
