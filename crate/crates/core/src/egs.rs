//! The δ-local-expander DAG `G(δ, N)` on `N = 2ⁿ` nodes.
//!
//! Node `v` is connected to the `4n` nodes immediately before it, and for each
//! scale `t` it sees the ten preceding blocks of width `2ᵗ` through a
//! δ/5-bipartite expander on `2ᵗ` nodes. Parents are computed from `v` alone.

use std::collections::HashMap;

use crate::bipartite_expander::{layer_count, BeParams};
use crate::error::{domain, Result};
use crate::graph::DagAdjacency;
use crate::NodeIndex;

/// Number of preceding blocks each scale connects to.
const BLOCKS: usize = 10;
/// Width of the local window is `WINDOW * n`.
const WINDOW: usize = 4;

/// `δ_ε` with `(1 + ε)(1 - 2.1δ_ε) = 1 + 2.1δ_ε`, frozen at the ε = 1/3 value
/// for larger ε.
pub fn delta_for_epsilon(epsilon: f64) -> Result<f64> {
    if !epsilon.is_finite() || epsilon <= 0.0 {
        return domain(format!("epsilon {epsilon} must be a positive number"));
    }
    let e = epsilon.min(1.0 / 3.0);
    Ok(e / (2.1 * (2.0 + e)))
}

/// `⌈log₂ v⌉`, with `⌈log₂ 1⌉ = 0`.
fn ceil_log2(v: usize) -> u32 {
    if v <= 1 {
        0
    } else {
        usize::BITS - (v - 1).leading_zeros()
    }
}

/// Parameters of one `G(δ, N)` instance.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EgsParams {
    n_nodes: usize,
    delta: f64,
    layer_override: Option<usize>,
}

impl EgsParams {
    pub fn new(n_nodes: usize, delta: f64, layer_override: Option<usize>) -> Result<Self> {
        if n_nodes == 0 || !n_nodes.is_power_of_two() {
            return domain(format!("node count {n_nodes} is not a power of two"));
        }
        if !(delta > 0.0 && delta < 1.0) {
            return domain(format!("delta {delta} not in (0, 1)"));
        }
        if layer_override == Some(0) {
            return domain("layer override must be positive");
        }
        Ok(EgsParams {
            n_nodes,
            delta,
            layer_override,
        })
    }

    pub fn n_nodes(&self) -> usize {
        self.n_nodes
    }

    /// `n = log₂ N`.
    pub fn log_n(&self) -> usize {
        self.n_nodes.trailing_zeros() as usize
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn layer_override(&self) -> Option<usize> {
        self.layer_override
    }

    pub fn is_certified(&self) -> bool {
        self.layer_override.is_none()
    }

    /// Layers of every inner bipartite expander: the override, or `L_{δ/10}`
    /// (δ/5 halved by truncation).
    pub fn layers(&self) -> usize {
        match self.layer_override {
            Some(l) => l,
            None => layer_count(self.delta / 10.0).expect("delta/10 lies in (0, 1/10)"),
        }
    }

    fn inner(&self, block: usize) -> BeParams {
        BeParams::new(block, self.delta / 5.0, self.layer_override).expect("validated parameters")
    }

    /// Ascending parents of `v`; every parent is strictly below `v`.
    pub fn parents(&self, v: NodeIndex) -> Result<Vec<NodeIndex>> {
        if v == 0 || v > self.n_nodes {
            return domain(format!("node {v} outside [1, {}]", self.n_nodes));
        }
        let layers = self.layers();
        Ok(self.parents_with(v, |t, x| {
            self.inner(1 << t).parents_unchecked(x + 1, layers)
        }))
    }

    /// Shared body of [`parents`](Self::parents); `bipartite(t, x)` returns the
    /// expander parents of `x + 1` on `2ᵗ` nodes.
    fn parents_with<F>(&self, v: NodeIndex, mut bipartite: F) -> Vec<NodeIndex>
    where
        F: FnMut(u32, usize) -> Vec<NodeIndex>,
    {
        let window = WINDOW * self.log_n();
        let mut out: Vec<NodeIndex> = (v.saturating_sub(window).max(1)..v).collect();
        for t in 1..=ceil_log2(v) {
            let width = 1usize << t;
            let block = v >> t;
            let x = v & (width - 1);
            let reach = block.min(BLOCKS);
            if reach == 0 {
                continue;
            }
            for y in bipartite(t, x) {
                for i in 1..=reach {
                    let u = (block - i) * width + y;
                    if u < v {
                        out.push(u);
                    }
                }
            }
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// `4n + 10·n·min(5^L, N)`, at least 1. Dominates every parent-set size.
    pub fn max_indegree_bound(&self) -> usize {
        let n = self.log_n();
        let fan = 5usize
            .checked_pow(self.layers().min(u32::MAX as usize) as u32)
            .unwrap_or(usize::MAX)
            .min(self.n_nodes);
        (WINDOW * n + BLOCKS * n * fan).max(1)
    }

    /// Materializes the whole graph. Expander parent sets are shared across
    /// nodes with the same offset inside a block.
    pub fn build(&self) -> DagAdjacency {
        let layers = self.layers();
        let mut cache: HashMap<(u32, usize), Vec<NodeIndex>> = HashMap::new();
        let parents = (1..=self.n_nodes)
            .map(|v| {
                self.parents_with(v, |t, x| {
                    cache
                        .entry((t, x))
                        .or_insert_with(|| self.inner(1 << t).parents_unchecked(x + 1, layers))
                        .clone()
                })
            })
            .collect();
        DagAdjacency::new(parents).expect("parents are strictly below their child")
    }

    pub fn stats(&self) -> GraphStats {
        GraphStats::of(&self.build(), self.max_indegree_bound())
    }
}

/// `GetParentsEGS(δ, v, N)` with the certified layer count.
pub fn get_parents_egs(delta: f64, v: NodeIndex, n_nodes: usize) -> Result<Vec<NodeIndex>> {
    EgsParams::new(n_nodes, delta, None)?.parents(v)
}

pub fn max_indegree_bound(delta: f64, n_nodes: usize) -> Result<usize> {
    Ok(EgsParams::new(n_nodes, delta, None)?.max_indegree_bound())
}

/// Summary of a materialized graph.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphStats {
    pub nodes: usize,
    pub edges: usize,
    pub max_indegree: usize,
    pub mean_indegree: f64,
    pub beta: usize,
}

impl GraphStats {
    pub fn of(g: &DagAdjacency, beta: usize) -> Self {
        let edges = g.edge_count();
        GraphStats {
            nodes: g.n(),
            edges,
            max_indegree: g.max_indegree(),
            mean_indegree: if g.n() == 0 {
                0.0
            } else {
                edges as f64 / g.n() as f64
            },
            beta,
        }
    }
}

pub fn graph_stats(params: &EgsParams) -> GraphStats {
    params.stats()
}
