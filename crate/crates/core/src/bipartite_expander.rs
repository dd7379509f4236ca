//! δ-bipartite expanders from the Gabber–Galil graph.
//!
//! Layering stacks `i` copies of the torus expander and collapses the
//! intermediate layers: the parents of `j` in `G_m^i` are every node reachable
//! from `j` by a word of exactly `i` permutations. Because `σ0` is the
//! identity, that is the ball of radius `i` around `j`, which is evaluated by
//! breadth-first expansion rather than the exponential recursion.
//!
//! Truncation embeds side length `N` into the smallest square torus
//! `m(N)² >= N` built for `δ/2`, then intersects parent sets with `[N]`.

use std::collections::HashSet;

use crate::error::{domain, Result};
use crate::gabber_galil::{self, expansion_constant, DEGREE};
use crate::NodeIndex;

/// Tori up to this many nodes use a dense visited table.
const DENSE_LIMIT: usize = 1 << 16;

/// Layers after which `G_m^i` is a δ-bipartite expander:
/// `⌈ln((1-δ)/δ) / ln(1 + dδ)⌉ + 1`.
pub fn layer_count(delta: f64) -> Result<usize> {
    if !(delta > 0.0 && delta < 1.0) {
        return domain(format!("delta {delta} not in (0, 1)"));
    }
    let d = expansion_constant();
    let ratio = ((1.0 - delta) / delta).ln() / (d * delta).ln_1p();
    // ratio < 0 for delta > 1/2: one layer already suffices
    Ok(ratio.ceil().max(0.0) as usize + 1)
}

/// Smallest `m` with `m² >= n`.
pub fn m_of(n: usize) -> usize {
    let r = n.isqrt();
    if r * r < n {
        r + 1
    } else {
        r
    }
}

/// Parents of `j` in the `layers`-fold layered graph on the m×m torus,
/// ascending.
pub fn get_parents_layered(m: usize, layers: usize, j: NodeIndex) -> Result<Vec<NodeIndex>> {
    if m == 0 {
        return domain("torus side m must be positive");
    }
    if layers == 0 {
        return domain("layer count must be positive");
    }
    if j == 0 || j > m * m {
        return domain(format!("node {j} outside [1, {}]", m * m));
    }
    Ok(layered_closure(m, layers, j))
}

/// Breadth-first ball of radius `layers` around `j` under `σ0..σ4`.
///
/// Stops early once the ball is a fixed point (empty frontier) or covers the
/// whole torus.
pub(crate) fn layered_closure(m: usize, layers: usize, j: NodeIndex) -> Vec<NodeIndex> {
    let total = m * m;
    if total <= DENSE_LIMIT {
        let mut seen = vec![false; total + 1];
        seen[j] = true;
        let mut out = vec![j];
        let mut frontier = vec![j];
        let mut next = Vec::new();
        for _ in 0..layers {
            if frontier.is_empty() || out.len() == total {
                break;
            }
            for &z in &frontier {
                for k in 1..DEGREE {
                    let w = gabber_galil::sigma_int(k, m, z);
                    if !seen[w] {
                        seen[w] = true;
                        out.push(w);
                        next.push(w);
                    }
                }
            }
            std::mem::swap(&mut frontier, &mut next);
            next.clear();
        }
        out.sort_unstable();
        out
    } else {
        let mut seen: HashSet<NodeIndex> = HashSet::new();
        seen.insert(j);
        let mut frontier = vec![j];
        let mut next = Vec::new();
        for _ in 0..layers {
            if frontier.is_empty() || seen.len() == total {
                break;
            }
            for &z in &frontier {
                for k in 1..DEGREE {
                    let w = gabber_galil::sigma_int(k, m, z);
                    if seen.insert(w) {
                        next.push(w);
                    }
                }
            }
            std::mem::swap(&mut frontier, &mut next);
            next.clear();
        }
        let mut out: Vec<NodeIndex> = seen.into_iter().collect();
        out.sort_unstable();
        out
    }
}

/// Union of the Gabber–Galil parents of every node in `set`, ascending.
pub fn gg_parent_neighborhood(m: usize, set: &[NodeIndex]) -> Result<Vec<NodeIndex>> {
    let mut out = Vec::with_capacity(set.len() * DEGREE);
    for &j in set {
        out.extend(gabber_galil::get_parents_gg(m, j)?);
    }
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

/// Parameters of the truncated expander `H_{N,δ}`.
///
/// With no override the layer count is the certified `L_{δ/2}`. An override
/// yields a graph with the same shape but no expansion guarantee.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BeParams {
    n_nodes: usize,
    delta: f64,
    layer_override: Option<usize>,
}

impl BeParams {
    pub fn new(n_nodes: usize, delta: f64, layer_override: Option<usize>) -> Result<Self> {
        if n_nodes == 0 {
            return domain("side length N must be positive");
        }
        if !(delta > 0.0 && delta < 1.0) {
            return domain(format!("delta {delta} not in (0, 1)"));
        }
        if layer_override == Some(0) {
            return domain("layer override must be positive");
        }
        Ok(BeParams {
            n_nodes,
            delta,
            layer_override,
        })
    }

    pub fn n_nodes(&self) -> usize {
        self.n_nodes
    }

    pub fn delta(&self) -> f64 {
        self.delta
    }

    pub fn layer_override(&self) -> Option<usize> {
        self.layer_override
    }

    /// True when the layer count is the one the expansion proof prescribes.
    pub fn is_certified(&self) -> bool {
        self.layer_override.is_none()
    }

    /// Side of the torus the graph is truncated from.
    pub fn m(&self) -> usize {
        m_of(self.n_nodes)
    }

    /// Layers actually used: the override, or `L_{δ/2}`.
    pub fn layers(&self) -> usize {
        match self.layer_override {
            Some(l) => l,
            None => layer_count(self.delta / 2.0).expect("delta/2 lies in (0, 1/2)"),
        }
    }

    pub fn parents(&self, j: NodeIndex) -> Result<Vec<NodeIndex>> {
        if j == 0 || j > self.n_nodes {
            return domain(format!("node {j} outside [1, {}]", self.n_nodes));
        }
        Ok(self.parents_unchecked(j, self.layers()))
    }

    pub(crate) fn parents_unchecked(&self, j: NodeIndex, layers: usize) -> Vec<NodeIndex> {
        let mut out = layered_closure(self.m(), layers, j);
        out.retain(|&i| i <= self.n_nodes);
        out
    }
}

/// `[N] ∩ GetParentsLayered^{L_{δ/2}}(m(N), j)`.
pub fn get_parents_be(n_nodes: usize, delta: f64, j: NodeIndex) -> Result<Vec<NodeIndex>> {
    BeParams::new(n_nodes, delta, None)?.parents(j)
}
