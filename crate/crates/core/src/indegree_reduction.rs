//! Indegree-2 reduction of `G(δ, N)`.
//!
//! Every base node `v` becomes a path `(v, 1) → … → (v, 2β)`, and the `i`-th
//! smallest base parent `u` of `v` feeds `(v, i)` through the edge
//! `(u, 2β) → (v, i)`. `β` is the deterministic bound
//! [`EgsParams::max_indegree_bound`], so positions past the real indegree simply
//! carry no expander edge.

use crate::egs::EgsParams;
use crate::error::{domain, Result};
use crate::graph::DagAdjacency;
use crate::NodeIndex;

/// Node `(v, i)` of the reduced graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ReducedNode {
    pub v: NodeIndex,
    pub i: usize,
}

impl ReducedNode {
    pub fn new(v: NodeIndex, i: usize) -> Self {
        ReducedNode { v, i }
    }
}

/// `(v - 1)·2β + i`.
pub fn flat_index(node: ReducedNode, beta: usize) -> NodeIndex {
    (node.v - 1) * 2 * beta + node.i
}

/// Inverse of [`flat_index`].
pub fn from_flat_index(z: NodeIndex, beta: usize) -> ReducedNode {
    let len = 2 * beta;
    ReducedNode::new((z - 1) / len + 1, (z - 1) % len + 1)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LowIndegParams {
    base: EgsParams,
}

impl LowIndegParams {
    pub fn new(base: EgsParams) -> Self {
        LowIndegParams { base }
    }

    pub fn base(&self) -> &EgsParams {
        &self.base
    }

    pub fn beta(&self) -> usize {
        self.base.max_indegree_bound()
    }

    /// Length of each per-node path, `2β`.
    pub fn path_len(&self) -> usize {
        2 * self.beta()
    }

    /// `N' = 2Nβ`.
    pub fn n_nodes(&self) -> usize {
        self.base.n_nodes() * self.path_len()
    }

    /// At most two parents, ascending by flat index.
    pub fn parents(&self, node: ReducedNode) -> Result<Vec<ReducedNode>> {
        let len = self.path_len();
        if node.v == 0 || node.v > self.base.n_nodes() || node.i == 0 || node.i > len {
            return domain(format!(
                "node ({}, {}) outside [1, {}] x [1, {len}]",
                node.v,
                node.i,
                self.base.n_nodes()
            ));
        }
        let base = self.base.parents(node.v)?;
        Ok(Self::assemble(node, &base, len))
    }

    fn assemble(node: ReducedNode, base: &[NodeIndex], len: usize) -> Vec<ReducedNode> {
        let mut out = Vec::with_capacity(2);
        if node.i > 1 {
            out.push(ReducedNode::new(node.v, node.i - 1));
        } else if node.v > 1 {
            out.push(ReducedNode::new(node.v - 1, len));
        }
        if let Some(&u) = base.get(node.i - 1) {
            out.push(ReducedNode::new(u, len));
        }
        out.sort_unstable();
        out.dedup();
        out
    }

    /// Materializes the reduced graph over flat indices.
    pub fn build(&self) -> DagAdjacency {
        let base = self.base.build();
        let len = self.path_len();
        let beta = self.beta();
        let mut parents = Vec::with_capacity(self.n_nodes());
        for v in 1..=base.n() {
            for i in 1..=len {
                let mut list: Vec<NodeIndex> =
                    Self::assemble(ReducedNode::new(v, i), base.parents(v), len)
                        .into_iter()
                        .map(|p| flat_index(p, beta))
                        .collect();
                list.sort_unstable();
                parents.push(list);
            }
        }
        DagAdjacency::new(parents).expect("reduced parents precede their child")
    }
}

/// `GetParentsLowIndeg(δ, (v, i), N)` with the certified layer count.
pub fn get_parents_low_indeg(
    delta: f64,
    n_nodes: usize,
    v: NodeIndex,
    i: usize,
) -> Result<Vec<ReducedNode>> {
    LowIndegParams::new(EgsParams::new(n_nodes, delta, None)?).parents(ReducedNode::new(v, i))
}
