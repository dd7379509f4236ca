//! Materialized adjacency used by the verification oracles.

use crate::error::{Error, Result};
use crate::NodeIndex;

fn check_list(list: &[NodeIndex], node: NodeIndex, upper: NodeIndex, what: &str) -> Result<()> {
    for w in list.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::Structural(format!(
                "parents of {node} are not strictly ascending"
            )));
        }
    }
    if let Some(&p) = list.first() {
        if p == 0 {
            return Err(Error::Structural(format!("node {node} has parent 0")));
        }
    }
    if let Some(&p) = list.last() {
        if p > upper {
            return Err(Error::Structural(format!(
                "node {node} has parent {p} beyond {what} {upper}"
            )));
        }
    }
    Ok(())
}

/// Bipartite graph `((A, B), E)` with `N` nodes per side. `parents[j - 1]`
/// lists the inputs `i ∈ A` with an edge `(i, j)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteAdjacency {
    parents: Vec<Vec<NodeIndex>>,
}

impl BipartiteAdjacency {
    pub fn new(parents: Vec<Vec<NodeIndex>>) -> Result<Self> {
        let n = parents.len();
        for (j, list) in parents.iter().enumerate() {
            check_list(list, j + 1, n, "side size")?;
        }
        Ok(BipartiteAdjacency { parents })
    }

    /// Builds the graph from a parent function over `[1, n]`.
    pub fn from_fn<F>(n: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(NodeIndex) -> Result<Vec<NodeIndex>>,
    {
        let parents = (1..=n).map(&mut f).collect::<Result<Vec<_>>>()?;
        Self::new(parents)
    }

    pub fn n(&self) -> usize {
        self.parents.len()
    }

    pub fn parents(&self, j: NodeIndex) -> &[NodeIndex] {
        &self.parents[j - 1]
    }

    pub fn edge_count(&self) -> usize {
        self.parents.iter().map(Vec::len).sum()
    }

    pub fn has_edge(&self, i: NodeIndex, j: NodeIndex) -> bool {
        self.parents[j - 1].binary_search(&i).is_ok()
    }

    /// `children[i - 1]` lists the outputs adjacent to input `i`.
    pub fn children(&self) -> Vec<Vec<NodeIndex>> {
        let mut out = vec![Vec::new(); self.n()];
        for (j, list) in self.parents.iter().enumerate() {
            for &i in list {
                out[i - 1].push(j + 1);
            }
        }
        out
    }

    /// Complete bipartite graph `K_{n,n}`.
    pub fn complete(n: usize) -> Self {
        BipartiteAdjacency {
            parents: vec![(1..=n).collect(); n],
        }
    }

    pub fn edgeless(n: usize) -> Self {
        BipartiteAdjacency {
            parents: vec![Vec::new(); n],
        }
    }
}

/// DAG on `[1, N]` whose labels are a topological order: every parent of `v`
/// is strictly smaller than `v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DagAdjacency {
    parents: Vec<Vec<NodeIndex>>,
}

impl DagAdjacency {
    pub fn new(parents: Vec<Vec<NodeIndex>>) -> Result<Self> {
        for (idx, list) in parents.iter().enumerate() {
            let v = idx + 1;
            check_list(list, v, v - 1, "predecessor")?;
        }
        Ok(DagAdjacency { parents })
    }

    pub fn from_fn<F>(n: usize, mut f: F) -> Result<Self>
    where
        F: FnMut(NodeIndex) -> Result<Vec<NodeIndex>>,
    {
        let parents = (1..=n).map(&mut f).collect::<Result<Vec<_>>>()?;
        Self::new(parents)
    }

    /// Directed path `1 → 2 → … → n`.
    pub fn path(n: usize) -> Self {
        DagAdjacency {
            parents: (1..=n)
                .map(|v| if v > 1 { vec![v - 1] } else { Vec::new() })
                .collect(),
        }
    }

    /// Complete DAG `K_n`: every `u < v` is an edge.
    pub fn complete(n: usize) -> Self {
        DagAdjacency {
            parents: (1..=n).map(|v| (1..v).collect()).collect(),
        }
    }

    pub fn edgeless(n: usize) -> Self {
        DagAdjacency {
            parents: vec![Vec::new(); n],
        }
    }

    pub fn n(&self) -> usize {
        self.parents.len()
    }

    pub fn parents(&self, v: NodeIndex) -> &[NodeIndex] {
        &self.parents[v - 1]
    }

    pub fn parent_lists(&self) -> &[Vec<NodeIndex>] {
        &self.parents
    }

    pub fn edge_count(&self) -> usize {
        self.parents.iter().map(Vec::len).sum()
    }

    pub fn max_indegree(&self) -> usize {
        self.parents.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: NodeIndex, v: NodeIndex) -> bool {
        self.parents[v - 1].binary_search(&u).is_ok()
    }

    /// Iterates edges `(u, v)` in order of `v`, then `u`.
    pub fn edges(&self) -> impl Iterator<Item = (NodeIndex, NodeIndex)> + '_ {
        self.parents
            .iter()
            .enumerate()
            .flat_map(|(i, list)| list.iter().map(move |&u| (u, i + 1)))
    }
}
