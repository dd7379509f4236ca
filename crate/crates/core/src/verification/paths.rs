use crate::graph::DagAdjacency;
use crate::NodeIndex;

/// Number of edges on a longest directed path. Labels are a topological
/// order, so one forward pass suffices.
pub fn longest_path(g: &DagAdjacency) -> usize {
    let alive = vec![true; g.n()];
    forward_depths(g, &alive)
        .into_iter()
        .flatten()
        .max()
        .unwrap_or(0)
}

/// Longest path of `G - removed`.
pub fn longest_path_avoiding(g: &DagAdjacency, removed: &[NodeIndex]) -> usize {
    let mut alive = vec![true; g.n()];
    for &s in removed {
        if (1..=g.n()).contains(&s) {
            alive[s - 1] = false;
        }
    }
    forward_depths(g, &alive)
        .into_iter()
        .flatten()
        .max()
        .unwrap_or(0)
}

/// `depth[v - 1]` is the longest path ending at `v` among live nodes, or
/// `None` when `v` is removed.
pub(crate) fn forward_depths(g: &DagAdjacency, alive: &[bool]) -> Vec<Option<usize>> {
    let mut depth: Vec<Option<usize>> = vec![None; g.n()];
    for v in 0..g.n() {
        if !alive[v] {
            continue;
        }
        let best = g
            .parents(v + 1)
            .iter()
            .filter_map(|&u| depth[u - 1])
            .max()
            .map_or(0, |d| d + 1);
        depth[v] = Some(best);
    }
    depth
}

/// Longest path starting at each live node, using child lists (0-based).
pub(crate) fn backward_depths(children: &[Vec<usize>], alive: &[bool]) -> Vec<Option<usize>> {
    let n = children.len();
    let mut depth: Vec<Option<usize>> = vec![None; n];
    for v in (0..n).rev() {
        if !alive[v] {
            continue;
        }
        let best = children[v]
            .iter()
            .filter_map(|&w| depth[w])
            .max()
            .map_or(0, |d| d + 1);
        depth[v] = Some(best);
    }
    depth
}

/// 0-based child lists.
pub(crate) fn child_lists(g: &DagAdjacency) -> Vec<Vec<usize>> {
    let mut children = vec![Vec::new(); g.n()];
    for (u, v) in g.edges() {
        children[u - 1].push(v - 1);
    }
    children
}

/// Nodes (0-based, ascending) of one longest path among live nodes.
pub(crate) fn a_longest_path(g: &DagAdjacency, depth: &[Option<usize>]) -> Vec<usize> {
    let Some((mut v, mut d)) = depth
        .iter()
        .enumerate()
        .filter_map(|(i, d)| d.map(|d| (i, d)))
        .max_by_key(|&(i, d)| (d, std::cmp::Reverse(i)))
    else {
        return Vec::new();
    };
    let mut path = vec![v];
    while d > 0 {
        let u = g
            .parents(v + 1)
            .iter()
            .map(|&u| u - 1)
            .find(|&u| depth[u] == Some(d - 1))
            .expect("a live parent realizes the depth");
        path.push(u);
        v = u;
        d -= 1;
    }
    path.reverse();
    path
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canned_depths() {
        assert_eq!(longest_path(&DagAdjacency::complete(4)), 3);
        assert_eq!(longest_path(&DagAdjacency::edgeless(5)), 0);
        assert_eq!(longest_path(&DagAdjacency::edgeless(0)), 0);
        assert_eq!(longest_path(&DagAdjacency::path(8)), 7);
        assert_eq!(longest_path_avoiding(&DagAdjacency::path(8), &[4]), 3);
        assert_eq!(
            longest_path_avoiding(&DagAdjacency::complete(4), &[1, 2, 3, 4]),
            0
        );
    }

    #[test]
    fn witness_path_is_a_path() {
        let g = DagAdjacency::new(vec![vec![], vec![1], vec![], vec![2, 3], vec![3]]).unwrap();
        let alive = vec![true; 5];
        let depth = forward_depths(&g, &alive);
        let p = a_longest_path(&g, &depth);
        assert_eq!(p.len(), 3);
        for w in p.windows(2) {
            assert!(g.has_edge(w[0] + 1, w[1] + 1));
        }
        let back = backward_depths(&child_lists(&g), &alive);
        assert_eq!(back[0], Some(2));
        assert_eq!(back[4], Some(0));
    }
}
