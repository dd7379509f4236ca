use super::paths::longest_path_avoiding;
use super::robustness::{RobustnessMode, RobustnessReport};
use crate::error::{domain, Result};
use crate::graph::DagAdjacency;

/// Outcome of Valiant's depth-reduction attack.
#[derive(Debug, Clone, PartialEq)]
pub struct ValiantReport {
    pub report: RobustnessReport,
    /// Label width `⌈log₂ N⌉`.
    pub bits: usize,
    /// Number of edges whose labels first differ at each bit, indexed by bit.
    pub class_sizes: Vec<usize>,
    /// Bit classes whose edges were cut, ascending.
    pub chosen: Vec<usize>,
    pub indegree: usize,
    /// `N·i·indeg / log₂ N`.
    pub set_bound: f64,
    /// `N / 2^i`.
    pub depth_bound: f64,
}

impl ValiantReport {
    pub fn set_within_bound(&self) -> bool {
        self.report.worst_set.len() as f64 <= self.set_bound + 1e-9
    }

    pub fn depth_within_bound(&self) -> bool {
        self.report.residual_depth as f64 <= self.depth_bound + 1e-9
    }
}

/// Labels node `v` with the `⌈log₂ N⌉`-bit string of `v - 1` and files each
/// edge under the most significant bit where its endpoints differ. Cutting
/// the `i` lightest classes leaves labels that strictly increase on the
/// remaining bits along every path, so depth drops below `2^(bits - i)`.
/// Each cut edge is removed through its head; ties between equally light
/// classes go to the lower bit.
pub fn valiant_reduce(g: &DagAdjacency, i: usize) -> Result<ValiantReport> {
    let n = g.n();
    if i == 0 {
        return domain("attack depth parameter i must be at least 1");
    }
    if n < 2 {
        return domain("attack needs at least two nodes");
    }
    let bits = (usize::BITS - (n - 1).leading_zeros()) as usize;
    let class_of =
        |u: usize, v: usize| (usize::BITS - 1 - ((u - 1) ^ (v - 1)).leading_zeros()) as usize;

    let mut class_sizes = vec![0usize; bits];
    for (u, v) in g.edges() {
        class_sizes[class_of(u, v)] += 1;
    }
    let mut order: Vec<usize> = (0..bits).collect();
    order.sort_by_key(|&b| (class_sizes[b], b));
    let mut chosen: Vec<usize> = order.into_iter().take(i.min(bits)).collect();
    chosen.sort_unstable();

    let mut cut = vec![false; bits];
    for &b in &chosen {
        cut[b] = true;
    }
    let mut heads: Vec<usize> = g
        .edges()
        .filter(|&(u, v)| cut[class_of(u, v)])
        .map(|(_, v)| v)
        .collect();
    heads.sort_unstable();
    heads.dedup();

    let residual_depth = longest_path_avoiding(g, &heads);
    let indegree = g.max_indegree();
    Ok(ValiantReport {
        report: RobustnessReport {
            e: heads.len(),
            worst_set: heads,
            residual_depth,
            mode: RobustnessMode::AttackUpperBound,
        },
        bits,
        class_sizes,
        chosen,
        indegree,
        set_bound: n as f64 * i as f64 * indegree as f64 / (n as f64).log2(),
        depth_bound: n as f64 / 2f64.powi(i.min(i32::MAX as usize) as i32),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::verification::depth_robustness_exact;

    #[test]
    fn path_of_eight() {
        let g = DagAdjacency::path(8);
        let r = valiant_reduce(&g, 1).unwrap();
        assert_eq!(r.class_sizes, vec![4, 2, 1]);
        assert_eq!(r.chosen, vec![2]);
        assert_eq!(r.report.worst_set, vec![5]);
        assert_eq!(r.report.residual_depth, 3);
        assert!(r.depth_within_bound() && r.set_within_bound());
        let r3 = valiant_reduce(&g, 3).unwrap();
        assert!(r3.report.residual_depth <= 1);
    }

    #[test]
    fn large_i_kills_everything() {
        let g = DagAdjacency::complete(16);
        for i in 4..=6 {
            let r = valiant_reduce(&g, i).unwrap();
            assert_eq!(r.report.residual_depth, 0);
            assert!(r.depth_within_bound());
        }
    }

    #[test]
    fn bounds_on_complete_dag() {
        let g = DagAdjacency::complete(32);
        for i in 1..=5 {
            let r = valiant_reduce(&g, i).unwrap();
            assert!(r.set_within_bound(), "i={i}");
            assert!(r.depth_within_bound(), "i={i}");
            assert_eq!(
                longest_path_avoiding(&g, &r.report.worst_set),
                r.report.residual_depth
            );
        }
    }

    #[test]
    fn exact_never_beats_attack() {
        let g = DagAdjacency::path(16);
        for i in 1..=3 {
            let attack = valiant_reduce(&g, i).unwrap();
            let e = attack.report.worst_set.len();
            if e <= 5 {
                let exact = depth_robustness_exact(&g, e).unwrap();
                assert!(exact.residual_depth <= attack.report.residual_depth);
            }
        }
    }

    #[test]
    fn rejects_bad_input() {
        assert!(valiant_reduce(&DagAdjacency::path(8), 0).is_err());
        assert!(valiant_reduce(&DagAdjacency::path(1), 1).is_err());
    }
}
