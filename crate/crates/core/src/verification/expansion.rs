use super::{min_set_size, Verdict};
use crate::error::{Error, Result};
use crate::gabber_galil;
use crate::graph::{BipartiteAdjacency, DagAdjacency};
use crate::subsets::{mask_to_nodes, FixedWeight, UnionTable};
use crate::NodeIndex;

/// Largest side size the subset enumerations accept.
pub const MAX_BIPARTITE_NODES: usize = 26;
/// Largest DAG the local-expander check accepts.
pub const MAX_LOCAL_EXPANDER_NODES: usize = 20;

/// Sets `X ⊆ A`, `Y ⊆ B`, both of size `>= δN`, with no edge between them.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BipartiteWitness {
    pub x: Vec<NodeIndex>,
    pub y: Vec<NodeIndex>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Side {
    /// Inputs; neighbors are children.
    A,
    /// Outputs; neighbors are parents.
    B,
}

#[derive(Debug, Clone, PartialEq)]
pub enum NkdWitness {
    /// More than `kN` edges.
    EdgeBudget { edges: usize, limit: usize },
    /// A set whose neighborhood is smaller than `[1 + d(1 - |X|/N)]|X|`.
    Expansion {
        side: Side,
        set: Vec<NodeIndex>,
        neighbors: usize,
        required: f64,
    },
}

/// Windows `[v, v+r-1]` and `[v+r, v+2r-1]` that induce a bipartite graph
/// failing δ-expansion, with the offending sets as node labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocalWitness {
    pub v: NodeIndex,
    pub r: usize,
    pub x: Vec<NodeIndex>,
    pub y: Vec<NodeIndex>,
}

/// A step of the layered neighborhood sequence that grew too slowly.
#[derive(Debug, Clone, PartialEq)]
pub struct GrowthViolation {
    pub start: Vec<NodeIndex>,
    pub step: usize,
    pub size: usize,
    pub next_size: usize,
    pub required: f64,
}

fn guard(n: usize, limit: usize, what: &str) -> Result<()> {
    if n > limit {
        return Err(Error::Refused(format!(
            "{what} on {n} nodes exceeds the enumeration limit of {limit}"
        )));
    }
    Ok(())
}

fn check_delta(delta: f64) -> Result<()> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::Domain(format!("delta {delta} not in (0, 1)")));
    }
    Ok(())
}

/// `masks[i]` has bit `b` set iff input `i + 1` is adjacent to output `b + 1`.
fn child_masks(g: &BipartiteAdjacency) -> Vec<u64> {
    let mut masks = vec![0u64; g.n()];
    for j in 1..=g.n() {
        for &i in g.parents(j) {
            masks[i - 1] |= 1 << (j - 1);
        }
    }
    masks
}

fn parent_masks(g: &BipartiteAdjacency) -> Vec<u64> {
    (1..=g.n())
        .map(|j| g.parents(j).iter().fold(0u64, |acc, &i| acc | 1 << (i - 1)))
        .collect()
}

/// Core of the δ-bipartite test: every `X` of size `⌈δN⌉` must leave fewer
/// than `⌈δN⌉` outputs outside `N(X)`. Returns the first failing `(X, Y)`.
fn delta_bipartite_masks(children: &[u64], delta: f64) -> Option<(u64, u64)> {
    let n = children.len();
    if n == 0 {
        return None;
    }
    let k = min_set_size(delta, n);
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let table = UnionTable::new(children);
    FixedWeight::new(n, k).find_map(|x| {
        let y = full & !table.union(x);
        (y.count_ones() as usize >= k).then_some((x, y))
    })
}

/// Definition-level δ-bipartite test via the neighborhood reduction.
pub fn is_delta_bipartite(g: &BipartiteAdjacency, delta: f64) -> Result<Verdict<BipartiteWitness>> {
    check_delta(delta)?;
    guard(g.n(), MAX_BIPARTITE_NODES, "delta-bipartite check")?;
    Ok(match delta_bipartite_masks(&child_masks(g), delta) {
        None => Verdict::Pass,
        Some((x, y)) => Verdict::Counterexample(BipartiteWitness {
            x: mask_to_nodes(x, 1),
            y: mask_to_nodes(y, 1),
        }),
    })
}

/// `(N, k, d)`-expansion: the edge budget and the neighborhood inequality for
/// every nonempty subset of either side.
pub fn check_nkd_expansion(
    g: &BipartiteAdjacency,
    k: usize,
    d: f64,
) -> Result<Verdict<NkdWitness>> {
    let n = g.n();
    guard(n, MAX_BIPARTITE_NODES, "(N,k,d)-expansion check")?;
    let edges = g.edge_count();
    if edges > k * n {
        return Ok(Verdict::Counterexample(NkdWitness::EdgeBudget {
            edges,
            limit: k * n,
        }));
    }
    for (side, masks) in [(Side::A, child_masks(g)), (Side::B, parent_masks(g))] {
        let table = UnionTable::new(&masks);
        for set in 1..(1u64 << n) {
            let size = set.count_ones() as f64;
            let required = (1.0 + d * (1.0 - size / n as f64)) * size;
            let neighbors = table.union(set).count_ones() as usize;
            if (neighbors as f64) < required - 1e-9 {
                return Ok(Verdict::Counterexample(NkdWitness::Expansion {
                    side,
                    set: mask_to_nodes(set, 1),
                    neighbors,
                    required,
                }));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// δ-local expansion: every pair of adjacent windows `[v, v+r-1]`,
/// `[v+r, v+2r-1]` induces a δ-bipartite expander. Windows are scanned by
/// increasing `r`, then `v`.
pub fn is_delta_local_expander(g: &DagAdjacency, delta: f64) -> Result<Verdict<LocalWitness>> {
    check_delta(delta)?;
    let n = g.n();
    guard(n, MAX_LOCAL_EXPANDER_NODES, "local-expander check")?;
    for r in 1..=n / 2 {
        for v in 1..=n + 1 - 2 * r {
            let out_lo = v + r;
            let mut masks = vec![0u64; r];
            for b in 0..r {
                for &a in g.parents(out_lo + b) {
                    if a >= v && a < out_lo {
                        masks[a - v] |= 1 << b;
                    }
                }
            }
            if let Some((x, y)) = delta_bipartite_masks(&masks, delta) {
                return Ok(Verdict::Counterexample(LocalWitness {
                    v,
                    r,
                    x: mask_to_nodes(x, v),
                    y: mask_to_nodes(y, out_lo),
                }));
            }
        }
    }
    Ok(Verdict::Pass)
}

/// Neighborhood growth on the Gabber–Galil torus: from every `Y⁰` of size
/// `⌈δm²⌉`, `Yⁱ⁺¹ = ⋃ GetParentsGG(Yⁱ)` must satisfy
/// `|Yⁱ⁺¹| >= min{(1-δ)m², (1+dδ)|Yⁱ|}` until it stops growing.
pub fn check_neighborhood_growth(m: usize, delta: f64) -> Result<Verdict<GrowthViolation>> {
    check_delta(delta)?;
    let n = m * m;
    guard(n, MAX_BIPARTITE_NODES, "neighborhood growth check")?;
    let d = gabber_galil::expansion_constant();
    let masks: Vec<u64> = (1..=n)
        .map(|j| {
            gabber_galil::get_parents_gg(m, j)
                .map(|ps| ps.iter().fold(0u64, |acc, &i| acc | 1 << (i - 1)))
        })
        .collect::<Result<_>>()?;
    let table = UnionTable::new(&masks);
    let cap = (1.0 - delta) * n as f64;
    for start in FixedWeight::new(n, min_set_size(delta, n)) {
        let mut cur = start;
        let mut step = 0;
        loop {
            let next = table.union(cur);
            let size = cur.count_ones() as usize;
            let next_size = next.count_ones() as usize;
            let required = cap.min((1.0 + d * delta) * size as f64);
            if (next_size as f64) < required - 1e-9 {
                return Ok(Verdict::Counterexample(GrowthViolation {
                    start: mask_to_nodes(start, 1),
                    step,
                    size,
                    next_size,
                    required,
                }));
            }
            if next == cur {
                break;
            }
            cur = next;
            step += 1;
        }
    }
    Ok(Verdict::Pass)
}
