//! The Gabber–Galil expander on the m×m torus.
//!
//! Nodes on each side are the pairs `(x, y)` with `0 <= x, y < m`, encoded as
//! integers in `[1, m²]`. The parents of output `j` are the images of `j`
//! under the five permutations `σ0..σ4`, so the graph has at most `5m²` edges.

use crate::error::{domain, Result};
use crate::NodeIndex;

/// Indegree of the construction (number of permutations).
pub const DEGREE: usize = 5;

/// The expansion constant `d = (2 - √3) / 4`.
pub fn expansion_constant() -> f64 {
    (2.0 - 3f64.sqrt()) / 4.0
}

/// A point on the m×m torus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GridPair {
    pub x: usize,
    pub y: usize,
}

impl GridPair {
    pub fn new(x: usize, y: usize) -> Self {
        GridPair { x, y }
    }

    fn check(self, m: usize) -> Result<Self> {
        if m == 0 {
            return domain("torus side m must be positive");
        }
        if self.x >= m || self.y >= m {
            return domain(format!(
                "pair ({}, {}) outside the {m}x{m} torus",
                self.x, self.y
            ));
        }
        Ok(self)
    }
}

/// Side length of the torus together with the derived node count per side.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GgParams {
    m: usize,
}

impl GgParams {
    pub fn new(m: usize) -> Result<Self> {
        if m == 0 {
            return domain("torus side m must be positive");
        }
        Ok(GgParams { m })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Nodes per side, `m²`.
    pub fn n_nodes(&self) -> usize {
        self.m * self.m
    }

    pub fn parents(&self, j: NodeIndex) -> Result<Vec<NodeIndex>> {
        get_parents_gg(self.m, j)
    }
}

/// `x·m + y + 1`.
pub fn pair_to_int(m: usize, p: GridPair) -> Result<NodeIndex> {
    let p = p.check(m)?;
    Ok(p.x * m + p.y + 1)
}

/// Inverse of [`pair_to_int`].
pub fn int_to_pair(m: usize, z: NodeIndex) -> Result<GridPair> {
    check_node(m, z)?;
    Ok(GridPair::new((z - 1) / m, (z - 1) % m))
}

fn check_node(m: usize, z: NodeIndex) -> Result<()> {
    if m == 0 {
        return domain("torus side m must be positive");
    }
    if z == 0 || z > m * m {
        return domain(format!("node {z} outside [1, {}]", m * m));
    }
    Ok(())
}

/// Applies `σk`, with all arithmetic modulo `m`.
pub fn sigma(k: usize, m: usize, p: GridPair) -> Result<GridPair> {
    let GridPair { x, y } = p.check(m)?;
    let q = match k {
        0 => (x, y),
        1 => (x, (x + y) % m),
        2 => (x, (x + y + 1) % m),
        3 => ((x + y) % m, y),
        4 => ((x + y + 1) % m, y),
        _ => return domain(format!("permutation index {k} not in [0, 4]")),
    };
    Ok(GridPair::new(q.0, q.1))
}

/// Unchecked `σk` on integer labels; callers guarantee `1 <= z <= m²`, `k < 5`.
#[inline]
pub(crate) fn sigma_int(k: usize, m: usize, z: NodeIndex) -> NodeIndex {
    let (x, y) = ((z - 1) / m, (z - 1) % m);
    let (x, y) = match k {
        0 => (x, y),
        1 => (x, (x + y) % m),
        2 => (x, (x + y + 1) % m),
        3 => ((x + y) % m, y),
        _ => ((x + y + 1) % m, y),
    };
    x * m + y + 1
}

/// Parents of output `j`: the deduplicated, ascending images `{σ'0(j), …, σ'4(j)}`.
pub fn get_parents_gg(m: usize, j: NodeIndex) -> Result<Vec<NodeIndex>> {
    check_node(m, j)?;
    let mut out: Vec<NodeIndex> = (0..DEGREE).map(|k| sigma_int(k, m, j)).collect();
    out.sort_unstable();
    out.dedup();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pair_encoding() {
        assert_eq!(pair_to_int(2, GridPair::new(0, 0)).unwrap(), 1);
        assert_eq!(pair_to_int(2, GridPair::new(1, 1)).unwrap(), 4);
        assert_eq!(pair_to_int(5, GridPair::new(3, 2)).unwrap(), 18);
        assert_eq!(int_to_pair(2, 3).unwrap(), GridPair::new(1, 0));
        assert_eq!(int_to_pair(5, 18).unwrap(), GridPair::new(3, 2));
        assert_eq!(int_to_pair(1, 1).unwrap(), GridPair::new(0, 0));
    }

    #[test]
    fn encoding_rejects_out_of_range() {
        assert!(pair_to_int(2, GridPair::new(2, 0)).is_err());
        assert!(pair_to_int(0, GridPair::new(0, 0)).is_err());
        assert!(int_to_pair(2, 0).is_err());
        assert!(int_to_pair(2, 5).is_err());
    }

    #[test]
    fn permutations() {
        assert_eq!(
            sigma(0, 7, GridPair::new(3, 4)).unwrap(),
            GridPair::new(3, 4)
        );
        assert_eq!(
            sigma(1, 2, GridPair::new(1, 1)).unwrap(),
            GridPair::new(1, 0)
        );
        assert_eq!(
            sigma(4, 2, GridPair::new(0, 0)).unwrap(),
            GridPair::new(1, 0)
        );
        assert!(sigma(5, 2, GridPair::new(0, 0)).is_err());
    }

    #[test]
    fn sigma_int_agrees_with_pairs() {
        for m in 1..=9 {
            for z in 1..=m * m {
                for k in 0..DEGREE {
                    let p = sigma(k, m, int_to_pair(m, z).unwrap()).unwrap();
                    assert_eq!(sigma_int(k, m, z), pair_to_int(m, p).unwrap());
                }
            }
        }
    }

    #[test]
    fn parents_small_tori() {
        assert_eq!(get_parents_gg(2, 1).unwrap(), vec![1, 2, 3]);
        assert_eq!(get_parents_gg(2, 4).unwrap(), vec![2, 3, 4]);
        assert_eq!(get_parents_gg(1, 1).unwrap(), vec![1]);
        assert!(get_parents_gg(2, 5).is_err());
    }

    #[test]
    fn bijection_and_permutation_up_to_64() {
        for m in 1..=64usize {
            let n = m * m;
            for z in 1..=n {
                assert_eq!(pair_to_int(m, int_to_pair(m, z).unwrap()).unwrap(), z);
            }
            for k in 0..DEGREE {
                let mut hit = vec![false; n + 1];
                for z in 1..=n {
                    hit[sigma_int(k, m, z)] = true;
                }
                assert_eq!(hit.iter().filter(|&&h| h).count(), n, "sigma_{k} on m={m}");
            }
        }
    }

    #[test]
    fn edge_budget_up_to_64() {
        for m in 1..=64usize {
            let edges: usize = (1..=m * m)
                .map(|j| get_parents_gg(m, j).unwrap().len())
                .sum();
            assert!(edges <= DEGREE * m * m);
        }
    }
}
