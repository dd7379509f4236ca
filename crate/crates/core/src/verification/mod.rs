//! Exact oracles for the combinatorial guarantees of the constructions.
//!
//! The exhaustive checkers enumerate subsets as bitmasks and refuse inputs
//! beyond their guards instead of sampling. When a check fails, the returned
//! witness is the first one in enumeration order, so results are
//! deterministic.

mod attack;
mod expansion;
mod gamma;
mod paths;
mod robustness;

pub use attack::{valiant_reduce, ValiantReport};
pub use expansion::{
    check_neighborhood_growth, check_nkd_expansion, is_delta_bipartite, is_delta_local_expander,
    BipartiteWitness, GrowthViolation, LocalWitness, NkdWitness, Side, MAX_BIPARTITE_NODES,
    MAX_LOCAL_EXPANDER_NODES,
};
pub use gamma::{count_gamma_good, gamma_good};
pub use paths::{longest_path, longest_path_avoiding};
pub use robustness::{
    depth_robustness_exact, required_depth, RobustnessMode, RobustnessReport, MAX_EXACT_BRANCHES,
    MAX_EXACT_BUDGET,
};

/// Outcome of an exhaustive check.
#[derive(Debug, Clone, PartialEq)]
pub enum Verdict<W> {
    Pass,
    Counterexample(W),
}

impl<W> Verdict<W> {
    pub fn is_pass(&self) -> bool {
        matches!(self, Verdict::Pass)
    }

    pub fn counterexample(&self) -> Option<&W> {
        match self {
            Verdict::Pass => None,
            Verdict::Counterexample(w) => Some(w),
        }
    }
}

/// Smallest integer set size `>= delta * n`.
///
/// A tolerance absorbs products such as `0.1 * 30` that land a hair above an
/// integer.
pub fn min_set_size(delta: f64, n: usize) -> usize {
    let raw = delta * n as f64;
    ((raw - 1e-9).ceil().max(0.0) as usize).max(1).min(n.max(1))
}
