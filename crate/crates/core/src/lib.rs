//! Explicit, locally navigable depth-robust graphs.
//!
//! The construction is built bottom-up:
//!
//! * [`gabber_galil`]: the five-permutation (m², 5, d)-expander on the m×m torus.
//! * [`bipartite_expander`]: layering that amplifies it into a δ-bipartite
//!   expander, and truncation to an arbitrary side length.
//! * [`egs`]: the δ-local-expander DAG on N = 2ⁿ nodes and the ε → δ map for
//!   extreme depth-robustness.
//! * [`indegree_reduction`]: the indegree-2 path gadget.
//! * [`verification`]: exact brute-force oracles for every combinatorial
//!   property the constructions promise, plus Valiant's depth-reduction attack.
//!
//! Every parent function is a pure function of its arguments; nothing is
//! materialized unless a caller asks for a whole graph.

pub mod bipartite_expander;
pub mod egs;
pub mod error;
pub mod gabber_galil;
pub mod graph;
pub mod indegree_reduction;
pub mod subsets;
pub mod verification;

pub use error::{Error, Result};

/// 1-based node label.
pub type NodeIndex = usize;
