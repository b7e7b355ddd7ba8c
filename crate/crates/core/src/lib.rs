//! Exact domination, independent domination, and a certified conversion from
//! minimum dominating sets to small independent dominating sets in connected
//! regular graphs.
//!
//! The crate is organised bottom-up:
//!
//! * [`set`] and [`graph`]: bitset vertex sets and immutable graphs, plus the
//!   structural predicates (connectivity, regularity, `K_{k,k}` recognition).
//! * [`graph6`]: bit-exact graph6 reading and writing.
//! * [`solve`]: branch-and-bound solvers for `γ(G)`, `i(G)` and maximum
//!   independent sets, each returning a [`SolveCertificate`].
//! * [`proof`]: the dominating-to-independent-dominating construction with its
//!   integer bound chain, the extremal-structure audit and the ratio checks.
//! * [`generate`]: isomorph-free enumeration of connected regular graphs,
//!   exhaustive small-graph enumeration and pairing-model sampling.

pub mod canon;
pub mod generate;
pub mod graph;
pub mod graph6;
pub mod proof;
pub mod set;
pub mod solve;

pub use graph::{Graph, GraphClass};
pub use graph6::{encode_graph6, parse_graph6, read_graph6};
pub use set::{VertexSet, MAX_VERTICES};
pub use solve::{SolveCertificate, SolveKind};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("malformed graph6: {0}")]
    MalformedGraph6(String),
    #[error("graph has {0} vertices, more than the supported {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("graph must have at least one vertex")]
    EmptyGraph,
    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),
    #[error("vertex {0} is out of range")]
    OutOfRange(usize),
    #[error("vertex set is empty")]
    EmptySet,
}
