//! Level-disjoint partitions of graphs.
//!
//! A level partition of a graph describes how one message floods the
//! network in synchronous rounds; a set of same-rooted, pairwise
//! level-disjoint partitions describes several messages broadcast from one
//! source at once, with no vertex receiving two messages in the same round.
//! This crate verifies such sets, bounds them, builds them (one partition
//! by BFS, two by the block characterization), searches for them
//! exhaustively, and turns them into explicit broadcast schedules.

pub mod bounds;
pub mod construct;
pub mod graph;
pub mod io;
pub mod merge;
pub mod partition;
pub mod search;
pub mod sim;

use thiserror::Error;

pub use bounds::{audit, bounds, is_optimal, optimal_height_feasible, Bounds, Feasibility, Optimality};
pub use construct::{
    bfs_partition, compose_components, construct_two_ldps, extend, two_ldps_chordal, two_ldps_odd_cycle,
    BlockWitness, Condition, Obstruction, TwoLdpOutcome,
};
pub use graph::{Graph, GraphError, Vertex};
pub use merge::{extract_certificate, merge_adjust, MergedPair};
pub use partition::{r_of, verify_ldp_set, verify_partition, LdpSet, LdpViolation, LevelPartition, PartitionViolation};
pub use search::{brute_force, SearchOutcome};

use graph::CertificateError;

/// Precondition failures of the partition operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LdpError {
    #[error("vertex {0} out of range")]
    VertexOutOfRange(Vertex),
    #[error("root {0} is not in the subgraph")]
    RootNotInSubgraph(Vertex),
    #[error("subgraph misses the component {component:?} of G - v")]
    ComponentUntouched { component: Vec<Vertex> },
    #[error("input partitions are invalid: {0}")]
    InvalidInput(LdpViolation),
    #[error("constructed partitions failed verification: {0}")]
    SelfCheck(LdpViolation),
    #[error("no parts to compose")]
    NoParts,
    #[error("parts disagree on the root: {expected} vs {found}")]
    MismatchedRoot { expected: Vertex, found: Vertex },
    #[error("parts disagree on the number of partitions: {expected} vs {found}")]
    MismatchedCount { expected: usize, found: usize },
    #[error("vertex {0} is covered by two parts")]
    PartsOverlap(Vertex),
    #[error("vertex {0} is covered by no part")]
    PartsMissVertex(Vertex),
    #[error("input is not a cycle")]
    NotACycle,
    #[error("cycle has even length {0}")]
    EvenCycle(usize),
    #[error("root {0} is not on the cycle")]
    RootNotOnCycle(Vertex),
    #[error("invalid certificate: {0}")]
    InvalidCertificate(CertificateError),
    #[error("graph is not bipartite")]
    NotBipartite,
    #[error("expected {expected} partitions, found {found}")]
    WrongCount { expected: usize, found: usize },
    #[error("paths are not merged")]
    NotMerged,
    #[error("paths are not level-disjoint at vertex {0}")]
    NotLevelDisjoint(Vertex),
    #[error("input is not a path")]
    NotAPath,
    #[error(transparent)]
    Graph(GraphError),
}
