//! Text formats: edge lists, LDP JSON documents, broadcast traces, and DOT.

mod dot;
mod edgelist;
mod json;
mod trace;

pub use dot::{graph_dot, partition_dot, set_dot, trace_step_dot};
pub use edgelist::{parse_graph, write_edge_list};
pub use json::{parse_ldp_json, write_ldp_json, LdpDocument};
pub use trace::{parse_trace, write_trace};

use thiserror::Error;

use crate::graph::GraphError;
use crate::partition::LdpViolation;

#[derive(Debug, Error)]
pub enum IoError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("malformed JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("unknown vertex label {0}")]
    UnknownLabel(u64),
    #[error("LDP document does not verify: {0}")]
    Invalid(LdpViolation),
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
}
