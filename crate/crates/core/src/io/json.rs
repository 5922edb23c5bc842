use serde::{Deserialize, Serialize};

use super::IoError;
use crate::graph::Graph;
use crate::partition::{verify_ldp_set, LdpSet, LevelPartition};

/// `{"root": id, "partitions": [[[ids..], ..], ..]}` with vertex labels;
/// level index is the array position.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LdpDocument {
    pub root: u64,
    pub partitions: Vec<Vec<Vec<u64>>>,
}

impl LdpDocument {
    pub fn from_set(g: &Graph, set: &LdpSet) -> Self {
        let partitions = set
            .partitions
            .iter()
            .map(|s| {
                s.levels()
                    .iter()
                    .map(|level| {
                        let mut ids: Vec<u64> = level.iter().map(|&u| g.label(u)).collect();
                        ids.sort_unstable();
                        ids
                    })
                    .collect()
            })
            .collect();
        LdpDocument { root: g.label(set.root), partitions }
    }

    /// Maps labels to vertices without verifying.
    pub fn to_set(&self, g: &Graph) -> Result<LdpSet, IoError> {
        let id = |l: u64| g.vertex_of_label(l).ok_or(IoError::UnknownLabel(l));
        let partitions = self
            .partitions
            .iter()
            .map(|levels| {
                levels
                    .iter()
                    .map(|level| level.iter().map(|&l| id(l)).collect::<Result<Vec<_>, _>>())
                    .collect::<Result<Vec<_>, _>>()
                    .map(LevelPartition::new)
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(LdpSet::new(id(self.root)?, partitions))
    }
}

/// Reads and verifies an LDP document against `g`.
pub fn parse_ldp_json(g: &Graph, text: &str) -> Result<LdpSet, IoError> {
    let doc: LdpDocument = serde_json::from_str(text)?;
    let set = doc.to_set(g)?;
    verify_ldp_set(g, &set).map_err(IoError::Invalid)?;
    Ok(set)
}

pub fn write_ldp_json(g: &Graph, set: &LdpSet) -> String {
    serde_json::to_string(&LdpDocument::from_set(g, set)).expect("document serializes")
}
