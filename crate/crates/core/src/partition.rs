//! Level partitions, level-disjoint sets of them, and their verifiers.

use std::collections::BTreeSet;
use std::fmt;

use crate::graph::{Graph, Vertex};

/// An ordered partition `(S_0, ..., S_h)` of the vertex set in which every
/// vertex of `S_i` (for `i >= 1`) has a neighbor in `S_{i-1}`.
///
/// Each level is kept sorted. Levels are required to be non-empty: an empty
/// level would force every later level to be empty as well.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LevelPartition {
    levels: Vec<Vec<Vertex>>,
}

impl LevelPartition {
    pub fn new(levels: Vec<Vec<Vertex>>) -> Self {
        let mut levels = levels;
        for level in &mut levels {
            level.sort_unstable();
        }
        LevelPartition { levels }
    }

    /// Builds a partition from a per-vertex level assignment.
    pub fn from_levels(level_of: &[usize]) -> Self {
        let height = level_of.iter().copied().max().unwrap_or(0);
        let mut levels = vec![Vec::new(); height + 1];
        for (u, &l) in level_of.iter().enumerate() {
            levels[l].push(u);
        }
        LevelPartition { levels }
    }

    /// A partition whose levels are the vertices of `order`, one per level.
    pub fn chain(order: &[Vertex]) -> Self {
        LevelPartition { levels: order.iter().map(|&x| vec![x]).collect() }
    }

    pub fn levels(&self) -> &[Vec<Vertex>] {
        &self.levels
    }

    pub fn level(&self, i: usize) -> &[Vertex] {
        self.levels.get(i).map_or(&[], Vec::as_slice)
    }

    /// Number of levels minus one.
    pub fn height(&self) -> usize {
        self.levels.len().saturating_sub(1)
    }

    /// The root when the starting level is a singleton.
    pub fn root(&self) -> Option<Vertex> {
        match self.levels.first().map(Vec::as_slice) {
            Some(&[v]) => Some(v),
            _ => None,
        }
    }

    /// Level of `u`, by linear scan.
    pub fn level_of(&self, u: Vertex) -> Option<usize> {
        self.levels.iter().position(|l| l.binary_search(&u).is_ok())
    }

    /// Per-vertex levels for a partition of `0..n`; `None` for absent vertices.
    pub fn level_table(&self, n: usize) -> Vec<Option<usize>> {
        let mut table = vec![None; n];
        for (i, level) in self.levels.iter().enumerate() {
            for &u in level {
                if u < n {
                    table[u] = Some(i);
                }
            }
        }
        table
    }

    pub fn vertex_count(&self) -> usize {
        self.levels.iter().map(Vec::len).sum()
    }

    pub fn map_vertices(&self, f: impl Fn(Vertex) -> Vertex) -> Self {
        LevelPartition::new(self.levels.iter().map(|l| l.iter().map(|&x| f(x)).collect()).collect())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PartitionViolation {
    NoLevels,
    VertexOutOfRange { vertex: Vertex },
    EmptyLevel { level: usize },
    RepeatedVertex { vertex: Vertex },
    MissingVertex { vertex: Vertex },
    /// `vertex` sits in `level` without a neighbor one level below.
    NoPredecessor { vertex: Vertex, level: usize },
}

impl fmt::Display for PartitionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NoLevels => f.write_str("partition has no levels"),
            Self::VertexOutOfRange { vertex } => write!(f, "vertex {vertex} is not in the graph"),
            Self::EmptyLevel { level } => write!(f, "level {level} is empty"),
            Self::RepeatedVertex { vertex } => write!(f, "vertex {vertex} appears more than once"),
            Self::MissingVertex { vertex } => write!(f, "vertex {vertex} is missing"),
            Self::NoPredecessor { vertex, level } => {
                write!(f, "vertex {vertex} in level {level} has no neighbor in level {}", level - 1)
            }
        }
    }
}

/// Checks that `s` partitions `V(G)` into non-empty levels, each vertex of
/// level `i >= 1` having a neighbor in level `i - 1`. Multi-vertex starting
/// levels are accepted. Reports the first offence in level order.
pub fn verify_partition(g: &Graph, s: &LevelPartition) -> Result<(), PartitionViolation> {
    let n = g.vertex_count();
    if s.levels.is_empty() {
        return Err(PartitionViolation::NoLevels);
    }
    let mut level_of = vec![usize::MAX; n];
    for (i, level) in s.levels.iter().enumerate() {
        if level.is_empty() {
            return Err(PartitionViolation::EmptyLevel { level: i });
        }
        for &u in level {
            if u >= n {
                return Err(PartitionViolation::VertexOutOfRange { vertex: u });
            }
            if level_of[u] != usize::MAX {
                return Err(PartitionViolation::RepeatedVertex { vertex: u });
            }
            level_of[u] = i;
        }
    }
    if let Some(u) = (0..n).find(|&u| level_of[u] == usize::MAX) {
        return Err(PartitionViolation::MissingVertex { vertex: u });
    }
    for (i, level) in s.levels.iter().enumerate().skip(1) {
        for &u in level {
            if !g.neighbors(u).iter().any(|&w| level_of[w] == i - 1) {
                return Err(PartitionViolation::NoPredecessor { vertex: u, level: i });
            }
        }
    }
    Ok(())
}

/// `k` level partitions sharing the singleton root level `{root}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LdpSet {
    pub root: Vertex,
    pub partitions: Vec<LevelPartition>,
}

impl LdpSet {
    pub fn new(root: Vertex, partitions: Vec<LevelPartition>) -> Self {
        LdpSet { root, partitions }
    }

    pub fn k(&self) -> usize {
        self.partitions.len()
    }

    pub fn max_height(&self) -> usize {
        self.partitions.iter().map(LevelPartition::height).max().unwrap_or(0)
    }

    /// `R(u)`: the levels at which `u` occurs in any member.
    pub fn r_of(&self, u: Vertex) -> BTreeSet<usize> {
        self.partitions.iter().filter_map(|s| s.level_of(u)).collect()
    }

    /// `tables[i][u]` is the level of `u` in member `i`.
    pub fn level_tables(&self, n: usize) -> Vec<Vec<Option<usize>>> {
        self.partitions.iter().map(|s| s.level_table(n)).collect()
    }

    pub fn map_vertices(&self, f: impl Fn(Vertex) -> Vertex) -> Self {
        LdpSet {
            root: f(self.root),
            partitions: self.partitions.iter().map(|s| s.map_vertices(&f)).collect(),
        }
    }

    /// Restriction to the vertex set `keep` (which must contain the root),
    /// dropping levels that become empty at the top.
    pub fn restrict(&self, keep: impl Fn(Vertex) -> bool) -> Self {
        let partitions = self
            .partitions
            .iter()
            .map(|s| {
                let mut levels: Vec<Vec<Vertex>> =
                    s.levels.iter().map(|l| l.iter().copied().filter(|&x| keep(x)).collect()).collect();
                while levels.len() > 1 && levels.last().is_some_and(Vec::is_empty) {
                    levels.pop();
                }
                LevelPartition { levels }
            })
            .collect();
        LdpSet { root: self.root, partitions }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LdpViolation {
    NoPartitions,
    RootOutOfRange { root: Vertex },
    Partition { index: usize, violation: PartitionViolation },
    /// Member `index` does not start with the singleton `{root}`.
    NotRooted { index: usize },
    /// `vertex` sits in `level` of both members `first` and `second`.
    LevelClash { level: usize, vertex: Vertex, first: usize, second: usize },
    /// `|R(vertex)| != k` although no clash was found.
    LevelCount { vertex: Vertex, count: usize },
}

impl fmt::Display for LdpViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::NoPartitions => f.write_str("no partitions"),
            Self::RootOutOfRange { root } => write!(f, "root {root} is not in the graph"),
            Self::Partition { index, violation } => write!(f, "partition {}: {violation}", index + 1),
            Self::NotRooted { index } => write!(f, "partition {} is not rooted at the common root", index + 1),
            Self::LevelClash { level, vertex, first, second } => write!(
                f,
                "vertex {vertex} is in level {level} of partitions {} and {}",
                first + 1,
                second + 1
            ),
            Self::LevelCount { vertex, count } => write!(f, "vertex {vertex} occurs in {count} distinct levels"),
        }
    }
}

/// Checks every member, the common singleton root, pairwise
/// level-disjointness above level 0, and cross-checks `|R(u)| = k` for every
/// non-root vertex.
pub fn verify_ldp_set(g: &Graph, set: &LdpSet) -> Result<(), LdpViolation> {
    let n = g.vertex_count();
    if set.partitions.is_empty() {
        return Err(LdpViolation::NoPartitions);
    }
    if set.root >= n {
        return Err(LdpViolation::RootOutOfRange { root: set.root });
    }
    for (index, s) in set.partitions.iter().enumerate() {
        verify_partition(g, s).map_err(|violation| LdpViolation::Partition { index, violation })?;
        if s.root() != Some(set.root) {
            return Err(LdpViolation::NotRooted { index });
        }
    }
    let tables = set.level_tables(n);
    let max_height = set.max_height();
    // owner[l] = member holding u at level l, scanning u by u
    let mut owner = vec![usize::MAX; max_height + 1];
    let mut first_clash: Option<LdpViolation> = None;
    for u in (0..n).filter(|&u| u != set.root) {
        owner.fill(usize::MAX);
        for (i, table) in tables.iter().enumerate() {
            let l = table[u].expect("verified partition covers every vertex");
            if owner[l] != usize::MAX {
                let clash = LdpViolation::LevelClash { level: l, vertex: u, first: owner[l], second: i };
                let earlier = match &first_clash {
                    None => true,
                    Some(LdpViolation::LevelClash { level, vertex, .. }) => (l, u) < (*level, *vertex),
                    Some(_) => false,
                };
                if earlier {
                    first_clash = Some(clash);
                }
                continue;
            }
            owner[l] = i;
        }
    }
    if let Some(clash) = first_clash {
        return Err(clash);
    }
    let k = set.k();
    for u in (0..n).filter(|&u| u != set.root) {
        let count = tables.iter().map(|t| t[u]).collect::<BTreeSet<_>>().len();
        if count != k {
            return Err(LdpViolation::LevelCount { vertex: u, count });
        }
    }
    Ok(())
}

/// `R(u)` as a sorted list.
pub fn r_of(set: &LdpSet, u: Vertex) -> Vec<usize> {
    set.r_of(u).into_iter().collect()
}
