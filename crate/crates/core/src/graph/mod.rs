//! Simple connected undirected graphs over dense vertex ids.
//!
//! Vertices are `0..n`. Every vertex also carries an external label (the
//! integer it had in the input file, or its generator coordinate), and
//! labels are kept strictly increasing so that the lowest-id tie-breaking
//! used throughout the crate agrees with the lowest-label order.

mod blocks;
mod cycles;
mod generate;
mod metrics;

pub use blocks::{block_decomposition, Block, BlockDecomposition, BlockKind};
pub use cycles::{
    cycles_through, find_separating_chordal, find_separating_chordal_capped, odd_cycle_through,
    separates_on_cycle, CertificateError, ChordalCertificate, CyclePath,
};
pub use generate::{generate, GraphFamily};
pub use metrics::{bipartition, distances, eccentricity, girth, local_girth, metrics, Girth, Metrics};

use std::collections::VecDeque;

use thiserror::Error;

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("graph has no vertices")]
    Empty,
    #[error("loop edge at vertex {0}")]
    SelfLoop(u64),
    #[error("duplicate edge {0} {1}")]
    DuplicateEdge(u64, u64),
    #[error("graph is disconnected ({components} components)")]
    Disconnected { components: usize },
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("vertex {0} out of range")]
    VertexOutOfRange(usize),
    #[error("labels must be strictly increasing")]
    UnsortedLabels,
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameters for {family}: {reason}")]
    BadParameter { family: String, reason: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<Vertex>>,
    labels: Vec<u64>,
}

impl Graph {
    /// Builds a graph on `0..n` labelled by its own ids.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        Self::with_labels((0..n as u64).collect(), edges)
    }

    /// Builds a graph whose vertex `i` carries `labels[i]`. Rejects loops,
    /// parallel edges and disconnected inputs.
    pub fn with_labels(labels: Vec<u64>, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let n = labels.len();
        if n == 0 {
            return Err(GraphError::Empty);
        }
        if labels.windows(2).any(|w| w[0] >= w[1]) {
            return Err(GraphError::UnsortedLabels);
        }
        let mut adj = vec![Vec::new(); n];
        for &(u, w) in edges {
            for x in [u, w] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange(x));
                }
            }
            if u == w {
                return Err(GraphError::SelfLoop(labels[u]));
            }
            adj[u].push(w);
            adj[w].push(u);
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|p| p[0] == p[1]) {
                let (a, b) = (u.min(w[0]), u.max(w[0]));
                return Err(GraphError::DuplicateEdge(labels[a], labels[b]));
            }
        }
        let graph = Graph { adj, labels };
        let components = graph.component_count();
        if components > 1 {
            return Err(GraphError::Disconnected { components });
        }
        Ok(graph)
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.adj.len()
    }

    /// Neighbors of `v` in increasing order.
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adj[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: Vertex, w: Vertex) -> bool {
        u < self.adj.len() && self.adj[u].binary_search(&w).is_ok()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        v < self.adj.len()
    }

    /// Edges as `(u, w)` with `u < w`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&w| u < w).map(move |&w| (u, w)))
    }

    pub fn label(&self, v: Vertex) -> u64 {
        self.labels[v]
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn vertex_of_label(&self, label: u64) -> Option<Vertex> {
        self.labels.binary_search(&label).ok()
    }

    fn component_count(&self) -> usize {
        let mut seen = vec![false; self.adj.len()];
        let mut count = 0;
        for s in self.vertices() {
            if !seen[s] {
                count += 1;
                self.flood(s, &mut seen, |_| true);
            }
        }
        count
    }

    /// Marks everything reachable from `start` through vertices accepted by
    /// `allowed` (`start` itself is always visited).
    fn flood(&self, start: Vertex, seen: &mut [bool], allowed: impl Fn(Vertex) -> bool) -> Vec<Vertex> {
        let mut out = vec![start];
        seen[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(x) = queue.pop_front() {
            for &y in &self.adj[x] {
                if !seen[y] && allowed(y) {
                    seen[y] = true;
                    out.push(y);
                    queue.push_back(y);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Vertex sets of the components of `G - v`, ordered by smallest member.
    pub fn components_without(&self, v: Vertex) -> Vec<Vec<Vertex>> {
        let mut seen = vec![false; self.adj.len()];
        seen[v] = true;
        let mut comps = Vec::new();
        for s in self.vertices() {
            if !seen[s] {
                comps.push(self.flood(s, &mut seen, |_| true));
            }
        }
        comps
    }

    /// The subgraph induced by `vertices`, which must induce a connected graph.
    pub fn induced(&self, vertices: &[Vertex]) -> Result<Subgraph, GraphError> {
        let mut parent = vertices.to_vec();
        parent.sort_unstable();
        parent.dedup();
        if let Some(&bad) = parent.iter().find(|&&x| x >= self.adj.len()) {
            return Err(GraphError::VertexOutOfRange(bad));
        }
        let local = |x: Vertex| parent.binary_search(&x).ok();
        let mut edges = Vec::new();
        for (i, &x) in parent.iter().enumerate() {
            for &y in &self.adj[x] {
                if let Some(j) = local(y) {
                    if i < j {
                        edges.push((i, j));
                    }
                }
            }
        }
        let labels = parent.iter().map(|&x| self.labels[x]).collect();
        let graph = Graph::with_labels(labels, &edges)?;
        Ok(Subgraph { graph, parent })
    }

    /// The subgraph formed by exactly the given edges of `self`.
    pub fn edge_subgraph(&self, edges: &[(Vertex, Vertex)]) -> Result<Subgraph, GraphError> {
        let mut parent: Vec<Vertex> = edges.iter().flat_map(|&(u, w)| [u, w]).collect();
        parent.sort_unstable();
        parent.dedup();
        let mut local_edges = Vec::with_capacity(edges.len());
        for &(u, w) in edges {
            if !self.has_edge(u, w) {
                return Err(GraphError::Precondition(format!(
                    "{} {} is not an edge",
                    self.label(u),
                    self.label(w)
                )));
            }
            let i = parent.binary_search(&u).expect("endpoint collected");
            let j = parent.binary_search(&w).expect("endpoint collected");
            local_edges.push((i, j));
        }
        let labels = parent.iter().map(|&x| self.labels[x]).collect();
        let graph = Graph::with_labels(labels, &local_edges)?;
        Ok(Subgraph { graph, parent })
    }
}

/// A graph together with the embedding of its vertices into a parent graph.
#[derive(Debug, Clone)]
pub struct Subgraph {
    pub graph: Graph,
    /// `parent[i]` is the parent id of local vertex `i`; strictly increasing.
    pub parent: Vec<Vertex>,
}

impl Subgraph {
    pub fn to_local(&self, v: Vertex) -> Option<Vertex> {
        self.parent.binary_search(&v).ok()
    }

    pub fn to_parent(&self, v: Vertex) -> Vertex {
        self.parent[v]
    }
}
