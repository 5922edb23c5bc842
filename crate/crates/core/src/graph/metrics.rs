use std::collections::VecDeque;

use super::{Graph, Vertex};

/// Length of a shortest cycle, or the statement that there is none.
///
/// Deliberately not `Ord`: an acyclic graph must never sort below a real
/// cycle length.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Girth {
    Acyclic,
    Length(usize),
}

impl Girth {
    pub fn length(self) -> Option<usize> {
        match self {
            Girth::Acyclic => None,
            Girth::Length(l) => Some(l),
        }
    }

    fn shorter(self, other: Girth) -> Girth {
        match (self, other) {
            (Girth::Length(a), Girth::Length(b)) => Girth::Length(a.min(b)),
            (Girth::Acyclic, x) | (x, Girth::Acyclic) => x,
        }
    }
}

impl std::fmt::Display for Girth {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Girth::Acyclic => f.write_str("none"),
            Girth::Length(l) => write!(f, "{l}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Metrics {
    pub root: Vertex,
    pub distances: Vec<usize>,
    pub eccentricity: usize,
    pub girth: Girth,
    pub local_girth: Girth,
    /// `Some(side)` iff the graph is bipartite; `side[u]` is `true` when `u`
    /// lies in the class not containing the root.
    pub bipartition: Option<Vec<bool>>,
}

pub fn metrics(g: &Graph, v: Vertex) -> Metrics {
    let distances = distances(g, v);
    let eccentricity = distances.iter().copied().max().unwrap_or(0);
    Metrics {
        root: v,
        eccentricity,
        girth: girth(g),
        local_girth: local_girth(g, v),
        bipartition: bipartition(g, v),
        distances,
    }
}

/// Breadth-first distances from `v`.
pub fn distances(g: &Graph, v: Vertex) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.vertex_count()];
    dist[v] = 0;
    let mut queue = VecDeque::from([v]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    dist
}

pub fn eccentricity(g: &Graph, v: Vertex) -> usize {
    distances(g, v).into_iter().max().unwrap_or(0)
}

/// Two-colouring by distance parity from `v`, if one exists.
pub fn bipartition(g: &Graph, v: Vertex) -> Option<Vec<bool>> {
    let dist = distances(g, v);
    let side: Vec<bool> = dist.iter().map(|d| d % 2 == 1).collect();
    g.edges().all(|(a, b)| side[a] != side[b]).then_some(side)
}

/// Shortest cycle length, by a BFS from every vertex.
pub fn girth(g: &Graph) -> Girth {
    let n = g.vertex_count();
    let mut best = Girth::Acyclic;
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for s in g.vertices() {
        dist.fill(usize::MAX);
        parent.fill(usize::MAX);
        dist[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(x) = queue.pop_front() {
            for &y in g.neighbors(x) {
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if parent[x] != y {
                    best = best.shorter(Girth::Length(dist[x] + dist[y] + 1));
                }
            }
        }
    }
    best
}

/// Shortest length of a cycle through `v`.
///
/// Every BFS vertex is tagged with the neighbor of `v` whose subtree holds
/// it; an edge between two subtrees closes a cycle through `v`, and along a
/// shortest `v`-cycle some edge must cross subtrees.
pub fn local_girth(g: &Graph, v: Vertex) -> Girth {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut branch = vec![usize::MAX; n];
    dist[v] = 0;
    let mut queue = VecDeque::new();
    for &x in g.neighbors(v) {
        dist[x] = 1;
        branch[x] = x;
        queue.push_back(x);
    }
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                branch[y] = branch[x];
                queue.push_back(y);
            }
        }
    }
    let mut best = Girth::Acyclic;
    for (a, b) in g.edges() {
        if a != v && b != v && branch[a] != branch[b] {
            best = best.shorter(Girth::Length(dist[a] + dist[b] + 1));
        }
    }
    best
}
