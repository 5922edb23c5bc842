//! Necessary conditions on same-rooted level-disjoint partitions: the degree
//! bound on their number, per-vertex level floors, the height floor, and the
//! eccentricity/local-girth test for optimal height.

use serde::Serialize;

use crate::graph::{bipartition, distances, metrics, Graph, Metrics, Vertex};
use crate::partition::LdpSet;

/// Bounds for `k` partitions rooted at `root`, computed from graph metrics
/// alone.
#[derive(Debug, Clone, Serialize)]
pub struct Bounds {
    pub root: Vertex,
    pub k: usize,
    /// Upper bound on the number of partitions: `deg(root)`.
    pub max_count: usize,
    pub eccentricity: usize,
    pub bipartite: bool,
    /// Lower bound on the maximum member height.
    pub height_floor: usize,
    #[serde(skip)]
    distances: Vec<usize>,
}

impl Bounds {
    /// Smallest admissible value of `min R(u)`.
    pub fn min_level_floor(&self, u: Vertex) -> usize {
        self.distances[u]
    }

    /// Smallest admissible value of `max R(u)`.
    pub fn max_level_floor(&self, u: Vertex) -> usize {
        self.distances[u] + self.spread()
    }

    /// How far above its distance a vertex's highest level must reach.
    fn spread(&self) -> usize {
        if self.bipartite {
            2 * self.k - 2
        } else {
            self.k - 1
        }
    }

    pub fn distance(&self, u: Vertex) -> usize {
        self.distances[u]
    }
}

/// # Panics
/// If `k == 0`.
pub fn bounds(g: &Graph, v: Vertex, k: usize) -> Bounds {
    assert!(k >= 1, "bounds need k >= 1");
    let m = distances(g, v);
    let eccentricity = m.iter().copied().max().unwrap_or(0);
    let bipartite = bipartition(g, v).is_some();
    let spread = if bipartite { 2 * k - 2 } else { k - 1 };
    Bounds {
        root: v,
        k,
        max_count: g.degree(v),
        eccentricity,
        bipartite,
        height_floor: eccentricity + spread,
        distances: m,
    }
}

/// Outcome of the eccentricity/local-girth test for optimal height.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Feasibility {
    /// The necessary condition holds; optimal height is not ruled out.
    Feasible { eccentricity: usize, local_girth: Option<usize>, bipartite: bool },
    /// `ecc(v) < s' - 2` (non-bipartite) or `ecc(v) < s' - 3` (bipartite), where
    /// `s'` is the local girth; `local_girth: None` means no cycle passes
    /// through the root at all.
    Infeasible { eccentricity: usize, local_girth: Option<usize>, bipartite: bool },
}

impl Feasibility {
    pub fn is_feasible(&self) -> bool {
        matches!(self, Feasibility::Feasible { .. })
    }
}

/// Necessary condition for `k >= 2` `v`-rooted partitions of optimal height.
///
/// A first-level neighbor `u` of the root sits at a second level `l_2` in
/// another member; the member's chain to `u` plus the edge `uv` is a
/// `v`-cycle, so `l_2 >= s' - 1`.
pub fn optimal_height_feasible(g: &Graph, v: Vertex, k: usize) -> Feasibility {
    assert!(k >= 2, "optimal height test needs k >= 2");
    let Metrics { eccentricity, local_girth, bipartition, .. } = metrics(g, v);
    let bipartite = bipartition.is_some();
    let local_girth = local_girth.length();
    let infeasible = match local_girth {
        None => true,
        Some(s) if bipartite => eccentricity + 3 < s,
        Some(s) => eccentricity + 2 < s,
    };
    if infeasible {
        Feasibility::Infeasible { eccentricity, local_girth, bipartite }
    } else {
        Feasibility::Feasible { eccentricity, local_girth, bipartite }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Optimality {
    pub count_optimal: bool,
    pub height_optimal: bool,
}

/// Whether `set` reaches the degree bound and the height floor.
pub fn is_optimal(set: &LdpSet, g: &Graph) -> Optimality {
    let b = bounds(g, set.root, set.k());
    Optimality {
        count_optimal: set.k() == b.max_count,
        height_optimal: set.max_height() == b.height_floor,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BoundViolation {
    TooMany { k: usize, degree: usize },
    MinLevel { vertex: Vertex, min: usize, floor: usize },
    MaxLevel { vertex: Vertex, max: usize, floor: usize },
    MixedParity { vertex: Vertex },
    Height { height: usize, floor: usize },
}

/// Audits a verified set against every necessary condition: `k <= deg(v)`,
/// the per-vertex floors on `min R(u)` and `max R(u)`, one parity per `R(u)`
/// on bipartite graphs, and the height floor.
pub fn audit(g: &Graph, set: &LdpSet) -> Result<(), BoundViolation> {
    let b = bounds(g, set.root, set.k());
    if set.k() > b.max_count {
        return Err(BoundViolation::TooMany { k: set.k(), degree: b.max_count });
    }
    for u in g.vertices().filter(|&u| u != set.root) {
        let r = set.r_of(u);
        let (min, max) = (*r.first().unwrap(), *r.last().unwrap());
        if min < b.min_level_floor(u) {
            return Err(BoundViolation::MinLevel { vertex: u, min, floor: b.min_level_floor(u) });
        }
        if max < b.max_level_floor(u) {
            return Err(BoundViolation::MaxLevel { vertex: u, max, floor: b.max_level_floor(u) });
        }
        if b.bipartite && r.iter().any(|l| l % 2 != b.distance(u) % 2) {
            return Err(BoundViolation::MixedParity { vertex: u });
        }
    }
    if set.max_height() < b.height_floor {
        return Err(BoundViolation::Height { height: set.max_height(), floor: b.height_floor });
    }
    Ok(())
}
