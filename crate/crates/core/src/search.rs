//! Exhaustive backtracking search for `k` level-disjoint partitions with a
//! height cap.
//!
//! The search builds all members together, one level at a time, as the
//! rounds of a broadcast: at level `l` every vertex adjacent to the level
//! `l - 1` of some member it is missing may join that member's level `l`, or
//! wait. A vertex joins at most one member per level. Vertices are decided
//! in id order, members tried in index order before waiting, so the first
//! solution is deterministic. Members are interchangeable, so solutions are
//! produced once per member permutation class: the lowest level-1 vertex of
//! member `i` is below that of member `i + 1`.

use std::ops::ControlFlow;

use crate::graph::{bipartition, distances, Graph, Vertex};
use crate::partition::{LdpSet, LevelPartition};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(LdpSet),
    /// The whole space under the cap was explored without a solution.
    Exhausted,
}

impl SearchOutcome {
    pub fn found(&self) -> Option<&LdpSet> {
        match self {
            SearchOutcome::Found(set) => Some(set),
            SearchOutcome::Exhausted => None,
        }
    }
}

/// First `v`-rooted set of `k` level-disjoint partitions with every member of
/// height at most `max_height`.
///
/// # Panics
/// If `k == 0` or the graph has more than 64 vertices.
pub fn brute_force(g: &Graph, v: Vertex, k: usize, max_height: usize) -> SearchOutcome {
    let mut found = None;
    for_each_solution(g, v, k, max_height, |set| {
        found = Some(set.clone());
        ControlFlow::Break(())
    });
    found.map_or(SearchOutcome::Exhausted, SearchOutcome::Found)
}

/// Every solution under the cap, up to `limit` of them.
pub fn all_solutions(g: &Graph, v: Vertex, k: usize, max_height: usize, limit: usize) -> Vec<LdpSet> {
    let mut out = Vec::new();
    if limit == 0 {
        return out;
    }
    for_each_solution(g, v, k, max_height, |set| {
        out.push(set.clone());
        if out.len() == limit {
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    out
}

/// Calls `visit` on each solution in search order until it breaks.
pub fn for_each_solution<F>(g: &Graph, v: Vertex, k: usize, max_height: usize, mut visit: F)
where
    F: FnMut(&LdpSet) -> ControlFlow<()>,
{
    assert!(k >= 1, "search needs k >= 1");
    let n = g.vertex_count();
    assert!(n <= 64, "exhaustive search supports at most 64 vertices");
    assert!(v < n, "root out of range");
    if n == 1 {
        let _ = visit(&LdpSet::new(v, vec![LevelPartition::chain(&[v]); k]));
        return;
    }
    let dist = distances(g, v);
    let ecc = dist.iter().copied().max().unwrap_or(0);
    let cap = max_height.min(n - 1);
    if k > g.degree(v) || cap < ecc {
        return;
    }
    let parity = bipartition(g, v).map(|_| dist.iter().map(|d| d % 2).collect());
    let adj = g.vertices().map(|u| g.neighbors(u).iter().fold(0u64, |m, &w| m | 1 << w)).collect();
    let mut s = Search {
        n,
        k,
        cap,
        root: v,
        all: if n == 64 { u64::MAX } else { (1u64 << n) - 1 },
        adj,
        dist: g.vertices().map(|u| distances(g, u)).collect(),
        parity,
        level: vec![vec![0; n]; k],
        placed: vec![1u64 << v; k],
        frontier: vec![1u64 << v; k],
    };
    let _ = s.round(1, &mut visit);
}

fn bits(mut m: u64) -> impl Iterator<Item = Vertex> {
    std::iter::from_fn(move || {
        (m != 0).then(|| {
            let b = m.trailing_zeros() as Vertex;
            m &= m - 1;
            b
        })
    })
}

struct Search {
    n: usize,
    k: usize,
    cap: usize,
    root: Vertex,
    all: u64,
    adj: Vec<u64>,
    dist: Vec<Vec<usize>>,
    /// Distance parity from the root, on bipartite graphs.
    parity: Option<Vec<usize>>,
    level: Vec<Vec<usize>>,
    placed: Vec<u64>,
    /// The member's most recent level.
    frontier: Vec<u64>,
}

impl Search {
    fn round<F>(&mut self, l: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&LdpSet) -> ControlFlow<()>,
    {
        if self.placed.iter().all(|&p| p == self.all) {
            return visit(&self.emit());
        }
        if l > self.cap {
            return ControlFlow::Continue(());
        }
        let cands: Vec<u64> = (0..self.k)
            .map(|i| bits(self.frontier[i]).fold(0, |m, f| m | self.adj[f]) & !self.placed[i])
            .collect();
        let xs: Vec<Vertex> = bits(cands.iter().fold(0, |m, c| m | c)).collect();
        let mut joined = vec![0u64; self.k];
        self.pick(l, &xs, 0, &cands, &mut joined, visit)
    }

    fn pick<F>(&mut self, l: usize, xs: &[Vertex], j: usize, cands: &[u64], joined: &mut [u64], visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&LdpSet) -> ControlFlow<()>,
    {
        if j == xs.len() {
            return self.close_round(l, joined, visit);
        }
        let x = xs[j];
        for i in 0..self.k {
            if cands[i] >> x & 1 == 0 {
                continue;
            }
            if l == 1 && joined[i] == 0 && joined[..i].contains(&0) {
                continue;
            }
            joined[i] |= 1 << x;
            self.level[i][x] = l;
            let flow = self.pick(l, xs, j + 1, cands, joined, visit);
            joined[i] &= !(1 << x);
            flow?;
        }
        self.pick(l, xs, j + 1, cands, joined, visit)
    }

    fn close_round<F>(&mut self, l: usize, joined: &[u64], visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&LdpSet) -> ControlFlow<()>,
    {
        if (0..self.k).any(|i| self.placed[i] != self.all && joined[i] == 0) {
            return ControlFlow::Continue(());
        }
        let saved = (self.placed.clone(), self.frontier.clone());
        for (p, &j) in self.placed.iter_mut().zip(joined) {
            *p |= j;
        }
        self.frontier.copy_from_slice(joined);
        let flow = if self.completable(l) { self.round(l + 1, visit) } else { ControlFlow::Continue(()) };
        (self.placed, self.frontier) = saved;
        flow
    }

    /// Whether every vertex can still receive its missing members at
    /// distinct levels within the cap. A vertex missing member `i` sits at
    /// least its distance from the member's current level above `l`.
    fn completable(&self, l: usize) -> bool {
        let mut floors = Vec::with_capacity(self.k);
        for x in 0..self.n {
            floors.clear();
            for i in 0..self.k {
                if self.placed[i] >> x & 1 == 1 {
                    continue;
                }
                let Some(d) = bits(self.frontier[i]).map(|f| self.dist[f][x]).min() else {
                    return false;
                };
                floors.push(l + d);
            }
            floors.sort_unstable_by(|a, b| b.cmp(a));
            for (t, &floor) in floors.iter().enumerate() {
                if self.slots_from(x, floor) <= t {
                    return false;
                }
            }
        }
        true
    }

    /// Levels in `floor..=cap` available to `x`.
    fn slots_from(&self, x: Vertex, floor: usize) -> usize {
        if floor > self.cap {
            return 0;
        }
        match &self.parity {
            None => self.cap - floor + 1,
            Some(par) => (floor..=self.cap).filter(|l| l % 2 == par[x]).count(),
        }
    }

    fn emit(&self) -> LdpSet {
        let partitions = self.level.iter().map(|row| {
            let mut row = row.clone();
            row[self.root] = 0;
            LevelPartition::from_levels(&row)
        });
        LdpSet::new(self.root, partitions.collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, GraphFamily};
    use crate::partition::verify_ldp_set;

    fn gen(f: GraphFamily) -> Graph {
        generate(&f).unwrap()
    }

    #[test]
    fn c4_has_no_pair() {
        let g = gen(GraphFamily::Cycle(4));
        assert_eq!(brute_force(&g, 0, 2, 10), SearchOutcome::Exhausted);
    }

    #[test]
    fn c5_pair_found_and_verified() {
        let g = gen(GraphFamily::Cycle(5));
        let set = brute_force(&g, 0, 2, 10).found().cloned().unwrap();
        verify_ldp_set(&g, &set).unwrap();
        assert_eq!(set.max_height(), 4);
    }

    #[test]
    fn hypercube_three_members_at_floor() {
        let g = gen(GraphFamily::Hypercube(3));
        let set = brute_force(&g, 0, 3, 7).found().cloned().unwrap();
        verify_ldp_set(&g, &set).unwrap();
        assert!(set.max_height() <= 7);
        assert_eq!(brute_force(&g, 0, 3, 6), SearchOutcome::Exhausted);
    }

    #[test]
    fn k33_three_members_at_floor_impossible() {
        let g = gen(GraphFamily::CompleteBipartite(3, 3));
        assert_eq!(brute_force(&g, 0, 3, 5), SearchOutcome::Exhausted);
    }

    #[test]
    fn degree_bound_prunes() {
        let g = gen(GraphFamily::Petersen);
        assert_eq!(brute_force(&g, 0, 4, 9), SearchOutcome::Exhausted);
    }

    #[test]
    fn all_solutions_are_distinct_and_valid() {
        let g = gen(GraphFamily::Cycle(5));
        let sols = all_solutions(&g, 0, 2, 4, 100);
        // the two orientations of the cycle, once per member order class
        assert_eq!(sols.len(), 1);
        verify_ldp_set(&g, &sols[0]).unwrap();
        assert_eq!(sols[0].partitions[0], LevelPartition::chain(&[0, 1, 2, 3, 4]));
    }

    #[test]
    fn single_vertex() {
        let g = Graph::from_edges(1, &[]).unwrap();
        assert!(brute_force(&g, 0, 2, 0).found().is_some());
    }
}
