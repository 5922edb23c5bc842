//! Constructions of same-rooted level-disjoint partitions: the BFS partition,
//! extension from a subgraph, composition across the components of `G - v`,
//! and the two-partition pipeline over the blocks at the root.

use std::collections::VecDeque;

use serde::Serialize;

use crate::graph::{
    bipartition, block_decomposition, distances, find_separating_chordal, odd_cycle_through, BlockKind,
    ChordalCertificate, CyclePath, Graph, Vertex,
};
use crate::partition::{verify_ldp_set, LdpSet, LevelPartition};
use crate::LdpError;

/// Distance layers from `v`: the single partition of least height.
pub fn bfs_partition(g: &Graph, v: Vertex) -> LevelPartition {
    LevelPartition::from_levels(&distances(g, v))
}

/// Extends `set`, a family of `v`-rooted level-disjoint partitions of the
/// subgraph induced by `h`, to all of `g`.
///
/// Uncovered vertices are taken in BFS order from `h`. Each receives, in
/// every member, the level of a covered neighbor `w != v` plus one; `w` is
/// the neighbor whose highest level is smallest, ties to the lower id.
pub fn extend(g: &Graph, h: &[Vertex], set: &LdpSet) -> Result<LdpSet, LdpError> {
    let n = g.vertex_count();
    let v = set.root;
    if !g.contains(v) {
        return Err(LdpError::VertexOutOfRange(v));
    }
    let mut covered = vec![false; n];
    for &x in h {
        if !g.contains(x) {
            return Err(LdpError::VertexOutOfRange(x));
        }
        covered[x] = true;
    }
    if !covered[v] {
        return Err(LdpError::RootNotInSubgraph(v));
    }
    for component in g.components_without(v) {
        if !component.iter().any(|&x| covered[x]) {
            return Err(LdpError::ComponentUntouched { component });
        }
    }
    let sub = g.induced(h).map_err(LdpError::Graph)?;
    let local = set.map_vertices(|x| sub.to_local(x).unwrap_or(usize::MAX));
    verify_ldp_set(&sub.graph, &local).map_err(LdpError::InvalidInput)?;

    let mut tables: Vec<Vec<usize>> = set
        .level_tables(n)
        .into_iter()
        .map(|t| t.into_iter().map(|l| l.unwrap_or(usize::MAX)).collect())
        .collect();
    let mut queued = covered.clone();
    let mut queue: VecDeque<Vertex> = VecDeque::new();
    for u in g.vertices() {
        if !covered[u] && g.neighbors(u).iter().any(|&w| w != v && covered[w]) {
            queued[u] = true;
            queue.push_back(u);
        }
    }
    while let Some(u) = queue.pop_front() {
        let w = g
            .neighbors(u)
            .iter()
            .copied()
            .filter(|&w| w != v && covered[w])
            .min_by_key(|&w| (tables.iter().map(|t| t[w]).max(), w))
            .expect("queued vertices have a covered non-root neighbor");
        for t in &mut tables {
            t[u] = t[w] + 1;
        }
        covered[u] = true;
        for &y in g.neighbors(u) {
            if !queued[y] {
                queued[y] = true;
                queue.push_back(y);
            }
        }
    }
    let partitions = tables.iter().map(|t| LevelPartition::from_levels(t)).collect();
    let out = LdpSet::new(v, partitions);
    verify_ldp_set(g, &out).map_err(LdpError::SelfCheck)?;
    Ok(out)
}

/// Unions same-indexed levels of per-component solutions into one solution
/// on `g`. Each part covers the root plus one component of `G - v`.
pub fn compose_components(g: &Graph, parts: &[LdpSet]) -> Result<LdpSet, LdpError> {
    let first = parts.first().ok_or(LdpError::NoParts)?;
    let (root, k) = (first.root, first.k());
    let n = g.vertex_count();
    let mut owner = vec![usize::MAX; n];
    for (index, part) in parts.iter().enumerate() {
        if part.root != root {
            return Err(LdpError::MismatchedRoot { expected: root, found: part.root });
        }
        if part.k() != k {
            return Err(LdpError::MismatchedCount { expected: k, found: part.k() });
        }
        let member = part.partitions.first().ok_or(LdpError::NoParts)?;
        for &x in member.levels().iter().skip(1).flatten() {
            if !g.contains(x) {
                return Err(LdpError::VertexOutOfRange(x));
            }
            if owner[x] != usize::MAX {
                return Err(LdpError::PartsOverlap(x));
            }
            owner[x] = index;
        }
    }
    if let Some(x) = g.vertices().find(|&x| x != root && owner[x] == usize::MAX) {
        return Err(LdpError::PartsMissVertex(x));
    }
    let partitions = (0..k)
        .map(|j| {
            let height = parts.iter().map(|p| p.partitions[j].height()).max().unwrap_or(0);
            let levels = (0..=height)
                .map(|i| {
                    let mut level: Vec<Vertex> = parts.iter().flat_map(|p| p.partitions[j].level(i)).copied().collect();
                    level.sort_unstable();
                    level.dedup();
                    level
                })
                .collect();
            LevelPartition::new(levels)
        })
        .collect();
    let out = LdpSet::new(root, partitions);
    verify_ldp_set(g, &out).map_err(LdpError::SelfCheck)?;
    Ok(out)
}

/// The two traversals of an odd cycle through `v`, as singleton-level
/// partitions of the cycle.
pub fn two_ldps_odd_cycle(cycle: &CyclePath, v: Vertex) -> Result<LdpSet, LdpError> {
    if !cycle.is_closed() || cycle.length() < 3 {
        return Err(LdpError::NotACycle);
    }
    if cycle.length() % 2 == 0 {
        return Err(LdpError::EvenCycle(cycle.length()));
    }
    let forward = cycle.rotated_to(v).ok_or(LdpError::RootNotOnCycle(v))?;
    let backward = forward.reversed();
    let out = LdpSet::new(
        v,
        vec![LevelPartition::chain(forward.vertices()), LevelPartition::chain(backward.vertices())],
    );
    verify_on_edges(&out, &cycle.edges())?;
    Ok(out)
}

/// The pair of partitions of `C ∪ P` built from a separating chordal
/// certificate.
///
/// With `A = (v, u_1..u_a)`, `D = (u = z_d, .., z_1, w)`, `B = (w = w_b, ..,
/// w_1, v)`, `P = (u, v_1..v_p = w)`:
///
/// ```text
/// S: v | u_1..u_a | v_1..v_p | {z_(i-a-p), w_(a+b+p-i)}  up to max(a+d+p-1, a+b+p-1)
/// T: v | w_1..w_b | z_1..z_d | {u_(a+b+d-i), v_(i-b-d)}  up to max(a+b+d-1, b+d+p-1)
/// ```
///
/// Tail entries whose index falls outside the inner range of their path are
/// left out.
pub fn two_ldps_chordal(cert: &ChordalCertificate) -> Result<LdpSet, LdpError> {
    cert.check().map_err(LdpError::InvalidCertificate)?;
    let c = cert.cycle.vertices();
    let path = cert.chordal_path.vertices();
    let (a, b, d, p) = (cert.a as isize, cert.b as isize, cert.d as isize, cert.p as isize);
    let len = c.len() as isize;
    let u_at = |j: isize| (1..=a).contains(&j).then(|| c[j as usize]);
    let z_at = |j: isize, hi: isize| (1..=hi).contains(&j).then(|| c[(a + d - j) as usize]);
    let w_at = |j: isize| (1..=b).contains(&j).then(|| c[(len - j) as usize]);
    let v_at = |j: isize, hi: isize| (1..=hi).contains(&j).then(|| path[j as usize]);

    let h_s = (a + d + p - 1).max(a + b + p - 1);
    let h_t = (a + b + d - 1).max(b + d + p - 1);
    let mut s = vec![vec![cert.root]];
    for i in 1..=h_s {
        let level: Vec<Vertex> = if i <= a {
            u_at(i).into_iter().collect()
        } else if i <= a + p {
            v_at(i - a, p).into_iter().collect()
        } else {
            z_at(i - a - p, d - 1).into_iter().chain(w_at(a + b + p - i)).collect()
        };
        s.push(level);
    }
    let mut t = vec![vec![cert.root]];
    for i in 1..=h_t {
        let level: Vec<Vertex> = if i <= b {
            w_at(i).into_iter().collect()
        } else if i <= b + d {
            z_at(i - b, d).into_iter().collect()
        } else {
            u_at(a + b + d - i).into_iter().chain(v_at(i - b - d, p - 1)).collect()
        };
        t.push(level);
    }
    let out = LdpSet::new(cert.root, vec![LevelPartition::new(s), LevelPartition::new(t)]);
    let mut edges = cert.cycle.edges();
    edges.extend(cert.chordal_path.edges());
    verify_on_edges(&out, &edges)?;
    Ok(out)
}

/// Verifies `set` on the graph formed by exactly `edges`.
fn verify_on_edges(set: &LdpSet, edges: &[(Vertex, Vertex)]) -> Result<(), LdpError> {
    let mut ids: Vec<Vertex> = edges.iter().flat_map(|&(x, y)| [x, y]).collect();
    ids.sort_unstable();
    ids.dedup();
    let local = |x: Vertex| ids.binary_search(&x).unwrap_or(usize::MAX);
    let local_edges: Vec<_> = edges.iter().map(|&(x, y)| (local(x), local(y))).collect();
    let g = Graph::with_labels(ids.iter().map(|&x| x as u64).collect(), &local_edges).map_err(LdpError::Graph)?;
    verify_ldp_set(&g, &set.map_vertices(local)).map_err(LdpError::SelfCheck)
}

/// What seeded the pair on one block at the root.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum BlockWitness {
    OddCycle { block: Vec<Vertex>, cycle: CyclePath },
    Chordal { block: Vec<Vertex>, certificate: ChordalCertificate },
}

/// Which condition of the two-partition characterization a block violates.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Condition {
    /// The block at the root is a bridge (or a lone vertex), not 2-connected.
    NotTwoConnected(BlockKind),
    /// The block is bipartite and no `v`-cycle carries a separating chordal path.
    NoSeparatingChordal,
}

impl std::fmt::Display for Condition {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Condition::NotTwoConnected(BlockKind::Bridge) => f.write_str("block is a bridge, not 2-connected"),
            Condition::NotTwoConnected(_) => f.write_str("block is not 2-connected"),
            Condition::NoSeparatingChordal => f.write_str("block bipartite, no separating chordal certificate"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub block: Vec<Vertex>,
    pub condition: Condition,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TwoLdpOutcome {
    Found { set: LdpSet, witnesses: Vec<BlockWitness> },
    NotFound(Obstruction),
}

impl TwoLdpOutcome {
    pub fn set(&self) -> Option<&LdpSet> {
        match self {
            TwoLdpOutcome::Found { set, .. } => Some(set),
            TwoLdpOutcome::NotFound(_) => None,
        }
    }
}

/// Decides whether `g` has two `v`-rooted level-disjoint partitions and
/// builds them when it does.
///
/// Each component `C_i` of `G - v` contributes the block `B_i` at `v`
/// inside `C_i + v`. A bridge block fails outright; a non-bipartite block is
/// seeded by an odd cycle through `v`, a bipartite one by a separating
/// chordal certificate. Seeds are extended to `C_i + v` and composed.
pub fn construct_two_ldps(g: &Graph, v: Vertex) -> Result<TwoLdpOutcome, LdpError> {
    if !g.contains(v) {
        return Err(LdpError::VertexOutOfRange(v));
    }
    let decomposition = block_decomposition(g);
    let components = g.components_without(v);
    if components.is_empty() {
        let block = decomposition.blocks[0].clone();
        return Ok(TwoLdpOutcome::NotFound(Obstruction {
            block: block.vertices,
            condition: Condition::NotTwoConnected(block.kind),
        }));
    }
    let mut parts = Vec::with_capacity(components.len());
    let mut witnesses = Vec::with_capacity(components.len());
    for component in components {
        let block = decomposition
            .blocks_containing(v)
            .find(|b| b.vertices.iter().any(|x| component.binary_search(x).is_ok()))
            .expect("every component of G - v meets a block at v");
        if block.kind != BlockKind::TwoConnected {
            return Ok(TwoLdpOutcome::NotFound(Obstruction {
                block: block.vertices.clone(),
                condition: Condition::NotTwoConnected(block.kind),
            }));
        }
        let sub = g.induced(&block.vertices).map_err(LdpError::Graph)?;
        let local_v = sub.to_local(v).expect("block contains the root");
        let (seed, witness) = if bipartition(&sub.graph, local_v).is_none() {
            let cycle = odd_cycle_through(&sub.graph, local_v).map_err(LdpError::Graph)?;
            let seed = two_ldps_odd_cycle(&cycle, local_v)?;
            let cycle = cycle.map_vertices(|x| sub.to_parent(x));
            (seed, BlockWitness::OddCycle { block: block.vertices.clone(), cycle })
        } else {
            match find_separating_chordal(&sub.graph, local_v).map_err(LdpError::Graph)? {
                Some(cert) => {
                    let seed = two_ldps_chordal(&cert)?;
                    let certificate = cert.map_vertices(|x| sub.to_parent(x));
                    (seed, BlockWitness::Chordal { block: block.vertices.clone(), certificate })
                }
                None => {
                    return Ok(TwoLdpOutcome::NotFound(Obstruction {
                        block: block.vertices.clone(),
                        condition: Condition::NoSeparatingChordal,
                    }))
                }
            }
        };
        let seed = seed.map_vertices(|x| sub.to_parent(x));
        let mut region = component.clone();
        region.push(v);
        let reg = g.induced(&region).map_err(LdpError::Graph)?;
        let seed_vertices: Vec<Vertex> = seed.partitions[0].levels().iter().flatten().map(|&x| reg.to_local(x).unwrap()).collect();
        let local_seed = seed.map_vertices(|x| reg.to_local(x).unwrap());
        let extended = extend(&reg.graph, &seed_vertices, &local_seed)?;
        parts.push(extended.map_vertices(|x| reg.to_parent(x)));
        witnesses.push(witness);
    }
    let set = compose_components(g, &parts)?;
    Ok(TwoLdpOutcome::Found { set, witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generate;
    use crate::partition::verify_partition;

    fn gen(spec: &str) -> Graph {
        generate(&spec.parse().unwrap()).unwrap()
    }

    fn sizes(s: &LevelPartition) -> Vec<usize> {
        s.levels().iter().map(Vec::len).collect()
    }

    #[test]
    fn bfs_partition_shapes() {
        let q3 = gen("hypercube:3");
        let s = bfs_partition(&q3, 0);
        assert_eq!(sizes(&s), vec![1, 3, 3, 1]);
        assert_eq!(verify_partition(&q3, &s), Ok(()));
        assert_eq!(sizes(&bfs_partition(&gen("cycle:5"), 0)), vec![1, 2, 2]);
        let path = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(bfs_partition(&path, 1).levels(), &[vec![1], vec![0, 2]]);
    }

    #[test]
    fn odd_cycle_pair_on_c5() {
        let c = CyclePath::cycle(vec![0, 1, 2, 3, 4]);
        let set = two_ldps_odd_cycle(&c, 0).unwrap();
        assert_eq!(set.partitions[0], LevelPartition::chain(&[0, 1, 2, 3, 4]));
        assert_eq!(set.partitions[1], LevelPartition::chain(&[0, 4, 3, 2, 1]));
        assert_eq!(set.max_height(), 4);
    }

    #[test]
    fn odd_cycle_pair_on_c3_and_even_rejection() {
        let set = two_ldps_odd_cycle(&CyclePath::cycle(vec![0, 1, 2]), 0).unwrap();
        assert_eq!(set.partitions[0].height(), 2);
        assert_eq!(set.partitions[1].height(), 2);
        assert_eq!(
            two_ldps_odd_cycle(&CyclePath::cycle(vec![0, 1, 2, 3]), 0),
            Err(LdpError::EvenCycle(4))
        );
        assert_eq!(
            two_ldps_odd_cycle(&CyclePath::cycle(vec![0, 1, 2]), 7),
            Err(LdpError::RootNotOnCycle(7))
        );
    }

    #[test]
    fn chordal_pair_on_k23() {
        let g = gen("complete_bipartite:2,3");
        let cert = find_separating_chordal(&g, 2).unwrap().unwrap();
        let set = two_ldps_chordal(&cert).unwrap();
        assert_eq!(set.partitions[0].height(), 4);
        assert_eq!(set.partitions[1].height(), 4);
        assert_eq!(verify_ldp_set(&g, &set), Ok(()));
    }

    #[test]
    fn chordal_pair_on_q3_certificate() {
        let cert = ChordalCertificate::normalized(&[0, 1, 3, 7, 6, 4], 1, 5, &[1, 5, 4]).unwrap();
        let set = two_ldps_chordal(&cert).unwrap();
        assert_eq!(set.partitions[0].height(), 6);
        assert_eq!(set.partitions[1].height(), 6);
    }

    #[test]
    fn chordal_rejects_non_separating_certificate() {
        let mut cert = ChordalCertificate::normalized(&[0, 1, 3, 7, 6, 4], 1, 5, &[1, 5, 4]).unwrap();
        cert.a = 4;
        cert.d = 1;
        assert!(matches!(two_ldps_chordal(&cert), Err(LdpError::InvalidCertificate(_))));
    }

    #[test]
    fn extend_pendant_on_c5() {
        // C5 = 0..4 rooted at 0, pendant 5 on vertex 2
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (2, 5)]).unwrap();
        let seed = two_ldps_odd_cycle(&CyclePath::cycle(vec![0, 1, 2, 3, 4]), 0).unwrap();
        let out = extend(&g, &[0, 1, 2, 3, 4], &seed).unwrap();
        assert_eq!(out.r_of(5).into_iter().collect::<Vec<_>>(), vec![3, 4]);
        assert_eq!(out.restrict(|x| x != 5), seed);
    }

    #[test]
    fn extend_identity_and_hypothesis() {
        let g = gen("cycle:5");
        let seed = two_ldps_odd_cycle(&CyclePath::cycle(vec![0, 1, 2, 3, 4]), 0).unwrap();
        assert_eq!(extend(&g, &[0, 1, 2, 3, 4], &seed).unwrap(), seed);

        // bowtie: H covers only one triangle
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let tri = two_ldps_odd_cycle(&CyclePath::cycle(vec![0, 1, 2]), 0).unwrap();
        assert_eq!(
            extend(&bowtie, &[0, 1, 2], &tri),
            Err(LdpError::ComponentUntouched { component: vec![3, 4] })
        );
    }

    #[test]
    fn compose_bowtie() {
        let bowtie = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0)]).unwrap();
        let left = two_ldps_odd_cycle(&CyclePath::cycle(vec![0, 1, 2]), 0).unwrap();
        let right = two_ldps_odd_cycle(&CyclePath::cycle(vec![0, 3, 4]), 0).unwrap();
        let set = compose_components(&bowtie, &[left.clone(), right]).unwrap();
        assert_eq!(set.partitions[0].levels(), &[vec![0], vec![1, 3], vec![2, 4]]);
        assert_eq!(compose_components(&gen("cycle:3"), &[left.clone()]).unwrap(), left);
        let single = LdpSet::new(0, vec![LevelPartition::chain(&[0, 3, 4])]);
        assert_eq!(
            compose_components(&bowtie, &[left, single]),
            Err(LdpError::MismatchedCount { expected: 2, found: 1 })
        );
    }

    #[test]
    fn construct_on_small_families() {
        let c6 = gen("cycle:6");
        for v in c6.vertices() {
            match construct_two_ldps(&c6, v).unwrap() {
                TwoLdpOutcome::NotFound(o) => assert_eq!(o.condition, Condition::NoSeparatingChordal),
                other => panic!("{other:?}"),
            }
        }
        let star = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        match construct_two_ldps(&star, 0).unwrap() {
            TwoLdpOutcome::NotFound(o) => assert_eq!(o.condition, Condition::NotTwoConnected(BlockKind::Bridge)),
            other => panic!("{other:?}"),
        }
        let q3 = gen("hypercube:3");
        let set = construct_two_ldps(&q3, 0).unwrap().set().cloned().unwrap();
        assert_eq!(verify_ldp_set(&q3, &set), Ok(()));
    }

    #[test]
    fn construct_through_cut_vertex() {
        // triangle 0-1-2 and pentagon 2-3-4-5-6 glued at 2, plus pendant 7 on 4
        let g = Graph::from_edges(
            8,
            &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 2), (4, 7)],
        )
        .unwrap();
        let outcome = construct_two_ldps(&g, 2).unwrap();
        let set = outcome.set().unwrap();
        assert_eq!(verify_ldp_set(&g, set), Ok(()));
        // root 4 sees the pendant bridge
        assert!(construct_two_ldps(&g, 4).unwrap().set().is_none());
    }
}
