//! The necessity half of the two-partition characterization, made
//! constructive: two level-disjoint partitions of a bipartite graph yield a
//! separating chordal certificate.
//!
//! From the pair we read two crosswise-merged level-disjoint paths between
//! first-level neighbors of the root, reroute them until every shared vertex
//! lies in their common prefix or suffix, and read the cycle and chordal
//! path off the result.

use std::collections::VecDeque;

use crate::graph::{bipartition, ChordalCertificate, CyclePath, Graph, Vertex};
use crate::partition::{verify_ldp_set, LdpSet};
use crate::LdpError;

/// Output of [`merge_adjust`]: a fully-merged level-disjoint pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MergedPair {
    pub first: Vec<Vertex>,
    pub second: Vec<Vertex>,
    /// Common prefix plus common suffix length before each rerouting step
    /// and after the last one; strictly increasing.
    pub progress: Vec<usize>,
}

impl MergedPair {
    /// Length of the longest common prefix of `first` and `second` reversed.
    pub fn prefix_len(&self) -> usize {
        prefix_len(&self.first, &self.second)
    }

    pub fn suffix_len(&self) -> usize {
        suffix_len(&self.first, &self.second)
    }

    pub fn is_fully_merged(&self) -> bool {
        first_crossing(&self.first, &self.second).is_none()
    }
}

fn prefix_len(p1: &[Vertex], p2: &[Vertex]) -> usize {
    p1.iter().zip(p2.iter().rev()).take_while(|(a, b)| a == b).count()
}

fn suffix_len(p1: &[Vertex], p2: &[Vertex]) -> usize {
    p1.iter().rev().zip(p2.iter()).take_while(|(a, b)| a == b).count()
}

/// Smallest index `l1` of a vertex of `p1` that also lies on `p2` outside
/// the common prefix and suffix, with its index `l2` on `p2`.
fn first_crossing(p1: &[Vertex], p2: &[Vertex]) -> Option<(usize, usize)> {
    let (pre, suf) = (prefix_len(p1, p2), suffix_len(p1, p2));
    let end = p1.len().saturating_sub(suf);
    (pre..end).find_map(|l1| p2.iter().position(|&x| x == p1[l1]).map(|l2| (l1, l2)))
}

fn check_pair(p1: &[Vertex], p2: &[Vertex]) -> Result<(), LdpError> {
    for p in [p1, p2] {
        let mut sorted = p.to_vec();
        sorted.sort_unstable();
        if p.is_empty() || sorted.windows(2).any(|w| w[0] == w[1]) {
            return Err(LdpError::NotAPath);
        }
    }
    if p1[0] != p2[p2.len() - 1] || p1[p1.len() - 1] != p2[0] {
        return Err(LdpError::NotMerged);
    }
    for (i, &x) in p1.iter().enumerate() {
        if p2.get(i) == Some(&x) {
            return Err(LdpError::NotLevelDisjoint(x));
        }
    }
    Ok(())
}

/// Reroutes merged, level-disjoint paths `p1 = (u_1..u_m)`,
/// `p2 = (w_1..w_n)` (with `u_1 = w_n`, `u_m = w_1`) into fully-merged ones
/// with the same endpoints.
///
/// While some shared vertex `u_l1 = w_l2` lies outside the common prefix and
/// suffix (smallest such `l1`): if `l1 < l2`, `p2` becomes
/// `(w_1..w_l2, u_(l1-1)..u_1)`; otherwise `p1` becomes
/// `(u_1..u_l1, w_(l2-1)..w_1)`. Each round lengthens the common prefix or
/// suffix.
pub fn merge_adjust(p1: &CyclePath, p2: &CyclePath) -> Result<MergedPair, LdpError> {
    if p1.is_closed() || p2.is_closed() {
        return Err(LdpError::NotAPath);
    }
    let mut first = p1.vertices().to_vec();
    let mut second = p2.vertices().to_vec();
    check_pair(&first, &second)?;
    let mut progress = vec![prefix_len(&first, &second) + suffix_len(&first, &second)];
    while let Some((l1, l2)) = first_crossing(&first, &second) {
        debug_assert_ne!(l1, l2);
        if l1 < l2 {
            let mut rerouted = second[..=l2].to_vec();
            rerouted.extend(first[..l1].iter().rev());
            second = rerouted;
        } else {
            let mut rerouted = first[..=l1].to_vec();
            rerouted.extend(second[..l2].iter().rev());
            first = rerouted;
        }
        check_pair(&first, &second)?;
        let measure = prefix_len(&first, &second) + suffix_len(&first, &second);
        assert!(measure > *progress.last().unwrap(), "rerouting must lengthen the common ends");
        progress.push(measure);
    }
    Ok(MergedPair { first, second, progress })
}

/// Reads a separating chordal certificate off two level-disjoint partitions
/// of a bipartite graph.
///
/// Picks first-level neighbors `s` (of the first member) and `t` (of the
/// second), lowest ids first, such that `t` descends from `s` level by level
/// in the first member and `s` descends from `t` in the second. The two
/// descent paths are merged and level-disjoint; after [`merge_adjust`] they
/// split as `(A, P, B)` and `(B^R, D^R, A^R)`, and `P` is a separating
/// chordal path of the cycle `(v, A, D, B, v)`.
pub fn extract_certificate(g: &Graph, set: &LdpSet) -> Result<ChordalCertificate, LdpError> {
    if set.k() != 2 {
        return Err(LdpError::WrongCount { expected: 2, found: set.k() });
    }
    verify_ldp_set(g, set).map_err(LdpError::InvalidInput)?;
    let v = set.root;
    if bipartition(g, v).is_none() {
        return Err(LdpError::NotBipartite);
    }
    let n = g.vertex_count();
    let (s, t) = (&set.partitions[0], &set.partitions[1]);
    let s_level: Vec<usize> = s.level_table(n).into_iter().map(Option::unwrap).collect();
    let t_level: Vec<usize> = t.level_table(n).into_iter().map(Option::unwrap).collect();

    let mut pair = None;
    'search: for &x in s.level(1) {
        let from_x = descendants(g, &s_level, x);
        for &y in t.level(1) {
            if !from_x[y] {
                continue;
            }
            let from_y = descendants(g, &t_level, y);
            if from_y[x] {
                pair = Some((descent_path(g, &s_level, &from_x, y), descent_path(g, &t_level, &from_y, x)));
                break 'search;
            }
        }
    }
    let (p1, p2) = pair.ok_or(LdpError::NotMerged)?;
    let merged = merge_adjust(&CyclePath::path(p1), &CyclePath::path(p2))?;
    let (pre, suf) = (merged.prefix_len(), merged.suffix_len());
    let m = merged.first.len();
    if pre + suf > m {
        return Err(LdpError::NotMerged);
    }
    let second_rev: Vec<Vertex> = merged.second.iter().rev().copied().collect();
    let a_part = &merged.first[..pre];
    let b_part = &merged.first[m - suf..];
    let p_inner = &merged.first[pre..m - suf];
    let d_inner = &second_rev[pre..second_rev.len() - suf];

    let mut cycle = vec![v];
    cycle.extend_from_slice(a_part);
    cycle.extend_from_slice(d_inner);
    cycle.extend_from_slice(b_part);
    let mut chordal = vec![a_part[pre - 1]];
    chordal.extend_from_slice(p_inner);
    chordal.push(b_part[0]);
    let u_pos = pre;
    let w_pos = pre + d_inner.len() + 1;
    let cert = ChordalCertificate::normalized(&cycle, u_pos, w_pos, &chordal).map_err(LdpError::InvalidCertificate)?;
    cert.validate(g).map_err(LdpError::InvalidCertificate)?;
    Ok(cert)
}

/// Vertices reachable from `start` by steps that go up exactly one level.
fn descendants(g: &Graph, level: &[usize], start: Vertex) -> Vec<bool> {
    let mut seen = vec![false; g.vertex_count()];
    seen[start] = true;
    let mut queue = VecDeque::from([start]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if level[y] == level[x] + 1 && !seen[y] {
                seen[y] = true;
                queue.push_back(y);
            }
        }
    }
    seen
}

/// Walks down from `target` through lowest-id predecessors inside `allowed`,
/// returning the path in increasing level order (root excluded).
fn descent_path(g: &Graph, level: &[usize], allowed: &[bool], target: Vertex) -> Vec<Vertex> {
    let mut path = vec![target];
    let mut cur = target;
    while level[cur] > 1 {
        cur = *g
            .neighbors(cur)
            .iter()
            .find(|&&w| allowed[w] && level[w] + 1 == level[cur])
            .expect("reachable vertex has an allowed predecessor");
        path.push(cur);
    }
    path.reverse();
    path
}
