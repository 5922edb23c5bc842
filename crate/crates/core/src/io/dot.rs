use std::fmt::Write;

use crate::graph::Graph;
use crate::partition::{LdpSet, LevelPartition};
use crate::sim::{holdings_after, BroadcastTrace};

fn list(xs: impl IntoIterator<Item = usize>) -> String {
    xs.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

/// Undirected DOT; `annotate(u)` adds a `label` to vertex `u`.
pub fn graph_dot(g: &Graph, annotate: impl Fn(usize) -> Option<String>) -> String {
    let mut out = String::from("graph G {\n");
    for u in g.vertices() {
        match annotate(u) {
            Some(a) => writeln!(out, "  {} [label=\"{}\\n{}\"];", g.label(u), g.label(u), a).unwrap(),
            None => writeln!(out, "  {};", g.label(u)).unwrap(),
        }
    }
    for (u, w) in g.edges() {
        writeln!(out, "  {} -- {};", g.label(u), g.label(w)).unwrap();
    }
    out.push_str("}\n");
    out
}

/// Vertices annotated `level=i`.
pub fn partition_dot(g: &Graph, s: &LevelPartition) -> String {
    graph_dot(g, |u| s.level_of(u).map(|l| format!("level={l}")))
}

/// Vertices annotated with `R(u)`.
pub fn set_dot(g: &Graph, set: &LdpSet) -> String {
    graph_dot(g, |u| (u != set.root).then(|| format!("R={{{}}}", list(set.r_of(u)))))
}

/// Snapshot after step `t`: messages held per vertex, transmissions of step
/// `t` as directed edges.
pub fn trace_step_dot(g: &Graph, trace: &BroadcastTrace, t: usize) -> String {
    let held = holdings_after(trace, g.vertex_count(), t);
    let mut out = format!("digraph step{t} {{\n");
    for u in g.vertices() {
        writeln!(out, "  {} [label=\"{}\\n{{{}}}\"];", g.label(u), g.label(u), list(held[u].iter().copied())).unwrap();
    }
    for (u, w) in g.edges() {
        writeln!(out, "  {} -> {} [dir=none, color=gray];", g.label(u), g.label(w)).unwrap();
    }
    if let Some(step) = t.checked_sub(1).and_then(|i| trace.steps.get(i)) {
        for x in step {
            writeln!(out, "  {} -> {} [label=\"{}\"];", g.label(x.sender), g.label(x.receiver), x.message).unwrap();
        }
    }
    out.push_str("}\n");
    out
}
