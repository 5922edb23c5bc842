use std::collections::BTreeSet;
use std::fmt::Write;

use crate::graph::{Graph, GraphError};

/// Parses lines `u v` of non-negative integer labels. Blank lines and lines
/// starting with `#` are skipped; a line with a single label declares a
/// vertex (only useful for the one-vertex graph).
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut pairs = Vec::new();
    let mut labels = BTreeSet::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let malformed = |reason: &str| GraphError::Malformed { line: i + 1, reason: reason.to_string() };
        let fields: Vec<u64> = line
            .split_whitespace()
            .map(|f| f.parse::<u64>().map_err(|_| malformed(&format!("`{f}` is not a vertex id"))))
            .collect::<Result<_, _>>()?;
        match fields[..] {
            [u] => {
                labels.insert(u);
            }
            [u, w] => {
                if u == w {
                    return Err(GraphError::SelfLoop(u));
                }
                labels.insert(u);
                labels.insert(w);
                pairs.push((u, w));
            }
            _ => return Err(malformed("expected `u v`")),
        }
    }
    let labels: Vec<u64> = labels.into_iter().collect();
    let id = |l: u64| labels.binary_search(&l).expect("label collected above");
    let edges: Vec<_> = pairs.iter().map(|&(u, w)| (id(u), id(w))).collect();
    Graph::with_labels(labels, &edges)
}

/// One `u v` line per edge, by label, `u < v`, sorted.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    if g.vertex_count() == 1 {
        writeln!(out, "{}", g.label(0)).unwrap();
    }
    for (u, w) in g.edges() {
        writeln!(out, "{} {}", g.label(u), g.label(w)).unwrap();
    }
    out
}
