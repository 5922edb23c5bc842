use std::fmt::Write;

use super::IoError;
use crate::graph::Graph;
use crate::sim::{BroadcastTrace, Transmission};

/// Header comments `# root <label>` and `# messages <k>`, then one line
/// `t sender receiver msg` per transmission sorted by `(t, receiver, msg)`.
pub fn write_trace(g: &Graph, trace: &BroadcastTrace) -> String {
    let mut out = String::new();
    writeln!(out, "# root {}", g.label(trace.root)).unwrap();
    writeln!(out, "# messages {}", trace.messages).unwrap();
    for (t, x) in trace.transmissions() {
        writeln!(out, "{t} {} {} {}", g.label(x.sender), g.label(x.receiver), x.message).unwrap();
    }
    out
}

/// Reads the format of [`write_trace`]. Without headers the root is the
/// unique vertex sending at step 1 and the message count is the largest id.
pub fn parse_trace(g: &Graph, text: &str) -> Result<BroadcastTrace, IoError> {
    let mut root = None;
    let mut messages = None;
    let mut items = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        let malformed = |reason: &str| IoError::Malformed { line: i + 1, reason: reason.to_string() };
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            let mut words = comment.split_whitespace();
            match (words.next(), words.next()) {
                (Some("root"), Some(r)) => {
                    let l = r.parse().map_err(|_| malformed("bad root"))?;
                    root = Some(g.vertex_of_label(l).ok_or(IoError::UnknownLabel(l))?);
                }
                (Some("messages"), Some(m)) => messages = Some(m.parse().map_err(|_| malformed("bad count"))?),
                _ => {}
            }
            continue;
        }
        let f: Vec<u64> = line
            .split_whitespace()
            .map(|x| x.parse().map_err(|_| malformed(&format!("`{x}` is not an integer"))))
            .collect::<Result<_, _>>()?;
        let [t, s, r, m] = f[..] else {
            return Err(malformed("expected `t sender receiver msg`"));
        };
        if t == 0 {
            return Err(malformed("steps start at 1"));
        }
        let id = |l: u64| g.vertex_of_label(l).ok_or(IoError::UnknownLabel(l));
        items.push((t as usize, Transmission { sender: id(s)?, receiver: id(r)?, message: m as usize }));
    }
    let root = match root {
        Some(r) => r,
        None => {
            let mut senders: Vec<_> = items.iter().filter(|(t, _)| *t == 1).map(|(_, x)| x.sender).collect();
            senders.dedup();
            match senders[..] {
                [r] => r,
                _ => return Err(IoError::Malformed { line: 0, reason: "cannot infer the root".into() }),
            }
        }
    };
    let messages = messages.unwrap_or_else(|| items.iter().map(|(_, x)| x.message).max().unwrap_or(0));
    Ok(BroadcastTrace::from_transmissions(root, messages, items))
}
