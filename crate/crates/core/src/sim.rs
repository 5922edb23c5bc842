//! Synchronous broadcast of `k` messages from one source.
//!
//! The model: in each step every vertex may receive at most one message
//! (1-in-port), must forward a message in the step right after receiving it
//! (no buffering), never receives a message twice, and may send to all its
//! neighbors at once. The source holds every message and sends only in the
//! first step. Message `i` (1-based) follows member `i - 1` of a
//! level-disjoint set: it reaches level `l` at step `l`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::graph::{Graph, Vertex};
use crate::partition::{verify_ldp_set, LdpSet, LevelPartition};
use crate::LdpError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Transmission {
    pub sender: Vertex,
    pub receiver: Vertex,
    /// 1-based message id.
    pub message: usize,
}

/// `steps[t - 1]` holds the transmissions of step `t`, sorted by
/// `(receiver, message, sender)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BroadcastTrace {
    pub root: Vertex,
    pub messages: usize,
    pub steps: Vec<Vec<Transmission>>,
}

impl BroadcastTrace {
    /// Builds a trace from `(step, transmission)` pairs; steps are 1-based.
    pub fn from_transmissions(
        root: Vertex,
        messages: usize,
        items: impl IntoIterator<Item = (usize, Transmission)>,
    ) -> Self {
        let mut steps: Vec<Vec<Transmission>> = Vec::new();
        for (t, x) in items {
            assert!(t >= 1, "steps are 1-based");
            if steps.len() < t {
                steps.resize(t, Vec::new());
            }
            steps[t - 1].push(x);
        }
        for s in &mut steps {
            s.sort_by_key(|x| (x.receiver, x.message, x.sender));
        }
        BroadcastTrace { root, messages, steps }
    }

    /// Number of steps until the last transmission.
    pub fn makespan(&self) -> usize {
        self.steps.iter().rposition(|s| !s.is_empty()).map_or(0, |i| i + 1)
    }

    /// All transmissions with their 1-based step.
    pub fn transmissions(&self) -> impl Iterator<Item = (usize, Transmission)> + '_ {
        self.steps.iter().enumerate().flat_map(|(i, s)| s.iter().map(move |&x| (i + 1, x)))
    }

    pub fn transmission_count(&self) -> usize {
        self.steps.iter().map(Vec::len).sum()
    }
}

/// Schedule for a verified set: message `i + 1` moves along member `i`; a
/// vertex at level `l` receives it at step `l` from its lowest-id neighbor at
/// level `l - 1`.
pub fn schedule(g: &Graph, set: &LdpSet) -> Result<BroadcastTrace, LdpError> {
    verify_ldp_set(g, set).map_err(LdpError::InvalidInput)?;
    Ok(derive_trace(g, set).expect("verified set yields a trace"))
}

/// The same derivation without verifying `set` first; `None` when some
/// vertex has no neighbor one level below it. Used to feed invalid sets to
/// [`validate`].
pub fn derive_trace(g: &Graph, set: &LdpSet) -> Option<BroadcastTrace> {
    let n = g.vertex_count();
    let mut items = Vec::new();
    for (i, s) in set.partitions.iter().enumerate() {
        let table = s.level_table(n);
        for (l, level) in s.levels().iter().enumerate().skip(1) {
            for &u in level {
                let parent = g.neighbors(u).iter().copied().find(|&w| table[w] == Some(l - 1))?;
                items.push((l, Transmission { sender: parent, receiver: u, message: i + 1 }));
            }
        }
    }
    Some(BroadcastTrace::from_transmissions(set.root, set.k(), items))
}

/// First rule a trace breaks, scanning steps in order and transmissions in
/// their stored order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "rule", rename_all = "kebab-case")]
pub enum TraceViolation {
    UnknownVertex { step: usize, vertex: Vertex },
    NotAnEdge { step: usize, sender: Vertex, receiver: Vertex },
    UnknownMessage { step: usize, message: usize },
    /// A vertex receives two messages in one step.
    InPort { step: usize, receiver: Vertex },
    /// A vertex forwards a message it did not receive in the previous step,
    /// or the source sends after step 1.
    NoBuffer { step: usize, sender: Vertex, message: usize },
    /// A vertex receives a message it already has.
    Repeat { step: usize, receiver: Vertex, message: usize },
    /// Some vertex never receives some message.
    Incomplete { vertex: Vertex, message: usize },
}

impl fmt::Display for TraceViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use TraceViolation::*;
        match self {
            UnknownVertex { step, vertex } => write!(f, "step {step}: unknown vertex {vertex}"),
            NotAnEdge { step, sender, receiver } => write!(f, "step {step}: {sender}-{receiver} is not an edge"),
            UnknownMessage { step, message } => write!(f, "step {step}: unknown message {message}"),
            InPort { step, receiver } => write!(f, "step {step}: {receiver} receives two messages"),
            NoBuffer { step, sender, message } => {
                write!(f, "step {step}: {sender} forwards message {message} it did not just receive")
            }
            Repeat { step, receiver, message } => {
                write!(f, "step {step}: {receiver} receives message {message} again")
            }
            Incomplete { vertex, message } => write!(f, "vertex {vertex} never receives message {message}"),
        }
    }
}

/// Checks a trace against the broadcast model. A repeated same-direction
/// transmission on an edge surfaces as an in-port or repeat violation at its
/// receiver.
pub fn validate(g: &Graph, trace: &BroadcastTrace) -> Result<(), TraceViolation> {
    use TraceViolation::*;
    let n = g.vertex_count();
    let k = trace.messages;
    if trace.root >= n {
        return Err(UnknownVertex { step: 0, vertex: trace.root });
    }
    // received[u][m - 1]: step at which u got message m
    let mut received = vec![vec![None::<usize>; k]; n];
    received[trace.root].fill(Some(0));
    for (i, step) in trace.steps.iter().enumerate() {
        let t = i + 1;
        let mut receivers = BTreeSet::new();
        for x in step {
            for vertex in [x.sender, x.receiver] {
                if vertex >= n {
                    return Err(UnknownVertex { step: t, vertex });
                }
            }
            if !g.has_edge(x.sender, x.receiver) {
                return Err(NotAnEdge { step: t, sender: x.sender, receiver: x.receiver });
            }
            if x.message == 0 || x.message > k {
                return Err(UnknownMessage { step: t, message: x.message });
            }
            let m = x.message - 1;
            if received[x.receiver][m].is_some() {
                return Err(Repeat { step: t, receiver: x.receiver, message: x.message });
            }
            if !receivers.insert(x.receiver) {
                return Err(InPort { step: t, receiver: x.receiver });
            }
            if received[x.sender][m] != Some(t - 1) {
                return Err(NoBuffer { step: t, sender: x.sender, message: x.message });
            }
            received[x.receiver][m] = Some(t);
        }
    }
    for (u, got) in received.iter().enumerate() {
        if let Some(m) = got.iter().position(Option::is_none) {
            return Err(Incomplete { vertex: u, message: m + 1 });
        }
    }
    Ok(())
}

/// Reads the partitions back off a trace: member `i` puts each vertex at the
/// step it received message `i + 1`.
pub fn ldps_from_trace(g: &Graph, trace: &BroadcastTrace) -> Result<LdpSet, TraceViolation> {
    validate(g, trace)?;
    let n = g.vertex_count();
    let mut level = vec![vec![0usize; n]; trace.messages];
    for (t, x) in trace.transmissions() {
        level[x.message - 1][x.receiver] = t;
    }
    Ok(LdpSet::new(trace.root, level.iter().map(|l| LevelPartition::from_levels(l)).collect()))
}

/// Which vertex holds which message after step `t`.
pub fn holdings_after(trace: &BroadcastTrace, n: usize, t: usize) -> Vec<Vec<usize>> {
    let mut held = vec![Vec::new(); n];
    if trace.root < n {
        held[trace.root] = (1..=trace.messages).collect();
    }
    for (s, x) in trace.transmissions() {
        if s <= t && x.receiver < n {
            held[x.receiver].push(x.message);
        }
    }
    for h in &mut held {
        h.sort_unstable();
        h.dedup();
    }
    held
}
