use std::fmt;
use std::str::FromStr;

use super::{Graph, GraphError, Vertex};

/// Named graph families, addressable as `family:param[,param]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphFamily {
    Cycle(usize),
    /// Vertices are labelled by the binary value of their coordinate string.
    Hypercube(u32),
    CompleteBipartite(usize, usize),
    Petersen,
    Grid(usize, usize),
    Complete(usize),
}

impl FromStr for GraphFamily {
    type Err = GraphError;

    fn from_str(spec: &str) -> Result<Self, Self::Err> {
        let (name, args) = match spec.split_once(':') {
            Some((n, a)) => (n.trim(), a.trim()),
            None => (spec.trim(), ""),
        };
        let bad = |reason: &str| GraphError::BadParameter {
            family: name.to_string(),
            reason: reason.to_string(),
        };
        let params: Vec<usize> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',')
                .map(|p| p.trim().parse::<usize>().map_err(|_| bad("parameters must be non-negative integers")))
                .collect::<Result<_, _>>()?
        };
        let want = |count: usize| {
            if params.len() == count {
                Ok(())
            } else {
                Err(bad(&format!("expected {count} parameter(s), got {}", params.len())))
            }
        };
        let family = match name {
            "cycle" => {
                want(1)?;
                GraphFamily::Cycle(params[0])
            }
            "hypercube" => {
                want(1)?;
                let dim = u32::try_from(params[0]).map_err(|_| bad("dimension too large"))?;
                GraphFamily::Hypercube(dim)
            }
            "complete_bipartite" => {
                want(2)?;
                GraphFamily::CompleteBipartite(params[0], params[1])
            }
            "petersen" => {
                want(0)?;
                GraphFamily::Petersen
            }
            "grid" => {
                want(2)?;
                GraphFamily::Grid(params[0], params[1])
            }
            "complete" => {
                want(1)?;
                GraphFamily::Complete(params[0])
            }
            other => return Err(GraphError::UnknownFamily(other.to_string())),
        };
        Ok(family)
    }
}

impl fmt::Display for GraphFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphFamily::Cycle(n) => write!(f, "cycle:{n}"),
            GraphFamily::Hypercube(d) => write!(f, "hypercube:{d}"),
            GraphFamily::CompleteBipartite(a, b) => write!(f, "complete_bipartite:{a},{b}"),
            GraphFamily::Petersen => f.write_str("petersen"),
            GraphFamily::Grid(m, n) => write!(f, "grid:{m},{n}"),
            GraphFamily::Complete(n) => write!(f, "complete:{n}"),
        }
    }
}

pub fn generate(family: &GraphFamily) -> Result<Graph, GraphError> {
    let out_of_range = |reason: &str| GraphError::BadParameter {
        family: family.to_string(),
        reason: reason.to_string(),
    };
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    let n = match *family {
        GraphFamily::Cycle(n) => {
            if n < 3 {
                return Err(out_of_range("cycle needs n >= 3"));
            }
            edges.extend((0..n).map(|i| (i, (i + 1) % n)));
            n
        }
        GraphFamily::Hypercube(d) => {
            if !(1..=20).contains(&d) {
                return Err(out_of_range("dimension must be in 1..=20"));
            }
            let n = 1usize << d;
            for x in 0..n {
                for bit in 0..d {
                    let y = x ^ (1 << bit);
                    if x < y {
                        edges.push((x, y));
                    }
                }
            }
            n
        }
        GraphFamily::CompleteBipartite(a, b) => {
            if a == 0 || b == 0 {
                return Err(out_of_range("both parts must be non-empty"));
            }
            for x in 0..a {
                edges.extend((a..a + b).map(|y| (x, y)));
            }
            a + b
        }
        GraphFamily::Petersen => {
            for i in 0..5 {
                edges.push((i, (i + 1) % 5));
                edges.push((i, i + 5));
                edges.push((i + 5, (i + 2) % 5 + 5));
            }
            10
        }
        GraphFamily::Grid(rows, cols) => {
            if rows == 0 || cols == 0 {
                return Err(out_of_range("grid sides must be positive"));
            }
            for r in 0..rows {
                for c in 0..cols {
                    let x = r * cols + c;
                    if c + 1 < cols {
                        edges.push((x, x + 1));
                    }
                    if r + 1 < rows {
                        edges.push((x, x + cols));
                    }
                }
            }
            rows * cols
        }
        GraphFamily::Complete(n) => {
            if n == 0 {
                return Err(out_of_range("complete graph needs n >= 1"));
            }
            for x in 0..n {
                edges.extend((x + 1..n).map(|y| (x, y)));
            }
            n
        }
    };
    Graph::from_edges(n, &edges)
}
