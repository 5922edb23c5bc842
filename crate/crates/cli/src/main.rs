use std::fmt::Write as _;
use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use ldp_core::bounds::BoundViolation;
use ldp_core::graph::{block_decomposition, generate, girth, metrics, BlockKind, GraphFamily};
use ldp_core::io::{
    graph_dot, parse_graph, parse_ldp_json, partition_dot, set_dot, trace_step_dot, write_edge_list, write_ldp_json,
    write_trace, LdpDocument,
};
use ldp_core::search::{brute_force, SearchOutcome};
use ldp_core::sim::{schedule, validate};
use ldp_core::{
    audit, bfs_partition, bounds, construct_two_ldps, is_optimal, optimal_height_feasible, verify_ldp_set,
    verify_partition, BlockWitness, Feasibility, Graph, LdpSet, TwoLdpOutcome, Vertex,
};

#[derive(Parser)]
#[command(name = "ldp", version, about = "Level-disjoint partitions of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Edge-list file.
    #[arg(long, conflicts_with = "gen", required_unless_present = "gen")]
    graph: Option<PathBuf>,
    /// Generator spec `family:param[,param]`.
    #[arg(long)]
    gen: Option<String>,
}

#[derive(Args)]
struct Output {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write to this file instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Dot,
}

#[derive(Subcommand)]
enum Command {
    /// Graph metrics and block decomposition.
    Analyze {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        root: Option<u64>,
        #[command(flatten)]
        output: Output,
    },
    /// Decide whether two root-sharing level-disjoint partitions exist.
    Decide2 {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        root: u64,
        #[command(flatten)]
        output: Output,
    },
    /// Build one (BFS) or two partitions.
    Construct {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        root: u64,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Exhaustive search for `k` partitions under a height cap.
    Search {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        root: u64,
        #[arg(long, default_value_t = 2)]
        k: usize,
        /// Height cap; defaults to n - 1.
        #[arg(long)]
        cap: Option<usize>,
        #[command(flatten)]
        output: Output,
    },
    /// Verify an LDP JSON document against the graph.
    Verify {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        ldp: PathBuf,
        #[command(flatten)]
        output: Output,
    },
    /// Derive and validate a broadcast trace.
    Simulate {
        #[command(flatten)]
        input: Input,
        /// LDP JSON document; without it the partitions are built from
        /// `--root` and `--k`.
        #[arg(long, required_unless_present = "root")]
        ldp: Option<PathBuf>,
        #[arg(long)]
        root: Option<u64>,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[command(flatten)]
        output: Output,
    },
    /// Emit a generated graph.
    Gen {
        /// Generator spec `family:param[,param]`.
        #[arg(long)]
        gen: String,
        #[command(flatten)]
        output: Output,
    },
    /// Degree, level and height bounds, and the optimal-height test.
    Bounds {
        #[command(flatten)]
        input: Input,
        #[arg(long)]
        root: u64,
        #[arg(long, default_value_t = 2)]
        k: usize,
        #[command(flatten)]
        output: Output,
    },
}

/// Operational failure: bad input or usage.
struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

/// A document to print, and whether the answer was positive.
struct Report {
    text: String,
    positive: bool,
}

impl Report {
    fn yes(text: String) -> Self {
        Report { text, positive: true }
    }

    fn verdict(text: String, positive: bool) -> Self {
        Report { text, positive }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let output = match &cli.command {
        Command::Analyze { output, .. }
        | Command::Decide2 { output, .. }
        | Command::Construct { output, .. }
        | Command::Search { output, .. }
        | Command::Verify { output, .. }
        | Command::Simulate { output, .. }
        | Command::Gen { output, .. }
        | Command::Bounds { output, .. } => output,
    };
    let result = run(&cli.command).and_then(|report| {
        emit(&report.text, output.out.as_deref())?;
        Ok(report.positive)
    });
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(text: &str, out: Option<&Path>) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text).map_err(|e| Failure(format!("{}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn load(input: &Input) -> Result<Graph, Failure> {
    match (&input.graph, &input.gen) {
        (Some(path), _) => {
            let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
            Ok(parse_graph(&text)?)
        }
        (None, Some(spec)) => Ok(generate(&spec.parse::<GraphFamily>()?)?),
        (None, None) => Err(Failure("one of --graph or --gen is required".into())),
    }
}

fn vertex(g: &Graph, label: u64) -> Result<Vertex, Failure> {
    g.vertex_of_label(label).ok_or_else(|| Failure(format!("no vertex {label} in the graph")))
}

fn labels(g: &Graph, xs: impl IntoIterator<Item = Vertex>) -> Vec<u64> {
    xs.into_iter().map(|x| g.label(x)).collect()
}

fn join(xs: &[u64]) -> String {
    xs.iter().map(u64::to_string).collect::<Vec<_>>().join(" ")
}

fn pretty(v: Value) -> String {
    serde_json::to_string_pretty(&v).expect("value serializes") + "\n"
}

fn run(command: &Command) -> Result<Report, Failure> {
    match command {
        Command::Analyze { input, root, output } => {
            let g = load(input)?;
            let root = root.map(|r| vertex(&g, r)).transpose()?;
            analyze(&g, root, output.format.unwrap_or(Format::Text))
        }
        Command::Decide2 { input, root, output } => {
            let g = load(input)?;
            let v = vertex(&g, *root)?;
            decide2(&g, v, output.format.unwrap_or(Format::Text))
        }
        Command::Construct { input, root, k, output } => {
            let g = load(input)?;
            let v = vertex(&g, *root)?;
            let set = match k {
                1 => Some(LdpSet::new(v, vec![bfs_partition(&g, v)])),
                2 => construct_two_ldps(&g, v)?.set().cloned(),
                _ => return Err(Failure("construct builds k = 1 or k = 2; use `search` for more".into())),
            };
            match set {
                Some(set) => Ok(Report::yes(render_set(&g, &set, output.format.unwrap_or(Format::Json)))),
                None => Ok(Report::verdict("none\n".into(), false)),
            }
        }
        Command::Search { input, root, k, cap, output } => {
            let g = load(input)?;
            let v = vertex(&g, *root)?;
            if *k == 0 || g.vertex_count() > 64 {
                return Err(Failure("search needs k >= 1 and at most 64 vertices".into()));
            }
            let cap = cap.unwrap_or(g.vertex_count() - 1);
            match brute_force(&g, v, *k, cap) {
                SearchOutcome::Found(set) => {
                    Ok(Report::yes(render_set(&g, &set, output.format.unwrap_or(Format::Json))))
                }
                SearchOutcome::Exhausted => Ok(Report::verdict("exhausted\n".into(), false)),
            }
        }
        Command::Verify { input, ldp, output } => {
            let g = load(input)?;
            let text = fs::read_to_string(ldp).map_err(|e| Failure(format!("{}: {e}", ldp.display())))?;
            let doc: LdpDocument = serde_json::from_str(&text)?;
            let set = doc.to_set(&g)?;
            verify(&g, &set, output.format.unwrap_or(Format::Text))
        }
        Command::Simulate { input, ldp, root, k, output } => {
            let g = load(input)?;
            let set = match (ldp, root) {
                (Some(path), _) => {
                    let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
                    parse_ldp_json(&g, &text)?
                }
                (None, Some(r)) => {
                    let v = vertex(&g, *r)?;
                    let found = match k {
                        1 => Some(LdpSet::new(v, vec![bfs_partition(&g, v)])),
                        2 => construct_two_ldps(&g, v)?.set().cloned(),
                        _ => brute_force(&g, v, *k, g.vertex_count() - 1).found().cloned(),
                    };
                    match found {
                        Some(set) => set,
                        None => return Ok(Report::verdict("none\n".into(), false)),
                    }
                }
                (None, None) => return Err(Failure("simulate needs --ldp or --root".into())),
            };
            simulate(&g, &set, output.format.unwrap_or(Format::Text))
        }
        Command::Gen { gen, output } => {
            let g = generate(&gen.parse::<GraphFamily>()?)?;
            Ok(Report::yes(match output.format.unwrap_or(Format::Text) {
                Format::Text => write_edge_list(&g),
                Format::Json => pretty(json!({
                    "vertices": g.labels(),
                    "edges": g.edges().map(|(u, w)| [g.label(u), g.label(w)]).collect::<Vec<_>>(),
                })),
                Format::Dot => graph_dot(&g, |_| None),
            }))
        }
        Command::Bounds { input, root, k, output } => {
            let g = load(input)?;
            let v = vertex(&g, *root)?;
            if *k == 0 {
                return Err(Failure("k must be at least 1".into()));
            }
            bounds_report(&g, v, *k, output.format.unwrap_or(Format::Text))
        }
    }
}

fn render_set(g: &Graph, set: &LdpSet, format: Format) -> String {
    match format {
        Format::Json => write_ldp_json(g, set) + "\n",
        Format::Dot if set.k() == 1 => partition_dot(g, &set.partitions[0]),
        Format::Dot => set_dot(g, set),
        Format::Text => {
            let mut out = String::new();
            for (i, s) in set.partitions.iter().enumerate() {
                let levels: Vec<String> =
                    s.levels().iter().map(|l| format!("{{{}}}", join(&labels(g, l.iter().copied())))).collect();
                writeln!(out, "partition {} (height {}): {}", i + 1, s.height(), levels.join(" ")).unwrap();
            }
            out
        }
    }
}

fn analyze(g: &Graph, root: Option<Vertex>, format: Format) -> Result<Report, Failure> {
    let dec = block_decomposition(g);
    let kind = |k: BlockKind| match k {
        BlockKind::TwoConnected => "2-connected",
        BlockKind::Bridge => "bridge",
        BlockKind::IsolatedVertex => "isolated",
    };
    let m = root.map(|v| metrics(g, v));
    let text = match format {
        Format::Dot => match &m {
            Some(m) => graph_dot(g, |u| Some(format!("d={}", m.distances[u]))),
            None => graph_dot(g, |_| None),
        },
        Format::Json => {
            let blocks: Vec<Value> = dec
                .blocks
                .iter()
                .map(|b| json!({ "vertices": labels(g, b.vertices.iter().copied()), "kind": kind(b.kind) }))
                .collect();
            let mut doc = json!({
                "vertices": g.vertex_count(),
                "edges": g.edge_count(),
                "girth": girth(g).length(),
                "blocks": blocks,
                "cut_vertices": labels(g, dec.cut_vertices.iter().copied()),
            });
            if let Some(m) = &m {
                doc["root"] = json!({
                    "vertex": g.label(m.root),
                    "eccentricity": m.eccentricity,
                    "local_girth": m.local_girth.length(),
                    "bipartite": m.bipartition.is_some(),
                    "distances": g.vertices().map(|u| json!([g.label(u), m.distances[u]])).collect::<Vec<_>>(),
                });
            }
            pretty(doc)
        }
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "vertices {}", g.vertex_count()).unwrap();
            writeln!(out, "edges {}", g.edge_count()).unwrap();
            writeln!(out, "girth {}", girth(g)).unwrap();
            if let Some(m) = &m {
                writeln!(out, "root {}", g.label(m.root)).unwrap();
                writeln!(out, "eccentricity {}", m.eccentricity).unwrap();
                writeln!(out, "local girth {}", m.local_girth).unwrap();
                writeln!(out, "bipartite {}", m.bipartition.is_some()).unwrap();
                let d: Vec<String> = g.vertices().map(|u| format!("{}:{}", g.label(u), m.distances[u])).collect();
                writeln!(out, "distances {}", d.join(" ")).unwrap();
            }
            for b in &dec.blocks {
                writeln!(out, "block {} {{{}}}", kind(b.kind), join(&labels(g, b.vertices.iter().copied()))).unwrap();
            }
            writeln!(out, "cut vertices {{{}}}", join(&labels(g, dec.cut_vertices.iter().copied()))).unwrap();
            out
        }
    };
    Ok(Report::yes(text))
}

fn witness_json(g: &Graph, w: &BlockWitness) -> Value {
    let lab = |x: Vertex| g.label(x) as usize;
    match w {
        BlockWitness::OddCycle { block, cycle } => json!({
            "block": labels(g, block.iter().copied()),
            "odd_cycle": labels(g, cycle.vertices().iter().copied()),
        }),
        BlockWitness::Chordal { block, certificate } => {
            let c = certificate.map_vertices(lab);
            json!({
                "block": labels(g, block.iter().copied()),
                "cycle": c.cycle.vertices(),
                "chordal_path": c.chordal_path.vertices(),
                "a": c.a, "b": c.b, "d": c.d, "p": c.p,
                "opposite": c.opposite,
            })
        }
    }
}

fn decide2(g: &Graph, v: Vertex, format: Format) -> Result<Report, Failure> {
    let outcome = construct_two_ldps(g, v)?;
    let text = match (&outcome, format) {
        (TwoLdpOutcome::Found { set, .. }, Format::Dot) => set_dot(g, set),
        (TwoLdpOutcome::NotFound(_), Format::Dot) => graph_dot(g, |_| None),
        (TwoLdpOutcome::Found { set, witnesses }, Format::Json) => pretty(json!({
            "two_ldps": true,
            "witnesses": witnesses.iter().map(|w| witness_json(g, w)).collect::<Vec<_>>(),
            "partitions": serde_json::from_str::<Value>(&write_ldp_json(g, set))?,
        })),
        (TwoLdpOutcome::NotFound(o), Format::Json) => pretty(json!({
            "two_ldps": false,
            "block": labels(g, o.block.iter().copied()),
            "reason": o.condition.to_string(),
        })),
        (TwoLdpOutcome::Found { witnesses, .. }, Format::Text) => {
            let mut out = String::from("yes\n");
            for w in witnesses {
                let doc = witness_json(g, w);
                match w {
                    BlockWitness::OddCycle { .. } => {
                        writeln!(out, "block {}: odd cycle {}", doc["block"], doc["odd_cycle"]).unwrap()
                    }
                    BlockWitness::Chordal { .. } => writeln!(
                        out,
                        "block {}: cycle {} chordal path {} (a={} b={} d={} p={})",
                        doc["block"], doc["cycle"], doc["chordal_path"], doc["a"], doc["b"], doc["d"], doc["p"]
                    )
                    .unwrap(),
                }
            }
            out
        }
        (TwoLdpOutcome::NotFound(o), Format::Text) => {
            format!("no: {} (block {{{}}})\n", o.condition, join(&labels(g, o.block.iter().copied())))
        }
    };
    Ok(Report::verdict(text, outcome.set().is_some()))
}

fn verify(g: &Graph, set: &LdpSet, format: Format) -> Result<Report, Failure> {
    let members: Vec<Option<String>> =
        set.partitions.iter().map(|s| verify_partition(g, s).err().map(|e| e.to_string())).collect();
    let verdict = verify_ldp_set(g, set).map_err(|e| e.to_string());
    let ok = verdict.is_ok();
    let audit_result = ok.then(|| audit(g, set));
    let optimal = ok.then(|| is_optimal(set, g));
    let text = match format {
        Format::Dot => set_dot(g, set),
        Format::Json => pretty(json!({
            "valid": ok,
            "error": verdict.as_ref().err(),
            "members": members,
            "k": set.k(),
            "heights": set.partitions.iter().map(|s| s.height()).collect::<Vec<_>>(),
            "count_optimal": optimal.map(|o| o.count_optimal),
            "height_optimal": optimal.map(|o| o.height_optimal),
            "bounds_hold": audit_result.map(|a| a.is_ok()),
        })),
        Format::Text => {
            let mut out = String::new();
            for (i, m) in members.iter().enumerate() {
                match m {
                    None => writeln!(out, "partition {}: ok (height {})", i + 1, set.partitions[i].height()).unwrap(),
                    Some(e) => writeln!(out, "partition {}: {e}", i + 1).unwrap(),
                }
            }
            match (&verdict, optimal, audit_result) {
                (Ok(()), Some(o), Some(a)) => {
                    writeln!(out, "ok: {} level-disjoint partitions", set.k()).unwrap();
                    writeln!(out, "count optimal {}", o.count_optimal).unwrap();
                    writeln!(out, "height optimal {}", o.height_optimal).unwrap();
                    if let Err(b) = a {
                        writeln!(out, "bound violated: {}", describe(g, &b)).unwrap();
                    }
                }
                (Err(e), _, _) => writeln!(out, "invalid: {e}").unwrap(),
                _ => unreachable!(),
            }
            out
        }
    };
    Ok(Report::verdict(text, ok))
}

fn describe(g: &Graph, b: &BoundViolation) -> String {
    match b {
        BoundViolation::TooMany { k, degree } => format!("{k} partitions exceed root degree {degree}"),
        BoundViolation::MinLevel { vertex, min, floor } => {
            format!("vertex {} lowest level {min} below {floor}", g.label(*vertex))
        }
        BoundViolation::MaxLevel { vertex, max, floor } => {
            format!("vertex {} highest level {max} below {floor}", g.label(*vertex))
        }
        BoundViolation::MixedParity { vertex } => format!("vertex {} has levels of both parities", g.label(*vertex)),
        BoundViolation::Height { height, floor } => format!("height {height} below {floor}"),
    }
}

fn simulate(g: &Graph, set: &LdpSet, format: Format) -> Result<Report, Failure> {
    let trace = schedule(g, set)?;
    let check = validate(g, &trace);
    let text = match format {
        Format::Text => {
            let mut out = write_trace(g, &trace);
            if let Err(e) = &check {
                writeln!(out, "# invalid: {e}").unwrap();
            }
            out
        }
        Format::Json => pretty(json!({
            "root": g.label(trace.root),
            "messages": trace.messages,
            "makespan": trace.makespan(),
            "valid": check.is_ok(),
            "transmissions": trace
                .transmissions()
                .map(|(t, x)| json!([t, g.label(x.sender), g.label(x.receiver), x.message]))
                .collect::<Vec<_>>(),
        })),
        Format::Dot => (1..=trace.makespan()).map(|t| trace_step_dot(g, &trace, t)).collect(),
    };
    Ok(Report::verdict(text, check.is_ok()))
}

fn bounds_report(g: &Graph, v: Vertex, k: usize, format: Format) -> Result<Report, Failure> {
    let b = bounds(g, v, k);
    let feasibility = (k >= 2).then(|| optimal_height_feasible(g, v, k));
    let (feasible, local_girth) = match feasibility {
        Some(Feasibility::Feasible { local_girth, .. }) => (Some(true), local_girth),
        Some(Feasibility::Infeasible { local_girth, .. }) => (Some(false), local_girth),
        None => (None, metrics(g, v).local_girth.length()),
    };
    let floors: Vec<(u64, usize, usize)> = g
        .vertices()
        .filter(|&u| u != v)
        .map(|u| (g.label(u), b.min_level_floor(u), b.max_level_floor(u)))
        .collect();
    let text = match format {
        Format::Json => pretty(json!({
            "root": g.label(v),
            "k": k,
            "max_count": b.max_count,
            "eccentricity": b.eccentricity,
            "bipartite": b.bipartite,
            "height_floor": b.height_floor,
            "local_girth": local_girth,
            "optimal_height_feasible": feasible,
            "level_floors": floors.iter().map(|(u, lo, hi)| json!([u, lo, hi])).collect::<Vec<_>>(),
        })),
        Format::Dot => graph_dot(g, |u| {
            (u != v).then(|| format!("min>={} max>={}", b.min_level_floor(u), b.max_level_floor(u)))
        }),
        Format::Text => {
            let mut out = String::new();
            writeln!(out, "root {} k {}", g.label(v), k).unwrap();
            writeln!(out, "max count {}", b.max_count).unwrap();
            writeln!(out, "eccentricity {}", b.eccentricity).unwrap();
            writeln!(out, "bipartite {}", b.bipartite).unwrap();
            writeln!(out, "height floor {}", b.height_floor).unwrap();
            match local_girth {
                Some(s) => writeln!(out, "local girth {s}").unwrap(),
                None => writeln!(out, "local girth none").unwrap(),
            }
            match feasible {
                Some(true) => writeln!(out, "optimal height feasible").unwrap(),
                Some(false) => writeln!(out, "optimal height infeasible").unwrap(),
                None => {}
            }
            for (u, lo, hi) in &floors {
                writeln!(out, "vertex {u}: min level >= {lo}, max level >= {hi}").unwrap();
            }
            out
        }
    };
    Ok(Report::yes(text))
}
