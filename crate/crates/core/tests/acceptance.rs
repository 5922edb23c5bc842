//! Acceptance suite: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::Instant;

use ldp_core::bounds::audit;
use ldp_core::graph::{block_decomposition, generate, BlockKind, GraphFamily};
use ldp_core::search::{all_solutions, brute_force, SearchOutcome};
use ldp_core::sim::{ldps_from_trace, schedule, validate};
use ldp_core::{
    bounds, construct_two_ldps, extract_certificate, is_optimal, optimal_height_feasible, r_of, two_ldps_chordal,
    verify_ldp_set, verify_partition, Graph, LdpSet, LevelPartition, TwoLdpOutcome, Vertex,
};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

const SIM_GRAPHS: usize = 200;
const SIM_SEED: u64 = 7;
const SIM_SOLUTIONS_PER_ROOT: usize = 16;
const BOUND_GRAPHS: usize = 200;
const BOUND_SEED: u64 = 11;
const BOUND_SOLUTIONS_PER_ROOT: usize = 32;
const MERGE_GRAPHS: usize = 120;
const MERGE_SEED: u64 = 13;
const MERGE_SOLUTIONS_PER_ROOT: usize = 64;
const MAX_RANDOM_ORDER: usize = 8;

type Outcome = Result<String, String>;

fn q3() -> Graph {
    generate(&GraphFamily::Hypercube(3)).unwrap()
}

/// Level partition from levels written as binary coordinate strings.
fn bin_partition(levels: &[&[&str]]) -> LevelPartition {
    LevelPartition::new(
        levels
            .iter()
            .map(|l| l.iter().map(|s| usize::from_str_radix(s, 2).unwrap()).collect())
            .collect(),
    )
}

fn q3_pair() -> LdpSet {
    let s = bin_partition(&[&["000"], &["001"], &["011"], &["010", "111"], &["110"], &["100"], &["101"]]);
    let t = bin_partition(&[&["000"], &["010"], &["110"], &["100"], &["101"], &["001", "111"], &["011"]]);
    LdpSet::new(0, vec![s, t])
}

fn q3_triple() -> LdpSet {
    let s = bin_partition(&[&["000"], &["010"], &["011"], &["001"], &["101"], &["100"], &["110"], &["111"]]);
    let t = bin_partition(&[&["000"], &["100"], &["110"], &["010", "111"], &["011"], &["001"], &["101"]]);
    let u = bin_partition(&[&["000"], &["001"], &["101"], &["100"], &["110"], &["010", "111"], &["011"]]);
    LdpSet::new(0, vec![s, t, u])
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn criterion_1() -> Outcome {
    let g = q3();
    let set = q3_pair();
    for (i, s) in set.partitions.iter().enumerate() {
        verify_partition(&g, s).map_err(|e| format!("member {i}: {e}"))?;
    }
    verify_ldp_set(&g, &set).map_err(|e| e.to_string())?;
    ensure(r_of(&set, 0b010) == vec![1, 3], || format!("R(010) = {:?}", r_of(&set, 0b010)))?;
    ensure(r_of(&set, 0b101) == vec![4, 6], || format!("R(101) = {:?}", r_of(&set, 0b101)))?;
    ensure(set.max_height() == 6, || format!("max height {}", set.max_height()))?;
    Ok("R(010)={1,3}, R(101)={4,6}, height 6".into())
}

fn criterion_2() -> Outcome {
    let g = q3();
    let set = q3_triple();
    verify_ldp_set(&g, &set).map_err(|e| e.to_string())?;
    let opt = is_optimal(&set, &g);
    ensure(opt.count_optimal && opt.height_optimal, || format!("{opt:?}"))?;
    let floor = bounds(&g, 0, 3).height_floor;
    ensure(set.max_height() == 7 && floor == 7, || format!("height {} floor {floor}", set.max_height()))?;
    Ok("k=3=deg, height 7 = floor".into())
}

fn criterion_3() -> Outcome {
    for m in 1..=5 {
        let n = 2 * m + 1;
        let g = generate(&GraphFamily::Cycle(n)).unwrap();
        let out = construct_two_ldps(&g, 0).map_err(|e| e.to_string())?;
        let set = out.set().ok_or(format!("C{n}: no pair"))?;
        verify_ldp_set(&g, set).map_err(|e| format!("C{n}: {e}"))?;
        let heights: Vec<usize> = set.partitions.iter().map(|s| s.height()).collect();
        ensure(heights == vec![2 * m, 2 * m], || format!("C{n}: heights {heights:?}"))?;
    }
    for m in 2..=6 {
        let n = 2 * m;
        let g = generate(&GraphFamily::Cycle(n)).unwrap();
        let out = construct_two_ldps(&g, 0).map_err(|e| e.to_string())?;
        ensure(out.set().is_none(), || format!("C{n}: pair constructed"))?;
        ensure(brute_force(&g, 0, 2, n - 1) == SearchOutcome::Exhausted, || format!("C{n}: search found a pair"))?;
    }
    Ok("odd C3..C11 heights 2m; even C4..C12 none, search exhausted".into())
}

/// Decision agreement between the construction and the search at one root.
fn cross_check(g: &Graph, v: Vertex) -> Result<bool, String> {
    let n = g.vertex_count();
    let out = construct_two_ldps(g, v).map_err(|e| e.to_string())?;
    let searched = brute_force(g, v, 2, n - 1);
    if let Some(set) = out.set() {
        verify_ldp_set(g, set).map_err(|e| format!("constructed pair fails: {e}"))?;
        audit(g, set).map_err(|e| format!("constructed pair breaks a bound: {e:?}"))?;
    }
    if out.set().is_some() != searched.found().is_some() {
        return Err(format!(
            "edges {:?} root {v}: construct {} search {}",
            g.edges().collect::<Vec<_>>(),
            out.set().is_some(),
            searched.found().is_some()
        ));
    }
    Ok(out.set().is_some())
}

fn criterion_4() -> Outcome {
    let (mut graphs, mut roots, mut positive) = (0usize, 0usize, 0usize);
    for n in 2..=6usize {
        let all: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |w| (u, w))).collect();
        for mask in 0u32..1 << all.len() {
            let edges: Vec<_> = all.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
            let Ok(g) = Graph::from_edges(n, &edges) else { continue };
            graphs += 1;
            for v in 0..n {
                roots += 1;
                positive += cross_check(&g, v)? as usize;
            }
        }
    }
    Ok(format!("{graphs} connected labeled graphs on 2..6 vertices, {roots} roots agree ({positive} positive)"))
}

fn criterion_5() -> Outcome {
    let g = generate(&GraphFamily::Petersen).unwrap();
    for v in g.vertices() {
        match construct_two_ldps(&g, v).map_err(|e| e.to_string())? {
            TwoLdpOutcome::Found { set, .. } => verify_ldp_set(&g, &set).map_err(|e| format!("root {v}: {e}"))?,
            TwoLdpOutcome::NotFound(o) => return Err(format!("root {v}: {}", o.condition)),
        }
        for k in [2, 3] {
            ensure(!optimal_height_feasible(&g, v, k).is_feasible(), || format!("root {v} k={k}: feasible"))?;
        }
        ensure(brute_force(&g, v, 2, 3) == SearchOutcome::Exhausted, || format!("root {v}: k=2 cap 3 found"))?;
        ensure(brute_force(&g, v, 3, 4) == SearchOutcome::Exhausted, || format!("root {v}: k=3 cap 4 found"))?;
    }
    Ok("all 10 roots: pair exists, optimal height infeasible and exhausted for k=2,3".into())
}

fn criterion_6() -> Outcome {
    let g = generate(&GraphFamily::CompleteBipartite(3, 3)).unwrap();
    let mut positive = 0;
    for v in g.vertices() {
        ensure(brute_force(&g, v, 3, 5) == SearchOutcome::Exhausted, || format!("root {v}: k=3 cap 5 found"))?;
        positive += cross_check(&g, v)? as usize;
    }
    Ok(format!("k=3 cap 5 exhausted at all 6 roots; k=2 agreement ({positive} positive)"))
}

fn random_connected(rng: &mut StdRng) -> Graph {
    loop {
        let n = rng.gen_range(2..=MAX_RANDOM_ORDER);
        let p = rng.gen_range(0.25..0.8);
        let edges: Vec<_> =
            (0..n).flat_map(|u| (u + 1..n).map(move |w| (u, w))).filter(|_| rng.gen_bool(p)).collect();
        if let Ok(g) = Graph::from_edges(n, &edges) {
            return g;
        }
    }
}

fn random_bipartite_two_connected(rng: &mut StdRng) -> Graph {
    loop {
        let n = rng.gen_range(4..=MAX_RANDOM_ORDER);
        let left = rng.gen_range(2..=n - 2);
        let p = rng.gen_range(0.4..0.9);
        let edges: Vec<_> =
            (0..left).flat_map(|u| (left..n).map(move |w| (u, w))).filter(|_| rng.gen_bool(p)).collect();
        let Ok(g) = Graph::from_edges(n, &edges) else { continue };
        let blocks = block_decomposition(&g).blocks;
        if blocks.len() == 1 && blocks[0].kind == BlockKind::TwoConnected {
            return g;
        }
    }
}

fn criterion_7() -> Outcome {
    let mut rng = StdRng::seed_from_u64(SIM_SEED);
    let mut sets = 0;
    for _ in 0..SIM_GRAPHS {
        let g = random_connected(&mut rng);
        for v in g.vertices() {
            for set in all_solutions(&g, v, 2, g.vertex_count() - 1, SIM_SOLUTIONS_PER_ROOT) {
                sets += 1;
                let trace = schedule(&g, &set).map_err(|e| e.to_string())?;
                validate(&g, &trace).map_err(|e| format!("{e}"))?;
                let back = ldps_from_trace(&g, &trace).map_err(|e| format!("{e}"))?;
                ensure(back == set, || "round trip changed the partitions".into())?;
                ensure(trace.makespan() == set.max_height(), || "makespan differs from height".into())?;
                ensure(trace.makespan() >= bounds(&g, v, 2).height_floor, || "makespan below floor".into())?;
            }
        }
    }
    Ok(format!("{SIM_GRAPHS} graphs, {sets} schedules validated and round-tripped"))
}

fn criterion_8() -> Outcome {
    let mut rng = StdRng::seed_from_u64(BOUND_SEED);
    let mut sets = 0;
    let mut check = |g: &Graph, set: &LdpSet| -> Result<(), String> {
        verify_ldp_set(g, set).map_err(|e| e.to_string())?;
        audit(g, set).map_err(|e| format!("{e:?} on edges {:?}", g.edges().collect::<Vec<_>>()))?;
        sets += 1;
        Ok(())
    };
    for fixture in [q3_pair(), q3_triple()] {
        check(&q3(), &fixture)?;
    }
    for _ in 0..BOUND_GRAPHS {
        let g = random_connected(&mut rng);
        for v in g.vertices() {
            if let Some(set) = construct_two_ldps(&g, v).map_err(|e| e.to_string())?.set() {
                check(&g, set)?;
            }
            for k in 1..=g.degree(v).min(3) {
                for set in all_solutions(&g, v, k, g.vertex_count() - 1, BOUND_SOLUTIONS_PER_ROOT) {
                    check(&g, &set)?;
                }
            }
        }
    }
    Ok(format!("{sets} sets satisfy the degree, level, parity and height bounds"))
}

fn criterion_9() -> Outcome {
    let mut rng = StdRng::seed_from_u64(MERGE_SEED);
    let mut sets = 0;
    for _ in 0..MERGE_GRAPHS {
        let g = random_bipartite_two_connected(&mut rng);
        for v in g.vertices() {
            for set in all_solutions(&g, v, 2, g.vertex_count() - 1, MERGE_SOLUTIONS_PER_ROOT) {
                sets += 1;
                let edges = || format!("edges {:?} root {v}", g.edges().collect::<Vec<_>>());
                let cert = extract_certificate(&g, &set).map_err(|e| format!("{}: {e}", edges()))?;
                cert.validate(&g).map_err(|e| format!("{}: {e}", edges()))?;
                ensure(cert.a >= cert.b && cert.d >= cert.p && cert.a < cert.b + cert.d, || {
                    format!("{}: a={} b={} d={} p={}", edges(), cert.a, cert.b, cert.d, cert.p)
                })?;
                let rebuilt = two_ldps_chordal(&cert).map_err(|e| format!("{}: {e}", edges()))?;
                let sub = g.edge_subgraph(&cycle_and_path_edges(&cert)).map_err(|e| e.to_string())?;
                let local = rebuilt.map_vertices(|x| sub.to_local(x).unwrap());
                verify_ldp_set(&sub.graph, &local).map_err(|e| format!("{}: {e}", edges()))?;
            }
        }
    }
    Ok(format!("{MERGE_GRAPHS} graphs, {sets} pairs yield separating certificates that rebuild"))
}

fn cycle_and_path_edges(cert: &ldp_core::graph::ChordalCertificate) -> Vec<(Vertex, Vertex)> {
    let mut e = cert.cycle.edges();
    e.extend(cert.chordal_path.edges());
    e
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 9] = [
        ("Q3 pair fixture", criterion_1),
        ("Q3 triple fixture", criterion_2),
        ("cycle family", criterion_3),
        ("two-partition cross-check, n <= 6", criterion_4),
        ("Petersen", criterion_5),
        ("K33 probe", criterion_6),
        ("simulator soundness", criterion_7),
        ("bound invariants", criterion_8),
        ("merge and extract", criterion_9),
    ];
    // optional criterion numbers on the command line select a subset
    let only: Vec<usize> = std::env::args().skip(1).filter_map(|a| a.parse().ok()).collect();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        if !only.is_empty() && !only.contains(&(i + 1)) {
            continue;
        }
        let start = Instant::now();
        let result = run();
        let secs = start.elapsed().as_secs_f64();
        match result {
            Ok(detail) => println!("criterion {}: PASS  {name}: {detail} ({secs:.2}s)", i + 1),
            Err(detail) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {detail} ({secs:.2}s)", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
