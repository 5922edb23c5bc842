use std::fs;
use std::process::{Command, Output};

fn ldp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ldp")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn even_cycle_has_no_pair() {
    let o = ldp(&["decide2", "--gen", "cycle:6", "--root", "0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("block bipartite, no separating chordal certificate"));
}

#[test]
fn construct_then_verify() {
    let dir = tempfile::tempdir().unwrap();
    let doc = dir.path().join("q3.json");
    let doc = doc.to_str().unwrap();
    let o = ldp(&["construct", "--gen", "hypercube:3", "--root", "0", "--k", "2", "--out", doc]);
    assert_eq!(o.status.code(), Some(0));
    let o = ldp(&["verify", "--gen", "hypercube:3", "--ldp", doc]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).contains("ok: 2 level-disjoint partitions"));
}

#[test]
fn petersen_bounds() {
    let o = ldp(&["bounds", "--gen", "petersen", "--root", "0", "--k", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("height floor 3\n"));
    assert!(text.contains("optimal height infeasible\n"));
}

#[test]
fn search_outcomes() {
    let o = ldp(&["search", "--gen", "complete_bipartite:3,3", "--root", "0", "--k", "3", "--cap", "5"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "exhausted\n");
    let o = ldp(&["search", "--gen", "hypercube:3", "--root", "0", "--k", "3", "--cap", "7"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(doc["partitions"].as_array().unwrap().len(), 3);
}

#[test]
fn graph_file_with_sparse_labels() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g.txt");
    fs::write(&path, "# bowtie\n10 20\n20 30\n30 10\n30 40\n40 50\n50 30\n").unwrap();
    let g = path.to_str().unwrap();
    let o = ldp(&["decide2", "--graph", g, "--root", "30"]);
    assert_eq!(o.status.code(), Some(0));
    let o = ldp(&["decide2", "--graph", g, "--root", "10"]);
    assert_eq!(o.status.code(), Some(0));
    let o = ldp(&["construct", "--graph", g, "--root", "30", "--format", "text"]);
    assert!(stdout(&o).starts_with("partition 1 (height 2): {30} "));
}

#[test]
fn simulate_from_document() {
    let dir = tempfile::tempdir().unwrap();
    let doc = dir.path().join("c5.json");
    fs::write(&doc, r#"{"root":0,"partitions":[[[0],[1],[2],[3],[4]],[[0],[4],[3],[2],[1]]]}"#).unwrap();
    let o = ldp(&["simulate", "--gen", "cycle:5", "--ldp", doc.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let lines: Vec<String> = stdout(&o).lines().map(String::from).collect();
    assert_eq!(lines[2..4], ["1 0 1 1".to_string(), "1 0 4 2".to_string()]);
    assert_eq!(lines.len(), 2 + 8);
}

#[test]
fn rejects_clashing_document() {
    let dir = tempfile::tempdir().unwrap();
    let doc = dir.path().join("bad.json");
    fs::write(&doc, r#"{"root":0,"partitions":[[[0],[1],[2],[3]],[[0],[3],[2],[1]]]}"#).unwrap();
    let o = ldp(&["verify", "--gen", "cycle:4", "--ldp", doc.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("invalid:"));
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(ldp(&["decide2", "--gen", "cycle:2", "--root", "0"]).status.code(), Some(2));
    assert_eq!(ldp(&["decide2", "--gen", "cycle:5", "--root", "9"]).status.code(), Some(2));
    assert_eq!(ldp(&["decide2", "--root", "0"]).status.code(), Some(2));
    assert_eq!(ldp(&["verify", "--gen", "cycle:5", "--ldp", "/nonexistent/x.json"]).status.code(), Some(2));
    let o = ldp(&["decide2", "--gen", "cycle:5", "--graph", "x", "--root", "0"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn json_outputs_are_deterministic_and_rereadable() {
    let dir = tempfile::tempdir().unwrap();
    let a = ldp(&["construct", "--gen", "grid:3,3", "--root", "4"]);
    let b = ldp(&["construct", "--gen", "grid:3,3", "--root", "4"]);
    assert_eq!(a.stdout, b.stdout);
    let doc = dir.path().join("grid.json");
    fs::write(&doc, &a.stdout).unwrap();
    let o = ldp(&["simulate", "--gen", "grid:3,3", "--ldp", doc.to_str().unwrap(), "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["valid"], true);
}

#[test]
fn gen_round_trips_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("p.txt");
    let o = ldp(&["gen", "--gen", "petersen", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let o = ldp(&["analyze", "--graph", path.to_str().unwrap(), "--root", "0", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["edges"], 15);
    assert_eq!(v["girth"], 5);
    assert_eq!(v["root"]["eccentricity"], 2);
}
