use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use iasi::graph::{catalog, io::write_graph};
use iasi::Graph;
use tempfile::TempDir;

fn iasi(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_iasi"))
        .args(args)
        .env_remove("IASI_ORACLE_CHECKPOINT_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn write(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn graph_file(dir: &TempDir, name: &str, g: &Graph) -> PathBuf {
    write(dir, name, &write_graph(g))
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).expect("json report")
}

#[test]
fn construct_then_verify_c4() {
    let dir = TempDir::new().unwrap();
    let g = graph_file(&dir, "c4.graph", &catalog::cycle(4));
    let lab = dir.path().join("c4.lab");
    let o = iasi(&["construct", s(&g), "--output", s(&lab)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let o = iasi(&["verify", s(&g), s(&lab), "--strong"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    assert!(stdout(&o).contains("outcome.holds = true"));
}

#[test]
fn shared_difference_is_named() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g", "a b\n");
    let lab = write(&dir, "l", "a: {0,2}\nb: {5,7}\n");
    let o = iasi(&["--format", "json", "verify", s(&g), s(&lab), "--strong"]);
    assert_eq!(code(&o), 1);
    let report = json(&o);
    let witness = &report["outcome"]["report"]["witnesses"][0];
    assert_eq!(witness["kind"], "non_strong_edge");
    assert_eq!(witness["edge"], serde_json::json!(["a", "b"]));
    assert_eq!(witness["shared_differences"], serde_json::json!([2]));
}

#[test]
fn malformed_set_is_a_parse_error() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g", "a b\n");
    let lab = write(&dir, "l", "a: {1,2\nb: {3}\n");
    let o = iasi(&["verify", s(&g), s(&lab)]);
    assert_eq!(code(&o), 2);
    let err = stderr(&o);
    assert!(err.contains("line 1"), "{err}");
    assert!(err.contains("column"), "{err}");
}

#[test]
fn petersen_round_trip() {
    let dir = TempDir::new().unwrap();
    let g = graph_file(&dir, "petersen", &catalog::petersen());
    let lab = dir.path().join("petersen.lab");
    let o = iasi(&["construct", s(&g), "--cardinality", "2", "--output", s(&lab)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let o = iasi(&["verify", s(&g), s(&lab), "--strong"]);
    assert_eq!(code(&o), 0, "{}", stdout(&o));
}

#[test]
fn k5_has_five_strides() {
    let dir = TempDir::new().unwrap();
    let g = graph_file(&dir, "k5", &catalog::complete(5));
    let trace = dir.path().join("trace.json");
    let o = iasi(&["construct", s(&g), "--cardinality", "3", "--trace", s(&trace)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let t: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&trace).unwrap()).unwrap();
    let strides: Vec<u64> = serde_json::from_value(t["strides"].clone()).unwrap();
    let mut distinct = strides.clone();
    distinct.dedup();
    assert_eq!(distinct.len(), 5, "{strides:?}");
}

#[test]
fn single_vertex_is_rejected() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "k1", "v a\n");
    let o = iasi(&["construct", s(&g)]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("isolated"));
}

#[test]
fn cards_file_sets_sizes() {
    let dir = TempDir::new().unwrap();
    let g = write(&dir, "g", "a b\nb c\n");
    let cards = write(&dir, "cards", "a: 1\nb: 3\nc: 2\n");
    let lab = dir.path().join("lab");
    let o = iasi(&["construct", s(&g), "--cards", s(&cards), "--mode", "clique-cover", "--output", s(&lab)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let f = iasi::labeling::io::parse_labeling(&std::fs::read_to_string(&lab).unwrap()).unwrap();
    assert_eq!(f.get("a").unwrap().len(), 1);
    assert_eq!(f.get("b").unwrap().len(), 3);
    assert_eq!(f.get("c").unwrap().len(), 2);
}

fn nourish(g: &Graph) -> i32 {
    let dir = TempDir::new().unwrap();
    let p = graph_file(&dir, "g", g);
    let o = iasi(&["--format", "json", "nourish", s(&p)]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    json(&o)["outcome"]["nourishing_number"].as_i64().unwrap() as i32
}

#[test]
fn nourish_examples() {
    assert_eq!(nourish(&catalog::complete(7)), 7);
    assert_eq!(nourish(&catalog::cycle(6)), 2);
    assert_eq!(nourish(&catalog::wheel(5)), 3);
}

#[test]
fn nourish_empty_graph_fails() {
    let dir = TempDir::new().unwrap();
    let p = write(&dir, "g", "# nothing\n");
    assert_eq!(code(&iasi(&["nourish", s(&p)])), 2);
}

fn op(name: &str, gs: &[&Graph]) -> (i32, serde_json::Value) {
    let dir = TempDir::new().unwrap();
    let mut args = vec!["--format".to_string(), "json".into(), "ops".into(), name.into()];
    for (i, g) in gs.iter().enumerate() {
        let p = graph_file(&dir, &format!("g{i}"), g);
        args.push(s(&p).to_string());
    }
    let o = iasi(&args.iter().map(String::as_str).collect::<Vec<_>>());
    let c = code(&o);
    (c, if c == 2 { serde_json::Value::Null } else { json(&o)["outcome"].clone() })
}

#[test]
fn ops_examples() {
    let k2 = catalog::complete(2).rename("x").unwrap();
    let (c, out) = op("join", &[&k2, &catalog::complete(3)]);
    assert_eq!(c, 0);
    assert_eq!(out["kappa"], 5);
    assert_eq!(out["predicted_kappa"]["value"], 5);

    let (c, out) = op("product", &[&catalog::cycle(3), &catalog::path(2)]);
    assert_eq!(c, 0);
    assert_eq!(out["kappa"], 3);
    assert_eq!(out["vertices"], 6);
    assert_eq!(out["edges"], 9);

    let (c, out) = op("corona", &[&catalog::path(2), &catalog::complete(3)]);
    assert_eq!(c, 0);
    assert_eq!(out["kappa"], 4);
    assert_eq!(out["predicted_kappa"]["value"], 4);
}

#[test]
fn join_name_collision_exits_2() {
    let (c, _) = op("join", &[&catalog::complete(2), &catalog::complete(3)]);
    assert_eq!(c, 2);
}

#[test]
fn ops_arity_exits_2() {
    let (c, _) = op("complement", &[&catalog::path(3), &catalog::path(3)]);
    assert_eq!(c, 2);
}

#[test]
fn union_overlap_counterexample_is_flagged() {
    // P3 a-b-c together with the edge a-c: the overlap {a, c} has no edges,
    // yet the union is a triangle.
    let p3 = Graph::from_edges([("a", "b"), ("b", "c")]).unwrap();
    let ac = Graph::from_edges([("a", "c")]).unwrap();
    let (c, out) = op("union", &[&p3, &ac]);
    assert_eq!(c, 1);
    assert_eq!(out["kappa"], 3);
    assert_eq!(out["predicted_kappa"]["value"], 2);
    assert_eq!(out["prediction_holds"], false);
}

#[test]
fn ops_output_is_a_graph_file() {
    let dir = TempDir::new().unwrap();
    let g = graph_file(&dir, "p4", &catalog::path(4));
    let out = dir.path().join("comp");
    let o = iasi(&["ops", "complement", s(&g), "--output", s(&out)]);
    assert_eq!(code(&o), 0);
    let h = iasi::graph::io::parse_graph(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert!(catalog::is_isomorphic(&h, &catalog::path(4)));
}

#[test]
fn oracle_lemma() {
    let o = iasi(&["oracle", "lemma", "--max", "6"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("agrees on all pairs"));
}

#[test]
fn oracle_lemma_limit() {
    let o = iasi(&["oracle", "lemma", "--max", "40"]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("universe"), "{}", stderr(&o));
}

#[test]
fn oracle_minchain_k3() {
    let dir = TempDir::new().unwrap();
    let g = graph_file(&dir, "k3", &catalog::complete(3));
    let o = iasi(&["--format", "json", "oracle", "minchain", s(&g), "--cards", "2", "--max", "6"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let out = &json(&o)["outcome"];
    assert_eq!(out["oracle"], 3);
    assert_eq!(out["clique_number"], 3);
    assert_eq!(out["agreement"], "agree");
}

#[test]
fn oracle_vertex_limit() {
    let dir = TempDir::new().unwrap();
    let g = graph_file(&dir, "c6", &catalog::cycle(6));
    let o = iasi(&["oracle", "minchain", s(&g)]);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("vertex_limit"), "{}", stderr(&o));
}

#[test]
fn oracle_concurrent_p4() {
    let dir = TempDir::new().unwrap();
    let g = graph_file(&dir, "p4", &catalog::path(4));
    let o = iasi(&["--format", "json", "oracle", "concurrent", s(&g), "--max", "7"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let out = &json(&o)["outcome"];
    assert_eq!(out["exists"], true);
    assert_eq!(out["disjointness_violations"], 0);
}

#[test]
fn text_report_is_sorted_with_digests() {
    let dir = TempDir::new().unwrap();
    let g = graph_file(&dir, "k3", &catalog::complete(3));
    let o = iasi(&["nourish", s(&g)]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert!(lines.last().unwrap().starts_with("timing.wall_ms = "));
    let body = &lines[..lines.len() - 1];
    let mut sorted = body.to_vec();
    sorted.sort();
    assert_eq!(body, &sorted[..]);
    assert!(text.contains("sha256"));
}

#[test]
fn report_written_to_output() {
    let dir = TempDir::new().unwrap();
    let g = graph_file(&dir, "k3", &catalog::complete(3));
    let rep = dir.path().join("report");
    let o = iasi(&["nourish", s(&g), "--output", s(&rep)]);
    assert_eq!(code(&o), 0);
    assert!(std::fs::read_to_string(&rep).unwrap().contains("outcome.nourishing_number = 3"));
}

#[test]
fn unknown_subcommand_exits_2() {
    assert_eq!(code(&iasi(&["frobnicate"])), 2);
}

#[test]
fn missing_file_exits_2() {
    assert_eq!(code(&iasi(&["nourish", "/nonexistent/graph"])), 2);
}
