use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use heawood_core::embedding::RotationEmbedding;
use heawood_core::formats::{parse_embedding, parse_graph};
use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_heawood")).args(args).output().unwrap()
}

fn run_fixtures(args: &[&str], files: &[&str]) -> Output {
    let paths: Vec<String> = files.iter().map(|f| fixture(f).display().to_string()).collect();
    let mut all: Vec<&str> = args.to_vec();
    all.extend(paths.iter().map(String::as_str));
    run(&all)
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = vec!["--format", "json"];
    all.extend_from_slice(args);
    let o = run(&all);
    (o.status.code().unwrap(), serde_json::from_slice(&o.stdout).unwrap())
}

fn statuses(report: &Value) -> Vec<(String, String)> {
    report["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .map(|v| (v["check"].as_str().unwrap().to_string(), v["status"].as_str().unwrap().to_string()))
        .collect()
}

#[test]
fn heawood_table_rows() {
    let (code, r) = json(&["heawood-table", "4"]);
    assert_eq!(code, 0);
    assert_eq!(r["format_version"], 1);
    let rows: Vec<(i64, i64, bool)> = r["data"]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| (row["epsilon"].as_i64().unwrap(), row["heawood"].as_i64().unwrap(), row["window"]["special"].as_bool().unwrap()))
        .collect();
    assert_eq!(rows, vec![(1, 6, false), (2, 7, false), (3, 7, true), (4, 8, false)]);
    assert_eq!(r["data"][1]["klein_bottle_clique"], 6);
    let text = stdout(&run(&["heawood-table", "1"]));
    assert!(text.contains("1     6"));
    assert!(!text.contains("\n2 "));
}

#[test]
fn check_instance_colours_projective_k6() {
    let o = run_fixtures(&["check-instance"], &["k6_projective.graph", "k6_projective.emb"]);
    assert_eq!(o.status.code(), Some(2), "missing arguments");
    let g = fixture("k6_projective.graph");
    let e = fixture("k6_projective.emb");
    let l = fixture("k6_face0.lists");
    let (code, r) = json(&["check-instance", g.to_str().unwrap(), e.to_str().unwrap(), "0", l.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert!(statuses(&r).contains(&("coloring".into(), "pass".into())));
    let colors: Vec<u64> = r["verdicts"]
        .as_array()
        .unwrap()
        .iter()
        .find(|v| v["check"] == "coloring")
        .unwrap()["detail"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_u64().unwrap())
        .collect();
    // Oracle: the colouring must respect the lists and the edges of K6.
    let lists: Vec<Vec<u64>> = std::fs::read_to_string(&l)
        .unwrap()
        .lines()
        .map(|line| line.split_whitespace().map(|t| t.parse().unwrap()).collect())
        .collect();
    for (v, c) in colors.iter().enumerate() {
        assert!(lists[v].contains(c));
    }
    let mut sorted = colors.clone();
    sorted.sort();
    sorted.dedup();
    assert_eq!(sorted.len(), 6);
}

#[test]
fn check_instance_excuses_an_f_bad_clique() {
    let o = run_fixtures(&["check-instance"], &["k5_face.graph", "k5_face.emb"]);
    assert_eq!(o.status.code(), Some(2));
    let (g, e, l) = (fixture("k5_face.graph"), fixture("k5_face.emb"), fixture("k5_four.lists"));
    let o = run(&["check-instance", g.to_str().unwrap(), e.to_str().unwrap(), "1", l.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("[PASS] excused by F-bad K5"));
}

#[test]
fn face_digest_must_match() {
    let (g, e, l) = (fixture("k6_projective.graph"), fixture("k6_projective.emb"), fixture("k6_face0.lists"));
    let args = |d: &'static str| {
        run(&["check-instance", g.to_str().unwrap(), e.to_str().unwrap(), "0", l.to_str().unwrap(), "--face-digest", d])
    };
    assert_eq!(args("49f87b8b373032c2").status.code(), Some(0));
    assert_eq!(args("0000000000000000").status.code(), Some(2));
}

#[test]
fn planar_embeddings_are_refused() {
    let (g, e, l) = (fixture("k4.graph"), fixture("k4_planar.emb"), fixture("k4_three.lists"));
    let o = run(&["check-instance", g.to_str().unwrap(), e.to_str().unwrap(), "0", l.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("Euler genus at least 1"));
}

#[test]
fn solve_reports_missing_colourings() {
    let o = run_fixtures(&["solve"], &["k4.graph", "k4_three.lists"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("no colouring exists"));
}

#[test]
fn parse_errors_name_the_line() {
    let dir = std::env::temp_dir().join(format!("heawood-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.graph");
    std::fs::write(&bad, "3 2\n0 1\n1 x\n").unwrap();
    let lists = fixture("k4_three.lists");
    let o = run(&["solve", bad.to_str().unwrap(), lists.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn trace_faces_of_projective_k6() {
    let (code, r) = json(&["trace-faces", fixture("k6_projective.emb").to_str().unwrap()]);
    assert_eq!(code, 0);
    let trace = &r["verdicts"][0]["detail"];
    assert_eq!(trace["euler_genus"], 1);
    assert_eq!(trace["faces"], 10);
    assert_eq!(trace["orientable"], false);
}

#[test]
fn constructions_pass_their_checks() {
    for args in [
        &["verify-construction", "gallai", "--k", "4"][..],
        &["verify-construction", "special-family", "--i", "2"],
        &["verify-construction", "glued-polygon", "--n", "8"],
        &["verify-construction", "glued-polygon", "--n", "8", "--twist"],
    ] {
        let (code, r) = json(args);
        assert_eq!(code, 0, "{args:?}");
        let s = statuses(&r);
        assert!(s.iter().any(|(_, st)| st == "pass"), "{args:?}");
        assert!(s.iter().all(|(_, st)| st != "fail"), "{args:?}: {s:?}");
    }
}

#[test]
fn special_case_bound_and_feasibility() {
    let (code, r) = json(&["special-case-bound", "9", "11"]);
    assert_eq!(code, 0);
    let d = &r["verdicts"][0]["detail"];
    assert_eq!((d["lower"].as_i64(), d["upper"].as_i64()), (Some(110), Some(108)));
    assert_eq!(run(&["special-case-bound", "4", "8"]).status.code(), Some(2));
    let (code, r) = json(&["feasibility", "3"]);
    assert_eq!(code, 0);
    assert_eq!(r["verdicts"][0]["detail"]["status"], "not_embeddable");
}

#[test]
fn small_desk_suites_pass() {
    for args in [
        &["verify-greedy", "--count", "50"][..],
        &["verify-embeddings", "--count", "50"],
        &["verify-small-orders", "1", "--max-n", "5"],
    ] {
        let (code, r) = json(args);
        assert_eq!(code, 0, "{args:?}");
        assert!(statuses(&r).iter().all(|(_, st)| st == "pass"), "{args:?}");
    }
    assert_eq!(run(&["verify-small-orders", "3"]).status.code(), Some(2));
}

/// Splits `generate` output into its `# name` sections.
fn sections(text: &str) -> Vec<(String, String)> {
    let mut out: Vec<(String, String)> = Vec::new();
    for line in text.lines() {
        if let Some(name) = line.strip_prefix("# ") {
            out.push((name.to_string(), String::new()));
        } else if let Some((_, body)) = out.last_mut() {
            body.push_str(line);
            body.push('\n');
        }
    }
    out
}

#[test]
fn generated_gluing_round_trips() {
    let o = run(&["generate", "glued", "--n", "9", "--shape", "snake", "--twist"]);
    assert_eq!(o.status.code(), Some(0));
    let parts = sections(&stdout(&o));
    let graph = parse_graph(&parts.iter().find(|(n, _)| n == "graph").unwrap().1).unwrap();
    let emb: RotationEmbedding = parse_embedding(&parts.iter().find(|(n, _)| n == "embedding").unwrap().1).unwrap();
    assert_eq!(emb.graph(), &graph);
    assert!(!emb.is_orientable());
    assert!(emb.faces().iter().any(|f| f.vertices.len() == graph.n()));
}

#[test]
fn generate_complete_minus() {
    let o = run(&["generate", "complete-minus", "6", "0-1,2-3"]);
    assert_eq!(o.status.code(), Some(0));
    let parts = sections(&stdout(&o));
    let g = parse_graph(&parts[0].1).unwrap();
    assert_eq!(g.edge_count(), 13);
    assert!(!g.has_edge(0, 1) && !g.has_edge(2, 3));
}
