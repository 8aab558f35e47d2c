use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::OnceLock;

use planar_covers::corpus::ResultsTable;

fn pcover(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pcover"))
        .args(args)
        .env_remove("PCOVER_BUDGET")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().expect("exited normally")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn corpus() -> &'static Path {
    static DIR: OnceLock<PathBuf> = OnceLock::new();
    DIR.get_or_init(|| {
        let out = Path::new(env!("CARGO_TARGET_TMPDIR")).join("pcover-corpus");
        let _ = std::fs::remove_dir_all(&out);
        let o = pcover(&["gen", "examples", "--out", s(&out)]);
        assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
        out
    })
}

fn error_record(o: &Output) -> serde_json::Value {
    let text = String::from_utf8_lossy(&o.stderr);
    let line = text.lines().find(|l| l.starts_with('{')).expect("a JSON error record");
    serde_json::from_str(line).unwrap()
}

#[test]
fn generated_corpus_validates() {
    let out = corpus();
    let mut files: Vec<PathBuf> = std::fs::read_dir(out).unwrap().map(|e| e.unwrap().path()).collect();
    files.sort();
    assert!(files.len() > 20);
    for f in &files {
        let o = pcover(&["validate", s(f)]);
        let name = f.file_name().unwrap().to_str().unwrap();
        // graphs with loops are reported, but parse
        let loops = ["bouquet2.graph.json", "irregular-triple-over-bouquet.cover.json", "irregular-triple-over-bouquet.scheme.json"];
        let expected = if loops.contains(&name) { 1 } else { 0 };
        assert_eq!(code(&o), expected, "{name}: {}", stdout(&o));
    }
    for name in [
        "irregular-triple-over-bouquet.quotient.json",
        "double-over-k4-sphere.quotient.json",
        "double-over-k4-projective.quotient.json",
        "have-to-lift.lifted-quotient.json",
    ] {
        assert!(out.join(name).exists(), "{name} missing");
    }
}

#[test]
fn negami_check_verdicts() {
    let out = corpus();
    let cover = out.join("cube-over-k4.cover.json");
    let o = pcover(&["negami", "check", "--cover", s(&cover), "--all-embeddings"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("P²"), "{}", stdout(&o));

    let scrambled = out.join("scrambled-triple-over-k4.cover.json");
    let o = pcover(&["negami", "check", "--cover", s(&scrambled), "--all-embeddings"]);
    assert_eq!(code(&o), 1, "{}", stdout(&o));

    let star = out.join("star-counter-pattern.cover.json");
    let scheme = out.join("star-counter-pattern.scheme.json");
    let o = pcover(&["negami", "check", "--cover", s(&star), "--scheme", s(&scheme)]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("property V fails"));
}

#[test]
fn quotient_report_round_trip_and_tamper() {
    let out = corpus();
    let dir = tempfile::tempdir().unwrap();
    let cover = out.join("cube-over-k4.cover.json");
    let q3 = out.join("cube-over-k4.scheme.json");
    let report = dir.path().join("cube.quotient.json");
    let o = pcover(&["negami", "quotient", "--cover", s(&cover), "--scheme", s(&q3), "--out", s(&report)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let o = pcover(&["validate", s(&report)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("projective plane"));

    let mut doc: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&report).unwrap()).unwrap();
    doc["payload"]["degree"] = 3.into();
    std::fs::write(&report, serde_json::to_string(&doc).unwrap()).unwrap();
    let o = pcover(&["validate", s(&report)]);
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).starts_with("invalid"));
}

#[test]
fn malformed_input_exits_2_with_json_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"format_version":1,"kind":"graph","payload":{"vertices":["a"],"edges":[{"id":0,"ends":["a","z"]}]}}"#)
        .unwrap();
    let o = pcover(&["validate", s(&bad)]);
    assert_eq!(code(&o), 1, "structural errors are reported by validate");
    let o = pcover(&["embed", "planar", s(&bad)]);
    assert_eq!(code(&o), 2);
    assert_eq!(error_record(&o)["exit_code"], 2);

    std::fs::write(&bad, "not json").unwrap();
    let o = pcover(&["cover", "classify", s(&bad)]);
    assert_eq!(code(&o), 2);
    assert_eq!(code(&pcover(&["no-such-command"])), 2);
}

#[test]
fn conjecture_search_budget_stop_and_resume() {
    let out = corpus();
    let dir = tempfile::tempdir().unwrap();
    let graph = out.join("k4.graph.json");
    let results = dir.path().join("k4.jsonl");
    let args = ["search", "conjecture", "--graph", s(&graph), "--max-degree", "3", "--out", s(&results)];
    let o = pcover(&[&args[..], &["--budget", "100"]].concat());
    assert_eq!(code(&o), 3);
    assert_eq!(error_record(&o)["exit_code"], 3);
    let partial = ResultsTable::read_jsonl(std::fs::read_to_string(&results).unwrap().as_bytes()).unwrap();
    assert_eq!(partial.rows.len(), 7);
    assert!(partial.cursor.is_some());

    let o = pcover(&["search", "conjecture", "--graph", s(&graph), "--max-degree", "3", "--resume", s(&results)]);
    assert_eq!(code(&o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let full = ResultsTable::read_jsonl(std::fs::read_to_string(&results).unwrap().as_bytes()).unwrap();
    assert!(full.cursor.is_none());
    assert_eq!(full.rows.len(), 7 + 194);
}

#[test]
fn sharded_runs_cover_the_whole_table() {
    let out = corpus();
    let dir = tempfile::tempdir().unwrap();
    let graph = out.join("c4.graph.json");
    let mut rows = Vec::new();
    for k in 0..3 {
        let path = dir.path().join(format!("c4-{k}.jsonl"));
        let shard = format!("{k}/3");
        let o = pcover(&[
            "search", "conjecture", "--graph", s(&graph), "--max-degree", "3", "--shard", &shard, "--out", s(&path),
        ]);
        assert_eq!(code(&o), 0);
        let t = ResultsTable::read_jsonl(std::fs::read_to_string(&path).unwrap().as_bytes()).unwrap();
        rows.extend(t.rows.into_iter().map(|r| (r.degree, r.voltage_index)));
    }
    rows.sort();
    let whole = pcover(&["search", "conjecture", "--graph", s(&graph), "--max-degree", "3"]);
    let t = ResultsTable::read_jsonl(whole.stdout.as_slice()).unwrap();
    let all: Vec<_> = t.rows.iter().map(|r| (r.degree, r.voltage_index)).collect();
    assert_eq!(rows, all);
}

#[test]
fn lift_and_export() {
    let out = corpus();
    let dir = tempfile::tempdir().unwrap();
    let twisted = out.join("c3-twisted.scheme.json");
    let lifted = dir.path().join("hexagon.scheme.json");
    let proj = dir.path().join("hexagon.cover.json");
    let o = pcover(&["lift", "odc", "--scheme", s(&twisted), "--out-scheme", s(&lifted), "--out-cover", s(&proj)]);
    assert_eq!(code(&o), 0);
    let o = pcover(&["embed", "surface", s(&lifted)]);
    assert!(stdout(&o).contains("sphere"), "{}", stdout(&o));
    let o = pcover(&["cover", "regular", s(&proj)]);
    assert_eq!(code(&o), 0);

    let o = pcover(&["export", "dot", s(&twisted)]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("style=dashed color=red"));
}

#[test]
fn in_process_entry_point() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = planar_covers::cli::run(["pcover", "gen", "k4"], &mut out, &mut err);
    assert_eq!(code, 0);
    let text = String::from_utf8(out).unwrap();
    assert!(matches!(
        planar_covers::interchange::parse(&text).unwrap(),
        planar_covers::interchange::Document::Graph(_)
    ));
}
