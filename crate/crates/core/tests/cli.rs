//! End-to-end runs of the binary.

use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_integral-graphs"))
        .args(args)
        .env_remove("INTEGRAL_GRAPHS_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn spectrum_of_k4() {
    let out = run(&["spectrum", "C~"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v, serde_json::json!({"3": 1, "-1": 3}));
}

#[test]
fn petersen_is_exceptional() {
    let out = run(&["recognize-glg", "IheA@GUAo"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "exceptional");
}

#[test]
fn prism_has_root_k23() {
    let out = run(&["--format", "json", "recognize-glg", "E{Sw"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["class"], "glg");
    assert_eq!(v["root"]["f"], serde_json::json!([0, 0, 0, 0, 0]));
}

#[test]
fn usage_errors() {
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(run(&["spectrum", "~~~~"]).status.code(), Some(2));
    assert_eq!(run(&["crosscheck"]).status.code(), Some(2));
    assert_eq!(run(&["--format", "xml", "spectrum", "C~"]).status.code(), Some(2));
    // -2 is an eigenvalue of the prism, so it is no star complement
    assert_eq!(run(&["star-extend", "--base", "E{Sw"]).status.code(), Some(2));
}

#[test]
fn irrational_spectrum_is_a_failure() {
    let out = run(&["spectrum", "Dhc"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn small_root_search() {
    let out = run(&["--format", "csv", "search-glg", "--max-n", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert_eq!(text.lines().next(), Some("h,f,q_spectrum,checks"));
    assert_eq!(text.lines().count(), 9);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",pass")));
}

#[test]
fn exceptional_search_writes_foundation_and_is_deterministic() {
    let dir = std::env::temp_dir().join(format!("integral-graphs-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let corpus = dir.join("foundation.g6");
    let a = run(&["--jobs", "1", "search-exceptional", "--foundation-out", corpus.to_str().unwrap()]);
    let b = Command::new(env!("CARGO_BIN_EXE_integral-graphs"))
        .args(["search-exceptional"])
        .env("INTEGRAL_GRAPHS_JOBS", "3")
        .output()
        .unwrap();
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v: serde_json::Value = serde_json::from_slice(&a.stdout).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 13);
    assert!(v[0].get("base_graph6").is_some());
    assert_eq!(std::fs::read_to_string(&corpus).unwrap().lines().count(), 573);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn crosscheck_small() {
    let out = run(&["--format", "g6", "crosscheck", "--max-n", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out).trim(), "C~");
}

#[test]
fn classify_csv_has_a_row_per_table_entry() {
    let dir = std::env::temp_dir().join(format!("integral-graphs-classify-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("report.csv");
    let out = run(&["--format", "csv", "--out", path.to_str().unwrap(), "classify"]);
    assert_eq!(out.status.code(), Some(0));
    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("name,graph6,n,m3,m2,m1,m0,m-1,m-2,class"));
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 22);
    assert_eq!(rows.iter().filter(|r| r.ends_with(",glg")).count(), 9);
    assert!(rows.contains(&"LG12,K{CX?CJO?A_b,12,1,3,0,2,3,3,glg"));
    std::fs::remove_dir_all(&dir).unwrap();
}
