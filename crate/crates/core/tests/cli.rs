use std::path::Path;
use std::process::{Command, Output};

fn nkstar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nkstar")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

#[test]
fn export_dot_counts() {
    let out = nkstar(&["export", "4", "2", "--format", "dot"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.starts_with("graph \"S(4,2)\" {"));
    assert_eq!(text.lines().filter(|l| l.contains("[label=")).count(), 12);
    assert_eq!(text.lines().filter(|l| l.contains(" -- ")).count(), 18);
}

#[test]
fn export_csv_rows() {
    let out = nkstar(&["export", "3", "2", "--format", "csv-edges"]);
    assert!(out.status.success());
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("u,v,u_label,v_label,tag"));
    assert_eq!(lines.count(), 6);
}

#[test]
fn gen_round_trips_through_a_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s53.json");
    let out = nkstar(&["--output", path.to_str().unwrap(), "gen", "5", "3"]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    let g = nkstar::io::from_json(&text).unwrap();
    assert_eq!((g.n(), g.k(), g.vertex_count()), (5, 3, 60));
}

#[test]
fn info_reports_invariants() {
    let v = json(&nkstar(&["info", "5", "3"]));
    assert_eq!(v["vertices"], 60);
    assert_eq!(v["min_degree"], 4);
    assert_eq!(v["max_degree"], 4);
    assert_eq!(v["swap_edges_per_vertex"], 2);
    assert_eq!(v["unswap_edges_per_vertex"], 2);
    assert_eq!(v["edge_connectivity"], 4);
}

#[test]
fn lambda_commands() {
    assert_eq!(stdout(&nkstar(&["lambda", "5", "3"])).trim(), "4");
    let out = nkstar(&["lambda-h", "5", "3", "1"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["value"], 6);
    assert_eq!(v["exact"], true);
}

#[test]
fn cut_with_explicit_alpha() {
    let v = json(&nkstar(&["cut", "5", "3", "1", "--alpha", "45"]));
    assert_eq!(v["valid"], true);
    assert_eq!(v["size"], 6);
    assert_eq!(v["X"].as_array().unwrap().len(), 2);
    assert_eq!(v["mode"], "SubClique");
}

#[test]
fn decompose_summary() {
    let v = json(&nkstar(&["decompose", "5", "3", "--t", "3"]));
    assert_eq!(v["parts_isomorphic"], true);
    assert_eq!(v["cross_matchings"], true);
    assert_eq!(v["part_sizes"].as_array().unwrap().len(), 5);
    assert_eq!(v["cross_counts"]["1-2"], 3);
}

#[test]
fn lemma28_and_fault_trial_succeed() {
    assert!(nkstar(&["lemma28", "5", "3", "1"]).status.success());
    let out = nkstar(&["--seed", "11", "fault-trial", "4", "3", "1", "--trials", "200"]);
    assert!(out.status.success());
    assert_eq!(json(&out)["disconnections"], 0);
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(nkstar(&["gen", "9", "9"]).status.code(), Some(2));
    assert_eq!(nkstar(&["lambda-h", "4", "2", "3"]).status.code(), Some(0));
    assert_eq!(nkstar(&["cut", "5", "3", "4"]).status.code(), Some(2));
    assert_eq!(nkstar(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(nkstar(&["export", "3", "2", "--format", "png"]).status.code(), Some(2));
}

#[test]
fn unwritable_output_exits_1() {
    let out = nkstar(&["--output", "/nonexistent-dir/x.json", "gen", "3", "2"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn verify_csv_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let run = |name: &str| {
        let path = dir.path().join(name);
        let out = nkstar(&["--seed", "7", "--output", path.to_str().unwrap(), "verify", "--n-max", "4"]);
        assert_eq!(out.status.code(), Some(0));
        std::fs::read(Path::new(&path)).unwrap()
    };
    let a = run("a.csv");
    assert_eq!(a, run("b.csv"));
    let text = String::from_utf8(a).unwrap();
    assert_eq!(text.lines().count(), 1 + 7);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true,true,")));
}
