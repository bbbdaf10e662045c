use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    run_env(args, stdin, &[])
}

fn run_env(args: &[&str], stdin: &str, env: &[(&str, &str)]) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_indgap"));
    cmd.args(args).stdin(Stdio::piped()).stdout(Stdio::piped()).stderr(Stdio::piped());
    cmd.env_remove("GRAPH_CAP");
    for (k, v) in env {
        cmd.env(k, v);
    }
    let mut child = cmd.spawn().unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json_lines(out: &Output) -> Vec<Value> {
    String::from_utf8_lossy(&out.stdout).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

#[test]
fn analyze_reports_gaps() {
    // P3 and the claw.
    let out = run(&["analyze", "--json"], "Bg\nCs\n");
    assert_eq!(code(&out), 0);
    let rows = json_lines(&out);
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["gap"], 1);
    assert_eq!(rows[0]["witnesses"]["i1"], serde_json::json!([0, 2]));
    assert_eq!(rows[1]["gap"], 2);
    assert_eq!(rows[1]["hereditary_gap"], 2);
    assert_eq!(rows[1]["index"], 1);
}

#[test]
fn analyze_empty_input_emits_nothing() {
    let out = run(&["analyze", "--json"], "");
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let out = run(&["analyze", "--format", "edgelist"], "\n");
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
}

#[test]
fn edge_list_input() {
    let out = run(&["analyze", "--json", "--format", "edgelist"], "3\n0 1\n1 2\n");
    assert_eq!(json_lines(&out)[0]["gap"], 1);
}

#[test]
fn input_errors_exit_2() {
    let out = run(&["analyze"], "Bw\nB!\n");
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("graph 2"));
    let out = run(&["analyze", "--format", "edgelist"], "3\n0 0\n");
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 2"));
    let out = run(&["analyze", "/nonexistent/graphs.g6"], "");
    assert_eq!(code(&out), 2);
}

#[test]
fn capacity_errors_exit_3() {
    let out = run_env(&["analyze"], "Bw\n", &[("GRAPH_CAP", "2")]);
    assert_eq!(code(&out), 3);
    let out = run(&["mine", "--k", "1", "--max-n", "10"], "");
    assert_eq!(code(&out), 3);
}

#[test]
fn recognize_modes() {
    let verdicts = |args: &[&str], input: &str| -> Vec<Value> {
        let out = run(args, input);
        assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
        json_lines(&out).into_iter().map(|r| r["verdict"].clone()).collect()
    };
    assert_eq!(verdicts(&["recognize", "--json", "--mode", "gap", "--k", "1", "--p", "3"], "Bg\n"), [true]);
    assert_eq!(verdicts(&["recognize", "--json", "--mode", "gap", "--k", "0", "--p", "3"], "Bg\n"), [false]);
    // C5 is not semi-perfect, K3 is not K3-free.
    assert_eq!(
        verdicts(&["recognize", "--json", "--mode", "gap", "--k", "1", "--p", "3"], "Dhc\nBw\n"),
        ["inapplicable", "inapplicable"]
    );
    assert_eq!(verdicts(&["recognize", "--json", "--mode", "gap", "--k", "0"], "Ch\nBg\n"), [true, false]);
    assert_eq!(verdicts(&["recognize", "--json", "--mode", "hereditary", "--k", "1"], "Dhc\nCs\n"), [true, false]);
    assert_eq!(verdicts(&["recognize", "--json", "--mode", "well-covered"], "Ch\nBg\n"), [true, false]);
    assert_eq!(verdicts(&["recognize", "--json", "--mode", "semi-perfect"], "Ch\nDhc\n"), [true, false]);
    assert_eq!(verdicts(&["recognize", "--json", "--mode", "claw-2p3-free"], "Dhc\nCs\n"), [true, false]);
}

#[test]
fn recognize_requires_k() {
    let out = run(&["recognize", "--mode", "gap"], "Bg\n");
    assert_eq!(code(&out), 2);
}

#[test]
fn hereditary_recognition_marks_provisional_verdicts() {
    let out = run(&["recognize", "--json", "--mode", "hereditary", "--k", "1"], "Dhc\nCs\n");
    let rows = json_lines(&out);
    assert_eq!(rows[0]["provisional"], true);
    assert_eq!(rows[1]["provisional"], false);
    assert_eq!(rows[1]["witness"]["vertices"], serde_json::json!([0, 1, 2, 3]));
    let out = run(&["recognize", "--json", "--mode", "hereditary", "--k", "0"], "Dhc\n");
    assert_eq!(json_lines(&out)[0]["verdict"], false);
}

#[test]
fn check_tight_with_explicit_partition() {
    let out = run(&["check-tight", "--json", "--k", "1", "--partition", "0,1;2"], "Bg\n");
    let row = &json_lines(&out)[0];
    assert_eq!(row["verdict"], false);
    assert_eq!(row["witness_cliques"], serde_json::json!([1]));
    assert_eq!(row["witness_set"], serde_json::json!([1]));
    let out = run(&["check-tight", "--json", "--k", "2"], "Bg\n");
    assert_eq!(json_lines(&out)[0]["verdict"], true);
    let out = run(&["check-tight", "--k", "1", "--partition", "0,2;1"], "Bg\n");
    assert_eq!(code(&out), 2);
}

#[test]
fn mine_writes_catalog_and_sidecar() {
    let dir = std::env::temp_dir().join(format!("indgap-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("k1.g6");
    let out = run(&["mine", "--k", "1", "--max-n", "6", "--output", path.to_str().unwrap()], "");
    assert_eq!(code(&out), 0);
    let members = std::fs::read_to_string(&path).unwrap();
    assert_eq!(members.lines().count(), 2);
    let meta: Value = serde_json::from_str(&std::fs::read_to_string(dir.join("k1.g6.json")).unwrap()).unwrap();
    assert_eq!(meta["derived_bound"], 10);

    let out = run(
        &["recognize", "--json", "--mode", "hereditary", "--k", "1", "--catalog", path.to_str().unwrap()],
        "Cs\nDhc\n",
    );
    let rows = json_lines(&out);
    assert_eq!((rows[0]["verdict"].clone(), rows[1]["verdict"].clone()), (false.into(), true.into()));
    let out = run(
        &["recognize", "--mode", "hereditary", "--k", "2", "--catalog", path.to_str().unwrap()],
        "Cs\n",
    );
    assert_eq!(code(&out), 2);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn reduce_emits_artifacts() {
    let out = run(&["reduce", "--kind", "gadget", "--k", "2"], "A_\n");
    let line = String::from_utf8_lossy(&out.stdout).to_string();
    let artifact: Value = serde_json::from_str(line.split('\t').nth(1).unwrap()).unwrap();
    // The gadget of K2 with k = 2 is K6.
    assert_eq!(artifact["graph6"], "E~~w");
    assert_eq!(artifact["edge_kinds"].as_array().unwrap().len(), 15);

    let out = run(&["reduce", "--json", "--kind", "star", "--k", "2"], "A_\n");
    let row = &json_lines(&out)[0];
    assert_eq!(row["params"]["star_leaves"], 3);
    assert_eq!(row["role_map"].as_array().unwrap().len(), 6);

    let out = run(&["reduce", "--json", "--kind", "universal", "--k", "3"], "B?\n");
    assert_eq!(json_lines(&out)[0]["witness"], serde_json::json!([0, 1, 2, 3]));
}

#[test]
fn verify_reports_pass() {
    for kind in ["gadget", "star", "universal"] {
        let out = run(&["verify", "--json", "--kind", kind, "--k", "2"], "A_\nBg\n");
        assert_eq!(code(&out), 0, "{kind}: {}", String::from_utf8_lossy(&out.stdout));
    }
}

#[test]
fn selftest_suites() {
    let out = run(&["selftest", "--suite", "claw-2p3", "--max-n", "7"], "");
    assert_eq!(code(&out), 0);
    assert!(String::from_utf8_lossy(&out.stdout).starts_with("PASS claw-2p3"));
    let out = run(&["selftest", "--json", "--suite", "tightness", "--suite", "gadget", "--max-n", "4", "--k", "2"], "");
    assert_eq!(code(&out), 0);
    let rows = json_lines(&out);
    assert_eq!(rows.len(), 2);
    assert!(rows.iter().all(|r| r["failures"].as_array().unwrap().is_empty()));
    let out = run(&["selftest", "--suite", "nope"], "");
    assert_eq!(code(&out), 2);
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("indgap-out-{}.jsonl", std::process::id()));
    let out = run(&["analyze", "--json", "--output", path.to_str().unwrap()], "Bg\n");
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text.lines().count(), 1);
    std::fs::remove_file(&path).unwrap();
}
