use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn nakayama(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_nakayama"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8")
}

fn json(args: &[&str]) -> Value {
    let out = nakayama(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

#[test]
fn analyze_linear_example() {
    let v = json(&["analyze", "[3,4,4,3,2,1]", "--format", "json"]);
    assert_eq!(v["gldim"], 3);
    assert_eq!(v["magnitude"]["num"], 2);
    assert_eq!(v["magnitude"]["den"], 1);
    assert_eq!(v["cartan_determinant"], 1);
    assert_eq!(v["cartan"][0], serde_json::json!([1, 1, 1, 0, 0, 0]));
}

#[test]
fn analyze_cyclic_example() {
    let v = json(&["analyze", "cyclic:[3,3,3,4]", "--format", "json"]);
    assert_eq!(v["gldim"], 5);
    assert_eq!(v["magnitude"]["num"], 1);
    let cycles = v["resolution_quiver"]["cycles"].as_array().unwrap();
    assert_eq!(cycles.len(), 1);
    assert_eq!(cycles[0]["vertices"], serde_json::json!([3]));
    assert_eq!(cycles[0]["weight"], serde_json::json!({"num": 1, "den": 1}));
}

#[test]
fn analyze_singular_cartan() {
    let out = nakayama(&["analyze", "cyclic:[2,2]"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("global dimension:   ∞"), "{text}");
    assert!(text.contains("Cartan determinant: 0"), "{text}");

    let v = json(&["analyze", "cyclic:[2,2]", "--format", "json"]);
    assert_eq!(v["gldim"], "infinite");
    assert_eq!(v["cartan_determinant"], 0);
    assert!(v["magnitude"].is_null());
}

#[test]
fn analyze_path_input() {
    let word = json(&["analyze", "UUDUDD", "--format", "json"]);
    let area = json(&["analyze", "--path", "[3,3,2,1]", "--format", "json"]);
    assert_eq!(word, area);
    assert_eq!(word["height"], 2);
    assert_eq!(word["linear"], "[3,3,2,1]");
}

#[test]
fn analyze_reads_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_nakayama"))
        .args(["analyze", "-", "--format", "json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(b"[3,4,4,3,2,1]\n").unwrap();
    let out = child.wait_with_output().unwrap();
    assert!(out.status.success());
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["gldim"], 3);
}

#[test]
fn analyze_json_round_trips() {
    for input in ["[3,4,4,3,2,1]", "cyclic:[3,3,3,4]", "cyclic:[2,2]", "[2,1,2,1]", "cyclic:[6,8,9,9,8,7]"] {
        let first = json(&["analyze", input, "--format", "json"]);
        let series = first["series"].as_str().unwrap();
        let second = json(&["analyze", series, "--format", "json"]);
        assert_eq!(first, second, "{input}");
    }
}

#[test]
fn sincere_from_dyck() {
    let out = nakayama(&["bijection", "sincere", "--from-dyck", "[3,4,4,3,2,1]"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "cyclic:[6,8,9,9,8,7]");
    let back = nakayama(&["bijection", "sincere", "--to-dyck", "cyclic:[6,8,9,9,8,7]"]);
    assert_eq!(stdout(&back).trim(), "UUDUUDUDDD");
}

#[test]
fn bounded_bijection_round_trip() {
    let out = nakayama(&["bijection", "bounded", "--g", "4", "--to-dyck", "[5,6,5,4,4,3,3,3,2,3,2,1]"]);
    assert!(out.status.success());
    let path = stdout(&out).trim().to_string();
    assert_eq!(path, "UDUUDUUUUDDDUUUDUDUDDDDD");
    let back = nakayama(&["bijection", "bounded", "--g", "4", "--from-dyck", &path]);
    assert_eq!(stdout(&back).trim(), "[5,6,5,4,4,3,3,3,2,3,2,1]");
}

#[test]
fn enumerate_linear() {
    let out = nakayama(&["enumerate", "linear", "--n", "3"]);
    assert!(out.status.success());
    let lines: Vec<&str> = std::str::from_utf8(&out.stdout).unwrap().lines().collect();
    assert_eq!(lines, ["[2,2,1]", "[3,2,1]"]);
}

#[test]
fn enumerate_counts() {
    let count = |args: &[&str]| stdout(&nakayama(args)).trim().parse::<usize>().unwrap();
    assert_eq!(count(&["enumerate", "paths", "--n", "6", "--count"]), 132);
    assert_eq!(count(&["enumerate", "trees", "--n", "6", "--count"]), 42);
    assert_eq!(count(&["enumerate", "m1", "--n", "5", "--count"]), 42);
    assert_eq!(count(&["enumerate", "cyclic", "--n", "4", "--max-entry", "10", "--count"]), 75);
    assert_eq!(count(&["enumerate", "cyclic-finite", "--n", "4", "--count"]), 15);
}

#[test]
fn distribution_formats() {
    let v = json(&["distribution", "gldim", "--n", "2", "--format", "json"]);
    assert_eq!(v["counts"], serde_json::json!({"1": 1}));

    let out = nakayama(&["distribution", "height", "--n", "4", "--format", "csv"]);
    assert_eq!(stdout(&out), "value,count\n1,1\n2,3\n3,1\n");
    let gldim = nakayama(&["distribution", "gldim", "--n", "4", "--format", "csv"]);
    assert_eq!(stdout(&gldim), stdout(&out));
}

#[test]
fn verify_selected_suites() {
    let out = nakayama(&[
        "verify",
        "--suite",
        "equidistribution",
        "--suite",
        "sincere-bounce",
        "--suite",
        "quiver-oracle",
        "--n",
        "6",
    ]);
    assert!(out.status.success(), "{}", stdout(&out));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 3);
    assert!(lines[0].starts_with("PASS equidistribution"));
    assert!(lines[1].starts_with("PASS sincere-bounce"));
    assert!(lines[2].starts_with("PASS quiver-oracle"));
}

#[test]
fn verify_json() {
    let v = json(&["verify", "--suite", "codec", "--n", "5", "--format", "json"]);
    let reports = v.as_array().unwrap();
    assert_eq!(reports.len(), 1);
    assert_eq!(reports[0]["passed"], true);
    assert!(reports[0]["checked"].as_u64().unwrap() > 0);
}

#[test]
fn malformed_input_exits_2() {
    for args in [
        &["analyze", "[1,3]"][..],
        &["analyze", "[3,2"],
        &["analyze", "cyclic:[1,2]"],
        &["analyze", "UUD"],
        &["analyze", "DU"],
        &["analyze", "--path", "[2,1,3]"],
        &["bijection", "linear", "--from-dyck", "UUXD"],
        &["bijection", "linear", "--to-dyck", "[a]"],
    ] {
        let out = nakayama(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(!out.stderr.is_empty());
    }
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(nakayama(&["verify", "--suite", "nonsense"]).status.code(), Some(2));
    assert_eq!(nakayama(&["enumerate", "paths"]).status.code(), Some(2));
    assert_eq!(nakayama(&["bijection", "bounded", "--to-dyck", "[2,1]"]).status.code(), Some(2));
    assert_eq!(nakayama(&["verify", "--n", "0"]).status.code(), Some(2));
}

#[test]
fn domain_errors_exit_3() {
    for args in [
        &["bijection", "m1", "--to-dyck", "[2,2,1]"][..],
        &["bijection", "sincere", "--to-dyck", "[3,2,1]"],
        &["bijection", "linear", "--to-dyck", "cyclic:[2,2]"],
        &["bijection", "bounded", "--g", "1", "--to-dyck", "[2,2,1]"],
        &["bijection", "bounded", "--g", "1", "--from-dyck", "UUUDDD"],
    ] {
        let out = nakayama(args);
        assert_eq!(out.status.code(), Some(3), "{args:?}");
    }
}
