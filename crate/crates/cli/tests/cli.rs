//! End-to-end tests of the locvol binary: each test invokes the compiled
//! executable with real arguments and checks the JSON or CSV it writes and
//! the exit code it returns.

use std::io::Write;
use std::path::Path;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_locvol"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("binary spawns");
    child
        .stdin
        .take()
        .expect("stdin handle")
        .write_all(input.as_bytes())
        .expect("stdin accepts input");
    child.wait_with_output().expect("binary finishes")
}

fn stdout_json(out: &Output) -> serde_json::Value {
    assert!(
        out.status.success(),
        "expected success, got {:?} with stderr: {}",
        out.status.code(),
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn write_pair(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).expect("fixture writes");
    path.to_str().expect("utf8 path").to_string()
}

#[test]
fn nvol_reports_the_cusp_certificate() {
    let dir = tempfile::tempdir().expect("tempdir");
    let input = write_pair(
        dir.path(),
        "d3.json",
        r#"{"ambient":"A2","boundary":[{"coeff":"5/8","poly":"x^2 - y^3"}]}"#,
    );
    let doc = stdout_json(&run(&["nvol", "--input", &input]));
    assert_eq!(doc["weights"], serde_json::json!([3, 2]));
    assert_eq!(doc["value"], "25/96");
    assert_eq!(doc["certified"], true);
    assert_eq!(doc["kss"], true);
    assert_eq!(doc["different"].as_array().expect("array").len(), 3);
}

#[test]
fn nvol_reads_stdin_and_routes_quotient_ambients() {
    let doc = stdout_json(&run_with_stdin(
        &["nvol", "--input", "-"],
        r#"{"ambient":{"quotient":{"r":3,"a":2}},"boundary":[{"coeff":"1/2","poly":"x*y"}]}"#,
    ));
    assert_eq!(doc["group"], "Q(3,2)");
    assert_eq!(doc["value"], "1/3");
    assert_eq!(doc["certified"], true);
}

#[test]
fn nvol_writes_the_output_file() {
    let dir = tempfile::tempdir().expect("tempdir");
    let input = write_pair(
        dir.path(),
        "empty.json",
        r#"{"ambient":"A2","boundary":[]}"#,
    );
    let out_path = dir.path().join("cert.json");
    let out = run(&[
        "nvol",
        "--input",
        &input,
        "--output",
        out_path.to_str().expect("utf8 path"),
    ]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let doc: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_path).expect("output file"))
            .expect("output is JSON");
    assert_eq!(doc["value"], "4/1");
    assert_eq!(doc["weights"], serde_json::json!([1, 1]));
}

#[test]
fn lct_of_boundary_and_of_ideal() {
    let dir = tempfile::tempdir().expect("tempdir");
    let input = write_pair(
        dir.path(),
        "d3.json",
        r#"{"ambient":"A2","boundary":[{"coeff":"5/8","poly":"x^2 - y^3"}]}"#,
    );
    let doc = stdout_json(&run(&["lct", "--input", &input]));
    assert_eq!(doc["lct"], "1/3");
    assert_eq!(doc["certified"], true);

    let doc = stdout_json(&run(&["lct", "--ideal", "[[1,0],[0,1]]"]));
    assert_eq!(doc["lct"], "2/1");
    assert_eq!(doc["certified"], true);
}

#[test]
fn mult_distinguishes_primary_from_nonprimary() {
    let doc = stdout_json(&run(&["mult", "--ideal", "[[3,0],[0,2]]"]));
    assert_eq!(doc["m_primary"], true);
    assert_eq!(doc["multiplicity"], 6);

    let doc = stdout_json(&run(&["mult", "--ideal", "[[1,0]]"]));
    assert_eq!(doc["m_primary"], false);
    assert_eq!(doc["multiplicity"], serde_json::Value::Null);
}

#[test]
fn kollar_reports_the_blowup_data() {
    let dir = tempfile::tempdir().expect("tempdir");
    let input = write_pair(
        dir.path(),
        "d3.json",
        r#"{"ambient":"A2","boundary":[{"coeff":"5/8","poly":"x^2 - y^3"}]}"#,
    );
    let doc = stdout_json(&run(&["kollar", "--input", &input, "--weights", "3,2"]));
    assert_eq!(doc["log_discrepancy"], "5/4");
    assert_eq!(doc["nvol"], "25/96");
    assert_eq!(doc["plt_grade"], "1/3");
    assert_eq!(doc["kss"], true);
    assert_eq!(doc["weights"], serde_json::json!([3, 2]));
}

#[test]
fn kss_judges_a_divisor_list() {
    let doc = stdout_json(&run(&["kss", "--divisor", r#"[[1,"1/2"],[2,"2/3"]]"#]));
    assert_eq!(doc["kss"], true);

    let doc = stdout_json(&run(&["kss", "--divisor", r#"[[1,"1/2"]]"#]));
    assert_eq!(doc["kss"], false);
}

#[test]
fn quotient_accepts_an_invariant_boundary() {
    let dir = tempfile::tempdir().expect("tempdir");
    let doc = stdout_json(&run(&["quotient", "--group", "Q(7,2)"]));
    assert_eq!(doc["value"], "4/7");

    let input = write_pair(
        dir.path(),
        "q32.json",
        r#"{"ambient":{"quotient":{"r":3,"a":2}},"boundary":[{"coeff":"1/2","poly":"x*y"}]}"#,
    );
    let doc = stdout_json(&run(&["quotient", "--group", "Q(3,2)", "--input", &input]));
    assert_eq!(doc["value"], "1/3");
}

#[test]
fn census_emits_json_or_csv_by_output_extension() {
    let doc = stdout_json(&run(&["census", "--above", "1"]));
    let rows = doc.as_array().expect("array");
    let groups: Vec<&str> = rows
        .iter()
        .map(|r| r["group"].as_str().expect("group"))
        .collect();
    assert_eq!(groups, ["Q(1,0)", "Q(2,1)", "Q(3,1)", "Q(3,2)"]);

    let dir = tempfile::tempdir().expect("tempdir");
    let out_path = dir.path().join("census.csv");
    let out = run(&[
        "census",
        "--above",
        "1",
        "--output",
        out_path.to_str().expect("utf8 path"),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&out_path).expect("csv file");
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("group,value"));
    assert_eq!(lines.next(), Some("\"Q(1,0)\",4/1"));
    assert_eq!(text.lines().count(), 5);
}

#[test]
fn truncate_reports_the_guard_level() {
    let dir = tempfile::tempdir().expect("tempdir");
    let input = write_pair(
        dir.path(),
        "tail.json",
        r#"{"ambient":"A2","boundary":[{"coeff":"1/2","poly":"y^2 - x^3 - x^7"}]}"#,
    );
    let doc = stdout_json(&run(&["truncate", "--input", &input, "--k", "4"]));
    assert_eq!(doc["k"], 4);
    assert_eq!(doc["guard"], 4);
    let poly = doc["pair"]["boundary"][0]["poly"].as_str().expect("poly");
    assert!(poly.contains("y^2"));
    assert!(poly.contains("x^3"));
    assert!(!poly.contains("x^7"));
}

#[test]
fn enumerate_acc_lists_the_certified_volumes() {
    let doc = stdout_json(&run(&[
        "enumerate-acc",
        "--coeffs",
        "1/2",
        "--box",
        "2",
        "--epsilon",
        "1/10",
    ]));
    assert_eq!(doc["values"], serde_json::json!(["1/1", "2/1", "4/1"]));
    assert_eq!(doc["box_bound"], 2);
}

#[test]
fn verify_passes_and_writes_csv_records() {
    let dir = tempfile::tempdir().expect("tempdir");
    let out_path = dir.path().join("records.csv");
    let out = run(&[
        "verify",
        "lct-bound",
        "--count",
        "8",
        "--seed",
        "42",
        "--output",
        out_path.to_str().expect("utf8 path"),
    ]);
    assert!(out.status.success());
    let text = std::fs::read_to_string(&out_path).expect("csv file");
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("digest,lhs,rhs,ok,skipped"));
    assert_eq!(text.lines().count(), 9);
    assert!(text.lines().skip(1).all(|l| l.ends_with(",true,false")));
}

#[test]
fn verify_reports_failure_with_exit_code_one() {
    let out = run(&["verify", "lct-mult", "--levels", "7", "--tolerance", "0"]);
    assert_eq!(out.status.code(), Some(1));
    let doc: serde_json::Value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    assert_eq!(doc["summary"]["failed"], 1);
    let records = doc["records"].as_array().expect("records");
    let last = records.last().expect("limit record");
    assert_eq!(last["lhs"], "5/18");
    assert_eq!(last["ok"], false);
}

#[test]
fn bad_inputs_exit_with_code_two() {
    let dir = tempfile::tempdir().expect("tempdir");

    let out = run(&["nvol"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("--input"));

    let missing = dir.path().join("missing.json");
    let out = run(&["nvol", "--input", missing.to_str().expect("utf8 path")]);
    assert_eq!(out.status.code(), Some(2));

    let bad_ambient = write_pair(
        dir.path(),
        "bad.json",
        r#"{"ambient":"A3","boundary":[]}"#,
    );
    let out = run(&["nvol", "--input", &bad_ambient]);
    assert_eq!(out.status.code(), Some(2));

    let non_klt = write_pair(
        dir.path(),
        "nonklt.json",
        r#"{"ambient":"A2","boundary":[{"coeff":"1/2","poly":"x^2"}]}"#,
    );
    let out = run(&["nvol", "--input", &non_klt]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["verify", "bogus-theorem"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown theorem id"));

    let out = run(&["mult", "--ideal", "not json"]);
    assert_eq!(out.status.code(), Some(2));

    let empty = write_pair(dir.path(), "empty.json", r#"{"ambient":"A2","boundary":[]}"#);
    let json_only = dir.path().join("cert.csv");
    let out = run(&[
        "nvol",
        "--input",
        &empty,
        "--output",
        json_only.to_str().expect("utf8 path"),
    ]);
    assert_eq!(out.status.code(), Some(2));

    let out = run(&["--badflag"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn jobs_flag_limits_the_pool_without_changing_results() {
    let one = run(&[
        "verify",
        "order-bounds",
        "--count",
        "6",
        "--seed",
        "9",
        "--jobs",
        "1",
    ]);
    let many = run(&["verify", "order-bounds", "--count", "6", "--seed", "9"]);
    assert!(one.status.success());
    assert!(many.status.success());
    assert_eq!(
        serde_json::from_slice::<serde_json::Value>(&one.stdout).expect("json"),
        serde_json::from_slice::<serde_json::Value>(&many.stdout).expect("json")
    );
}
