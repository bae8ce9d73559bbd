use std::process::Command;

use knotlie_cli::{run, Outcome, EXIT_OK, EXIT_SCOPE, EXIT_SELFTEST, EXIT_USAGE};
use serde_json::Value;

fn knotlie(args: &[&str]) -> Outcome {
    run(std::iter::once("knotlie").chain(args.iter().copied()))
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let out = knotlie(&full);
    assert_eq!(out.code, EXIT_OK, "{}", out.stderr);
    serde_json::from_str(&out.stdout).unwrap()
}

#[test]
fn knot_info() {
    let v = json(&["knot", "trefoil"]);
    assert_eq!(v["genus"], 1);
    assert_eq!(v["alexander"], "t^2-t+1");
    let v = json(&["knot", "s1 s1 s1"]);
    assert_eq!(v["components"], 1);
    assert_eq!(v["alexander"], "t^2-t+1");
    let out = knotlie(&["knot", "s1", "--strands", "3"]);
    assert_eq!(out.code, EXIT_USAGE);
    assert!(out.stderr.contains("closure has 2 components"), "{}", out.stderr);
    assert!(out.stdout.is_empty());
}

#[test]
fn bracket_examples() {
    let out = knotlie(&["bracket", "trefoil", "a1", "b1", "--format", "json"]);
    assert_eq!(out.stdout, "{\"terms\":[{\"coeff\":\"1\",\"class\":\"a1.b1\"}]}\n");
    let out = knotlie(&["bracket", "trefoil", "a1", "a1", "--format", "json"]);
    assert_eq!(out.stdout, "{\"terms\":[]}\n");
    let v = json(&["bracket", "figure8", "a1", "b1", "--quotient", "homology"]);
    assert_eq!(v["terms"].as_array().unwrap().len(), 1);
    assert_eq!(v["terms"][0]["coeff"], "1");
    assert_eq!(v["terms"][0]["class"], serde_json::json!([1, 1]));
    let v = json(&["bracket", "figure8", "a1.a1", "b1", "--quotient", "pi"]);
    assert_eq!(v["terms"][0]["class"], "a1");
    assert_eq!(v["terms"][0]["coeff"], "2");
}

#[test]
fn exit_codes() {
    let out = knotlie(&["bracket", "s1 s1 s1", "a1", "b1"]);
    assert_eq!(out.code, EXIT_SCOPE);
    assert!(out.stderr.starts_with("error[E-SCOPE]"));
    assert_eq!(knotlie(&["bracket", "trefoil", "a1", "a2"]).code, EXIT_USAGE);
    assert_eq!(knotlie(&["bracket", "trefoil", "a1", "x?"]).code, EXIT_USAGE);
    assert_eq!(knotlie(&["alexander", "s0"]).code, EXIT_USAGE);
    assert_eq!(knotlie(&["frobnicate"]).code, EXIT_USAGE);
    assert_eq!(knotlie(&["knot", "trefoil", "--orbit-bound", "0"]).code, EXIT_USAGE);
    assert_eq!(knotlie(&["--help"]).code, EXIT_OK);
}

#[test]
fn presentations() {
    let v = json(&["presentation", "figure8"]);
    assert_eq!(v["generators"].as_array().unwrap().len(), 3);
    assert_eq!(v["relators"].as_array().unwrap().len(), 2);
    let v = json(&["presentation", "trefoil", "--cover"]);
    assert_eq!(v["base_rank"], 2);
    assert_eq!(v["relators"][1]["at_level_0"], "x2(0).x1(0).X2(1)");
    assert_eq!(knotlie(&["presentation", "s1 s1 s1", "--cover"]).code, EXIT_SCOPE);
    let out = knotlie(&["presentation", "s1 s1 s1"]);
    assert_eq!(out.stdout, "< x1, x2 | x1.x2.x1.x2.X1.X2.X1.X1 >\n");
}

#[test]
fn tables_are_independent_of_thread_count() {
    let serial = knotlie(&["table", "figure8", "--max-len", "2", "--jobs", "1", "--format", "json"]);
    let parallel = knotlie(&["table", "figure8", "--max-len", "2", "--jobs", "4", "--format", "json"]);
    assert_eq!(serial, parallel);
    let v: Value = serde_json::from_str(&serial.stdout).unwrap();
    let n = v["classes"].as_u64().unwrap() as usize;
    assert_eq!(v["rows"].as_array().unwrap().len(), n * (n - 1) / 2);
    assert_eq!(knotlie(&["table", "trefoil", "--max-len", "9"]).code, EXIT_USAGE);
}

#[test]
fn selftest_reports() {
    let a = knotlie(&["selftest", "--seed", "3", "--format", "json"]);
    let b = knotlie(&["selftest", "--seed", "3", "--format", "json", "--jobs", "1"]);
    assert_eq!(a, b);
    assert_eq!(a.code, EXIT_OK);
    let v: Value = serde_json::from_str(&a.stdout).unwrap();
    assert_eq!(v["failed"], 0);

    let flipped = knotlie(&["selftest", "--suite", "antisymmetry", "--mutation", "sign-flip", "--format", "json"]);
    assert_eq!(flipped.code, EXIT_SELFTEST);
    let v: Value = serde_json::from_str(&flipped.stdout).unwrap();
    assert_eq!(v["suites"][0]["passed"], false);
    assert!(v["suites"][0]["counterexample"].is_string());

    assert_eq!(knotlie(&["selftest", "--suite", "nonsense"]).code, EXIT_USAGE);
    let list = knotlie(&["selftest", "--list"]);
    assert!(list.stdout.contains("naturality-width-2"));
}

#[test]
fn custom_model_file() {
    let dir = std::env::temp_dir().join(format!("knotlie-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("twist.json");
    std::fs::write(
        &path,
        r#"{"genus": 1, "monodromy": {"a1": "a1.b1.a1", "b1": "b1.a1"}, "alexander": "t^2-3t+1"}"#,
    )
    .unwrap();
    let path = path.to_str().unwrap();
    let v = json(&["knot", path]);
    assert_eq!(v["fibered"], true);
    let v = json(&["bracket", path, "a1", "b1"]);
    assert_eq!(v["terms"][0]["class"], "a1.b1");
    std::fs::write(dir.join("bad.json"), r#"{"genus": 1, "monodromy": {"a1": "b1", "b1": "a1"}, "alexander": "1"}"#)
        .unwrap();
    let out = knotlie(&["knot", dir.join("bad.json").to_str().unwrap()]);
    assert_eq!(out.code, EXIT_USAGE);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_streams() {
    let out = Command::new(env!("CARGO_BIN_EXE_knotlie"))
        .args(["bracket", "trefoil", "a1", "b1"])
        .output()
        .unwrap();
    assert!(out.status.success());
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "<a1.b1>\n");
    assert!(out.stderr.is_empty());

    let out = Command::new(env!("CARGO_BIN_EXE_knotlie"))
        .args(["bracket", "s1 s1 s1", "a1", "b1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_SCOPE));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8(out.stderr).unwrap().starts_with("error[E-SCOPE]"));
}
