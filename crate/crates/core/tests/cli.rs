use std::path::PathBuf;
use std::process::Command;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_f1rep"))
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name)
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = bin().args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap(), String::from_utf8(out.stderr).unwrap())
}

#[test]
fn ni_table_for_one_loop() {
    let (code, out, _) = run(&["ni-table", "--quiver", "L1", "--max", "6"]);
    assert_eq!(code, 0);
    assert_eq!(out, "n,NI\n1,1\n2,1\n3,1\n4,1\n5,1\n6,1\n");
}

#[test]
fn ni_table_json_and_all() {
    let (code, out, _) = run(&["ni-table", "--quiver", "L1", "--max", "2", "--all", "--format", "json"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["i"], 2);
    assert_eq!(v[1]["ni"], 1);
}

#[test]
fn hall_suite_passes() {
    let (code, out, err) = run(&["verify", "--suite", "hall", "--quiver", "L1", "--dim-cap", "4"]);
    assert_eq!(code, 0, "{out}");
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], true);
    assert!(err.contains("asymptotic"));
}

#[test]
fn failing_suite_exits_with_one() {
    let (code, out, _) = run(&["verify", "--suite", "loop-reduction", "--max", "2"]);
    assert_eq!(code, 1);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["pass"], false);
}

#[test]
fn usage_errors_exit_with_two() {
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["ni-table", "--quiver", "L1", "--bogus"]).0, 2);
    assert_eq!(run(&["verify", "--suite", "nope"]).0, 2);
    assert_eq!(run(&["ni-table", "--quiver", "Z9"]).0, 2);
    assert_eq!(run(&["dot"]).0, 2);
}

#[test]
fn dot_matches_golden_file() {
    let rep = fixture("gamma_v.json");
    let (code, out, _) = run(&["dot", "--rep", rep.to_str().unwrap()]);
    assert_eq!(code, 0);
    assert_eq!(out, std::fs::read_to_string(fixture("gamma_v.dot")).unwrap());
}

#[test]
fn output_is_stable_across_thread_counts() {
    let args = ["enumerate", "--quiver", "L2", "--max", "3"];
    let one = bin().args(args).env("F1REP_THREADS", "1").output().unwrap().stdout;
    let four = bin().args(args).env("F1REP_THREADS", "4").output().unwrap().stdout;
    assert_eq!(one, four);
    assert_eq!(String::from_utf8(one).unwrap().lines().count(), 1 + 1 + 1 + 4 + 17);
}

#[test]
fn hall_mul_and_comul() {
    let s = r#"{"quiver": {"vertices": 1, "arrows": [[0, 0]]}, "dims": [1]}"#;
    let (code, out, _) = run(&["hall-mul", "--quiver", "L1", s, s]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let mut coeffs: Vec<&str> = v.as_object().unwrap().values().map(|c| c.as_str().unwrap()).collect();
    coeffs.sort();
    assert_eq!(coeffs, ["1/1", "2/1"]);
    let (code, out, _) = run(&["hall-comul", "--quiver", "L1", s]);
    assert_eq!(code, 0);
    assert_eq!(serde_json::from_str::<serde_json::Value>(&out).unwrap().as_object().unwrap().len(), 2);
}

#[test]
fn classify_and_skew() {
    let (code, out, _) = run(&["classify", "--quiver", "PT1"]);
    assert_eq!(code, 0);
    assert!(out.contains("ProperPseudotree"));
    let (code, out, err) = run(&["skew", "--cells", "2"]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert!(err.contains("##"));
}

#[test]
fn out_flag_writes_a_file() {
    let dir = std::env::temp_dir().join(format!("f1rep-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("table.csv");
    let (code, out, _) = run(&["ni-table", "--quiver", "A2", "--max", "3", "--out", path.to_str().unwrap()]);
    assert_eq!((code, out.as_str()), (0, ""));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "n,NI\n1,2\n2,1\n3,0\n");
    std::fs::remove_dir_all(dir).unwrap();
}
