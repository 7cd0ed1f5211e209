use std::path::PathBuf;
use std::process::{Command, Output};

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn mckay(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mckay"))
        .args(args)
        .current_dir(root())
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn golden(name: &str) -> String {
    let path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/golden")
        .join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

#[test]
fn table_s4_text() {
    let o = mckay(&["table", "--group", "corpus/s4", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let degrees: Vec<&str> = out
        .lines()
        .filter(|l| l.trim_start().starts_with("X."))
        .map(|l| l.split_whitespace().nth(1).unwrap())
        .collect();
    assert_eq!(degrees, ["1", "1", "2", "3", "3"]);
}

#[test]
fn table_c7_has_seventh_roots() {
    let out = stdout(&mckay(&["table", "--group", "corpus/c7"]));
    let rows: Vec<&str> = out
        .lines()
        .filter(|l| l.trim_start().starts_with("X."))
        .collect();
    assert_eq!(rows.len(), 7);
    assert!(rows[1..].iter().all(|r| r.contains("z7")));
}

#[test]
fn table_goldens() {
    for g in ["s4", "d8", "sl23", "f21", "c7"] {
        let out = stdout(&mckay(&["table", "--group", &format!("corpus/{g}")]));
        assert_eq!(out, golden(&format!("table_{g}.txt")), "{g}");
    }
}

#[test]
fn table_accepts_paths_and_structured_output() {
    let o = mckay(&[
        "table",
        "--group",
        "corpus/d8.toml",
        "--format",
        "structured",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["order"], 8);
    assert_eq!(v["characters"].as_array().unwrap().len(), 5);
}

#[test]
fn missing_group_is_an_input_error() {
    let o = mckay(&["table", "--group", "missing-file"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("missing-file"));
}

#[test]
fn malformed_group_is_an_input_error() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.toml");
    std::fs::write(&bad, "name = \"X\"\ndegree = 3\ngenerators = [[1, 0, 1]]\n").unwrap();
    let o = mckay(&["table", "--group", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_s4() {
    let o = mckay(&["verify", "--group", "corpus/s4", "-p", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("verdict: true"));
    let o = mckay(&[
        "verify",
        "--group",
        "corpus/s4",
        "-p",
        "2",
        "--format",
        "structured",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["pairs"].as_array().unwrap().len(), 4);
    assert_eq!(stdout(&o), golden("verify_s4.json"));
}

#[test]
fn verify_refuses_unmet_hypotheses() {
    let o = mckay(&["verify", "--group", "corpus/sl23", "-p", "3"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("self-normalizing hypothesis fails"));
    let o = mckay(&["verify", "--group", "corpus/s4", "-p", "4"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn verify_all_summary() {
    let o = mckay(&["verify", "--all"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 14);
    assert_eq!(out, golden("verify_all.txt"));
}

#[test]
fn verify_all_structured_is_deterministic() {
    let a = stdout(&mckay(&["verify", "--all", "--format", "structured"]));
    let b = stdout(&mckay(&["verify", "--all", "--format", "structured"]));
    let serial = stdout(&mckay(&[
        "verify",
        "--all",
        "--format",
        "structured",
        "--threads",
        "1",
    ]));
    let wide = stdout(&mckay(&[
        "verify",
        "--all",
        "--format",
        "structured",
        "--threads",
        "4",
    ]));
    assert_eq!(a, b);
    assert_eq!(a, serial);
    assert_eq!(a, wide);
}

#[test]
fn remark648_report() {
    let o = mckay(&["remark648"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("(order 2): -1"));
    assert!(out.contains("(order 4): 1"));
    assert!(out.contains("(order 3): 1+2*z3") && out.contains("(order 3): -1-2*z3"));
    assert_eq!(out, golden("remark648.txt"));
}

#[test]
fn remark648_structured_is_stable() {
    let a = stdout(&mckay(&["remark648", "--format", "structured"]));
    let b = stdout(&mckay(&["remark648", "--format", "structured"]));
    assert_eq!(a, b);
    assert_eq!(a, golden("remark648.json"));
}

#[test]
fn remark648_respects_cap() {
    let o = mckay(&["remark648", "--cap", "100"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("s4.txt");
    let o = mckay(&["table", "--group", "s4", "--out", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(path).unwrap(),
        golden("table_s4.txt")
    );
}
