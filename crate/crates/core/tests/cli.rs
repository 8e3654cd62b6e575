use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_specrank"))
}

fn data(name: &str) -> String {
    Path::new(env!("CARGO_MANIFEST_DIR"))
        .join("examples/data")
        .join(name)
        .display()
        .to_string()
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("specrank runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn rank_prints_both_ranks() {
    let o = run(&["rank", "(tensor (lazar 2) 3)"]);
    assert_eq!(o.status.code(), Some(0));
    let s = stdout(&o);
    assert!(s.contains("pedersen    w*2 + 3"), "{s}");
    assert!(s.contains("fell        1"), "{s}");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["rank", "(lazar 3)"]).status.code(), Some(0));
    // A constant top inside a jump leaves a cofinality gap.
    let gap = run(&["rank", "(lazarjump n -> (lazar 1))"]);
    assert_eq!(gap.status.code(), Some(1));
    assert!(stdout(&gap).contains("gap"));
    assert_eq!(run(&["rank", "(lazar 1"]).status.code(), Some(2));
    assert_eq!(run(&["rank", "(frob 1)"]).status.code(), Some(2));
    assert_eq!(run(&["rank", "(lazar 1 + w + 1)"]).status.code(), Some(2));
    assert_eq!(run(&["rank", "(lazar 1 + w + 1)", "--normalize"]).status.code(), Some(0));
    assert_eq!(run(&["classify", "(lazar 1)", "--beta", "w^"]).status.code(), Some(2));
    assert_eq!(run(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn malformed_input_reports_an_offset() {
    let o = run(&["rank", "(tensor (lazar 1) 0)"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("18"), "{err}");
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        &["rank", "(c0sum (lazar w) (taylor 2))", "--format", "json"][..],
        &["rank", "(taylorjump n -> (tensor (taylor 1) 2n+1))", "--format", "dot"],
        &["classify", "(lazar 2)", "--beta", "w*2"],
    ] {
        assert_eq!(run(args).stdout, run(args).stdout, "{args:?}");
    }
}

#[test]
fn seed_is_echoed() {
    let o = run(&["rank", "(lazar 1)", "--format", "json", "--seed", "41"]);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["seed"], 41);
    assert_eq!(v["fuel"], 6);
}

#[test]
fn atom_file_ranks_by_weight() {
    let o = run(&["rank", &data("point4.json")]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("pedersen    4"));
}

#[test]
fn compactify_sierpinski() {
    let o = run(&["compactify", &data("sierpinski.json"), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: Vec<Vec<String>> = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v.len(), 2);
}

#[test]
fn truncate_writes_a_loadable_space() {
    let dir = tempfile::tempdir().unwrap();
    let path: PathBuf = dir.path().join("space.json");
    let o = run(&["truncate", "(lazar 2)", "3", "-o", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let loaded = specrank::topology::SpaceFile::read(&path).unwrap();
    assert!(loaded.space.len() > 3);
    // The written file is itself valid input.
    assert_eq!(run(&["rank", path.to_str().unwrap()]).status.code(), Some(0));
}

#[test]
fn expression_file_input() {
    let o = run(&["rank", &data("lazar_w1.spec")]);
    assert!(stdout(&o).contains("w^2 + w + 1"));
}

#[test]
fn limits_of_sierpinski() {
    let o = run(&["limits", &data("sierpinski.json"), "--visits", "closed"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("limits {closed, open}"));
}

fn python_validates(schema: &Path, report: &Path) -> Option<Result<(), String>> {
    let script = "import json,sys,jsonschema\n\
        jsonschema.validate(json.load(open(sys.argv[2])), json.load(open(sys.argv[1])))";
    let o = Command::new("python3")
        .args(["-c", script, schema.to_str()?, report.to_str()?])
        .output()
        .ok()?;
    let err = String::from_utf8_lossy(&o.stderr);
    if err.contains("No module named") {
        return None;
    }
    Some(if o.status.success() { Ok(()) } else { Err(err.into_owned()) })
}

#[test]
fn json_reports_match_the_schema() {
    let schema = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schema/report.schema.json");
    let dir = tempfile::tempdir().unwrap();
    let cases = [
        "(lazar w+1)",
        "(taylor 2)",
        "(tensor (lazar 2) 3)",
        "(c0sum n -> (unitize (tensor (lazar 1) n)))",
        "(lazarjump n -> (lazar 1))",
        "(biunitize (taylor 1))",
    ];
    let mut inputs: Vec<String> = cases.iter().map(|s| s.to_string()).collect();
    inputs.push(data("diamond.json"));
    for (i, input) in inputs.iter().enumerate() {
        let path = dir.path().join(format!("r{i}.json"));
        let o = run(&["rank", input, "--format", "json", "-o", path.to_str().unwrap()]);
        assert!(matches!(o.status.code(), Some(0 | 1)), "{input}");
        match python_validates(&schema, &path) {
            None => {
                eprintln!("python3 jsonschema unavailable; schema check skipped");
                return;
            }
            Some(r) => r.unwrap_or_else(|e| panic!("{input}: {e}")),
        }
    }
}
