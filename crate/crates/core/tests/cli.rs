use std::process::{Command, Output};

use pbwgate::cli::{catalog_get, catalog_list, serialize_problem};
use serde_json::Value;

fn pbwgate(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_pbwgate")).args(args).output().expect("binary runs")
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

#[test]
fn all_on_the_catalog_exits_zero() {
    for name in catalog_list() {
        let o = pbwgate(&["all", "--example", name]);
        assert_eq!(o.status.code(), Some(0), "{name}: {}", String::from_utf8_lossy(&o.stdout));
    }
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(pbwgate(&["frobnicate", "--example", "sl2-borel"]).status.code(), Some(2));
    assert_eq!(pbwgate(&["alpha", "--example", "no-such-pair"]).status.code(), Some(2));
    assert_eq!(pbwgate(&["alpha"]).status.code(), Some(2));
    let o = pbwgate(&["twisted", "--example", "sl2-borel"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("missing module"), "{}", stderr(&o));
    assert_eq!(pbwgate(&["twisted", "--example", "sl2-borel", "--module", "W"]).status.code(), Some(2));
}

#[test]
fn file_errors_are_located() {
    let dir = tempfile::tempdir().unwrap();
    let mut file = catalog_get("sl2-borel").unwrap();
    file.g.brackets.push((2, 0, vec![(1, "1".into())]));
    let path = dir.path().join("bad.json");
    std::fs::write(&path, serialize_problem(&file)).unwrap();
    let o = pbwgate(&["validate", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("(0, 2)"), "{}", stderr(&o));

    let path = dir.path().join("syntax.json");
    std::fs::write(&path, "{\n  \"name\": \"x\",\n  \"g\": [\n}").unwrap();
    let o = pbwgate(&["validate", "--input", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("line 4"), "{}", stderr(&o));
}

#[test]
fn input_file_matches_example() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("borel.json");
    std::fs::write(&path, serialize_problem(&catalog_get("sl2-borel").unwrap())).unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    let o1 = pbwgate(&["alpha", "--input", path.to_str().unwrap(), "--json", a.to_str().unwrap()]);
    let o2 = pbwgate(&["alpha", "--example", "sl2-borel", "--json", b.to_str().unwrap()]);
    assert_eq!((o1.status.code(), o2.status.code()), (Some(0), Some(0)));
    let strip = |p: &std::path::Path| {
        let mut v: Value = serde_json::from_str(&std::fs::read_to_string(p).unwrap()).unwrap();
        for r in v["records"].as_array_mut().unwrap() {
            r["millis"] = Value::Null;
        }
        v
    };
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn split_reports_matrices() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("split.json");
    let o = pbwgate(&["split", "--example", "diagonal-sl2", "--max-degree", "3", "--json", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    let s = v["records"].as_array().unwrap().iter().find(|r| r["check"] == "splitting-s").unwrap();
    let maps = s["witness"].as_array().unwrap();
    assert_eq!(maps.len(), 3);
    assert!(maps.iter().all(|m| m["equivariant"] == true && m["section"] == true));
    assert_eq!(maps[2]["matrix"].as_array().unwrap().len(), 40);
    assert!(v["records"].as_array().unwrap().iter().all(|r| !r["anchor"].as_str().unwrap().is_empty()));
}
