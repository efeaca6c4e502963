use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use serde_json::{json, Value};

fn rlie(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rlie")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn classify_doc(dir: &Path, doc: &Value) -> Output {
    let path = dir.join("input.json");
    fs::write(&path, doc.to_string()).unwrap();
    rlie(&["classify", path.to_str().unwrap()])
}

fn heisenberg(p: u32, images: Value) -> Value {
    json!({
        "algebra": {
            "field": {"p": p, "k": 1},
            "dim": 3,
            "brackets": [{"i": 1, "j": 2, "value": [[0], [0], [1]]}]
        },
        "pmap": {"images": images}
    })
}

#[test]
fn classify_examples() {
    let dir = tempfile::tempdir().unwrap();
    let zero = json!([[[0], [0], [0]], [[0], [0], [0]], [[0], [0], [0]]]);
    let o = classify_doc(dir.path(), &heisenberg(3, zero));
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), r#"{"family":"L_{3,2}^1","params":[]}"#);

    let x3 = json!([[[0], [0], [1]], [[0], [0], [0]], [[0], [0], [0]]]);
    let o = classify_doc(dir.path(), &heisenberg(2, x3));
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    assert_eq!(stdout(&o).trim(), r#"{"family":"K_{3,2}^1","params":[[0]]}"#);
}

#[test]
fn classify_rejects_l43_in_characteristic_2() {
    let dir = tempfile::tempdir().unwrap();
    let z = json!([[0], [0], [0], [0]]);
    let doc = json!({
        "algebra": {
            "field": {"p": 2, "k": 1},
            "dim": 4,
            "brackets": [
                {"i": 1, "j": 2, "value": [[0], [0], [1], [0]]},
                {"i": 1, "j": 3, "value": [[0], [0], [0], [1]]}
            ]
        },
        "pmap": {"images": [z, z, z, z]}
    });
    let o = classify_doc(dir.path(), &doc);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("not restrictable"), "{}", stderr(&o));
}

#[test]
fn classify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    fs::write(&path, "{ not json").unwrap();
    assert_eq!(code(&rlie(&["classify", path.to_str().unwrap()])), 1);
    assert_eq!(code(&rlie(&["classify", "/nonexistent/input.json"])), 1);

    let x1 = json!([[[1], [0], [0]], [[0], [0], [0]], [[0], [0], [0]]]);
    let o = classify_doc(dir.path(), &heisenberg(3, x1));
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("axiom"), "{}", stderr(&o));

    let not_nilpotent = json!({
        "algebra": {"field": {"p": 3, "k": 1}, "dim": 1},
        "pmap": {"images": [[[1]]]}
    });
    let o = classify_doc(dir.path(), &not_nilpotent);
    assert_eq!(code(&o), 2);
    assert!(stderr(&o).contains("nilpotent"), "{}", stderr(&o));

    let bad_jacobi = json!({
        "algebra": {
            "field": {"p": 3, "k": 1},
            "dim": 3,
            "brackets": [
                {"i": 1, "j": 2, "value": [[0], [0], [1]]},
                {"i": 1, "j": 3, "value": [[1], [0], [0]]}
            ]
        },
        "pmap": {"images": [[[0], [0], [0]], [[0], [0], [0]], [[0], [0], [0]]]}
    });
    assert_eq!(code(&classify_doc(dir.path(), &bad_jacobi)), 2);

    assert_eq!(code(&rlie(&["frobnicate"])), 1);
    assert_eq!(code(&rlie(&["--help"])), 0);
}

fn orbit_counts(report: &Value) -> Vec<(String, u64)> {
    report["reports"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| (r["algebra"].as_str().unwrap().to_string(), r["orbit_count"].as_u64().unwrap()))
        .collect()
}

#[test]
fn verify_examples() {
    let o = rlie(&["verify", "--p", "3", "--k", "1"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["ok"], json!(true));
    let counts = orbit_counts(&v);
    let want = [("L_{1,1}", 1), ("L_{2,1}", 2), ("L_{3,1}", 3), ("L_{3,2}", 2), ("L_{4,1}", 5), ("L_{4,2}", 8), ("L_{4,3}", 5)];
    assert_eq!(counts, want.map(|(a, n)| (a.to_string(), n)));

    let o = rlie(&["verify", "--p", "2", "--k", "1", "--algebra", "L_{4,3}"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["reports"][0]["total_pmaps"], json!(0));
    assert_eq!(v["reports"][0]["orbit_count"], json!(0));

    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let o = rlie(&["verify", "--p", "5", "--algebra", "L43", "--workers", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let v: Value = serde_json::from_str(&fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(v["reports"][0]["orbit_count"], json!(5));
}

#[test]
fn verify_over_budget_exits_3() {
    let o = rlie(&["verify", "--p", "3", "--algebra", "L_{4,2}", "--budget-pmaps", "100"]);
    assert_eq!(code(&o), 3);
    assert!(stderr(&o).contains("L_{4,2}"), "{}", stderr(&o));
    let o = rlie(&["verify", "--p", "4", "--k", "1"]);
    assert_eq!(code(&o), 2);
}

#[test]
fn verify_accepts_explicit_modulus() {
    let o = rlie(&["verify", "--p", "2", "--k", "2", "--modulus", "1,1,1", "--algebra", "L32"]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    let o = rlie(&["verify", "--p", "2", "--k", "2", "--modulus", "1,0,1", "--algebra", "L32"]);
    assert_eq!(code(&o), 2);
}

fn emit(p: &str, k: &str, out: &Path) -> Value {
    let o = rlie(&["emit-db", "--p", p, "--k", k, "--out", out.to_str().unwrap()]);
    assert_eq!(code(&o), 0, "{}", stderr(&o));
    serde_json::from_str(&fs::read_to_string(out).unwrap()).unwrap()
}

#[test]
fn emit_db_counts_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let (a, b) = (dir.path().join("a.json"), dir.path().join("b.json"));
    let db = emit("3", "1", &a);
    emit("3", "1", &b);
    assert_eq!(fs::read(&a).unwrap(), fs::read(&b).unwrap());
    assert_eq!(db["entry_count"], json!(26));
    let total: usize = db["algebras"]
        .as_array()
        .unwrap()
        .iter()
        .map(|s| s["classes"].as_array().unwrap().len())
        .sum();
    assert_eq!(total, 26);

    let db2 = emit("2", "1", &dir.path().join("gf2.json"));
    let l43 = db2["algebras"]
        .as_array()
        .unwrap()
        .iter()
        .find(|s| s["name"] == json!("L_{4,3}"))
        .unwrap();
    assert!(l43["classes"].as_array().unwrap().is_empty());
    assert!(l43["note"].as_str().unwrap().contains("not restrictable"));
}

#[test]
fn database_entries_classify_to_their_labels() {
    let dir = tempfile::tempdir().unwrap();
    for (p, k) in [("2", "1"), ("3", "1"), ("2", "2"), ("5", "1")] {
        let db = emit(p, k, &dir.path().join("db.json"));
        for section in db["algebras"].as_array().unwrap() {
            for class in section["classes"].as_array().unwrap() {
                let doc = json!({"algebra": section["algebra"], "pmap": class["pmap"]});
                let o = classify_doc(dir.path(), &doc);
                assert_eq!(code(&o), 0, "{}", stderr(&o));
                let got: Value = serde_json::from_str(&stdout(&o)).unwrap();
                assert_eq!(got, class["label"], "GF({p}^{k}) {}", class["display"]);
            }
        }
    }
}

#[test]
fn verify_reports_are_byte_stable() {
    let args = ["verify", "--p", "2", "--k", "2", "--algebra", "L42"];
    let (a, b) = (rlie(&args), rlie(&args));
    assert_eq!(code(&a), 0, "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
}
