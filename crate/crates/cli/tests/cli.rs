use std::fs;
use std::process::Command;

use serde_json::Value;

fn specwb(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_specwb")).args(args).output().expect("run specwb");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

const Z2XZ2: &str = "ring Z2xZ2\nsize 4\nzero 0\none 3\nadd\n0 1 2 3\n1 0 3 2\n2 3 0 1\n3 2 1 0\nmul\n0 0 0 0\n0 1 0 1\n0 0 2 2\n0 1 2 3\n";

#[test]
fn spectrum_of_a_ring_file() {
    let dir = tempfile::tempdir().unwrap();
    let ring = dir.path().join("z2z2.ring");
    fs::write(&ring, Z2XZ2).unwrap();
    let (code, out, _) = specwb(&["spectrum", "--ring", ring.to_str().unwrap()]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["primes"], serde_json::json!([[0, 1], [0, 2]]));
    assert_eq!(v["nilradical"], serde_json::json!([0]));
}

#[test]
fn diagonal_is_not_dense_in_either_mode() {
    let dir = tempfile::tempdir().unwrap();
    let ring = dir.path().join("z2z2.ring");
    let sub = dir.path().join("diag.txt");
    fs::write(&ring, Z2XZ2).unwrap();
    fs::write(&sub, "0 3\n").unwrap();
    for mode in ["definition", "primes"] {
        let (code, out, _) =
            specwb(&["dense", "--ambient", ring.to_str().unwrap(), "--subring", sub.to_str().unwrap(), "--mode", mode]);
        assert_eq!(code, 0);
        let v: Value = serde_json::from_str(&out).unwrap();
        assert_eq!(v["dense"], Value::Bool(false));
        assert!(v["failure"].is_object());
    }
}

#[test]
fn audit_writes_jsonl_and_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.jsonl");
    let b = dir.path().join("b.jsonl");
    let common = ["audit", "--claims", "C6,C17,C22", "--max-ring", "8", "--max-poset", "3", "--stable"];
    let (code, _, err) = specwb(&[&common[..], &["--workers", "1", "--out", a.to_str().unwrap()]].concat());
    assert_eq!(code, 0, "{err}");
    let (code, _, _) = specwb(&[&common[..], &["--workers", "4", "--seed", "7", "--out", b.to_str().unwrap()]].concat());
    assert_eq!(code, 0);
    let text = fs::read_to_string(&a).unwrap();
    assert_eq!(text, fs::read_to_string(&b).unwrap());
    let lines: Vec<Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    let summary = lines.last().unwrap();
    assert_eq!(summary["summary"], Value::Bool(true));
    assert_eq!(summary["refutations"], serde_json::json!([]));
    assert!(lines[..lines.len() - 1].iter().all(|l| l["status"] != "refuted"));
}

#[test]
fn hunters_print_reports() {
    let (code, out, _) = specwb(&["hunt", "wcn-vs-cn", "--max-ring", "4", "--max-poset", "3"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["separating"].as_array().unwrap().len(), 2);
    let (code, out, _) = specwb(&["hunt", "intermediate-density", "--max-ring", "12"]);
    assert_eq!(code, 0);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["exhaustive_none"], Value::Bool(true));
}

#[test]
fn posets_listing() {
    let (code, out, _) = specwb(&["posets", "--n", "3", "--predicates", "pm,cn,wcn"]);
    assert_eq!(code, 0);
    let rows: Vec<Value> = out.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(rows.len(), 19);
    let v = rows.iter().find(|r| r["relations"] == serde_json::json!([[2, 0], [2, 1]])).unwrap();
    assert_eq!((v["pm"].as_bool(), v["cn"].as_bool(), v["wcn"].as_bool()), (Some(false), Some(false), Some(true)));
}

#[test]
fn bad_input_is_reported() {
    let (code, _, err) = specwb(&["audit", "--claims", "C99"]);
    assert_eq!(code, 2);
    assert!(err.contains("C99"));
    let (code, _, _) = specwb(&["posets", "--n", "3", "--predicates", "bogus"]);
    assert_eq!(code, 2);
}
