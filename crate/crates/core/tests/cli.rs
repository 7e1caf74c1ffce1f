use std::process::{Command, Output};

use serde_json::Value;

fn verify(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_verify"))
        .args(args)
        .output()
        .expect("verify runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn strip_durations(mut v: Value) -> Value {
    for c in v["checks"].as_array_mut().unwrap() {
        c.as_object_mut().unwrap().remove("duration_ms");
    }
    v
}

#[test]
fn rmatrix_text() {
    let o = verify(&["rmatrix"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().any(|l| l == "CYBE: PASS (residual terms: 0)"));
    assert!(out.contains("summary: "));
}

#[test]
fn usage_errors_exit_2() {
    let o = verify(&["bogus"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("possible values"));
    assert_eq!(verify(&["frt", "--window", "3"]).status.code(), Some(2));
    assert_eq!(verify(&["onsager", "--window", "1"]).status.code(), Some(2));
    assert_eq!(verify(&["charges", "--max-k", "7"]).status.code(), Some(2));
    assert_eq!(verify(&["kappa", "--format", "xml"]).status.code(), Some(2));
    assert_eq!(verify(&["kappa", "--config", "/nonexistent.json"]).status.code(), Some(2));
}

#[test]
fn json_schema_and_determinism() {
    let a = verify(&["onsager", "--format", "json"]);
    let b = verify(&["onsager", "--format", "json", "--parallel"]);
    assert_eq!(a.status.code(), Some(0));
    let va: Value = serde_json::from_str(&stdout(&a)).unwrap();
    let vb: Value = serde_json::from_str(&stdout(&b)).unwrap();
    let keys: Vec<&str> = va.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["checks", "suite", "summary", "window"]);
    assert_eq!(va["suite"], "onsager");
    assert_eq!(va["window"], 6);
    for c in va["checks"].as_array().unwrap() {
        for k in ["name", "status", "residual_terms", "region", "duration_ms", "witnesses"] {
            assert!(c.get(k).is_some(), "missing {k}");
        }
    }
    assert_eq!(va["summary"]["fail"], 0);
    assert_eq!(strip_durations(va), strip_durations(vb));
}

#[test]
fn config_file_and_override() {
    let dir = std::env::temp_dir().join(format!("verify-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("cfg.json");
    std::fs::write(&path, r#"{"window": 5, "format": "json", "seed": 3}"#).unwrap();
    let p = path.to_str().unwrap();

    let o = verify(&["kappa", "--config", p]);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["window"], 5);

    let o = verify(&["kappa", "--config", p, "--window", "4", "--format", "text"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("kappa isomorphism: PASS"));

    std::fs::write(&path, r#"{"windw": 5}"#).unwrap();
    assert_eq!(verify(&["kappa", "--config", p]).status.code(), Some(2));
}

#[test]
fn charges_report_the_augmented_display() {
    let o = verify(&["charges", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    let failing: Vec<&str> = v["checks"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["status"] == "fail")
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    assert_eq!(failing, ["linear charges (augmented, formula)"]);
    assert_eq!(v["summary"]["pass"], 8);
}
