use std::fs;
use std::process::Command;

fn picard() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_picard"));
    c.env_remove("RUST_BACKTRACE").env_remove("RUST_LIB_BACKTRACE");
    c
}

#[test]
fn surface_writes_one_line_per_prime() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("s.jsonl");
    let st = picard()
        .args(["surface", "--coeffs", "3,11,21", "--pmax", "60", "--out"])
        .arg(&out)
        .status()
        .unwrap();
    assert!(st.success());
    let text = fs::read_to_string(&out).unwrap();
    let lines: Vec<serde_json::Value> = text.lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    // the 17 primes up to 59
    assert_eq!(lines.len(), 17);
    assert_eq!(lines[0]["p"], 2);
    assert_eq!(lines[0]["good"], false);
    let seven = &lines[3];
    assert_eq!(seven["surface"], serde_json::json!([3, 11, 21]));
    assert_eq!(seven["rank_bound"], 20);
    for key in ["N1", "N2", "e1", "e2", "node_partition", "phi_coeffs", "disc_class", "ext_degree"] {
        assert!(seven.get(key).is_some(), "{key}");
    }
    assert_eq!(seven["phi_coeffs"].as_array().unwrap().len(), 23);
}

#[test]
fn negative_coefficients_parse() {
    let out = picard().args(["surface", "--coeffs", "-3,4,19", "--pmax", "20"]).output().unwrap();
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    assert!(String::from_utf8_lossy(&out.stdout).contains("[-3,4,19]"));
}

#[test]
fn batch_then_stats() {
    let dir = tempfile::tempdir().unwrap();
    let st = picard()
        .args(["batch", "--sample", "default", "--pmax", "80", "--threads", "1", "--limit", "25", "--out"])
        .arg(dir.path())
        .status()
        .unwrap();
    assert!(st.success());
    let st = picard().args(["stats", "--table1", "--classes", "--in"]).arg(dir.path()).status().unwrap();
    assert!(st.success());
    let t1 = fs::read_to_string(dir.path().join("table1.csv")).unwrap();
    assert_eq!(t1.lines().next(), Some("class,prime,finished,left"));
    assert!(dir.path().join("classes.csv").exists());
    assert!(!dir.path().join("fig2.csv").exists());
}

#[test]
fn unknown_sample_is_an_error() {
    let dir = tempfile::tempdir().unwrap();
    let st = picard().args(["batch", "--sample", "other", "--out"]).arg(dir.path()).status().unwrap();
    assert!(!st.success());
}
