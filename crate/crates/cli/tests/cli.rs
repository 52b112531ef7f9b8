use std::path::PathBuf;
use std::process::{Command, Output};

fn qea(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qea")).args(args).output().expect("qea runs")
}

fn qea_env(args: &[&str], key: &str, val: &str) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qea")).args(args).env(key, val).output().expect("qea runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).expect("utf-8 output")
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("qea-cli-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn a1_full_verification_passes() {
    let o = qea(&["verify", "--algebra", "a1", "--suite", "all"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(stdout(&o).trim_end().ends_with("0 failed"));
}

#[test]
fn g2_entry_five_three_in_latex() {
    let o = qea(&["lop", "--algebra", "g2", "--kind", "minus", "--a", "5", "--b", "3", "--source", "catalog", "--format", "latex"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim_end(), "\\omega_2^{2} q_2^{-1} e_2^{2} t_2^{-1}");
}

#[test]
fn g2_ybe_at_a_point() {
    let o = qea(&["verify", "--algebra", "g2", "--suite", "ybe", "--at", "v=2"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let o = qea(&["verify", "--algebra", "g2", "--suite", "ybe", "--at", "v=2", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["reports"][1]["items"][0]["name"], "v = 2");
}

#[test]
fn failing_identities_are_listed_with_exit_one() {
    let o = qea(&["verify", "--algebra", "aN:2", "--suite", "catalog", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["passed"], false);
    let failed: Vec<String> = v["reports"]
        .as_array()
        .unwrap()
        .iter()
        .flat_map(|r| r["items"].as_array().unwrap().iter())
        .filter(|i| i["passed"] == false)
        .map(|i| i["name"].as_str().unwrap().to_string())
        .collect();
    assert_eq!(failed, ["A2 minimal (3, 1)", "(A2 minimal) x (A2 minimal) (3, 1)", "A2 minimal (1, 3)", "(A2 minimal) x (A2 minimal) (1, 3)"]);
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec!["verify", "--algebra", "b3"],
        vec!["verify", "--suite", "all"],
        vec!["verify", "--algebra", "a1", "--bogus"],
        vec!["verify", "--algebra", "a0"],
        vec!["lop", "--algebra", "a1", "--kind", "minus", "--a", "3", "--b", "1"],
        vec!["lop", "--algebra", "a1", "--kind", "minus", "--a", "1"],
        vec!["verify", "--algebra", "g2", "--suite", "qh"],
        vec!["verify", "--algebra", "a1", "--suite", "ybe", "--at", "2"],
        vec!["verify", "--algebra", "a1", "--suite", "ybe", "--at", "v=0"],
        vec!["relations", "--algebra", "a1", "--format", "latex"],
    ] {
        let o = qea(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn truncation_height_comes_from_the_environment() {
    let o = qea_env(&["rmatrix", "--algebra", "a2"], "QEA_MAX_BETA_HEIGHT", "1");
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("truncation height"));
    let o = qea_env(&["rmatrix", "--algebra", "a2"], "QEA_MAX_BETA_HEIGHT", "2");
    assert_eq!(o.status.code(), Some(0));
    let o = qea_env(&["rmatrix", "--algebra", "a2"], "QEA_MAX_BETA_HEIGHT", "x");
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["rmatrix", "--algebra", "a2"],
        vec!["rmatrix", "--algebra", "a2", "--format", "latex"],
        vec!["lop", "--algebra", "a3", "--kind", "plus", "--source", "slice"],
        vec!["verify", "--algebra", "a2", "--suite", "all", "--format", "json"],
    ] {
        let (x, y) = (qea(&args), qea(&args));
        assert_eq!(x.stdout, y.stdout, "{args:?}");
        assert!(!x.stdout.is_empty());
    }
}

#[test]
fn a1_r_matrix_json() {
    let o = qea(&["rmatrix", "--algebra", "a1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["r"]["n"], 2);
    // q^{-H} on the diagonal plus one off-diagonal term
    assert_eq!(v["r"]["entries"].as_array().unwrap().len(), 5);
    let o = qea(&["rmatrix", "--algebra", "a1", "--at", "v=2"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["v"], "2");
}

fn eval_of(alg: &str, kind: &str, a: usize, b: usize, source: &str, rep: &str) -> String {
    let path = tmp(&format!("{alg}-{kind}-{a}-{b}-{source}.json"));
    let (sa, sb) = (a.to_string(), b.to_string());
    let p = path.to_str().unwrap();
    let o = qea(&["lop", "--algebra", alg, "--kind", kind, "--a", &sa, "--b", &sb, "--source", source, "-o", p]);
    assert_eq!(o.status.code(), Some(0));
    let o = qea(&["eval", "--algebra", alg, "--expr", p, "--rep", rep]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

#[test]
fn slice_and_catalog_agree_under_evaluation() {
    for kind in ["minus", "plus"] {
        for a in 1..=2 {
            for b in 1..=2 {
                assert_eq!(eval_of("a1", kind, a, b, "slice", "minimal"), eval_of("a1", kind, a, b, "catalog", "minimal"));
            }
        }
    }
    for (kind, a, b) in [("minus", 2, 1), ("minus", 3, 2), ("plus", 1, 2), ("plus", 3, 3)] {
        assert_eq!(eval_of("a2", kind, a, b, "slice", "minimal"), eval_of("a2", kind, a, b, "catalog", "minimal"));
    }
    // the closed-form A-series sign differs from the slice when a - b is even
    assert_ne!(eval_of("a2", "minus", 3, 1, "slice", "minimal"), eval_of("a2", "minus", 3, 1, "catalog", "minimal"));
}

#[test]
fn g2_slice_and_catalog_agree_under_evaluation() {
    let path = tmp("g2-minus-slice.json");
    let p = path.to_str().unwrap();
    let o = qea(&["lop", "--algebra", "g2", "--kind", "minus", "--source", "slice", "-o", p]);
    assert_eq!(o.status.code(), Some(0));
    let all: serde_json::Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    for (a, b) in [(7, 1), (5, 3), (4, 1), (6, 6)] {
        let entry = all["entries"].as_array().unwrap().iter().find(|e| e["a"] == a && e["b"] == b).unwrap();
        let one = tmp(&format!("g2-slice-{a}-{b}.json"));
        std::fs::write(&one, serde_json::to_string(&entry["expr"]).unwrap()).unwrap();
        let o = qea(&["eval", "--algebra", "g2", "--expr", one.to_str().unwrap(), "--rep", "tensor2"]);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(stdout(&o), eval_of("g2", "minus", a, b, "catalog", "tensor2"), "({a}, {b})");
    }
}

#[test]
fn eval_latex() {
    let path = tmp("e1.json");
    std::fs::write(&path, r#"[{"coeff": {"a": {"num": [[0, "1"]], "den": [[0, "1"]]}, "b": {"num": [], "den": [[0, "1"]]}}, "word": ["e1"], "texp": ["0"]}]"#).unwrap();
    let o = qea(&["eval", "--algebra", "a1", "--expr", path.to_str().unwrap(), "--format", "latex"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let s = stdout(&o);
    assert!(s.contains("pmatrix"));
    assert!(s.contains("0 & 1"));
}
