//! End-to-end runs of the `codegree` binary.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_codegree"))
        .args(args)
        .env_remove("CODEGREE_CACHE_DIR")
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = run(args);
    assert!(
        out.status.success(),
        "{args:?} failed: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("valid json")
}

fn tsv(args: &[&str]) -> String {
    let mut a = args.to_vec();
    a.extend(["--format", "tsv"]);
    let out = run(&a);
    assert!(out.status.success());
    String::from_utf8(out.stdout).unwrap()
}

#[test]
fn lagrangian_value_and_cross_check() {
    let v = json(&["codegree", "lagrangian", "-n", "4"]);
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["payload"]["value"], 72);
    let checks = v["payload"]["cross_checks"].as_array().unwrap();
    assert!(checks.iter().any(|c| c["method"] == "katz-kleiman" && c["agrees"] == true));
}

#[test]
fn grassmannian_both_methods() {
    let v = json(&["codegree", "grassmannian", "-k", "4", "-n", "8", "--method", "both"]);
    assert_eq!(v["payload"]["value"], 126);
    for c in v["payload"]["cross_checks"].as_array().unwrap() {
        assert_ne!(c["agrees"], false, "{c}");
    }
    let t = tsv(&["codegree", "grassmannian", "-k", "4", "-n", "8", "--method", "both"]);
    assert!(t.contains("value\t126\n"));
}

#[test]
fn segre_quadrics_and_products() {
    let v = json(&["codegree", "segre-quadrics", "-a", "5", "-b", "5"]);
    assert_eq!(v["payload"]["conjectured"], 40);
    assert_eq!(v["payload"]["conjecture_holds"], true);
    let v = json(&["codegree", "product", "G(2,4)", "-k", "1"]);
    assert!(v["payload"]["value"].is_number());
    let v = json(&["codegree", "katz-kleiman", "G(2,4)"]);
    assert_eq!(v["payload"]["value"], 2);
}

#[test]
fn realize_sl3_outer() {
    let v = json(&["realize", "--case", "sl:outer-sym:3"]);
    let p = &v["payload"];
    assert_eq!(p["lines"], 3);
    assert_eq!(p["grading_agrees"], true);
    assert_eq!(p["little_weyl_order"], 6);
    assert_eq!(p["discriminants"][0]["degree"], 6);
    assert_eq!(p["regular_slice"]["rank"], 4);
    assert_eq!(p["regular_slice"]["passed"], true);
    assert_eq!(p["passed"], true);
}

#[test]
fn grading_e8_node() {
    let v = json(&["grading", "E8", "3"]);
    assert_eq!(v["payload"]["m"], 4);
    assert_eq!(v["payload"]["dims"], serde_json::json!([66, 56, 70, 56]));
}

#[test]
fn tables_rows() {
    let t = tsv(&["tables", "degrees"]);
    assert!(t.lines().any(|l| l.starts_with("W(E8)\talpha\t\t240\t240\ttrue")));
    let t = tsv(&["tables", "orbits"]);
    assert!(t.lines().any(|l| l.contains("G(4,8)\tG(4,8)\t126\t126\ttrue")));
    let v = json(&["tables", "classify"]);
    let warnings = v["warnings"].as_array().unwrap();
    assert!(warnings.iter().any(|w| w.as_str().unwrap().starts_with("F4^1 node 1")));
}

#[test]
fn json_and_tsv_agree() {
    let v = json(&["tables", "orbits"]);
    let t = tsv(&["tables", "orbits"]);
    let rows = v["payload"].as_array().unwrap();
    let body: Vec<&str> = t.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(body.len(), rows.len() + 1);
}

#[test]
fn output_is_deterministic() {
    let a = run(&["realize", "--case", "so:block:2,3", "--seed", "7"]);
    let b = run(&["realize", "--case", "so:block:2,3", "--seed", "7"]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn bad_input_exits_2() {
    for args in [
        &["codegree", "lagrangian", "-n", "1"][..],
        &["realize", "--case", "bogus"],
        &["grading", "Z9", "1"],
        &["codegree", "frobnicate"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn cache_dir_is_used() {
    let dir: PathBuf = std::env::temp_dir().join(format!("codegree-cache-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    let run_cached = || {
        Command::new(env!("CARGO_BIN_EXE_codegree"))
            .args(["tables", "degrees"])
            .env("CODEGREE_CACHE_DIR", &dir)
            .output()
            .unwrap()
    };
    let first = run_cached();
    assert!(first.status.success());
    assert!(dir.join("degrees-r13-v1.json").exists());
    let second = run_cached();
    assert_eq!(first.stdout, second.stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}
