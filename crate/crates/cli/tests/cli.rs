//! End-to-end tests of the command-line surface: flags, exit codes, JSON
//! shapes and the determinism contract.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hypjohnson"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

#[test]
fn verify_genus_2_passes() {
    let out = run(&["verify", "--genus", "2"]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let report = stdout_json(&out);
    assert_eq!(report["schema_version"], "1");
    assert_eq!(report["genus"], 2);
    assert_eq!(report["summary"]["fail"], 0);
    let checks = report["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    // Canonical ordering by name.
    let names: Vec<&str> = checks.iter().map(|c| c["name"].as_str().unwrap()).collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    assert!(checks.iter().all(|c| c["status"] == "pass"));
}

#[test]
fn verify_rejects_genus_1() {
    let out = run(&["verify", "--genus", "1"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("genus"));
}

#[test]
fn verify_module_filter() {
    let out = run(&["verify", "--genus", "2", "--modules", "span"]);
    assert!(out.status.success());
    let report = stdout_json(&out);
    let checks = report["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks
        .iter()
        .all(|c| c["name"].as_str().unwrap().starts_with("class_span/")));
}

#[test]
fn verify_is_deterministic_modulo_timing() {
    let strip = |out: &Output| {
        let mut v = stdout_json(out);
        for c in v["checks"].as_array_mut().unwrap() {
            c.as_object_mut().unwrap().remove("elapsed_ms");
        }
        v
    };
    let a = run(&["verify", "--genus", "2", "--modules", "johnson_monodromy"]);
    let b = run(&["verify", "--genus", "2", "--modules", "johnson_monodromy"]);
    assert_eq!(strip(&a), strip(&b));
}

#[test]
fn dims_text_table() {
    let out = run(&["dims", "--genus", "2"]);
    assert!(out.status.success());
    let text = String::from_utf8_lossy(&out.stdout);
    assert!(text.contains("p(-3): 16"));
    assert!(text.contains("Der_-2 p: 19"));
}

#[test]
fn dims_json_is_well_formed() {
    let out = run(&["dims", "--genus", "2", "--json"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["quotient"]["p(-3)"], 16);
    assert_eq!(v["free_lie"]["L_3"], 20);
}

#[test]
fn dims_rejects_genus_0() {
    let out = run(&["dims", "--genus", "0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn twist_reports_zero_residual() {
    let out = run(&[
        "twist", "--genus", "2", "--side-genus", "1", "--points", "1,2,3", "--handles", "1",
        "--q1", "1", "--q2", "4",
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["tau_tilde_q1"]["a1^b1"], "6");
    assert_eq!(v["tau_tilde_q2"]["a1^b1"], "-6");
    assert_eq!(v["pi_z"]["a1^b1"], "-4");
    assert_eq!(v["pi_e"]["a1^b1"], "-20");
    assert_eq!(v["theorem_a_holds"], true);
    assert!(v["theorem_a_residual"].as_object().unwrap().is_empty());
}

#[test]
fn twist_rejects_even_point_set() {
    let out = run(&[
        "twist", "--genus", "2", "--side-genus", "1", "--points", "1,2", "--handles", "1",
        "--q1", "1", "--q2", "4",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("|A| must be 2i+1"));
}

#[test]
fn twist_rejects_equal_base_points() {
    let out = run(&[
        "twist", "--genus", "2", "--side-genus", "1", "--points", "1,2,3", "--handles", "1",
        "--q1", "1", "--q2", "1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn span_consecutive_genus_2_reports_degenerate_rank() {
    // The consecutive family at genus 2 is degenerate by antipodal
    // cancellation; the structural identities still hold.
    let out = run(&["span", "--genus", "2", "--family", "consecutive"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["weierstrass_rank"], 3);
    assert_eq!(v["collino_rank"], 3);
    assert_eq!(v["bound_met"], false);
    assert_eq!(v["row_space_equal"], true);
    assert_eq!(v["column_sums_zero"], true);
    assert_eq!(v["remark_holds"], true);
}

#[test]
fn span_augmented_genus_2_meets_bound() {
    let out = run(&["span", "--genus", "2", "--family", "augmented"]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["weierstrass_rank"], 5);
    assert_eq!(v["collino_rank"], 5);
    assert_eq!(v["bound_met"], true);
}

#[test]
fn span_genus_3_consecutive_meets_bound_and_exports_csv() {
    let dir = std::env::temp_dir().join("hypjohnson-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let csv: PathBuf = dir.join("matrix.csv");
    let out = run(&[
        "span", "--genus", "3", "--family", "consecutive", "--export",
        csv.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let v = stdout_json(&out);
    assert_eq!(v["weierstrass_rank"], 7);
    assert_eq!(v["bound_met"], true);
    let text = std::fs::read_to_string(&csv).unwrap();
    assert!(text.starts_with("point,descriptor,coord,value\n"));
    // 8 points x 16 descriptors x 14 canonical V coordinates.
    assert_eq!(text.lines().count(), 1 + 8 * 16 * 14);
    std::fs::remove_file(&csv).unwrap();
}

#[test]
fn span_rejects_unknown_family() {
    let out = run(&["span", "--genus", "2", "--family", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unknown family kind"));
}
