use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_morse-pr"));
    c.env_remove("MORSE_PR_WORKERS");
    c
}

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures").join(format!("{name}.json"))
}

fn run(args: &[&str]) -> (i32, Value, String) {
    let out: Output = bin().args(args).output().unwrap();
    let code = out.status.code().unwrap();
    let stdout = String::from_utf8(out.stdout).unwrap();
    let json = if stdout.trim().is_empty() { Value::Null } else { serde_json::from_str(&stdout).unwrap() };
    (code, json, String::from_utf8(out.stderr).unwrap())
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn classify_genus_two() {
    let (code, v, err) = run(&["classify", "--genus", "2"]);
    assert_eq!(code, 0, "{err}");
    assert_eq!(v["bases"], 4);
    assert_eq!(v["colored"], 5);
    assert_eq!(v["river_colored"], 2);
    assert_eq!(v["symmetry"], "dihedral");
    assert!(v["runtime_ms"].is_u64());
    assert!(err.contains("genus 2"));
}

#[test]
fn classify_rotation_only() {
    let (code, v, _) = run(&["classify", "--genus", "2", "--symmetry", "rotation"]);
    assert_eq!(code, 0);
    assert_eq!(v["symmetry"], "rotation_only");
    assert_eq!(v["colored"], 8);
}

#[test]
fn classify_files_are_reproducible() {
    let (a, b) = (tempfile::tempdir().unwrap(), tempfile::tempdir().unwrap());
    let ga = a.path().join("g3");
    assert_eq!(run(&["classify", "--genus", "3", "--workers", "1", "--out", ga.to_str().unwrap()]).0, 0);
    let out = bin()
        .args(["classify", "--genus", "3", "--out", b.path().to_str().unwrap()])
        .env("MORSE_PR_WORKERS", "3")
        .output()
        .unwrap();
    assert!(out.status.success());
    for f in ["bases.jsonl", "colored.jsonl", "pr.jsonl", "report.json"] {
        let x = std::fs::read(ga.join(f)).unwrap();
        assert_eq!(x, std::fs::read(b.path().join(f)).unwrap(), "{f}");
        assert!(!x.is_empty());
    }
    let lines = std::fs::read_to_string(ga.join("bases.jsonl")).unwrap();
    assert_eq!(lines.lines().count(), 82);
    let report: Value = serde_json::from_str(&std::fs::read_to_string(ga.join("report.json")).unwrap()).unwrap();
    assert!(report.get("runtime_ms").is_none());
}

#[test]
fn iso_of_the_four_point_flows_is_negative() {
    let (code, v, _) = run(&["iso", path(&fixture("d3_four_a")), path(&fixture("d3_four_b"))]);
    assert_eq!(code, 1);
    assert_eq!(v["equivalent"], false);
    let (code, v, _) = run(&["iso", path(&fixture("parallel_pairs2")), path(&fixture("handlebody2_a"))]);
    assert_eq!(code, 0);
    assert_eq!(v["equivalent"], true);
}

#[test]
fn validate_solid_torus() {
    let (code, v, _) = run(&["validate", path(&fixture("solid_torus"))]);
    assert_eq!(code, 0);
    assert_eq!(v["valid"], true);
    let props = v["properties"].as_array().unwrap();
    assert_eq!(props.len(), 5);
    assert!(props.iter().all(|p| p["pass"] == true));
}

#[test]
fn validate_reports_a_failure() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.json");
    let mut j: Value = serde_json::from_str(&std::fs::read_to_string(fixture("d3_six_cross")).unwrap()).unwrap();
    // split u0 at the crossing
    for l in j["labels"].as_array_mut().unwrap() {
        if l["edge"] == 5 {
            l["index"] = 1.into();
        }
    }
    j.as_object_mut().unwrap().remove("curves");
    std::fs::write(&bad, j.to_string()).unwrap();
    let (code, v, err) = run(&["validate", path(&bad)]);
    assert_eq!(code, 1);
    assert_eq!(v["valid"], false);
    assert_eq!(v["properties"][0]["pass"], false);
    assert!(err.contains("property 1"));
    let (code, v, _) = run(&["census", path(&bad)]);
    assert_eq!(code, 1);
    assert_eq!(v["valid"], false);
}

#[test]
fn census_and_boundary() {
    let (code, v, _) = run(&["census", path(&fixture("solid_torus"))]);
    assert_eq!(code, 0);
    assert_eq!(v["counts"], serde_json::json!([1, 0, 1, 1, 0, 1]));
    assert_eq!(v["census"]["g_boundary"], 1);
    assert_eq!(v["morse"]["pass"], true);
    let (code, v, _) = run(&["boundary", path(&fixture("handlebody2_b"))]);
    assert_eq!(code, 0);
    assert_eq!(v["euler"], -2);
    assert_eq!(v["genus"], 2);
}

#[test]
fn convert_both_ways() {
    let dir = tempfile::tempdir().unwrap();
    let chord = dir.path().join("c.json");
    let (code, v, _) = run(&["convert", "--to", "chord", path(&fixture("handlebody2_c")), "--out", path(&chord)]);
    assert_eq!(code, 0);
    assert_eq!(v["written"], path(&chord));
    let written: Value = serde_json::from_str(&std::fs::read_to_string(&chord).unwrap()).unwrap();
    assert_eq!(written["code"], "24061735-grggrrgr");
    let pr = dir.path().join("p.json");
    assert_eq!(run(&["convert", "--to", "pr", path(&chord), "--out", path(&pr)]).0, 0);
    let (code, v, _) = run(&["iso", path(&pr), path(&fixture("handlebody2_c"))]);
    assert_eq!(code, 0, "{v}");
    let (code, _, _) = run(&["convert", "--to", "chord", path(&fixture("parallel_pairs2_extra_u"))]);
    assert_eq!(code, 1);
    let (code, _, err) = run(&["convert", "--to", "pr", path(&fixture("solid_torus"))]);
    assert_eq!(code, 2);
    assert!(err.starts_with("error:"));
}

#[test]
fn fixtures_verify() {
    let (code, v, _) = run(&["fixtures", "verify"]);
    assert_eq!(code, 0);
    assert_eq!(v["pass"], true);
    assert_eq!(v["manifest_version"], 1);
}

#[test]
fn export_formats() {
    let (code, v, _) = run(&["export", "--format", "dot", path(&fixture("d3_six_cross"))]);
    assert_eq!(code, 0);
    assert!(v["content"].as_str().unwrap().starts_with("graph map {"));
    let dir = tempfile::tempdir().unwrap();
    let svg = dir.path().join("x.svg");
    let (code, _, _) = run(&["export", "--format", "svg", "--out", path(&svg), path(&fixture("parallel_pairs2"))]);
    assert_eq!(code, 0);
    assert!(std::fs::read_to_string(&svg).unwrap().starts_with("<svg"));
    let (code, v, _) = run(&["export", "--format", "svg", path(&fixture("d3_six_cross"))]);
    assert_eq!(code, 1);
    assert_eq!(v["exported"], false);
    let (code, v, _) = run(&["export", "--format", "json", path(&fixture("trivial_d3"))]);
    assert_eq!(code, 0);
    let back: Value = serde_json::from_str(v["content"].as_str().unwrap()).unwrap();
    assert_eq!(back["darts"], 2);
}

#[test]
fn usage_and_io_errors_exit_two() {
    assert_eq!(run(&["classify"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["classify", "--genus", "2", "--symmetry", "chiral"]).0, 2);
    let (code, v, err) = run(&["validate", "/nonexistent.json"]);
    assert_eq!((code, v), (2, Value::Null));
    assert_eq!(err.lines().count(), 1);
    let dir = tempfile::tempdir().unwrap();
    let junk = dir.path().join("junk.json");
    std::fs::write(&junk, "{\"darts\": 3}").unwrap();
    assert_eq!(run(&["census", path(&junk)]).0, 2);
    assert_eq!(run(&["classify", "--genus", "9"]).0, 2);
}
