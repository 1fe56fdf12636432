//! End-to-end checks of the command line interface: exit codes, JSON output
//! shapes, and the SVG element inventory.

use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> String {
    format!("{}/fixtures/{}", env!("CARGO_MANIFEST_DIR"), name)
}

fn stabline(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stabline"))
        .args(args)
        .output()
        .expect("spawn CLI")
}

fn json_stdout(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).expect("stdout is one JSON object")
}

fn tmp_path(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name)
}

#[test]
fn check_reports_a_witness_and_exits_zero() {
    let out = stabline(&["check", &fixture("wide.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_stdout(&out);
    assert_eq!(v["feasible"], Value::Bool(true));
    assert_eq!(v["unique"], Value::Bool(false));
    assert_eq!(v["witness"]["m"], Value::from(1));
    assert_eq!(v["witness"]["b"], Value::from(1));
}

#[test]
fn check_detects_a_unique_transversal() {
    let out = stabline(&["check", &fixture("unique.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_stdout(&out);
    assert_eq!(v["feasible"], Value::Bool(true));
    assert_eq!(v["unique"], Value::Bool(true));
    assert_eq!(v["witness"]["m"], Value::from(0));
    assert_eq!(v["witness"]["b"], Value::from(1));
}

#[test]
fn solve_defaults_to_the_centroid_method() {
    let defaulted = stabline(&["solve", &fixture("wide.json")]);
    let explicit = stabline(&["solve", &fixture("wide.json"), "--method", "centroid"]);
    assert_eq!(defaulted.status.code(), Some(0));
    assert_eq!(json_stdout(&defaulted), json_stdout(&explicit));
}

#[test]
fn solve_reports_infeasibility_with_exit_one() {
    let out = stabline(&["solve", &fixture("infeasible.json")]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_stdout(&out);
    assert_eq!(v["feasible"], Value::Bool(false));
}

#[test]
fn a_single_segment_checks_fine_but_cannot_be_solved() {
    let check = stabline(&["check", &fixture("single.json")]);
    assert_eq!(check.status.code(), Some(0));
    let v = json_stdout(&check);
    assert_eq!(v["feasible"], Value::Bool(true));
    assert_eq!(v["witness"]["m"], Value::from(0));
    assert_eq!(v["witness"]["b"], Value::from("1/8"));

    let solve = stabline(&["solve", &fixture("single.json")]);
    assert_eq!(solve.status.code(), Some(2));
}

#[test]
fn disjoint_same_abscissa_segments_are_infeasible_with_a_note() {
    for command in ["check", "solve", "oracle"] {
        let out = stabline(&[command, &fixture("same_x.json")]);
        assert_eq!(out.status.code(), Some(1), "{command} exit code");
        let v = json_stdout(&out);
        assert_eq!(v["feasible"], Value::Bool(false), "{command} feasible flag");
        let note = v["note"].as_str().unwrap_or_default();
        assert!(note.contains("vertical"), "{command} note should mention vertical lines");
    }
}

#[test]
fn a_horizontal_family_solves_to_a_vertical_line() {
    let out = stabline(&["solve", &fixture("horizontal.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_stdout(&out);
    assert_eq!(v["vertical"], Value::Bool(true));
    assert_eq!(v["x"], Value::from("1/2"));
}

#[test]
fn malformed_json_exits_two() {
    let out = stabline(&["solve", &fixture("malformed.json")]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
}

#[test]
fn schema_violations_name_the_offending_field() {
    let out = stabline(&["solve", &fixture("wrong_schema.json")]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("$.segments[0]"), "stderr was: {stderr}");
    assert!(stderr.contains("hi"), "stderr was: {stderr}");
}

#[test]
fn a_missing_file_exits_two() {
    let out = stabline(&["solve", "/no/such/instance.json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn an_unknown_method_exits_two() {
    let out = stabline(&["solve", &fixture("wide.json"), "--method", "bogus"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn polygon_prints_classification_vertices_area_and_centroid() {
    let out = stabline(&["polygon", &fixture("wide.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_stdout(&out);
    assert_eq!(v["classification"], Value::from("full-dimensional"));
    assert_eq!(v["vertices"].as_array().unwrap().len(), 5);
    assert_eq!(v["area"], Value::from(2));
    assert_eq!(v["centroid"]["m"], Value::from("5/12"));
    assert_eq!(v["centroid"]["b"], Value::from("107/24"));
}

#[test]
fn polygon_of_a_unique_instance_is_a_single_point() {
    let out = stabline(&["polygon", &fixture("unique.json")]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_stdout(&out);
    assert_eq!(v["classification"], Value::from("single-point"));
    assert_eq!(v["vertices"].as_array().unwrap().len(), 1);
    assert_eq!(v["area"], Value::from(0));
}

#[test]
fn polygon_of_an_infeasible_instance_is_empty() {
    let out = stabline(&["polygon", &fixture("infeasible.json")]);
    assert_eq!(out.status.code(), Some(1));
    let v = json_stdout(&out);
    assert_eq!(v["classification"], Value::from("empty"));
    assert_eq!(v["vertices"].as_array().unwrap().len(), 0);
    assert_eq!(v["area"], Value::from(0));
    assert!(v.get("centroid").is_none());
}

#[test]
fn plot_writes_a_primal_svg_with_all_elements() {
    let path = tmp_path("wide_primal.svg");
    let out = stabline(&["plot", &fixture("wide.json"), "--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg.matches(r#"class="segment""#).count(), 6);
    assert_eq!(svg.matches(r#"class="selector""#).count(), 5);
}

#[test]
fn plot_dual_respects_the_method_filter() {
    let path = tmp_path("wide_dual.svg");
    let out = stabline(&[
        "plot",
        &fixture("wide.json"),
        "--out",
        path.to_str().unwrap(),
        "--dual",
        "--methods",
        "extreme-min,centroid",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg.matches(r#"class="strip""#).count(), 12);
    assert_eq!(svg.matches("<polygon").count(), 1);
    assert_eq!(svg.matches(r#"<circle class="selector""#).count(), 2);
}

#[test]
fn plot_of_an_infeasible_instance_still_writes_but_exits_one() {
    let path = tmp_path("infeasible_dual.svg");
    let out = stabline(&[
        "plot",
        &fixture("infeasible.json"),
        "--out",
        path.to_str().unwrap(),
        "--dual",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let svg = std::fs::read_to_string(&path).unwrap();
    assert_eq!(svg.matches(r#"class="strip""#).count(), 6);
    assert!(!svg.contains("<polygon"));
}

#[test]
fn oracle_agrees_with_check_on_the_fixtures() {
    let feasible = stabline(&["oracle", &fixture("wide.json")]);
    assert_eq!(feasible.status.code(), Some(0));
    let v = json_stdout(&feasible);
    assert_eq!(v["feasible"], Value::Bool(true));
    assert!(v["witness"].is_object());

    let infeasible = stabline(&["oracle", &fixture("infeasible.json")]);
    assert_eq!(infeasible.status.code(), Some(1));
    assert_eq!(json_stdout(&infeasible)["feasible"], Value::Bool(false));

    let single = stabline(&["oracle", &fixture("single.json")]);
    assert_eq!(single.status.code(), Some(2));
}
