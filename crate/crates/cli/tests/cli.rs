use std::collections::BTreeSet;
use std::process::{Command, Output};

use macaulay_core::dualcore::{parse_dual, parse_series};
use proptest::prelude::*;
use serde_json::Value;

fn macaulay(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_macaulay"))
        .args(args)
        .env_remove("MACAULAY_FORMAT")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut full = vec!["--format", "json"];
    full.extend_from_slice(args);
    let o = macaulay(&full);
    let v: Value = serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("{e}: {}", stdout(&o)));
    (v, o.status.code().unwrap())
}

fn strs(v: &Value) -> Vec<String> {
    v.as_array().unwrap().iter().map(|s| s.as_str().unwrap().to_string()).collect()
}

#[test]
fn annihilator_of_monomial() {
    let (v, code) = json(&["ann", "y1^2*y2"]);
    assert_eq!(code, 0);
    let gens: BTreeSet<String> = strs(&v["result"]["generators"]).into_iter().collect();
    assert_eq!(gens, BTreeSet::from(["x1^3".to_string(), "x2^2".to_string()]));
    assert_eq!(v["result"]["colength"], 6);
    assert_eq!(v["inputs"][0]["nvars"], 2);
    assert_eq!(v["inputs"][0]["nvars_source"], "inferred");
}

#[test]
fn hilbert_function_text_line() {
    let o = macaulay(&["hf", "y1^3*y2 + y2^3"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("hilbert function: 1 2 2 2 1"), "{}", stdout(&o));
}

#[test]
fn three_lines_classification() {
    let o = macaulay(&["classify", "y1*y2*y3"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("class: ThreeLines"));
    let (v, _) = json(&["classify", "y1*y2*y3"]);
    assert_eq!(v["result"]["singularity_profile"]["colength"], 3);
    assert_eq!(v["result"]["singularity_profile"]["singular_points"], 3);
    assert_eq!(v["result"]["j_invariant"], Value::Null);
}

#[test]
fn parse_errors_exit_two_with_position() {
    let (v, code) = json(&["hf", "y1 + x2"]);
    assert_eq!(code, 2);
    assert_eq!(v["error"]["kind"], "input");
    assert_eq!(v["error"]["position"], 5);
    let o = macaulay(&["hf", "y1 +"]);
    assert_eq!(o.status.code(), Some(2));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("position 4"), "{err}");
    assert!(err.contains("    ^"), "{err}");
}

#[test]
fn domain_errors_exit_one() {
    let (v, code) = json(&["canonical", "y1^3*y2 + y2^3"]);
    assert_eq!(code, 1);
    assert_eq!(v["error"]["kind"], "domain");
    assert!(v["error"]["message"].as_str().unwrap().contains("precondition"));
    let (_, code) = json(&["classify", "y1^3 + y2^3 + y3^3 + y4^3"]);
    assert_eq!(code, 1);
    let (_, code) = json(&["jinv", "--lambda", "1"]);
    assert_eq!(code, 1);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(macaulay(&["perp", "x1^2"]).status.code(), Some(2));
    assert_eq!(macaulay(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(macaulay(&["--nvars", "1", "hf", "y2^3"]).status.code(), Some(2));
    assert_eq!(macaulay(&["hf", "x1^3"]).status.code(), Some(2));
}

#[test]
fn nvars_override_is_echoed() {
    let (v, code) = json(&["--nvars", "3", "hf", "y1^2"]);
    assert_eq!(code, 0);
    assert_eq!(v["inputs"][0]["nvars"], 3);
    assert_eq!(v["inputs"][0]["nvars_source"], "option");
    assert_eq!(v["result"]["hilbert_function"], serde_json::json!([1, 1, 1]));
    let o = macaulay(&["--nvars", "3", "hf", "y1^2"]);
    assert!(stdout(&o).contains("[3 variables, from --nvars]"));
}

#[test]
fn format_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_macaulay"))
        .args(["hf", "y1^2"])
        .env("MACAULAY_FORMAT", "json")
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["schema"], "macaulay-cli/1");
    assert_eq!(v["command"], "hf");
}

#[test]
fn output_is_byte_identical_across_runs() {
    for args in [
        vec!["normalize", "y1^3 + y2^2 + y1*y2 + y2*y3 + y3^2"],
        vec!["classify", "y2^2*y3 - y1^3 - y1^2*y3"],
        vec!["--format", "json", "iso", "y1^2*y2 + y1^2", "y1^2*y2"],
        vec!["--seed", "11", "classify", "y1*y2^2 - y2*y3^2"],
    ] {
        let a = macaulay(&args);
        let b = macaulay(&args);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
        assert!(a.status.success());
    }
}

#[test]
fn printed_polynomials_reparse() {
    let (v, _) = json(&["normalize", "y1^3 + y2^2 + y1*y2 + y2*y3 + y3^2"]);
    let r = &v["result"];
    let normal = parse_dual(r["normal_form"].as_str().unwrap()).unwrap();
    assert_eq!(normal, parse_dual("y1^3 + y2^2 + 3/4*y3^2").unwrap());
    assert_eq!(r["verified"], true);
    for sub in r["witness"]["substitutions"].as_array().unwrap() {
        parse_series(sub["image"].as_str().unwrap()).unwrap();
    }
    let (v, _) = json(&["perp", "x1^2", "x2^2", "--socle", "3"]);
    for b in strs(&v["result"]["basis"]) {
        assert!(parse_dual(&b).is_ok() || b == "1", "{b}");
    }
}

#[test]
fn witness_file_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("w.json");
    let p = path.to_str().unwrap();
    let f = "y1^3 - y2^3 + y1^2 + 3*y1*y2 - y2^2";
    let g = "y1^3 - y2^3";
    let (v, code) = json(&["canonical", f, "--save-witness", p]);
    assert_eq!(code, 0);
    assert_eq!(v["result"]["verified"], true);

    let (v, code) = json(&["verify-iso", f, g, "--witness", p]);
    assert_eq!((code, &v["result"]["verified"]), (0, &Value::Bool(true)));
    let (v, _) = json(&["verify-iso", g, f, "--witness", p]);
    assert_eq!(v["result"]["verified"], false);

    let mut doc: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    doc["unit"] = "1 + x2".into();
    std::fs::write(&path, doc.to_string()).unwrap();
    let (v, _) = json(&["verify-iso", f, g, "--witness", p]);
    assert_eq!(v["result"]["verified"], false);

    std::fs::write(&path, "not json").unwrap();
    let (_, code) = json(&["verify-iso", f, g, "--witness", p]);
    assert_eq!(code, 2);
    let missing = dir.path().join("missing.json");
    let (_, code) = json(&["verify-iso", f, g, "--witness", missing.to_str().unwrap()]);
    assert_eq!(code, 2);
}

#[test]
fn iso_decisions() {
    let (v, _) = json(&["iso", "y1^2*y2", "y1^3 - y2^3"]);
    assert_eq!(v["result"]["decision"], "not isomorphic");
    let (v, _) = json(&["iso", "y1^3 + y2^2", "y1^3 + y1*y2"]);
    assert_eq!(v["result"]["decision"], "not isomorphic");
    let (v, _) = json(&["iso", "y1^3 + y2^2", "y1^3 - 2*y2^2 + y1*y2"]);
    assert_eq!(v["result"]["decision"], "isomorphic");
}

#[test]
fn structural_commands() {
    let (v, _) = json(&["gorenstein", "x1^2", "x2^2", "x1*x2", "--socle", "2"]);
    assert_eq!(v["result"]["gorenstein"], false);
    assert_eq!(v["result"]["socle_dimension"], 2);
    let (v, _) = json(&["gorenstein", "x1^3", "x2^2", "--socle", "3"]);
    assert_eq!(v["result"]["gorenstein"], true);
    assert_eq!(v["result"]["dual_generator"], "y1^2*y2");
    let (v, _) = json(&["q0", "y1^3 + y2^2"]);
    assert_eq!(v["result"]["hilbert_function"], serde_json::json!([1, 1, 1, 1]));
    assert_eq!(v["result"]["same_hilbert_function"], false);
    let (v, _) = json(&["delta", "y1^2*y2 + y3^3"]);
    assert_eq!(v["result"]["rank"], 3);
    assert_eq!(v["result"]["rows"].as_array().unwrap().len(), 3);
}

#[test]
fn j_invariants_and_models() {
    let (v, _) = json(&["jinv", "--lambda", "-1"]);
    assert_eq!(v["result"]["j_invariant"], "1728");
    let (v, _) = json(&["jinv", "y1^3 + y2^3 + y3^3"]);
    assert_eq!(v["result"]["j_invariant"], "0");
    let (v, _) = json(&["models"]);
    assert_eq!(v["result"]["count"], 12);
    let (v, _) = json(&["models", "--hf", "1,3,3,1"]);
    assert_eq!(v["result"]["count"], 7);
    let (v, _) = json(&["models", "--class", "elliptic", "--lambda", "5/2"]);
    assert_eq!(v["result"]["count"], 2);
    let legendre = &v["result"]["rows"][1];
    assert!(legendre["dual_generator"].as_str().unwrap().contains("5/2"));
}

#[test]
fn selftest_reports_every_case() {
    let (v, code) = json(&["selftest", "--seed", "3"]);
    assert_eq!(code, 0);
    let r = &v["result"];
    assert_eq!(r["passed"], true);
    assert_eq!(r["failed"], 0);
    let names = strs(&Value::Array(
        r["cases"].as_array().unwrap().iter().map(|c| c["name"].clone()).collect(),
    ));
    assert!(names.iter().filter(|n| n.starts_with("fixture/")).count() >= 16);
    assert!(names.iter().any(|n| n.starts_with("property/")));
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn malformed_input_never_crashes(text in "[xy0-9^*+/ -]{0,16}") {
        let o = macaulay(&["hf", &text]);
        let code = o.status.code();
        prop_assert!(matches!(code, Some(0) | Some(1) | Some(2)), "{text:?} gave {code:?}");
    }
}
