use std::process::Command;

use borel_degen::cli::run;
use serde_json::Value;

fn run_cli(args: &[&str]) -> (i32, String, String) {
    let mut full = vec!["borel-degen".to_string()];
    full.extend(args.iter().map(|s| s.to_string()));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(&full, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let mut with = args.to_vec();
    with.push("--json");
    let (code, out, _) = run_cli(&with);
    (code, serde_json::from_str(&out).expect("valid JSON"))
}

/// Checks the fields every report carries.
fn check_report_schema(v: &Value, seed: u64) {
    let obj = v.as_object().expect("report is an object");
    for key in ["command", "seed", "items", "counts", "data"] {
        assert!(obj.contains_key(key), "missing {key}");
    }
    assert!(v["command"].as_array().unwrap().iter().all(Value::is_string));
    assert_eq!(v["seed"].as_u64(), Some(seed));
    for item in v["items"].as_array().unwrap() {
        assert!(item["id"].is_string() && item["detail"].is_string());
        assert!(["PASS", "FAIL", "WARNING", "INFO"].contains(&item["status"].as_str().unwrap()));
    }
    assert!(v["counts"].as_object().unwrap().values().all(Value::is_u64));
    assert!(!obj.contains_key("wall_time_ms"));
}

#[test]
fn enumerate_lists_the_catalogue() {
    let (code, out, _) = run_cli(&["enumerate", "--hp", "5t-2"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 8);
    assert!(lines[0].starts_with("J1 "));
    assert!(lines[6].starts_with("J7 "));
    assert_eq!(lines[7], "TOTAL 7");
    let (code, v) = run_json(&["enumerate", "--hp", "5t-2"]);
    assert_eq!(code, 0);
    check_report_schema(&v, 0);
    assert_eq!(v["counts"]["total"], 7);
    let ideals = v["data"]["ideals"].as_array().unwrap();
    assert_eq!(ideals.len(), 7);
    assert_eq!(ideals[6]["label"], 7);
    assert!(ideals.iter().all(|e| e["generators"].as_array().unwrap().iter().all(Value::is_string)));
}

#[test]
fn enumerate_count_only() {
    let (code, out, _) = run_cli(&["enumerate", "--hp", "9t-12", "--count-only"]);
    assert_eq!(code, 0);
    assert_eq!(out, "TOTAL 989\n");
    let (_, out, _) = run_cli(&["enumerate", "--hp", "[-2,5]", "--count-only"]);
    assert_eq!(out, "TOTAL 7\n");
}

#[test]
fn usage_errors_exit_with_2() {
    let (code, out, err) = run_cli(&["enumerate", "--hp", "bogus"]);
    assert_eq!(code, 2);
    assert!(out.is_empty());
    assert!(err.contains("cannot parse Hilbert polynomial"), "{err}");
    assert_eq!(run_cli(&["enumerate", "--hp", "4t-3"]).0, 2);
    assert_eq!(run_cli(&["frobnicate"]).0, 2);
    assert_eq!(run_cli(&["filter", "--l", "2"]).0, 2);
    assert_eq!(run_cli(&["segment", "--ideal", "x^2, q"]).0, 2);
    assert_eq!(run_cli(&["gb", "--gens", "x^2", "--order", "bracket(1,2)"]).0, 2);
    assert_eq!(run_cli(&["reproduce"]).0, 2);
    assert_eq!(run_cli(&["reproduce", "--section", "nope"]).0, 2);
    assert_eq!(run_cli(&["limit", "--l", "2", "--m", "2", "--case", "Nope"]).0, 2);
    assert_eq!(run_cli(&["--help"]).0, 0);
}

#[test]
fn filter_sections() {
    let (code, out, _) = run_cli(&["filter", "--l", "1", "--m", "3"]);
    assert_eq!(code, 0);
    assert!(out.contains("PASS: 2\n"));
    assert!(out.contains("PASS 2\n  J5 "), "{out}");
    assert!(out.contains("  J7 "));
    let (_, v) = run_json(&["filter", "--l", "1", "--m", "3", "--c1", "top-power"]);
    check_report_schema(&v, 0);
    let labels = |k: &str| -> Vec<u64> { v["data"][k].as_array().unwrap().iter().map(|e| e["label"].as_u64().unwrap()).collect() };
    assert_eq!(labels("fail_c1"), [1, 2, 3, 4]);
    assert_eq!(labels("fail_c2"), [6]);
    assert_eq!(labels("pass"), [5, 7]);

    let (_, out, _) = run_cli(&["filter", "--l", "2", "--m", "2"]);
    assert!(out.contains("PASS: 7\n"));
    // The computed (3,3) numbers; the published ones are 45 and 44.
    let (_, v) = run_json(&["filter", "--l", "3", "--m", "3"]);
    assert_eq!(v["counts"]["c1_pass"], 47);
    assert_eq!(v["counts"]["pass"], 46);
    assert_eq!(v["counts"]["fail_c2"], 1);
}

#[test]
fn gb_and_initial() {
    let (code, out, _) = run_cli(&["gb", "--gens", "x^2, x*y, y^4 + x*z^3", "--order", "lex"]);
    assert_eq!(code, 0);
    assert!(out.lines().count() >= 3);
    let (_, v) = run_json(&["initial", "--gens", "x^2, x*y, y^4 + x*z^3", "--order", "lex"]);
    check_report_schema(&v, 0);
    let sat: Vec<&str> = v["data"]["saturation"].as_array().unwrap().iter().map(|g| g.as_str().unwrap()).collect();
    assert_eq!(sat.len(), 4);
    let (_, out, _) = run_cli(&["initial", "--gens", "x^2, x*y, y^4 + x*z^3", "--order", "drl"]);
    assert!(out.contains("saturation "));
}

#[test]
fn limit_confirms_a_prediction() {
    let (code, out, _) = run_cli(&["limit", "--l", "2", "--m", "2", "--case", "EqProq2.1"]);
    assert_eq!(code, 0, "{out}");
    assert!(out.ends_with("CONFIRMED\n"));
    let (code, v) = run_json(&["limit", "--l", "2", "--m", "2", "--case", "EqProq2.1"]);
    assert_eq!(code, 0);
    check_report_schema(&v, 0);
    assert!(!v["data"]["branches"].as_array().unwrap().is_empty());
    assert_eq!(run_cli(&["limit", "--l", "2", "--m", "2", "--q", "5", "--case", "EqProq2.1"]).0, 2);
}

#[test]
fn segment_command() {
    let j85 = "x^2, xy^2, xyz^4, xz^5, y^7";
    let (code, out, _) = run_cli(&["segment", "--ideal", j85, "--degree", "9"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("NOT-A-SEGMENT degree 9"), "{out}");
    let (_, out, _) = run_cli(&["segment", "--ideal", j85, "--degree", "7"]);
    assert!(out.starts_with("NOT-A-SEGMENT degree 7 certificate u="), "{out}");
    let (_, out, _) = run_cli(&["segment", "--ideal", "x^2, xy^2, xyz^2, y^5", "--degree", "5"]);
    assert!(out.starts_with("SEGMENT degree 5 weights"));
    let (_, v) = run_json(&["segment", "--ideal", "x, y^6, y^5 z^3"]);
    assert_eq!(v["data"]["class"], "hilb-segment");
}

#[test]
fn witness_commands() {
    let f83 = "y^2*z + w*z*y + 2*y*z^2 - w^2*z + 4*z^3";
    let j83 = "x^2, xy^3, xy^2z, xyz^2, xz^6, y^7";
    let (code, out, _) = run_cli(&["witness", "verify", "--l", "3", "--m", "1", "--F", f83, "--order", "lex", "--target", j83]);
    assert_eq!(code, 0);
    assert!(out.starts_with("VERIFIED\n"));
    let (code, out, _) =
        run_cli(&["witness", "verify", "--l", "3", "--m", "1", "--F", f83, "--order", "lex", "--target", "x^2, xy^2, xyz^4, xz^5, y^7"]);
    assert_eq!(code, 1);
    assert!(out.starts_with("FAILED\n"));
    let (code, out, _) = run_cli(&[
        "witness", "search", "--l", "2", "--m", "2", "--order", "bracket(38,11,2,1)", "--target", "x^2, xy^2, xyz^2, y^5", "--tries", "1",
    ]);
    assert_eq!(code, 0);
    assert!(out.starts_with("FOUND "));
    let (code, v) = run_json(&["witness", "constraints", "--l", "1", "--m", "3", "--order", "drl", "--target", "x^2, xy, y^4"]);
    assert_eq!(code, 0);
    check_report_schema(&v, 0);
    assert_eq!(v["counts"]["equalities"], 0);
    assert_eq!(v["data"]["inconsistent"], false);
    // Wrong degree of F.
    assert_eq!(run_cli(&["witness", "verify", "--l", "3", "--m", "1", "--F", "z^2", "--target", j83]).0, 2);
}

#[test]
fn reproduce_sections() {
    let (code, out, _) = run_cli(&["reproduce", "--section", "2.2"]);
    assert_eq!(code, 0, "{out}");
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS degeneration (2,2)")).count(), 6);
    assert!(out.ends_with("SUMMARY 6 checks, 6 passed, 0 warnings, 0 failures\n"));
    let (code, out, _) = run_cli(&["reproduce", "--section", "2.5"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS witness-3-3")).count(), 16);
    let (code, v) = run_json(&["reproduce", "--section", "witnesses-3-1", "--section", "filters"]);
    assert_eq!(code, 0);
    check_report_schema(&v, 0);
    assert_eq!(v["counts"]["fail"], 0);
    assert!(v["items"].as_array().unwrap().iter().any(|i| i["status"] == "WARNING" && i["id"] == "filter (3,1)"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["enumerate", "--hp", "6t-3"],
        vec!["reproduce", "--section", "2.2", "--seed", "5"],
        vec!["witness", "search", "--l", "1", "--m", "3", "--order", "lex", "--target", "x^2, x y, x z^3, y^5", "--tries", "4", "--seed", "9"],
        vec!["limit", "--l", "3", "--m", "3", "--case", "P1", "--i", "1", "--json"],
    ] {
        let a = run_cli(&args);
        let b = run_cli(&args);
        assert_eq!(a, b, "{args:?}");
    }
    let (_, v) = run_json(&["reproduce", "--section", "2.2", "--seed", "5"]);
    check_report_schema(&v, 5);
}

#[test]
fn timing_is_opt_in() {
    let (_, out, _) = run_cli(&["enumerate", "--hp", "5t-2", "--count-only", "--timing"]);
    assert!(out.lines().last().unwrap().starts_with("WALL "));
    let (_, out, _) = run_cli(&["enumerate", "--hp", "5t-2", "--count-only", "--timing", "--json"]);
    let v: Value = serde_json::from_str(&out).unwrap();
    assert!(v["wall_time_ms"].is_u64());
}

#[test]
fn binary_exit_codes_and_worker_bound() {
    let bin = env!("CARGO_BIN_EXE_borel-degen");
    let ok = Command::new(bin).args(["enumerate", "--hp", "5t-2", "--count-only"]).env("BOREL_DEGEN_WORKERS", "2").output().unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(String::from_utf8(ok.stdout).unwrap(), "TOTAL 7\n");
    let bad = Command::new(bin).args(["enumerate", "--hp", "bogus"]).output().unwrap();
    assert_eq!(bad.status.code(), Some(2));
    assert!(String::from_utf8(bad.stderr).unwrap().contains("cannot parse Hilbert polynomial"));
    let failed = Command::new(bin)
        .args(["witness", "verify", "--l", "1", "--m", "3", "--F", "z^3", "--order", "lex", "--target", "x^2, xy, y^4"])
        .output()
        .unwrap();
    assert_eq!(failed.status.code(), Some(1));
}
