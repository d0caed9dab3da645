//! End-to-end tests of the hmskit binary: exit codes, report determinism,
//! the documented JSON schema, and the text lines the examples promise.

use std::path::PathBuf;
use std::process::Output;

use serde_json::Value;

fn hmskit(args: &[&str]) -> Output {
    std::process::Command::new(env!("CARGO_BIN_EXE_hmskit"))
        .args(args)
        .output()
        .expect("the binary launches")
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal terminations in tests")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("reports are UTF-8")
}

fn scratch_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("hmskit-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).expect("scratch dir");
    dir
}

fn find_check<'a>(report: &'a Value, name: &str) -> &'a Value {
    report["checks"]
        .as_array()
        .expect("checks array")
        .iter()
        .find(|c| c["name"] == name)
        .unwrap_or_else(|| panic!("check {name} missing"))
}

#[test]
fn json_reports_are_byte_identical_across_runs() {
    let first = hmskit(&["hh", "--n", "2", "--truncated", "--json"]);
    let second = hmskit(&["hh", "--n", "2", "--truncated", "--json"]);
    assert_eq!(exit_code(&first), 0, "n = 2 is the matching row of the dimension claim");
    assert_eq!(first.stdout, second.stdout);

    let third = hmskit(&["zonotope", "--n", "2", "--check-lifts", "--thimbles", "--json"]);
    let fourth = hmskit(&["zonotope", "--n", "2", "--check-lifts", "--thimbles", "--json"]);
    assert_eq!(exit_code(&third), 0);
    assert_eq!(third.stdout, fourth.stdout);
}

#[test]
fn truncated_n3_reports_the_honest_dimension_miss() {
    let out = hmskit(&["hh", "--n", "3", "--truncated", "--json"]);
    assert_eq!(exit_code(&out), 1, "a failing check must exit 1");
    let report: Value = serde_json::from_str(&stdout_str(&out)).expect("valid JSON");
    let check = find_check(&report, "truncated_hh_n3");
    assert_eq!(check["status"], "fail");
    assert_eq!(check["expected"], serde_json::json!({"hh1": 4, "hh2": 9}));
    assert_eq!(check["computed"], serde_json::json!({"hh1": 4, "hh2": 11}));
}

#[test]
fn out_of_range_and_misused_flags_exit_2() {
    assert_eq!(exit_code(&hmskit(&["hh", "--n", "9"])), 2);
    assert_eq!(exit_code(&hmskit(&["hh", "--n", "2", "--oracle"])), 2);
    assert_eq!(exit_code(&hmskit(&["flow", "--k", "4", "--n", "2"])), 2);
    assert_eq!(exit_code(&hmskit(&["coamoeba", "--n", "3"])), 2);
}

#[test]
fn cyclic_text_names_the_generator() {
    let out = hmskit(&["hh", "--n", "1", "--cyclic"]);
    let text = stdout_str(&out);
    assert!(text.contains("y1^3+y2^3+y3^3"), "generator missing from:\n{text}");
    // the invariant subspace is honestly two-dimensional, so the run fails
    assert_eq!(exit_code(&out), 1);
    assert!(text.contains("generator y1^3+y2^3+y3^3: present"));
}

#[test]
fn zonotope_thimble_summary_counts_disjoint_roots() {
    let out = hmskit(&["zonotope", "--n", "3", "--thimbles"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_str(&out).contains("3 of 5 roots disjoint"));
}

#[test]
fn critical_n1_lists_the_cube_roots_of_4() {
    let out = hmskit(&["critical", "--n", "1"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout_str(&out).contains("cube roots of 4"));
}

#[test]
fn flow_writes_the_trajectory_csv() {
    let dir = scratch_dir("flow");
    let csv = dir.join("traj.csv");
    let out = hmskit(&[
        "flow", "--k", "2", "--n", "2", "--t", "0.5", "--dt", "0.001", "--out",
        csv.to_str().expect("utf-8 path"), "--json",
    ]);
    assert_eq!(exit_code(&out), 0);
    let body = std::fs::read_to_string(&csv).expect("CSV written");
    let mut lines = body.lines();
    assert_eq!(
        lines.next(),
        Some("t,re_y1,im_y1,re_y2,im_y2,re_y3,im_y3,alpha_turns")
    );
    assert_eq!(body.lines().count(), 502, "header plus one row per integrator sample");
    let report: Value = serde_json::from_str(&stdout_str(&out)).expect("valid JSON");
    assert_eq!(find_check(&report, "flow_phase_term")["status"], "pass");
    let _ = std::fs::remove_dir_all(&dir);
}

#[test]
fn coamoeba_writes_p6_and_svg_and_reports_honest_counts() {
    let dir = scratch_dir("coamoeba");
    let target = dir.join("fig.ppm");
    let out = hmskit(&[
        "coamoeba", "--n", "1", "--resolution", "128", "--out",
        target.to_str().expect("utf-8 path"), "--json",
    ]);
    // the stated 1/2 area fraction never holds, so the run reports a failure
    assert_eq!(exit_code(&out), 1);
    let ppm = std::fs::read(&target).expect("PPM written");
    assert!(ppm.starts_with(b"P6\n128 128\n255\n"));
    assert_eq!(ppm.len(), "P6\n128 128\n255\n".len() + 128 * 128 * 3);
    assert!(dir.join("fig.svg").exists());
    let report: Value = serde_json::from_str(&stdout_str(&out)).expect("valid JSON");
    assert_eq!(find_check(&report, "coamoeba_components_n1")["status"], "pass");
    assert_eq!(find_check(&report, "coamoeba_area_n1")["status"], "fail");
    let _ = std::fs::remove_dir_all(&dir);
}

// ---------------------------------------------------------------- schema

/// Minimal JSON-schema walker covering exactly the constructs the documented
/// schema uses: type, const, enum, required, properties,
/// additionalProperties: false, and items.
fn validate(schema: &Value, value: &Value, path: &str) -> Result<(), String> {
    if let Some(ty) = schema.get("type").and_then(Value::as_str) {
        let ok = match ty {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "integer" => value.is_i64() || value.is_u64(),
            other => return Err(format!("{path}: unsupported schema type {other}")),
        };
        if !ok {
            return Err(format!("{path}: expected {ty}, got {value}"));
        }
    }
    if let Some(constant) = schema.get("const") {
        if constant != value {
            return Err(format!("{path}: expected const {constant}, got {value}"));
        }
    }
    if let Some(options) = schema.get("enum").and_then(Value::as_array) {
        if !options.contains(value) {
            return Err(format!("{path}: {value} not in {options:?}"));
        }
    }
    if let Some(obj) = value.as_object() {
        if let Some(required) = schema.get("required").and_then(Value::as_array) {
            for key in required {
                let key = key.as_str().expect("required lists strings");
                if !obj.contains_key(key) {
                    return Err(format!("{path}: missing required key {key}"));
                }
            }
        }
        let properties = schema.get("properties").and_then(Value::as_object);
        if let Some(props) = properties {
            for (key, sub) in props {
                if let Some(present) = obj.get(key) {
                    validate(sub, present, &format!("{path}.{key}"))?;
                }
            }
        }
        if schema.get("additionalProperties") == Some(&Value::Bool(false)) {
            for key in obj.keys() {
                if properties.map_or(true, |props| !props.contains_key(key)) {
                    return Err(format!("{path}: unexpected key {key}"));
                }
            }
        }
    }
    if let (Some(items), Some(elements)) = (schema.get("items"), value.as_array()) {
        for (i, element) in elements.iter().enumerate() {
            validate(items, element, &format!("{path}[{i}]"))?;
        }
    }
    Ok(())
}

#[test]
fn reports_validate_against_the_documented_schema() {
    let schema_path = PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../docs/report-schema.json");
    let schema: Value =
        serde_json::from_str(&std::fs::read_to_string(schema_path).expect("schema file"))
            .expect("schema parses");

    let dir = scratch_dir("schema");
    let csv = dir.join("t.csv");
    let ppm = dir.join("f.ppm");
    let runs: Vec<Vec<&str>> = vec![
        vec!["hh", "--n", "1", "--truncated", "--cyclic", "--json"],
        vec!["critical", "--n", "2", "--json"],
        vec!["zonotope", "--n", "1", "--check-lifts", "--thimbles", "--json"],
        vec!["flow", "--k", "2", "--n", "1", "--t", "0.2", "--dt", "0.001", "--out",
             csv.to_str().expect("utf-8"), "--json"],
        vec!["coamoeba", "--n", "2", "--resolution", "64", "--out",
             ppm.to_str().expect("utf-8"), "--json"],
    ];
    for args in runs {
        let out = hmskit(&args);
        let report: Value = serde_json::from_str(&stdout_str(&out))
            .unwrap_or_else(|e| panic!("{args:?}: invalid JSON: {e}"));
        validate(&schema, &report, "$").unwrap_or_else(|e| panic!("{args:?}: {e}"));
        // names are unique within a report
        let names: Vec<&str> = report["checks"]
            .as_array()
            .expect("checks")
            .iter()
            .map(|c| c["name"].as_str().expect("name"))
            .collect();
        let mut deduped = names.clone();
        deduped.sort_unstable();
        deduped.dedup();
        assert_eq!(deduped.len(), names.len(), "{args:?}: duplicate check names");
    }
    let _ = std::fs::remove_dir_all(&dir);
}
