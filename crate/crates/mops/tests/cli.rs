use std::process::Command;

fn mops(args: &[&str]) -> std::process::Output {
    Command::new(env!("CARGO_BIN_EXE_mops"))
        .args(args)
        .output()
        .unwrap()
}

#[test]
fn coeffs_json_schema_and_values() {
    let out = mops(&["coeffs", "--n", "2"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["command"], "coeffs");
    assert!(v.get("params").is_some());
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    let coeffs: Vec<&str> = v["results"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c.as_str().unwrap())
        .collect();
    assert_eq!(coeffs, ["1/3", "-2", "1"]);
}

#[test]
fn coeffs_type1_pair() {
    let out = mops(&["coeffs", "--n", "2", "--type1"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["results"]["A"][0], "6");
    assert_eq!(v["results"]["B"][0], "-6");
}

#[test]
fn figure_csv_layout() {
    let out = mops(&["figure", "--a", "2", "--b", "3/2", "--c", "5", "--n-max", "5"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,x_max,ratio,bound");
    // both step line flags, n = 1..=5 each
    assert_eq!(lines.len(), 11);
    assert!(lines[1].starts_with("1,"));
}

#[test]
fn verify_suite_runs_and_exits_zero() {
    let out = mops(&["verify", "--suite", "symmetry"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["command"], "verify");
    assert_eq!(v["failures"].as_array().unwrap().len(), 0);
    for r in v["results"].as_array().unwrap() {
        assert_eq!(r["pass"], true);
    }
}

#[test]
fn invalid_parameters_exit_two() {
    let out = mops(&["coeffs", "--a", "-5"]);
    assert_eq!(out.status.code(), Some(2));
    let out = mops(&["verify", "--suite", "nope"]);
    assert_eq!(out.status.code(), Some(2));
    let out = mops(&["coeffs", "--d", "7"]);
    assert_eq!(out.status.code(), Some(2));
}
