use std::io::Write as _;
use std::process::{Command, Output};

use serde_json::Value;

fn hcasimir(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hcasimir")).args(args).output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

const LONDON_SWEEP: &[&str] = &[
    "potential", "--model", "london", "--alpha0", "1e-3", "--omega0", "1e15", "--r-min", "1e-9", "--r-max",
    "1e-3", "--points", "13",
];

#[test]
fn csv_header_and_row_count() {
    let o = hcasimir(LONDON_SWEEP);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "r_m,V_full_J,V_expanded_J,V_vdw_J,V_casimir_J,err_estimate_J,coeff_source"
    );
    let rows: Vec<&str> = lines.collect();
    assert_eq!(rows.len(), 13);
    for row in rows {
        let cells: Vec<&str> = row.split(',').collect();
        assert_eq!(cells.len(), 7);
        assert_eq!(cells[6], "derived");
        for c in &cells[..6] {
            let mantissa = c.trim_start_matches('-').split('e').next().unwrap();
            assert_eq!(mantissa.len(), 18, "17 significant digits expected in {c}");
            c.parse::<f64>().unwrap();
        }
    }
}

#[test]
fn sweep_is_deterministic() {
    let a = hcasimir(LONDON_SWEEP);
    let b = hcasimir(LONDON_SWEEP);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn rows_ordered_and_attractive() {
    let text = stdout(&hcasimir(LONDON_SWEEP));
    let rows: Vec<Vec<f64>> = text
        .lines()
        .skip(1)
        .map(|l| l.split(',').take(6).map(|c| c.parse().unwrap()).collect())
        .collect();
    for w in rows.windows(2) {
        assert!(w[0][0] < w[1][0]);
        assert!(w[0][1] <= w[1][1], "|V| must fall with r");
    }
    assert!(rows.iter().all(|r| r[1] < 0.0 && r[5] >= 0.0));
}

#[test]
fn coeff_source_switches_casimir_column_only() {
    let args = ["potential", "--model", "constant", "--alpha0", "1e-3", "--r-min", "1", "--r-max", "2", "--points", "2"];
    let derived = stdout(&hcasimir(&args));
    let mut with_paper = args.to_vec();
    with_paper.extend(["--coeff-source", "paper"]);
    let paper = stdout(&hcasimir(&with_paper));
    let cell = |t: &str, col: usize| -> f64 { t.lines().nth(1).unwrap().split(',').nth(col).unwrap().parse().unwrap() };
    assert_eq!(cell(&derived, 1), cell(&paper, 1));
    let ratio = cell(&paper, 4) / cell(&derived, 4);
    assert!((ratio - 25.0 / 22.0).abs() < 1e-14);
    assert!(paper.lines().nth(1).unwrap().ends_with(",paper"));
}

#[test]
fn json_document_shape() {
    let mut args = LONDON_SWEEP.to_vec();
    args.extend(["--out", "json"]);
    let o = hcasimir(&args);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(doc["config"]["model"], "london");
    assert_eq!(doc["config"]["points"], 13);
    let rows = doc["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 13);
    for key in ["r_m", "V_full_J", "V_expanded_J", "V_vdw_J", "V_casimir_J", "err_estimate_J"] {
        assert!(rows[0][key].is_f64(), "{key}");
    }
    assert_eq!(rows[0]["coeff_source"], "derived");
}

#[test]
fn config_file_merges_under_flags() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(
        f,
        r#"{{"model": "london", "alpha0": 1e-3, "omega0": 1e15, "r-min": 1e-9, "r-max": 1e-3, "points": 13, "coeff-source": "paper", "out": "json"}}"#
    )
    .unwrap();
    let path = f.path().to_str().unwrap();

    let from_file = hcasimir(&["potential", "--config", path]);
    assert_eq!(from_file.status.code(), Some(0), "{}", String::from_utf8_lossy(&from_file.stderr));
    let doc: Value = serde_json::from_slice(&from_file.stdout).unwrap();
    assert_eq!(doc["config"]["coeff_source"], "paper");

    let overridden = hcasimir(&["potential", "--config", path, "--points", "3", "--out", "csv", "--coeff-source", "derived"]);
    let text = stdout(&overridden);
    assert_eq!(text.lines().count(), 4);
    assert!(text.lines().nth(1).unwrap().ends_with(",derived"));
}

#[test]
fn config_rejects_unknown_keys() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    write!(f, r#"{{"alpha": 1}}"#).unwrap();
    let o = hcasimir(&["calibrate", "--config", f.path().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn tabulated_model_from_file() {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    writeln!(f, "omega,alpha").unwrap();
    for i in 0..400 {
        let w = 10f64.powf(12.0 + 6.0 * i as f64 / 399.0);
        writeln!(f, "{w:e},{:e}", 1e-3 / (1.0 + (w / 1e15).powi(2))).unwrap();
    }
    let o = hcasimir(&[
        "potential", "--model", "tabulated", "--table", f.path().to_str().unwrap(), "--r-min", "1e-8", "--r-max",
        "1e-6", "--points", "3",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let text = stdout(&o);
    let first: Vec<f64> = text.lines().nth(1).unwrap().split(',').take(6).map(|c| c.parse().unwrap()).collect();
    assert!(first[1] < 0.0);
    assert!(first[3].is_finite() && first[3] < 0.0);
}

#[test]
fn invalid_inputs_exit_2() {
    for args in [
        vec!["potential", "--alpha0", "1e-3", "--omega0", "1e15", "--r-min", "-1", "--r-max", "1"],
        vec!["potential", "--alpha0", "1e-3", "--omega0", "1e15", "--r-min", "2", "--r-max", "1"],
        vec!["potential", "--alpha0", "1e-3", "--r-min", "1", "--r-max", "2"],
        vec!["potential", "--model", "tabulated", "--table", "/nonexistent.csv", "--r-min", "1", "--r-max", "2"],
        vec!["potential", "--alpha0", "1e-3", "--omega0", "1e15", "--r-min", "1", "--r-max", "2", "--rel-tol", "0"],
        vec!["potential", "--r-min", "nope"],
        vec!["calibrate", "--mass-kg", "-1"],
        vec!["calibrate", "--mass-kg", "1", "--alpha0", "1"],
        vec!["calibrate", "--coeff-source", "bogus"],
        vec!["modes", "--alpha0", "0"],
        vec!["modes"],
        vec!["fields", "--omega", "1e9", "--r", "0", "--theta", "1"],
        vec!["fields", "--omega", "1e9", "--r", "1", "--theta", "4"],
        vec!["frobnicate"],
    ] {
        let o = hcasimir(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}: {}", String::from_utf8_lossy(&o.stderr));
        assert!(!String::from_utf8_lossy(&o.stderr).contains("panicked"));
    }
}

#[test]
fn numerical_failures_exit_3() {
    let unstable = hcasimir(&["potential", "--alpha0", "1.5", "--omega0", "1e15", "--r-min", "1", "--r-max", "2"]);
    assert_eq!(unstable.status.code(), Some(3));
    let starved = hcasimir(&[
        "potential", "--alpha0", "0.5", "--omega0", "1e15", "--r-min", "1e-9", "--r-max", "1e-6", "--max-panels", "1",
        "--rel-tol", "1e-14",
    ]);
    assert_eq!(starved.status.code(), Some(3), "{}", String::from_utf8_lossy(&starved.stderr));
    let modes = hcasimir(&["modes", "--alpha0", "1"]);
    assert_eq!(modes.status.code(), Some(3));
}

#[test]
fn calibrate_round_trip() {
    let a = stdout(&hcasimir(&["calibrate", "--mass-kg", "2.5"]));
    let alpha: String = a.lines().find_map(|l| l.strip_prefix("alpha0=")).unwrap().into();
    let b = stdout(&hcasimir(&["calibrate", "--alpha0", &alpha]));
    let mass: f64 = b.lines().find_map(|l| l.strip_prefix("mass_kg=")).unwrap().parse().unwrap();
    assert!((mass / 2.5 - 1.0).abs() < 1e-15);
}

#[test]
fn verify_reports_every_check() {
    let o = hcasimir(&["verify"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let passes = text.lines().filter(|l| l.starts_with("PASS ")).count();
    assert!(passes >= 9);
    assert!(!text.contains("FAIL "));

    let j = hcasimir(&["verify", "--out", "json"]);
    let doc: Value = serde_json::from_slice(&j.stdout).unwrap();
    assert_eq!(doc["passed"], doc["total"]);
}

#[test]
fn modes_and_fields_outputs() {
    let m = stdout(&hcasimir(&["modes", "--alpha0", "0.3", "--omega0", "2e15", "--out", "json"]));
    let doc: Value = serde_json::from_str(&m).unwrap();
    assert_eq!(doc["mode_1_multiplicity"], 3);
    assert!(doc["relative_difference"].as_f64().unwrap() < 1e-8);

    let f = stdout(&hcasimir(&["fields", "--omega", "1e9", "--r", "0.3", "--theta", "1", "--t", "1e-9"]));
    let get = |k: &str| -> f64 {
        f.lines().find_map(|l| l.strip_prefix(&format!("{k}="))).unwrap().parse().unwrap()
    };
    assert!(get("time_frequency_deviation") < 1e-10);
    assert!((get("E_r") - get("E_r_frequency_domain")).abs() < 1e-10);
    assert!(get("maxwell_curl_residual") < 1e-3);
}
