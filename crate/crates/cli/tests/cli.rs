use std::process::{Command, Output};

fn eulerint(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_eulerint"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exited normally")
}

#[test]
fn eval_prints_closed_forms() {
    let cases: [(&[&str], &str); 3] = [
        (&["eval", "--theorem", "T3", "--p", "0", "--q", "1"], "1.5707963268"),
        (&["eval", "--theorem", "T1", "--n", "1", "--p", "1", "--q", "0"], "1"),
        (&["eval", "--theorem", "Beta", "--m", "1", "--nexp", "2"], "1.5707963268"),
    ];
    for (args, expected) in cases {
        let out = eulerint(args);
        assert_eq!(code(&out), 0, "{args:?}");
        assert_eq!(stdout(&out).trim(), expected, "{args:?}");
    }
}

#[test]
fn digits_flag_controls_precision() {
    let out = eulerint(&["--digits", "4", "eval", "--theorem", "T3", "--p", "0", "--q", "1"]);
    assert_eq!(stdout(&out).trim(), "1.5708");
}

#[test]
fn eval_json_is_machine_readable() {
    let out = eulerint(&["eval", "--theorem", "T2", "--n", "1", "--p", "1", "--q", "1", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!((v["value"].as_f64().unwrap() - 0.5).abs() < 1e-15);
}

#[test]
fn domain_errors_exit_2_with_message() {
    let out = eulerint(&["eval", "--theorem", "T1", "--n", "1", "--p", "-1", "--q", "0"]);
    assert_eq!(code(&out), 2);
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("negative"), "{err}");

    let out = eulerint(&["eval", "--theorem", "T1", "--n", "0", "--p", "1", "--q", "1"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn usage_errors_exit_64() {
    assert_eq!(code(&eulerint(&["eval", "--theorem", "T1", "--n", "1"])), 64);
    assert_eq!(code(&eulerint(&["eval", "--theorem", "T9"])), 64);
    assert_eq!(code(&eulerint(&["frobnicate"])), 64);
    assert_eq!(code(&eulerint(&["--tol", "-1", "eval", "--theorem", "T3", "--p", "0", "--q", "1"])), 64);
    assert_eq!(code(&eulerint(&["compare", "--n", "", "--p", "1", "--q", "1"])), 64);
}

#[test]
fn oracle_matches_closed_form() {
    let out = eulerint(&["oracle", "--theorem", "T1", "--n", "2", "--p", "1", "--q", "0", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert!((v["value"]["value"].as_f64().unwrap() - 1.0).abs() < 1e-8, "{v}");
}

#[test]
fn compare_single_point_passes() {
    let out = eulerint(&["compare", "--n", "0.5", "--p", "0", "--q", "1", "--oscillator", "cos", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut rows = csv::Reader::from_reader(text.as_bytes());
    let records: Vec<csv::StringRecord> = rows.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), 1);
    let closed: f64 = records[0][4].parse().unwrap();
    assert!((closed - (std::f64::consts::PI / 2.0).sqrt()).abs() < 1e-15);
    assert_eq!(&records[0][9], "pass");
}

#[test]
fn compare_skips_out_of_domain_points() {
    let out = eulerint(&["compare", "--n", "1", "--p", "0", "--q", "1", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("skipped:"));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn compare_acceptance_grid_passes() {
    let out = eulerint(&["compare", "--preset", "acceptance", "--format", "json"]);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    let rows: Vec<serde_json::Value> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rows.len(), 7 * 3 * 4 * 2);
    assert!(rows.iter().all(|r| r["status"] == "pass"));
}

#[test]
fn clothoid_csv_rows() {
    let out = eulerint(&["clothoid", "--c", "1", "--phi-max", "3.14159", "--count", "100", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "phi,s,x,y,r");
    assert_eq!(lines.len(), 101);
    assert_eq!(lines[1], "0,0,0,0,inf");
}

#[test]
fn clothoid_svg_approaches_pole() {
    let out = eulerint(&["clothoid", "--c", "1", "--phi-max", "628.3", "--count", "5000", "--format", "svg"]);
    assert_eq!(code(&out), 0);
    let svg = stdout(&out);
    assert_eq!(svg.matches("<polyline").count(), 1);
    let points = svg.split("points=\"").nth(1).unwrap().split('"').next().unwrap();
    let last = points.split(' ').next_back().unwrap();
    let (x, y) = last.split_once(',').unwrap();
    let (x, y): (f64, f64) = (x.parse().unwrap(), -y.parse::<f64>().unwrap());
    let pole = (std::f64::consts::PI / 2.0).sqrt();
    // the spiral sits about 1/(2 sqrt(phi)) from the pole at this angle
    assert!(((x - pole).powi(2) + (y - pole).powi(2)).sqrt() < 0.05, "{x} {y}");
}

#[test]
fn clothoid_json_round_trips() {
    let out = eulerint(&["clothoid", "--c", "2", "--phi-max", "1", "--count", "2", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let v: serde_json::Value = serde_json::from_str(&text).unwrap();
    assert_eq!(v[1]["s"].as_f64().unwrap(), 4.0);
    assert_eq!(v[0]["r"], "inf");
    let again = serde_json::to_string(&v).unwrap();
    let reparsed: serde_json::Value = serde_json::from_str(&again).unwrap();
    assert_eq!(v, reparsed);
    assert_eq!(again, serde_json::to_string(&reparsed).unwrap());
}

#[test]
fn clothoid_writes_to_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("spiral.csv");
    let out = eulerint(&["clothoid", "--c", "1", "--phi-max", "1", "--count", "5", "-o", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0);
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap().lines().count(), 6);
}

#[test]
fn unwritable_output_exits_74() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("missing").join("spiral.csv");
    let out = eulerint(&["clothoid", "--c", "1", "--phi-max", "1", "--count", "5", "-o", path.to_str().unwrap()]);
    assert_eq!(code(&out), 74);
}

#[test]
fn output_is_deterministic() {
    let args = ["compare", "--n", "0.5,1,2", "--p", "0.5,1", "--q", "0:2:3", "--format", "csv"];
    assert_eq!(eulerint(&args).stdout, eulerint(&args).stdout);
    let args = ["clothoid", "--c", "1.5", "--phi-max", "20", "--count", "300", "--format", "json"];
    assert_eq!(eulerint(&args).stdout, eulerint(&args).stdout);
}
