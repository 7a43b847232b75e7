use std::process::{Command, Output};

use gamma_ratio::validation::{scan_rows, CheckOutcome, DOUBLING_GRID};
use gamma_ratio::ParameterSet;
use gamma_ratio_cli::{suite_exit_code, EXIT_PRECONDITION, EXIT_SUCCESS, EXIT_VALIDATION_FAILED};
use serde_json::Value;

fn bin(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gamma-ratio"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn json(args: &[&str]) -> Value {
    let mut full = args.to_vec();
    full.extend(["--format", "json"]);
    let o = bin(&full);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    serde_json::from_str(&stdout(&o)).unwrap()
}

#[test]
fn eval_terminating_example() {
    let v = json(&["eval", "--a", "1,3", "--b", "2", "--n", "5", "--order", "3"]);
    let row = &v["rows"][0];
    let series = row["series"].as_f64().unwrap();
    assert!((series - 7.0 / 6.0).abs() <= 1e-11 * 7.0 / 6.0);
    assert!((row["oracle"].as_f64().unwrap() - 7.0 / 6.0).abs() <= 1e-11);
    assert!(row["abs_error"].as_f64().unwrap() <= 1e-11);
    assert_eq!(row["terminated"], Value::Bool(true));
    assert_eq!(row["m_used"], 1);
    assert_eq!(v["params"]["p"], 1);
    assert_eq!(v["fitted_order"], Value::Null);
}

#[test]
fn eval_human_lists_every_field() {
    let o = bin(&["eval", "--a", "1,3", "--b", "2", "--n", "5", "--order", "3"]);
    let text = stdout(&o);
    for key in [
        "series",
        "oracle",
        "abs_error",
        "rel_error",
        "m_used",
        "terminated",
    ] {
        assert!(
            text.lines().any(|l| l.starts_with(key)),
            "{key} missing:\n{text}"
        );
    }
    assert!(text.contains("terminated      true"), "{text}");
}

#[test]
fn coeffs_example() {
    let v = json(&[
        "coeffs",
        "--a",
        "0.3,0.7,1.1",
        "--b",
        "0.9,1.3",
        "--k-max",
        "1",
    ]);
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 2);
    assert_eq!(rows[0]["k"], 0);
    assert_eq!(rows[0]["a_k"].as_f64().unwrap(), 1.0);
    assert_eq!(rows[1]["k"], 1);
    assert!((rows[1]["a_k"].as_f64().unwrap() + 0.04).abs() < 1e-15);
}

#[test]
fn gamma_pole_exits_with_single_line() {
    let o = bin(&["eval", "--a", "1,1", "--b", "-12", "--n", "10"]);
    assert_eq!(o.status.code(), Some(EXIT_PRECONDITION));
    let err = stderr(&o);
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.contains("Γ(b_1+n) = Γ(-2)"), "{err}");
    assert!(stdout(&o).is_empty());
}

#[test]
fn zero_b_is_a_normal_result() {
    let v = json(&["eval", "--a", "1,1", "--b", "0", "--n", "10"]);
    // Γ(11)Γ(11) / (Γ(10)Γ(12)) = 10/11
    assert!((v["rows"][0]["oracle"].as_f64().unwrap() - 10.0 / 11.0).abs() < 1e-15);
}

#[test]
fn usage_errors_exit_2() {
    for args in [
        &["eval", "--a", "1,2", "--b", "1,2", "--n", "5"][..],
        &[
            "eval",
            "--a",
            "1,2,3,4,5,6",
            "--b",
            "1,2,3,4,5",
            "--n",
            "30",
        ],
        &["eval", "--a", "1,x", "--b", "2", "--n", "5"],
        &["eval", "--a", "1,1", "--n", "5"],
        &["eval", "--a", "1,1", "--b", "2"],
        &["convergence", "--n-grid", "40,20,80"],
        &["convergence", "--format", "xml"],
        &["frobnicate"],
        &["eval", "--n", "5", "--order", "1", "--order-cap", "2"],
    ] {
        let o = bin(args);
        assert_eq!(o.status.code(), Some(EXIT_PRECONDITION), "{args:?}");
        assert!(!stderr(&o).is_empty());
    }
}

#[test]
fn module_errors_exit_2() {
    // terminating parameters leave nothing to fit
    let o = bin(&["order-fit", "--a", "1,3", "--b", "2"]);
    assert_eq!(o.status.code(), Some(EXIT_PRECONDITION));
    assert_eq!(stderr(&o).lines().count(), 1);
    assert!(stderr(&o).contains("insufficient data"));
}

#[test]
fn convergence_csv_columns() {
    let o = bin(&[
        "convergence",
        "--a",
        "1,1",
        "--b",
        "2",
        "--order",
        "1",
        "--format",
        "csv",
    ]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    assert_eq!(
        reader.headers().unwrap(),
        vec!["n", "oracle", "series", "abs_error"]
    );
    let records: Vec<_> = reader.records().map(Result::unwrap).collect();
    assert_eq!(records.len(), DOUBLING_GRID.len());
    for (record, n) in records.iter().zip(DOUBLING_GRID) {
        assert_eq!(record[0].parse::<u64>().unwrap(), n);
        let (oracle, series, err): (f64, f64, f64) = (
            record[1].parse().unwrap(),
            record[2].parse().unwrap(),
            record[3].parse().unwrap(),
        );
        assert_eq!(err, (series - oracle).abs());
    }
    let fitted: f64 = stderr(&o)
        .trim()
        .strip_prefix("fitted_order=")
        .unwrap()
        .parse()
        .unwrap();
    assert!((fitted + 2.0).abs() <= 0.3);
}

#[test]
fn order_fit_prints_only_the_order() {
    let o = bin(&["order-fit", "--a", "1,1", "--b", "2", "--order", "2"]);
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 1);
    let fitted: f64 = text.trim().parse().unwrap();
    assert!((fitted + 3.0).abs() <= 0.3);
}

#[test]
fn json_floats_match_the_library_bit_for_bit() {
    let v = json(&[
        "convergence",
        "--a",
        "0.3,0.7,1.1",
        "--b",
        "0.9,1.3",
        "--order",
        "2",
    ]);
    let params = ParameterSet::new(vec![0.3, 0.7, 1.1], vec![0.9, 1.3]).unwrap();
    let rows = scan_rows(&params, 2, &DOUBLING_GRID).unwrap();
    let printed = v["rows"].as_array().unwrap();
    for (row, p) in rows.iter().zip(printed) {
        assert_eq!(
            p["oracle"].as_f64().unwrap().to_bits(),
            row.oracle.to_bits()
        );
        assert_eq!(
            p["series"].as_f64().unwrap().to_bits(),
            row.series.to_bits()
        );
        assert_eq!(
            p["abs_error"].as_f64().unwrap().to_bits(),
            row.abs_error.to_bits()
        );
    }
    assert_eq!(
        v["params"]["s"].as_f64().unwrap().to_bits(),
        params.s().to_bits()
    );
    // re-serialising reproduces the printed text
    let o = bin(&[
        "convergence",
        "--a",
        "0.3,0.7,1.1",
        "--b",
        "0.9,1.3",
        "--order",
        "2",
        "--format",
        "json",
    ]);
    assert_eq!(serde_json::to_string(&v).unwrap() + "\n", stdout(&o));
}

#[test]
fn repeated_runs_are_byte_identical() {
    for format in ["human", "csv", "json"] {
        for args in [
            &[
                "eval",
                "--a",
                "0.3,0.7,1.1",
                "--b",
                "0.9,1.3",
                "--n",
                "20",
                "--order-cap",
                "12",
            ][..],
            &[
                "coeffs",
                "--a",
                "0.3,-1.2,0.55,2",
                "--b",
                "1.1,0.25,-0.6",
                "--k-max",
                "8",
            ],
            &["convergence", "--order", "3"],
            &["order-fit", "--order", "0"],
            &["validate", "--seed", "7"],
        ] {
            let mut full = args.to_vec();
            full.extend(["--format", format]);
            let (x, y) = (bin(&full), bin(&full));
            assert_eq!(x.status.code(), y.status.code());
            assert_eq!(x.stdout, y.stdout, "{full:?}");
            assert_eq!(x.stderr, y.stderr, "{full:?}");
        }
    }
}

#[test]
fn validate_reports_each_property() {
    let o = bin(&["validate"]);
    assert_eq!(o.status.code(), Some(EXIT_SUCCESS), "{}", stdout(&o));
    let text = stdout(&o);
    let lines: Vec<_> = text
        .lines()
        .filter(|l| l.starts_with("PASS") || l.starts_with("FAIL"))
        .collect();
    assert!(lines.len() >= 10, "{text}");
    assert!(lines.iter().all(|l| l.starts_with("PASS")));

    let v = json(&["validate", "--seed", "3"]);
    assert_eq!(v["params"]["seed"], 3);
    assert!(v["rows"]
        .as_array()
        .unwrap()
        .iter()
        .all(|r| r["passed"] == Value::Bool(true)));
}

#[test]
fn failed_checks_map_to_exit_3() {
    let pass = CheckOutcome {
        name: "x".into(),
        passed: true,
        detail: String::new(),
    };
    let fail = CheckOutcome {
        passed: false,
        ..pass.clone()
    };
    assert_eq!(suite_exit_code(&[pass.clone(), pass.clone()]), EXIT_SUCCESS);
    assert_eq!(suite_exit_code(&[pass, fail]), EXIT_VALIDATION_FAILED);
}

#[test]
fn help_exits_0() {
    let o = bin(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("order-fit"));
}
