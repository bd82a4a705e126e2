use std::process::{Command, Output};

use fibprod_cli::{emit_report, parse_args, run, Format, ParseOutcome};
use proptest::prelude::*;

fn fibprod(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fibprod")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn verify_passes_with_exit_zero() {
    let out = fibprod(&["verify", "--identity", "T1.4", "--n", "1", "--q", "1", "--terms", "40"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).starts_with("PASS T1.4"));
}

#[test]
fn unknown_identity_exits_two() {
    let out = fibprod(&["verify", "--identity", "T9.9"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(out.stdout.is_empty());
    assert!(String::from_utf8_lossy(&out.stderr).contains("T9.9"));
}

#[test]
fn uncertified_limit_check_exits_one() {
    let out = fibprod(&["verify", "--identity", "T1.4", "--n", "1", "--q", "1", "--terms", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("smallest certifiable N is 2"));
}

#[test]
fn help_exits_zero() {
    let out = fibprod(&["--help"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("--terms"));
}

#[test]
fn eval_prints_partial_product() {
    let out = fibprod(&["eval", "--identity", "T1.4", "--n", "1", "--q", "1", "--terms", "3", "--digits", "10"]);
    assert_eq!(out.status.code(), Some(0));
    // 99/35 = 2.828571428571...
    assert_eq!(stdout(&out), "2.8285714286\n");
}

#[test]
fn special_reports_five_passes() {
    let out = fibprod(&["special", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 5);
    assert!(rows.iter().all(|r| r["passed"] == true));
    let ids: Vec<&str> = rows.iter().map(|r| r["id"].as_str().unwrap()).collect();
    assert_eq!(ids, ["T1.4", "T2.3", "T2.4", "T4.3", "T4.6"]);
}

#[test]
fn json_schema_field_names() {
    let out = fibprod(&["verify", "--identity", "T2.3", "--n", "1", "--q", "1", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let row = rows[0].as_object().unwrap();
    let keys: Vec<&str> = row.keys().map(String::as_str).collect();
    let mut expected = vec![
        "id", "theorem", "n", "q", "N", "mode", "lhs_decimal", "rhs_decimal", "rhs_exact", "deviation_bound",
        "tail_bound", "passed", "elapsed_ms",
    ];
    expected.sort();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(sorted, expected);
    assert_eq!(row["passed"], true);
    assert_eq!(row["rhs_exact"]["a_num"], "7");
    assert_eq!(row["rhs_exact"]["a_den"], "2");
    assert_eq!(row["rhs_exact"]["b_num"], "3");
    assert_eq!(row["rhs_exact"]["b_den"], "2");
}

#[test]
fn exact_grid_all_pass() {
    let out = fibprod(&["grid", "--n-max", "3", "--q-max", "3", "--mode", "exact", "--terms", "25", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let rows = rows.as_array().unwrap();
    assert_eq!(rows.len(), 18 * 9);
    assert!(rows.iter().all(|r| r["passed"] == true));
}

#[test]
fn grid_csv_row_count() {
    let out = fibprod(&["grid", "--n-max", "2", "--q-max", "3", "--format", "csv", "--digits", "8"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 18 * 2 * 3 + 1);
    assert!(lines[0].starts_with("id,theorem,n,q,N,mode,lhs_decimal,rhs_decimal,"));
}

#[test]
fn grid_output_is_sorted() {
    let out = fibprod(&["grid", "--n-max", "2", "--q-max", "2", "--format", "json", "--digits", "4"]);
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    let keys: Vec<(u64, String, u64, u64)> = rows
        .as_array()
        .unwrap()
        .iter()
        .map(|r| {
            let id = r["id"].as_str().unwrap().to_string();
            (r["theorem"].as_u64().unwrap(), id, r["n"].as_u64().unwrap(), r["q"].as_u64().unwrap())
        })
        .collect();
    let mut sorted = keys.clone();
    sorted.sort();
    assert_eq!(keys, sorted);
}

#[test]
fn repeated_runs_are_byte_identical() {
    let args = ["grid", "--n-max", "2", "--q-max", "2", "--mode", "both", "--format", "json"];
    let first = fibprod(&args);
    let second = fibprod(&args);
    assert_eq!(first.stdout, second.stdout);
    let single = Command::new(env!("CARGO_BIN_EXE_fibprod"))
        .args(args)
        .env("RAYON_NUM_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(first.stdout, single.stdout);
}

#[test]
fn markdown_has_one_table_per_theorem() {
    let out = fibprod(&["grid", "--n-max", "1", "--q-max", "1", "--format", "markdown", "--digits", "4"]);
    let text = stdout(&out);
    assert_eq!(text.matches("## Theorem").count(), 4);
    assert_eq!(text.lines().filter(|l| l.starts_with("|---|")).count(), 4);
}

#[test]
fn large_parameters_warn() {
    let out = fibprod(&["verify", "--identity", "T1.1", "--n", "9", "--q", "1", "--digits", "5"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&out.stderr).contains("warning"));
}

#[test]
fn list_json_has_eighteen_entries() {
    let out = fibprod(&["list", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 18);
}

#[test]
fn same_rows_same_bytes() {
    let config = parse_args(["special"]).unwrap();
    let rows = run(&config).rows;
    for format in [Format::Text, Format::Json, Format::Csv, Format::Markdown] {
        assert_eq!(emit_report(&rows, format), emit_report(&rows.clone(), format));
    }
}

const WORDS: &[&str] = &[
    "list", "verify", "grid", "eval", "special", "--identity", "--n", "--q", "--n-max", "--q-max", "--terms",
    "--digits", "--format", "--mode", "T1.4", "T9.9", "t4.6", "0", "1", "-1", "3", "99999999999", "json", "csv",
    "yaml", "both", "exact", "", "--", "=", "é", "T1.", ".4",
];

proptest! {
    #![proptest_config(ProptestConfig { cases: 2000, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn parsing_never_panics(argv in prop::collection::vec(prop::sample::select(WORDS), 0..8)) {
        let _ = parse_args(argv.iter().copied());
    }

    #[test]
    fn garbage_is_a_usage_error(argv in prop::collection::vec("[^a-z]{0,6}", 1..5)) {
        let result = parse_args(argv.iter().map(String::as_str));
        prop_assert!(matches!(result, Err(ParseOutcome::Usage(_))));
    }
}

#[test]
fn fuzzed_binary_invocations_exit_two() {
    let mut runner = proptest::test_runner::TestRunner::new(ProptestConfig {
        cases: 32,
        failure_persistence: None,
        ..ProptestConfig::default()
    });
    runner
        .run(&prop::collection::vec("[A-Z0-9%.-]{1,5}", 1..4), |argv| {
            let args: Vec<&str> = argv.iter().map(String::as_str).collect();
            let out = fibprod(&args);
            prop_assert_eq!(out.status.code(), Some(2));
            Ok(())
        })
        .unwrap();
}
