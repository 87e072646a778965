//! End-to-end tests of the `mcgdim` binary: commands, formats, exit codes.

use std::process::{Command, Output};

use mcgdim_core::table::{sphere_table, SphereTableRow};

fn mcgdim(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mcgdim"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8 output")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn vcd_queries() {
    let out = mcgdim(&["vcd", "0", "13"]);
    assert_eq!((code(&out), stdout(&out).trim()), (0, "10"));
    let out = mcgdim(&["vcd", "2", "1", "--gd"]);
    assert_eq!((code(&out), stdout(&out).trim()), (0, "5"));
    let out = mcgdim(&["vcd", "0", "7", "--braid"]);
    assert_eq!((code(&out), stdout(&out).trim()), (0, "4"));
    let out = mcgdim(&["vcd", "1", "5"]);
    assert_eq!((code(&out), stdout(&out).trim()), (0, "5"));
}

#[test]
fn vcd_usage_errors() {
    // Closed surfaces are gated behind --allow-closed.
    assert_eq!(code(&mcgdim(&["vcd", "1", "0", "--gd"])), 2);
    let out = mcgdim(&["vcd", "1", "0", "--gd", "--allow-closed"]);
    assert_eq!((code(&out), stdout(&out).trim()), (0, "1"));
    // Braid groups live on the sphere.
    assert_eq!(code(&mcgdim(&["vcd", "1", "5", "--braid"])), 2);
    // Negative inputs are rejected by parsing.
    assert_eq!(code(&mcgdim(&["vcd", "-1", "5"])), 2);
}

#[test]
fn table_a_csv_shape() {
    let out = mcgdim(&["table", "A", "--n", "5", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    let mut lines = text.lines();
    assert_eq!(lines.next().unwrap(), "case,group,nF,vcdWF,lambda");
    assert_eq!(lines.count(), 6);
}

#[test]
fn table_a_markdown_row_count() {
    let out = mcgdim(&["table", "A", "--n", "9"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    // Header, separator, then one line per data row.
    let data_rows = text.lines().filter(|l| l.starts_with('|')).count() - 2;
    assert_eq!(data_rows, 9);
}

#[test]
fn table_a_json_round_trips() {
    let out = mcgdim(&["table", "A", "--n", "8", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let parsed: Vec<SphereTableRow> = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed, sphere_table(8).unwrap());
}

#[test]
fn table_formats_carry_identical_values() {
    let csv = stdout(&mcgdim(&["table", "A", "--n", "10", "--format", "csv"]));
    let json = stdout(&mcgdim(&["table", "A", "--n", "10", "--format", "json"]));
    let rows: Vec<SphereTableRow> = serde_json::from_str(&json).unwrap();
    let mut from_json: Vec<(String, u64, u64, u64)> = rows
        .iter()
        .map(|r| (r.group_label(), r.n_f, r.vcd_wf, r.lambda))
        .collect();
    let mut from_csv: Vec<(String, u64, u64, u64)> = csv
        .lines()
        .skip(1)
        .map(|line| {
            let f: Vec<&str> = line.split(',').collect();
            (
                f[1].to_string(),
                f[2].parse().unwrap(),
                f[3].parse().unwrap(),
                f[4].parse().unwrap(),
            )
        })
        .collect();
    from_json.sort();
    from_csv.sort();
    assert_eq!(from_json, from_csv);
}

#[test]
fn table_a_out_of_range_and_missing_n() {
    assert_eq!(code(&mcgdim(&["table", "A", "--n", "4"])), 2);
    assert_eq!(code(&mcgdim(&["table", "A", "--n", "14"])), 2);
    assert_eq!(code(&mcgdim(&["table", "A"])), 2);
}

#[test]
fn table_a_paper_order() {
    let out = mcgdim(&[
        "table",
        "A",
        "--n",
        "12",
        "--paper-order",
        "--format",
        "csv",
    ]);
    let text = stdout(&out);
    let first: Vec<&str> = text.lines().skip(1).take(3).collect();
    assert!(first[0].contains("S_4") && first[1].contains("A_4") && first[2].contains("A_5"));
}

#[test]
fn table_b_has_twenty_rows_and_bounds() {
    let out = mcgdim(&["table", "B", "--format", "json"]);
    assert_eq!(code(&out), 0);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 20);
    let csv = stdout(&mcgdim(&["table", "B", "--n", "12", "--format", "csv"]));
    assert!(csv
        .lines()
        .next()
        .unwrap()
        .ends_with("nF_bound_at_n,vcdWF_bound_at_n"));
    assert!(csv.contains("n/48+3"));
}

#[test]
fn verify_exit_codes() {
    assert_eq!(code(&mcgdim(&["verify", "0", "7..13"])), 0);
    // n = 6 is out of the theorem range: strict mode refuses.
    assert_eq!(code(&mcgdim(&["verify", "0", "6..6"])), 2);
    let report = mcgdim(&["verify", "0", "6..6", "--report-mode"]);
    assert_eq!(code(&report), 0);
    assert!(stdout(&report).contains("FAIL S_4"));
    // Malformed range.
    assert_eq!(code(&mcgdim(&["verify", "0", "7-13"])), 2);
}

#[test]
fn verify_genus2_notes_unrealizable_rows() {
    let out = mcgdim(&["verify", "2", "1..30"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("unrealizable at n=1"));
    assert!(text.contains("GL_2(4) (order 48)"));
}

#[test]
fn verify_torus_includes_the_failing_boundary_case() {
    // n = 2 sits in the nominal theorem range but the inequality fails
    // there; strict mode runs it and exits 1.
    let out = mcgdim(&["verify", "1", "2..3", "--jobs", "2"]);
    assert_eq!(code(&out), 1);
    assert!(stdout(&out).contains("FAIL Z/2 (order 2)"));
    // From n = 3 on everything passes.
    assert_eq!(code(&mcgdim(&["verify", "1", "3..20"])), 0);
}

#[test]
fn verify_genus_at_least_3_uses_the_identity() {
    let out = mcgdim(&["verify", "6", "1..100"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("closed-surface identity holds"));
}

#[test]
fn verify_branches_flag() {
    let out = mcgdim(&[
        "verify",
        "0",
        "14..20",
        "--branches",
        "--branch-max",
        "200000",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for id in [
        "cyclic-rotation",
        "dihedral-composite",
        "polyhedral-stabilizer",
    ] {
        assert!(text.contains(&format!("branch {id}")), "{id}");
    }
    assert_eq!(code(&mcgdim(&["verify", "2", "1..5", "--branches"])), 2);
}

#[test]
fn verify_writes_jsonl_and_csv() {
    let dir = tempfile::tempdir().unwrap();
    let jsonl = dir.path().join("records.jsonl");
    let csv = dir.path().join("records.csv");
    let out = mcgdim(&[
        "verify",
        "0",
        "7..9",
        "--out",
        jsonl.to_str().unwrap(),
        "--csv",
        csv.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let jsonl_text = std::fs::read_to_string(&jsonl).unwrap();
    let records: Vec<mcgdim_core::VerificationRecord> = jsonl_text
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(records.len(), 7 + 17 + 9);
    assert!(records
        .iter()
        .all(|r| r.status == mcgdim_core::RecordStatus::Pass));
    let csv_text = std::fs::read_to_string(&csv).unwrap();
    assert!(csv_text.starts_with("genus,punctures,group,order,nF,vcdWF,lambda,sum,budget,status"));
    assert_eq!(csv_text.lines().count(), 1 + records.len());
}

#[test]
fn verify_unwritable_out_is_an_io_error() {
    let out = mcgdim(&["verify", "0", "7..7", "--out", "/nonexistent-dir/x.jsonl"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn catalog_dumps() {
    let out = mcgdim(&["catalog", "2"]);
    assert_eq!(code(&out), 0);
    let rows: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(rows.as_array().unwrap().len(), 20);
    let out = mcgdim(&["catalog", "0", "--n", "8"]);
    let text = stdout(&out);
    assert!(text.contains("\"family\": \"dihedral\""));
    assert!(text.contains("\"source\": \"stukow\""));
    let parsed: serde_json::Value = serde_json::from_str(&text).unwrap();
    let first = &parsed.as_array().unwrap()[0];
    assert!(first.get("order").is_some() && first.get("signature").is_some());
    assert_eq!(code(&mcgdim(&["catalog", "0"])), 2);
    assert_eq!(code(&mcgdim(&["catalog", "4"])), 2);
    assert_eq!(code(&mcgdim(&["catalog", "1", "--n", "6"])), 0);
}
