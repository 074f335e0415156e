//! End-to-end tests of the `qlattice` binary: output formats, exit codes,
//! dump files, and determinism.

use qlattice_core::report::VerificationReport;
use qlattice_core::table::DetTable;
use std::process::{Command, Output};

fn qlattice(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qlattice"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("utf-8 output")
}

#[test]
fn table_text_contains_published_cells() {
    let out = qlattice(&["table", "--q", "2", "--n", "3..4"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("q = 2"));
    assert!(text.contains("2^3\u{b7}3"));
    assert!(text.contains("2^14\u{b7}7"));
    assert!(text.contains("2^17"));
    assert!(text.contains("ok"));
}

#[test]
fn table_csv_rows() {
    let out = qlattice(&["table", "--q", "3", "--n", "3..3", "--format", "csv"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 2);
    assert!(lines[1].starts_with("3,3,13,"));
    assert!(lines[1].contains("2^2\u{b7}3^6"));
}

#[test]
fn table_json_parses_and_passes() {
    let out = qlattice(&["table", "--q", "5", "--n", "3..3", "--format", "json"]);
    assert!(out.status.success());
    let table: DetTable = serde_json::from_str(&stdout_of(&out)).expect("valid json");
    assert_eq!(table.q, 5);
    assert_eq!(table.rows.len(), 1);
    assert_eq!(table.rows[0].cardinality, 31);
    assert_eq!(table.rows[0].det_a, "2\u{b7}3\u{b7}5^15");
    assert!(table.rows[0].pass);
}

#[test]
fn table_output_is_byte_identical_across_runs() {
    for format in ["text", "csv", "json"] {
        let a = qlattice(&["table", "--q", "2", "--n", "3..4", "--format", format]);
        let b = qlattice(&["table", "--q", "2", "--n", "3..4", "--format", format]);
        assert_eq!(a.stdout, b.stdout, "format {format} not deterministic");
    }
}

#[test]
fn table_skips_rows_over_budget() {
    let out = qlattice(&["table", "--q", "2", "--n", "3..6", "--budget", "10000"]);
    assert!(out.status.success(), "skipped rows keep success status");
    let text = stdout_of(&out);
    assert!(text.contains("skipped"));
}

#[test]
fn verify_all_passes_and_exits_zero() {
    let out = qlattice(&["verify", "--n", "3", "--q", "2"]);
    assert!(out.status.success());
    let text = stdout_of(&out);
    assert!(text.contains("overall: pass"));
    assert!(text.contains("engine agreement: yes"));
    assert!(!text.contains("FAIL"));
}

#[test]
fn verify_json_report_round_trips() {
    let out = qlattice(&["verify", "--n", "3", "--q", "2", "--format", "json"]);
    assert!(out.status.success());
    let report: VerificationReport = serde_json::from_str(&stdout_of(&out)).expect("valid json");
    assert!(report.all_pass());
    assert!(report.engine_agreement);
    assert_eq!((report.params.n, report.params.q), (3, 2));
    let reserialized = serde_json::to_string(&report).unwrap();
    let reparsed: VerificationReport = serde_json::from_str(&reserialized).unwrap();
    assert_eq!(reparsed, report);
}

#[test]
fn verify_gf4_incidence_suite() {
    let out = qlattice(&["verify", "--n", "3", "--q", "4", "--suite", "incidence"]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("overall: pass"));
}

#[test]
fn verify_adjudication_recorded_at_4_2() {
    let out = qlattice(&[
        "verify",
        "--n",
        "4",
        "--q",
        "2",
        "--suite",
        "gorenstein",
        "--format",
        "json",
    ]);
    assert!(out.status.success());
    let report: VerificationReport = serde_json::from_str(&stdout_of(&out)).expect("valid json");
    let check = report
        .checks
        .iter()
        .find(|c| c.name == "hessian-off-diagonal")
        .expect("adjudication check present");
    assert!(check.pass);
    assert_eq!(check.computed, "matches unordered pair count");
}

#[test]
fn verify_low_budget_skips_with_success() {
    let out = qlattice(&[
        "verify",
        "--n",
        "4",
        "--q",
        "3",
        "--suite",
        "gorenstein",
        "--budget",
        "10",
    ]);
    assert!(out.status.success());
    assert!(stdout_of(&out).contains("skipped"));
}

#[test]
fn usage_errors_exit_two() {
    let cases: &[&[&str]] = &[
        &["verify", "--n", "1", "--q", "2"],
        &["verify", "--n", "3", "--q", "6"],
        &["table", "--q", "2", "--n", "5..3"],
        &[
            "dump", "--object", "X", "--n", "3", "--q", "2", "--out", "/tmp/x",
        ],
        &[
            "dump",
            "--object",
            "A",
            "--n",
            "3",
            "--q",
            "2",
            "--out",
            "/nonexistent-dir/x",
        ],
    ];
    for args in cases {
        let out = qlattice(args);
        assert_eq!(out.status.code(), Some(2), "args {args:?}");
    }
}

#[test]
fn dump_points_matches_canonical_order() {
    let dir = std::env::temp_dir().join(format!("qlattice-test-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("points.txt");
    let out = qlattice(&[
        "dump",
        "--object",
        "points",
        "--n",
        "3",
        "--q",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let content = std::fs::read_to_string(&path).unwrap();
    assert_eq!(content, "0 0 1\n0 1 0\n0 1 1\n1 0 0\n1 0 1\n1 1 0\n1 1 1\n");
    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn dump_matrices_in_text_format() {
    let dir = std::env::temp_dir().join(format!("qlattice-test-m-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();

    let a_path = dir.join("a.txt");
    let out = qlattice(&[
        "dump",
        "--object",
        "A",
        "--n",
        "3",
        "--q",
        "2",
        "--out",
        a_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let content = std::fs::read_to_string(&a_path).unwrap();
    assert!(content.starts_with("7\n0 1 0 1 0 1 0\n"));
    let parsed = qlattice_core::matrix::IntMatrix::from_text(&content).unwrap();
    assert_eq!(parsed.dim(), 7);

    // The evaluated Hessian at the same parameters: zero diagonal, fours.
    let h_path = dir.join("h.txt");
    let out = qlattice(&[
        "dump",
        "--object",
        "H",
        "--n",
        "3",
        "--q",
        "2",
        "--out",
        h_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let h = qlattice_core::matrix::IntMatrix::from_text(&std::fs::read_to_string(&h_path).unwrap())
        .unwrap();
    assert_eq!(
        h,
        qlattice_core::matrix::phi_matrix(&qlattice_core::matrix::PhiSpec::new(7, 0, 4))
    );

    // M = 2A at these parameters.
    let m_path = dir.join("m.txt");
    let out = qlattice(&[
        "dump",
        "--object",
        "M",
        "--n",
        "3",
        "--q",
        "2",
        "--out",
        m_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let m = qlattice_core::matrix::IntMatrix::from_text(&std::fs::read_to_string(&m_path).unwrap())
        .unwrap();
    assert_eq!(m, parsed.scale(&num_bigint::BigInt::from(2)));

    std::fs::remove_dir_all(&dir).ok();
}

#[test]
fn dump_basis_set_is_one_based_tuples() {
    let dir = std::env::temp_dir().join(format!("qlattice-test-b-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("bases.txt");
    let out = qlattice(&[
        "dump",
        "--object",
        "basis-set",
        "--n",
        "3",
        "--q",
        "2",
        "--out",
        path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let content = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = content.lines().collect();
    assert_eq!(lines.len(), 28);
    assert_eq!(lines[0], "1 2 4");
    // Triples with all leading zeros in the first coordinate are dependent.
    assert!(!lines.contains(&"1 2 3"));
    std::fs::remove_dir_all(&dir).ok();
}
