//! End-to-end tests for the `ncspec` binary: output formats, exact strings,
//! and the exit-code contract (0 success, 1 verification failure, 2 usage,
//! 3 computation error).

use std::path::Path;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_ncspec"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("failed to spawn ncspec")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("stdout is not UTF-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("stderr is not UTF-8")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("process killed by signal")
}

fn json(out: &Output) -> serde_json::Value {
    serde_json::from_str(&stdout(out)).expect("stdout is not valid JSON")
}

#[test]
fn analyze_d6_json_reports_exact_energies() {
    let out = run(&["analyze", "D6", "--json"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let v = json(&out);

    let energies = &v["energies"];
    assert_eq!(energies["E"]["exact"], "2 + 2*sqrt(7)");
    assert_eq!(energies["LE"]["exact"], "42/5");
    assert_eq!(energies["LEplus"]["exact"], "9/5 + sqrt(33)");
    assert!((energies["E"]["value"].as_f64().unwrap() - 7.291502622129181).abs() < 1e-12);
    assert!((energies["LE"]["value"].as_f64().unwrap() - 8.4).abs() < 1e-12);
    assert!((energies["LEplus"]["value"].as_f64().unwrap() - 7.544562646538028).abs() < 1e-12);

    assert_eq!(energies["n_vertices"], 5);
    assert_eq!(energies["n_edges"], 9);
    assert_eq!(energies["ordering"], "E < LE+ < LE");
    assert_eq!(energies["q_integral"], false);
    assert_eq!(energies["flags"]["l_hyperenergetic"], true);
    assert_eq!(energies["flags"]["q_hyperenergetic"], false);
    assert_eq!(energies["flags"]["hyperenergetic"], false);
    assert_eq!(energies["flags"]["hypoenergetic"], false);

    assert_eq!(v["group"]["order"], 6);
    assert_eq!(v["group"]["center_size"], 1);
    assert_eq!(v["graph"]["multipartite_shape"], serde_json::json!([[1, 3], [2, 1]]));
}

#[test]
fn analyze_sl23_json_normalizes_the_radical() {
    let out = run(&["analyze", "SL23", "--json"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let v = json(&out);

    // sqrt(420) must be printed in lowest radical form, 2*sqrt(105).
    assert_eq!(v["energies"]["LEplus"]["exact"], "282/11 + 2*sqrt(105)");
    assert_eq!(v["energies"]["n_vertices"], 22);
    assert_eq!(v["energies"]["n_edges"], 204);
    assert_eq!(v["energies"]["flags"]["l_hyperenergetic"], true);
    assert_eq!(v["energies"]["flags"]["q_hyperenergetic"], true);
    assert_eq!(v["energies"]["q_integral"], false);
}

#[test]
fn analyze_rejects_abelian_groups_with_exit_3() {
    let out = run(&["analyze", "Z:4"]);
    assert_eq!(code(&out), 3);
    assert!(stdout(&out).is_empty());
    assert!(stderr(&out).contains("abelian"), "stderr: {}", stderr(&out));
}

#[test]
fn analyze_csv_uses_the_report_column_order() {
    let dir = tempdir("analyze-csv");
    let path = dir.join("d6.csv");
    let out = run(&["analyze", "D6", "--csv", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));

    let text = std::fs::read_to_string(&path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("spec,n,m,E,LE,LEplus,hypo,hyper,Lhyper,Qhyper,ordering,q_integral")
    );
    assert_eq!(
        lines.next(),
        Some("D6,5,9,7.291502622129,8.400000000000,7.544562646538,false,false,true,false,E < LE+ < LE,false")
    );
    assert_eq!(lines.next(), None);
}

#[test]
fn verify_family_range_passes_all_checks() {
    let out = run(&["verify", "Dihedral1", "--m", "3..9:odd"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert!(
        text.contains("summary: 40/40 checks passed across 4 subject(s) — PASS"),
        "unexpected summary in:\n{text}"
    );
}

#[test]
fn verify_small_group_matrix_reports_adjudications() {
    let out = run(&["verify", "com"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let text = stdout(&out);
    assert_eq!(
        text.matches("[adjudicated]").count(),
        4,
        "expected exactly four adjudicated checks in:\n{text}"
    );
    // The mixed-reading deviation sum that reproduces the reference S4 value.
    assert!(text.contains("4836/23"), "missing 4836/23 in:\n{text}");
    assert!(text.ends_with("— PASS\n"), "missing PASS summary in:\n{text}");
}

#[test]
fn verify_square_table_accepts_kind_and_bound() {
    let out = run(&["verify", "Table1", "--kind", "K1", "--bound", "10000"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    assert!(stdout(&out).contains("summary: 3/3 checks passed"));
}

#[test]
fn verify_json_envelope_reports_all_pass() {
    let out = run(&["verify", "Dihedral1", "--m", "3..5", "--json"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let v = json(&out);

    assert_eq!(v["all_pass"], true);
    let outcomes = v["outcomes"].as_array().expect("outcomes array");
    assert!(!outcomes.is_empty());
    for outcome in outcomes {
        assert_eq!(outcome["all_pass"], true);
        for check in outcome["checks"].as_array().expect("checks array") {
            assert!(check["name"].is_string());
            assert!(check["pass"].is_boolean());
            assert!(check["detail"].is_string());
            assert!(check["adjudicated"].is_boolean());
        }
    }
}

#[test]
fn squares_csv_matches_pinned_hits() {
    let dir = tempdir("squares-csv");
    let path = dir.join("k2.csv");
    let out = run(&["squares", "--kind", "K2", "--bound", "1000", "--csv", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));

    let text = std::fs::read_to_string(&path).unwrap();
    assert_eq!(text, "n,value,root\n2,1,1\n4,9,3\n14,289,17\n72,9801,99\n410,332929,577\n");
}

#[test]
fn squares_json_carries_expression_and_hits() {
    let out = run(&["squares", "--kind", "K2", "--bound", "1000", "--json"]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));
    let v = json(&out);

    assert_eq!(v["kind"], "K2");
    assert_eq!(v["expression"], "2n^2 - 8n + 9");
    assert_eq!(v["bound"], 1000);
    let hits = v["hits"].as_array().expect("hits array");
    let ns: Vec<u64> = hits.iter().map(|h| h["n"].as_u64().unwrap()).collect();
    assert_eq!(ns, [2, 4, 14, 72, 410]);
    assert_eq!(hits[4]["root"], "577");
    assert_eq!(hits[4]["value"], "332929");
}

#[test]
fn sweep_csv_has_pinned_header_and_exact_q8_row() {
    let dir = tempdir("sweep-csv");
    let path = dir.join("q.csv");
    let out = run(&["sweep", "Q", "--n", "2..4", "--csv", path.to_str().unwrap()]);
    assert_eq!(code(&out), 0, "stderr: {}", stderr(&out));

    let text = std::fs::read_to_string(&path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(lines[0], "param,n_vertices,n_edges,E,LEplus,LE,hypo,hyper,Lhyper,Qhyper,Qintegral");
    // Q8: all three energies coincide at 8 and the Q-spectrum is integral.
    assert_eq!(
        lines[1],
        "2,6,12,8.000000000000,8.000000000000,8.000000000000,false,false,false,false,true"
    );
    assert!(lines[2].starts_with("3,10,36,"));
    assert!(lines[3].starts_with("4,14,72,"));
}

#[test]
fn families_lists_every_catalog_entry() {
    let out = run(&["families"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    for id in ncspec::closed_forms::FAMILY_IDS {
        assert!(text.contains(id), "families output is missing {id}");
    }
}

#[test]
fn usage_errors_exit_2() {
    // Bare invocation, missing arguments, out-of-place flags, conflicts.
    let cases: &[&[&str]] = &[
        &[],
        &["analyze"],
        &["verify", "com", "--m", "3"],
        &["verify", "Dihedral1", "--m", "3", "--csv", "/tmp/ncspec-usage.csv"],
        &["sweep", "D"],
        &["analyze", "D6", "--json", "--csv", "/tmp/ncspec-usage.csv"],
        &["verify", "nosuchtarget"],
        &["squares", "--kind", "K9"],
        &["analyze", "D6", "--tol", "0"],
    ];
    for args in cases {
        let out = run(args);
        assert_eq!(code(&out), 2, "args {args:?} gave exit {}", code(&out));
    }
}

#[test]
fn computation_errors_exit_3() {
    // Odd order is not a dihedral group order.
    let out = run(&["analyze", "D:2m=7"]);
    assert_eq!(code(&out), 3);
    assert!(!stderr(&out).is_empty());
}

/// Create (and leak) a per-test scratch directory under the target tmp dir.
fn tempdir(tag: &str) -> std::path::PathBuf {
    let base = Path::new(env!("CARGO_TARGET_TMPDIR")).join(format!("cli-{tag}"));
    std::fs::create_dir_all(&base).unwrap();
    base
}
