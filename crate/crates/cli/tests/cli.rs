use std::process::{Command, Output};

fn residues(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_residues"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).unwrap()
}

fn assert_single_line_error(out: &Output, code: i32) {
    assert_eq!(out.status.code(), Some(code), "stderr: {}", stderr(out));
    assert!(out.stdout.is_empty());
    let err = stderr(out);
    assert_eq!(err.lines().count(), 1, "diagnostic: {err:?}");
}

#[test]
fn phi_table_matches_golden() {
    let golden = include_str!("golden/table_phi_2_19.txt");
    let first = residues(&["table-phi", "2", "19"]);
    assert!(first.status.success());
    assert_eq!(stdout(&first), golden);
    assert_eq!(stdout(&residues(&["table-phi", "2", "19"])), golden);
    assert!(first.stderr.is_empty());
}

#[test]
fn order_table_matches_golden() {
    let golden = include_str!("golden/table_ord2_3_31.txt");
    let out = residues(&["table-ord2", "3", "31"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), golden);
}

#[test]
fn totient_values() {
    for (n, phi) in [("360", "96"), ("1", "1"), ("9991", "9792")] {
        let out = residues(&["totient", n, "--format", "json"]);
        assert!(out.status.success());
        let row: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
        assert_eq!(row["outputs"]["phi"].to_string(), phi);
        assert_eq!(row["kind"], "totient_table");
        assert_eq!(row["status"], "ok");
    }
    let out = residues(&["totient", "12", "--list", "--format", "json"]);
    let row: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(
        row["outputs"]["totatives"],
        serde_json::json!([1, 5, 7, 11])
    );
}

#[test]
fn json_rows_have_the_four_keys() {
    let out = residues(&["table-phi", "20", "25", "--format", "json"]);
    let rows: Vec<serde_json::Value> = stdout(&out)
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    assert_eq!(rows.len(), 6);
    let phis: Vec<u64> = rows
        .iter()
        .map(|r| r["outputs"]["phi"].as_u64().unwrap())
        .collect();
    assert_eq!(phis, vec![8, 12, 10, 22, 8, 20]);
    for row in &rows {
        let keys: Vec<&str> = row
            .as_object()
            .unwrap()
            .keys()
            .map(String::as_str)
            .collect();
        assert_eq!(keys.len(), 4);
        for key in ["kind", "inputs", "outputs", "status"] {
            assert!(keys.contains(&key));
        }
    }
}

#[test]
fn csv_has_header() {
    let out = residues(&["table-ord2", "33", "35", "--format", "csv"]);
    assert_eq!(
        stdout(&out),
        "kind,N,phi,order,ratio,status\norder_table,33,20,10,n/2,ok\norder_table,35,24,12,n/2,ok\n"
    );
}

#[test]
fn trace_and_cosets() {
    let out = residues(&["trace", "2", "15"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "x   N  order  cycle\n2  15      4  1 2 4 8\n");

    let out = residues(&["trace", "1", "5", "--format", "json"]);
    let row: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(row["outputs"]["cycle"], serde_json::json!([1]));
    assert_eq!(row["outputs"]["order"], 1);

    let out = residues(&["cosets", "2", "15"]);
    assert!(stdout(&out).contains("{1,2,4,8} | {7,11,13,14}"));
    let out = residues(&["cosets", "2", "15", "--format", "json"]);
    let row: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(row["outputs"]["index"], 2);
    assert_eq!(
        row["outputs"]["cosets"],
        serde_json::json!([[1, 2, 4, 8], [7, 11, 13, 14]])
    );
}

#[test]
fn negative_residues_are_normalized() {
    let out = residues(&["progression", "-2", "5", "6", "--format", "json"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let row: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(
        row["outputs"]["residues"],
        serde_json::json!([4, 3, 2, 1, 0, 5])
    );
    assert_eq!(row["inputs"]["a"], -2);

    let out = residues(&["solve", "10", "7", "15", "1", "--format", "json"]);
    let row: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(row["outputs"]["nu"], 3);
    assert_eq!(row["outputs"]["mu"], 2);
}

#[test]
fn not_coprime_names_the_divisor() {
    let out = residues(&["trace", "6", "15"]);
    assert_single_line_error(&out, 1);
    assert!(stderr(&out).contains("common divisor 3"));
    let out = residues(&["cosets", "10", "15"]);
    assert_single_line_error(&out, 1);
    assert!(stderr(&out).contains("common divisor 5"));
    let out = residues(&["solve", "1", "4", "6", "1"]);
    assert_single_line_error(&out, 1);
}

#[test]
fn usage_errors_exit_one() {
    assert_single_line_error(&residues(&["table-ord2", "4", "9"]), 1);
    assert_single_line_error(&residues(&["table-phi", "0", "3"]), 1);
    assert_single_line_error(&residues(&["totient", "0"]), 1);
    assert_single_line_error(&residues(&["totient", "abc"]), 1);
    assert_single_line_error(&residues(&["nonsense"]), 1);
    assert_single_line_error(&residues(&["verify", "--max", "50", "--theorem", "t99"]), 1);
    assert_single_line_error(&residues(&["verify", "--max", "1"]), 1);
    assert_single_line_error(&residues(&["totient", "5", "--format", "xml"]), 1);
}

#[test]
fn verify_exit_codes() {
    let out = residues(&["verify", "--max", "200", "--theorem", "t1"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains(" ok"));

    let out = residues(&[
        "verify",
        "--max",
        "2",
        "--theorem",
        "t10",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let row: serde_json::Value = serde_json::from_str(stdout(&out).trim()).unwrap();
    assert_eq!(row["outputs"]["cases"], 1);
    assert_eq!(row["outputs"]["violations"], 0);
}

#[test]
fn verify_euler_fermat_to_two_thousand() {
    let out = residues(&["verify", "--max", "2000", "--theorem", "t11"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
}

#[test]
fn verify_is_deterministic_per_seed() {
    let args = [
        "verify",
        "--max",
        "300",
        "--theorem",
        "t5",
        "--theorem",
        "t11",
        "--seed",
        "9",
    ];
    let first = residues(&args);
    let second = residues(&args);
    assert_eq!(first.status.code(), Some(0));
    assert_eq!(stdout(&first), stdout(&second));
    assert!(stdout(&first).contains("  9  "));
}

#[test]
fn help_goes_to_stdout() {
    let out = residues(&["--help"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("table-ord2"));
}
