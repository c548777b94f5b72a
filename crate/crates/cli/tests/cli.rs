use std::process::{Command, Output};

use num_bigint::BigUint;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fixpoint"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn triangle_csv_round_trips() {
    let o = run(&["triangle", "--n-max", "30", "--format", "csv"]);
    assert!(o.status.success());
    let mut reader = csv::Reader::from_reader(o.stdout.as_slice());
    assert_eq!(reader.headers().unwrap(), vec!["n", "d", "f"]);
    let mut rows: Vec<Vec<BigUint>> = vec![Vec::new(); 30];
    for rec in reader.records() {
        let rec = rec.unwrap();
        let n: usize = rec[0].parse().unwrap();
        rows[n - 1].push(rec[2].parse().unwrap());
    }
    let parsed = fixpoint_core::FixedPointTriangle::from_rows(rows, fixpoint_core::Method::Recurrence);
    assert_eq!(parsed, fixpoint_core::FixedPointTriangle::build(30, fixpoint_core::Method::Recurrence));
}

#[test]
fn triangle_csv_materializes_zeros() {
    let o = run(&["triangle", "--n-max", "20", "--format", "csv"]);
    let text = stdout(&o);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "n,d,f");
    assert_eq!(lines.len(), 1 + 20 * 4);
    assert!(lines.contains(&"1,4,0"));
}

#[test]
fn triangle_json_matches_csv() {
    let json = run(&["triangle", "--n-max", "16", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    let records = v.as_array().unwrap();
    assert_eq!(records.len(), 16 * 4);
    let last = &records[records.len() - 1];
    assert_eq!((last["n"].to_string(), last["d"].to_string(), last["f"].to_string()), ("16".into(), "4".into(), "1".into()));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["triangle", "--n-max", "40", "--method", "all"],
        vec!["bijection", "thm16", "--n", "9", "--format", "json"],
        vec!["sequence", "antidiagsum", "--n-max", "25"],
    ] {
        assert_eq!(run(&args).stdout, run(&args).stdout, "{args:?}");
    }
}

#[test]
fn method_all_reports_agreement() {
    let o = run(&["triangle", "--n-max", "60", "--method", "all"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("all methods agree"));
}

#[test]
fn d_max_limits_columns() {
    let o = run(&["triangle", "--n-max", "20", "--d-max", "2", "--format", "csv"]);
    assert_eq!(stdout(&o).lines().count(), 1 + 20 * 2);
    let bad = run(&["triangle", "--n-max", "20", "--d-max", "5"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["sequence", "bogus", "--n-max", "5"]).status.code(), Some(2));
    assert_eq!(run(&["sequence", "column", "--n-max", "5"]).status.code(), Some(2));
    assert_eq!(run(&["bijection", "thm13", "--n", "7"]).status.code(), Some(2));
    assert_eq!(run(&["bijection", "thm13", "--n", "3", "--d", "2"]).status.code(), Some(2));
    assert_eq!(run(&["bijection", "thm15", "--n", "8", "--d", "2"]).status.code(), Some(2));
    assert_eq!(run(&["triangle", "--n-max", "0"]).status.code(), Some(2));
}

#[test]
fn sequences() {
    let col = stdout(&run(&["sequence", "column", "--d", "2", "--n-max", "8"]));
    let values: Vec<&str> = col.lines().map(|l| l.split(' ').nth(1).unwrap()).collect();
    assert_eq!(values, ["0", "0", "0", "1", "2", "4", "6", "9"]);
    assert!(col.starts_with("1 0\n"));

    let conv = stdout(&run(&["sequence", "convolution", "--n-max", "5", "--format", "csv"]));
    assert_eq!(conv, "index,value\n0,1\n1,2\n2,5\n3,10\n4,20\n");

    let a = stdout(&run(&["sequence", "a", "--n-max", "9"]));
    assert_eq!(a.lines().last(), Some("9 7"));
    let a_brute = stdout(&run(&["sequence", "a", "--n-max", "9", "--method", "brute"]));
    assert_eq!(a, a_brute);

    let json = run(&["sequence", "rowsum", "--n-max", "5", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_slice(&json.stdout).unwrap();
    assert_eq!(v[4]["index"].to_string(), "5");
    assert_eq!(v[4]["value"].to_string(), "3");
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("fixpoint-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t.csv");
    let o = run(&["triangle", "--n-max", "9", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    assert!(text.contains("9,2,12"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn bijection_tables_use_compact_notation() {
    let t = stdout(&run(&["bijection", "thm15", "--n", "8"]));
    assert!(t.starts_with("F(8,1) ∪ F(7,2) -> B(9)\n"));
    assert!(t.contains("1^8") && t.contains("1^9"));
    assert!(t.trim_end().ends_with("7 pairs"));
    let t = stdout(&run(&["bijection", "prop31", "--n", "9"]));
    assert!(t.trim_end().ends_with("7 pairs"));
}

#[test]
fn verify_small_sweeps() {
    let o = run(&["verify", "--n-max", "5"]);
    let text = stdout(&o);
    assert!(text.contains("n=5 row_sum=3 positive_crank=3 sum_M(m>=1)=3 even_mex=3"));
    assert!(text.contains("n=1 antidiag_sum=1 p(0)=1 ok"));
    assert!(text.contains("PASS row-sum = even-mex"));

    // (1) has one 1 and nothing larger, so its crank is -1 while f(1,1) = 1
    let o = run(&["verify", "--n-max", "1"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("row-sum = positive-crank fails at n=1: 1 != 0"));
}

#[test]
fn verify_forty_fails_only_on_the_crank_legs_at_one() {
    let o = run(&["verify", "--n-max", "40", "--format", "json"]);
    assert_eq!(o.status.code(), Some(1));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let disc = v["discrepancies"].as_array().unwrap();
    assert_eq!(disc.len(), 2);
    assert!(disc.iter().all(|d| d["n"] == 1));
    assert!(v["stabilization"].as_array().unwrap().iter().all(|c| c["ok"] == true));
}
