use std::process::{Command, Output};

fn excgamma(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_excgamma"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn compute_dexc6_plus_coefficients() {
    let o = excgamma(&["compute", "--family", "dexc", "--n", "6", "--class", "plus"]);
    assert!(o.status.success());
    assert_eq!(
        stdout(&o).trim(),
        "s^6 + 176*s^5*t + 2647*s^4*t^2 + 5872*s^3*t^3 + 2647*s^2*t^4 + 176*s*t^5 + t^6"
    );
}

#[test]
fn compute_engines_agree() {
    for family in ["aexc", "bexc", "dexc", "aderexc", "sgndexc"] {
        let run = |engine| {
            stdout(&excgamma(&[
                "compute", "--family", family, "--n", "5", "--class", "all", "--engine", engine, "--format", "json",
            ]))
        };
        assert_eq!(run("oracle"), run("closed"), "{family}");
    }
}

#[test]
fn gamma_aexc7_minus() {
    let o = excgamma(&["gamma", "--family", "aexc", "--n", "7", "--class", "minus", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["r"], 1);
    assert_eq!(v["gammas"], serde_json::json!(["63", "336", "168"]));
}

#[test]
fn gamma_q_refined() {
    let o = excgamma(&["gamma", "--family", "qrefined:cyc", "--n", "4", "--class", "plus"]);
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    assert!(stdout(&o).starts_with("r="));
}

#[test]
fn gamma_non_palindromic_exits_one() {
    let o = excgamma(&["gamma", "--family", "aexc", "--n", "6", "--class", "plus"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("palindromic"));
}

#[test]
fn conjugacy_two_two() {
    let o = excgamma(&["conjugacy", "--lambda", "2,2", "--engine", "oracle"]);
    assert_eq!(stdout(&o).trim(), "3*t^2");
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        &["compute", "--family", "zexc", "--n", "3"][..],
        &["compute", "--family", "aexc"][..],
        &["compute", "--family", "sgnaexc", "--n", "3", "--class", "plus"][..],
        &["conjugacy", "--lambda", "2,x"][..],
        &["frobnicate"][..],
    ] {
        let o = excgamma(args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

#[test]
fn budget_is_enforced() {
    let o = excgamma(&["compute", "--family", "aexc", "--n", "8", "--engine", "oracle", "--budget", "1000"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stderr).contains("budget"));
}

#[test]
fn verify_is_deterministic_across_jobs() {
    let one = excgamma(&["verify", "--suite", "signed_sums", "--max-n", "5", "--jobs", "1"]);
    let four = excgamma(&["verify", "--suite", "signed_sums", "--max-n", "5", "--jobs", "4"]);
    assert!(one.status.success());
    assert_eq!(one.stdout, four.stdout);
    let out = stdout(&one);
    assert!(out.lines().all(|l| l.starts_with("PASS") || l.contains("checks:")), "{out}");
    assert!(out.trim_end().ends_with("6 checks: 6 passed, 0 failed, 0 skipped"));
}

#[test]
fn table_json_rows() {
    let o = excgamma(&["table", "--family", "bexc", "--n-range", "1..4", "--class", "plus", "--out", "json"]);
    assert!(o.status.success());
    let rows: Vec<serde_json::Value> = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[3]["n"], 4);
    assert_eq!(rows[3]["gamma_positive"], true);
    assert_eq!(rows[3]["cos"], "2");
}

#[test]
fn table_csv_is_long_format() {
    let o = excgamma(&["table", "--family", "aexc", "--n-range", "5..5", "--class", "plus"]);
    let text = stdout(&o);
    let mut reader = csv::Reader::from_reader(text.as_bytes());
    let rows: Vec<csv::StringRecord> = reader.records().map(Result::unwrap).collect();
    let coeffs: Vec<&str> = rows.iter().map(|r| &r[4]).collect();
    assert_eq!(coeffs, ["1", "11", "36", "11", "1"]);
    let gammas: Vec<&str> = rows.iter().map(|r| &r[6]).filter(|g| !g.is_empty()).collect();
    assert_eq!(gammas, ["1", "7", "16"]);
}
