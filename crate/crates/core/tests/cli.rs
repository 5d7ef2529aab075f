use std::process::Command;

use jacobsthal_octonion::cli::{run, EXIT_DISCREPANCY, EXIT_OK, EXIT_USAGE};

fn jocto(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("jocto").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn seq_csv_rows() {
    let (code, out, _) = jocto(&[
        "seq", "--kind", "j3", "--from", "0", "--to", "4", "--format", "csv",
    ]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out, "0,0\n1,1\n2,1\n3,2\n4,5\n");
}

#[test]
fn seq_plain_and_json() {
    let (code, out, _) = jocto(&["seq", "--kind", "jl3", "--from", "0", "--to", "2"]);
    assert_eq!(code, EXIT_OK);
    let values: Vec<&str> = out
        .lines()
        .map(|l| l.split_whitespace().last().unwrap())
        .collect();
    assert_eq!(values, ["2", "1", "5"]);

    let (_, out, _) = jocto(&[
        "seq",
        "--kind",
        "jacobsthal",
        "--from",
        "3",
        "--to",
        "5",
        "--format",
        "json",
    ]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(
        v,
        serde_json::json!([
            {"n": 3, "value": "3"}, {"n": 4, "value": "5"}, {"n": 5, "value": "11"}
        ])
    );
}

#[test]
fn seq_values_stay_exact() {
    let (_, out, _) = jocto(&[
        "seq", "--kind", "j3", "--from", "200", "--to", "200", "--format", "csv",
    ]);
    // 7 J_200 = 2^201 - V_200, V_200 = -3
    let expect = ((num_bigint::BigInt::from(1) << 201u32) + 3u32) / 7u32;
    assert_eq!(out, format!("200,{expect}\n"));
}

#[test]
fn bad_ranges_and_kinds_exit_two() {
    for args in [
        &["seq", "--kind", "j3", "--from", "3", "--to", "2"][..],
        &["seq", "--kind", "j3", "--from", "-1", "--to", "2"][..],
        &["seq", "--kind", "quux", "--from", "0", "--to", "2"][..],
        &["seq", "--kind", "JO", "--from", "0", "--to", "2"][..],
        &["oct", "--kind", "JO", "--n", "-1"][..],
        &["oct", "--kind", "j3", "--n", "0"][..],
        &["verify", "--identity", "NOPE"][..],
        &["verify", "--identity", "E4", "--variant", "corrected"][..],
        &["verify"][..],
        &["bogus"][..],
    ] {
        let (code, out, err) = jocto(args);
        assert_eq!(code, EXIT_USAGE, "{args:?}");
        assert!(out.is_empty(), "{args:?} wrote to stdout");
        assert!(!err.is_empty(), "{args:?} gave no diagnostic");
    }
}

#[test]
fn oct_output() {
    let (code, out, _) = jocto(&["oct", "--kind", "JO", "--n", "0"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim_end(), r#"["0","1","1","2","5","9","18","37"]"#);

    let (code, out, _) = jocto(&["oct", "--kind", "jO", "--n", "0", "--closed"]);
    assert_eq!(code, EXIT_OK);
    let mut lines = out.lines();
    assert_eq!(
        lines.next(),
        Some(r#"["2","1","5","10","17","37","74","145"]"#)
    );
    assert_eq!(lines.next(), Some("closed=recurrence: true"));
}

#[test]
fn mul_table_formats() {
    let (code, out, _) = jocto(&["mul-table"]);
    assert_eq!(code, EXIT_OK);
    let row: Vec<&str> = out
        .lines()
        .find(|l| l.split_whitespace().next() == Some("e1"))
        .unwrap()
        .split_whitespace()
        .collect();
    assert_eq!(
        row,
        ["e1", "e1", "-1", "e3", "-e2", "e5", "-e4", "-e7", "e6"]
    );

    let (_, out, _) = jocto(&["mul-table", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[1][2], serde_json::json!({"sign": 1, "e": 3}));
    assert_eq!(v[2][1], serde_json::json!({"sign": -1, "e": 3}));
    assert_eq!(v[5][5], serde_json::json!({"sign": -1, "e": 0}));
}

#[test]
fn verify_exit_codes() {
    let (code, _, _) = jocto(&["verify", "--identity", "T1_SUM", "--to", "20"]);
    assert_eq!(code, EXIT_OK);
    let (code, out, _) = jocto(&["verify", "--identity", "T5_QUAD", "--to", "3"]);
    assert_eq!(code, EXIT_DISCREPANCY);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["failures"].as_array().unwrap().len(), 4);
    let (code, _, _) = jocto(&[
        "verify",
        "--identity",
        "T5_QUAD",
        "--to",
        "30",
        "--variant",
        "corrected",
    ]);
    assert_eq!(code, EXIT_OK);
}

#[test]
fn verify_skips_out_of_domain_indices() {
    let (code, out, _) = jocto(&["verify", "--identity", "T4_PROD_JOJ", "--to", "9"]);
    assert_eq!(code, EXIT_OK);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v[0]["checked"], 4);
    assert_eq!(v[0]["skipped"], serde_json::json!([1, 2, 4, 5, 7, 8]));
}

#[test]
fn verify_plain_and_csv() {
    let (_, out, _) = jocto(&[
        "verify",
        "--identity",
        "T6_QUAD",
        "--to",
        "2",
        "--format",
        "plain",
    ]);
    assert!(out.starts_with("FAIL T6_QUAD [printed]"));
    assert!(out.contains("n=1: lhs = -49944 - 8e1"));
    let (_, out, _) = jocto(&["verify", "--identity", "E4", "--to", "2", "--format", "csv"]);
    let mut lines = out.lines();
    assert!(lines.next().unwrap().starts_with("id,variant,"));
    assert!(lines.next().unwrap().starts_with("E4,printed,0,2,3,0,0"));
}

#[test]
fn out_flag_writes_file() {
    let dir = std::env::temp_dir().join(format!("jocto-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("seq.csv");
    let p = path.to_str().unwrap();
    let (code, out, _) = jocto(&[
        "seq", "--kind", "j3", "--from", "0", "--to", "4", "--format", "csv", "--out", p,
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "0,0\n1,1\n2,1\n3,2\n4,5\n"
    );
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn binary_matches_library_entry_point() {
    let args = [
        "verify",
        "--identity",
        "T3_A",
        "--from",
        "5",
        "--to",
        "15",
        "--format",
        "csv",
    ];
    let bin = Command::new(env!("CARGO_BIN_EXE_jocto"))
        .args(args)
        .output()
        .unwrap();
    let (code, out, _) = jocto(&args);
    assert_eq!(bin.status.code(), Some(code));
    assert_eq!(String::from_utf8(bin.stdout).unwrap(), out);
}
