use std::process::Command;

use dqsym::cli::{run, EXIT_FAILURE, EXIT_OK, EXIT_USAGE};
use dqsym::{Expansion, Poly};

fn invoke(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("dqsym").chain(args.iter().copied());
    let code = run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn y(i: u32) -> Poly {
    Poly::y(i)
}

#[test]
fn product_reproduces_worked_coefficient() {
    let (code, out, _) = invoke(&["product", "3,2", "2,3", "--paper-literal"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.starts_with("# convention: paper-literal\n"), "{out}");
    let expected = format!("(3,2,4): {}", (y(1) - y(4)) + (y(2) - y(5)));
    assert!(out.lines().any(|l| l == expected), "{out}");
}

#[test]
fn product_with_unit() {
    let (code, out, _) = invoke(&["--format", "json", "product", "", "4"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(
        out.trim(),
        r#"[{"gamma":[4],"coeff":[{"coeff":"1","x":[],"y":[]}]}]"#
    );
}

#[test]
fn product_of_m1_with_itself() {
    let (code, out, _) = invoke(&["product", "1", "1"]);
    assert_eq!(code, EXIT_OK);
    let body: Vec<&str> = out.lines().filter(|l| !l.starts_with('#')).collect();
    assert_eq!(body, ["(1): -y1 + y2", "(2): 1", "(1,1): 2"]);
    assert!(out.starts_with("# convention: oracle-consistent\n"));
}

#[test]
fn explicit_zeros_lists_support() {
    let (_, sparse, _) = invoke(&["product", "2", "1"]);
    let (_, full, _) = invoke(&["--explicit-zeros", "product", "2", "1"]);
    assert!(!sparse.contains("(1,1):"), "{sparse}");
    assert!(full.lines().any(|l| l == "(1,1): 0"), "{full}");
    assert!(sparse.lines().all(|l| full.contains(l)));
}

#[test]
fn json_expansion_round_trips() {
    let (code, out, _) = invoke(&["--format", "json", "product", "2,1", "1,2"]);
    assert_eq!(code, EXIT_OK);
    let parsed: Expansion = serde_json::from_str(out.trim()).unwrap();
    assert_eq!(serde_json::to_string(&parsed).unwrap(), out.trim());
}

#[test]
fn coefficient_subcommand() {
    let (code, out, _) = invoke(&[
        "--convention",
        "paper-literal",
        "coefficient",
        "3,2",
        "2,3",
        "3,2,4",
    ]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("y1 + y2 - y4 - y5"), "{out}");
}

#[test]
fn tableaux_listing() {
    let (code, out, _) = invoke(&["--paper-literal", "tableaux", "7", "4", "5"]);
    assert_eq!(code, EXIT_OK);
    let weight = (y(1) - y(6)) * (y(3) - y(7));
    assert!(
        out.lines()
            .any(|l| l == format!("E={{1,3}}  wt = {weight}")),
        "{out}"
    );

    let (_, out, _) = invoke(&["tableaux", "4", "2", "3"]);
    assert_eq!(out.lines().filter(|l| l.starts_with("E=")).count(), 2);

    let (code, out, _) = invoke(&["--format", "json", "tableaux", "5", "1", "2"]);
    assert_eq!(code, EXIT_OK);
    assert_eq!(out.trim(), "[]");
}

#[test]
fn skylines_and_shuffles() {
    let (code, out, _) = invoke(&["--paper-literal", "skylines", "3,2", "2,3", "3,2,4"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("2 skyline(s)"), "{out}");
    assert!(
        out.contains("wt = y1 - y4") && out.contains("wt = y2 - y5"),
        "{out}"
    );

    let (code, out, _) = invoke(&["shuffles", "1", "1"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("(2): 1") && out.contains("(1,1): 2"), "{out}");
}

#[test]
fn verify_exit_codes() {
    let (code, out, _) = invoke(&["verify", "3", "2"]);
    assert_eq!(code, EXIT_OK, "{out}");
    assert!(out.contains("verified 49/49"), "{out}");

    let (code, out, _) = invoke(&[
        "--paper-literal",
        "verify",
        "--max-size",
        "1",
        "--max-length",
        "1",
    ]);
    assert_eq!(code, EXIT_FAILURE);
    assert!(out.contains("alpha=(1) beta=(1)"), "{out}");

    let (code, out, _) = invoke(&["verify", "0", "3"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("verified 1/1"), "{out}");
}

#[test]
fn relation_check_report() {
    let (code, out, _) = invoke(&["relation-check"]);
    assert_eq!(code, EXIT_OK);
    assert!(
        out.contains("t^3 - t*z*w + w^2 = 0  (vanishes identically)"),
        "{out}"
    );
    assert!(out.contains("7"), "{out}");

    let (_, json, _) = invoke(&["--format", "json", "relation-check"]);
    let v: serde_json::Value = serde_json::from_str(json.trim()).unwrap();
    assert_eq!(v["printed_witness"], "7");
    assert_eq!(v["printed_top_degree"], 6);
    assert_eq!(v["corrected_top_degree"], 6);
    assert_eq!(v["corrected"], serde_json::json!([]));
}

#[test]
fn table_emits_json_lines() {
    let (code, out, _) = invoke(&[
        "--format",
        "json",
        "table",
        "--max-size",
        "1",
        "--max-length",
        "1",
    ]);
    assert_eq!(code, EXIT_OK);
    let records: Vec<serde_json::Value> = out
        .lines()
        .map(|l| serde_json::from_str(l).unwrap())
        .collect();
    // () * (), () * (1), (1) * (), and three terms of (1) * (1).
    assert_eq!(records.len(), 6);
    assert!(records
        .iter()
        .all(|r| r.get("gamma").is_some() && r.get("coeff").is_some()));
}

#[test]
fn usage_errors_exit_2() {
    let (code, _, err) = invoke(&["product", "3,x,2", "1"]);
    assert_eq!(code, EXIT_USAGE);
    assert!(err.contains("position 2"), "{err}");

    let (code, _, _) = invoke(&["product", "0,1", "1"]);
    assert_eq!(code, EXIT_USAGE);

    let (code, _, _) = invoke(&["frobnicate"]);
    assert_eq!(code, EXIT_USAGE);

    let (code, out, _) = invoke(&["--help"]);
    assert_eq!(code, EXIT_OK);
    assert!(out.contains("product"));
}

#[test]
fn binary_exit_status() {
    let bin = env!("CARGO_BIN_EXE_dqsym");
    let ok = Command::new(bin)
        .args(["product", "", "4"])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_OK));
    assert!(String::from_utf8_lossy(&ok.stdout).contains("(4): 1"));

    let fail = Command::new(bin)
        .args(["--paper-literal", "verify", "1", "1"])
        .output()
        .unwrap();
    assert_eq!(fail.status.code(), Some(EXIT_FAILURE));

    let usage = Command::new(bin)
        .args(["tableaux", "seven"])
        .output()
        .unwrap();
    assert_eq!(usage.status.code(), Some(EXIT_USAGE));
}
