//! End-to-end checks of the `platkit` binary: output formats, exit codes,
//! and composability of the `cf` subcommands.

use platkit::KnotReport;
use std::process::Command;

fn platkit(args: &[&str]) -> (String, String, i32) {
    let out = Command::new(env!("CARGO_BIN_EXE_platkit"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        String::from_utf8(out.stdout).expect("utf-8 stdout"),
        String::from_utf8(out.stderr).expect("utf-8 stderr"),
        out.status.code().unwrap_or(-1),
    )
}

#[test]
fn invariants_text_and_json_agree() {
    let (text, _, code) = platkit(&["invariants", "-p", "19", "-q", "8"]);
    assert_eq!(code, 0);
    let from_text = KnotReport::parse_text(&text).expect("parseable text report");

    let (json, _, code) = platkit(&["invariants", "-p", "19", "-q", "8", "--json"]);
    assert_eq!(code, 0);
    let from_json: KnotReport = serde_json::from_str(&json).expect("parseable json report");

    assert_eq!(from_text, from_json);
    assert_eq!(from_json, KnotReport::build(19, 8).unwrap());
}

#[test]
fn invariants_accepts_negative_q() {
    let (text, _, code) = platkit(&["invariants", "-p", "11", "-q", "-4"]);
    assert_eq!(code, 0);
    let report = KnotReport::parse_text(&text).unwrap();
    assert_eq!((report.p, report.q, report.canonical_even_q), (11, -4, 18));
}

#[test]
fn invalid_input_exits_2_with_a_diagnostic() {
    for args in [
        ["invariants", "-p", "4", "-q", "1"],  // even p
        ["invariants", "-p", "9", "-q", "3"],  // shared factor
        ["invariants", "-p", "-3", "-q", "2"], // nonpositive p
    ] {
        let (stdout, stderr, code) = platkit(&args);
        assert_eq!(code, 2, "args {args:?}");
        assert!(stdout.is_empty());
        assert!(stderr.starts_with("error: "), "stderr was {stderr:?}");
    }
}

#[test]
fn usage_errors_exit_2() {
    let (_, _, code) = platkit(&["invariants", "-p", "3"]); // missing -q
    assert_eq!(code, 2);
    let (_, _, code) = platkit(&["table", "--format", "yaml"]);
    assert_eq!(code, 2);
    let (_, _, code) = platkit(&["sweep-monic", "--max-p", "2"]); // below range
    assert_eq!(code, 2);
}

#[test]
fn table_default_covers_the_42_classes() {
    let (text, _, code) = platkit(&["table"]);
    assert_eq!(code, 0);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 43);
    assert!(lines[0].starts_with("q/p"));
    assert!(lines[1].contains("Trivial 2-knot"));
    assert!(lines.last().unwrap().starts_with("18/19"));
}

#[test]
fn table_formats_describe_the_same_rows() {
    let (text, _, _) = platkit(&["table", "--max-p", "9", "--format", "text"]);
    let (csv, _, _) = platkit(&["table", "--max-p", "9", "--format", "csv"]);
    let (json, _, _) = platkit(&["table", "--max-p", "9", "--format", "json"]);

    let n_text = text.lines().count() - 1;
    let n_csv = csv.lines().count() - 1;
    let parsed: serde_json::Value = serde_json::from_str(&json).unwrap();
    let rows = parsed.as_array().unwrap();
    assert_eq!(n_text, 10);
    assert_eq!(n_csv, 10);
    assert_eq!(rows.len(), 10);

    // Same knots in the same order across formats.
    for (row, csv_line) in rows.iter().zip(csv.lines().skip(1)) {
        let p = row["report"]["p"].as_i64().unwrap();
        let q = row["report"]["q"].as_i64().unwrap();
        assert!(csv_line.starts_with(&format!("{p},{q},")));
    }
}

#[test]
fn sweep_exits_zero_when_nothing_monic_turns_up() {
    let (stdout, _, code) = platkit(&["sweep-monic", "--max-p", "19", "--jobs", "1"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("checked 41 representatives"));
    assert!(stdout.contains("no monic"));
}

#[test]
fn classify_names_the_separating_invariant() {
    let (out, _, code) = platkit(&["classify", "7", "4", "7", "-3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("equivalent"));

    let (out, _, code) = platkit(&["classify", "5", "2", "7", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "distinct: determinant 5 vs 7");

    let (out, _, code) = platkit(&["classify", "7", "4", "7", "2"]);
    assert_eq!(code, 0);
    assert_eq!(out.trim(), "distinct: tau 1 vs 2");
}

#[test]
fn cf_expand_then_eval_round_trips() {
    let (expansion, _, code) = platkit(&["cf", "expand", "4/7"]);
    assert_eq!(code, 0);
    assert_eq!(expansion.trim(), "1,1,3");

    let (value, _, code) = platkit(&["cf", "eval", expansion.trim()]);
    assert_eq!(code, 0);
    assert_eq!(value.trim(), "4/7");
}

#[test]
fn cf_reverse_keeps_the_denominator() {
    let (reversed, _, _) = platkit(&["cf", "reverse", "3,2,0"]);
    assert_eq!(reversed.trim(), "0,2,3");
    let (value, _, _) = platkit(&["cf", "eval", reversed.trim()]);
    assert_eq!(value.trim(), "7/3");
    // The unreversed list evaluates through an intermediate 1/0 to 1/3.
    let (value, _, _) = platkit(&["cf", "eval", "3,2,0"]);
    assert_eq!(value.trim(), "1/3");
}

#[test]
fn cf_accepts_negative_entries() {
    let (value, _, code) = platkit(&["cf", "eval", "-1,-2,-3"]);
    assert_eq!(code, 0);
    assert_eq!(value.trim(), "-7/10");

    let (expansion, _, code) = platkit(&["cf", "expand", "-4/7"]);
    assert_eq!(code, 0);
    assert_eq!(expansion.trim(), "-1,-1,-3");
}

#[test]
fn cf_handles_zero_and_infinity() {
    let (out, _, _) = platkit(&["cf", "expand", "0/1"]);
    assert_eq!(out.trim(), "0,1,-1");
    let (out, _, _) = platkit(&["cf", "eval", "0,1,-1"]);
    assert_eq!(out.trim(), "0/1");
    let (out, _, _) = platkit(&["cf", "expand", "1/0"]);
    assert_eq!(out.trim(), "0");
    let (out, _, _) = platkit(&["cf", "eval", "0"]);
    assert_eq!(out.trim(), "1/0");
}

#[test]
fn cf_rejects_garbage_with_code_2() {
    let (_, stderr, code) = platkit(&["cf", "eval", "1,x"]);
    assert_eq!(code, 2);
    assert!(stderr.starts_with("error: "));
    let (_, stderr, code) = platkit(&["cf", "expand", "7/"]);
    assert_eq!(code, 2);
    assert!(stderr.starts_with("error: "));
}
