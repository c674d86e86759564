//! End-to-end tests of the binary: exit codes, diagnostics, and output
//! shapes for every subcommand.

use std::process::{Command, Output};

fn ordcat(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ordcat"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8")
}

#[test]
fn apply_prints_the_image() {
    let out = ordcat(&["apply", "B", "1->2:[1]"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3->2:[0 1 1]\n");

    let out = ordcat(&["apply", "dualT", "2->2:[1 1]"]);
    assert_eq!(stdout(&out), "2->2:[1 1]\n");

    let out = ordcat(&["apply", "bracket", "2->2:[0 0]"]);
    assert_eq!(stdout(&out), "3->3:[0 2 2]\n");
}

#[test]
fn input_errors_exit_two_with_one_line_diagnostics() {
    let out = ordcat(&["apply", "dualT", "2->2:[0 0]"]);
    assert_eq!(out.status.code(), Some(2));
    let err = stderr(&out);
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("not a member of ord-t"));
    assert!(err.contains("maximal element not preserved"));

    let out = ordcat(&["apply", "B", "2->2:[1 0]"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("monotonicity violation at index 1"));

    let out = ordcat(&["apply", "B", "2->2:[0 2]"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("range violation at index 1"));

    let out = ordcat(&["apply", "snap", "1->1:[0]"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown functor"));

    let out = ordcat(&["check", "thm-9.99"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("unknown suite"));

    // usage errors from the argument parser also exit 2
    let out = ordcat(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn compose_command() {
    let out = ordcat(&["compose", "2->3:[0 2]", "3->2:[0 0 1]"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "2->2:[0 1]\n");

    let out = ordcat(&["compose", "2->3:[0 2]", "2->2:[0 1]"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("intermediate objects differ"));
}

#[test]
fn hom_enumeration_with_and_without_the_order() {
    let out = ordcat(&["hom", "3", "2", "ord-t"]);
    assert_eq!(stdout(&out), "3->2:[0 0 1]\n3->2:[0 1 1]\n3->2:[1 1 1]\n");

    let out = ordcat(&["hom", "2", "2", "ord", "--order"]);
    let text = stdout(&out);
    assert!(text.contains("order (leq matrix):"));
    assert!(text.contains("1 1 1"));

    let out = ordcat(&["hom", "0", "2", "ord-it"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("no empty objects"));
}

#[test]
fn actions_and_pairings() {
    let out = ordcat(&["act", "sigma-t", "2->2:[0 1]", "2->2:[1 1]"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3->3:[1 1 2]\n");

    let out = ordcat(&["pair", "it", "1->1:[0]", "2->2:[1 1]"]);
    assert_eq!(stdout(&out), "3->3:[0 2 2]\n");

    let out = ordcat(&["pair", "sigma", "1->1:[0]", "2->2:[1 1]"]);
    assert_eq!(stdout(&out), "2->2:[1 1]\n");

    let out = ordcat(&["act", "cov-t", "2->2:[0 1]", "2->2:[0 0]"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn check_prints_one_line_per_suite_and_exits_zero() {
    let out = ordcat(&["check", "thm-2.23", "--bound", "5"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 1);
    assert!(text.starts_with("thm-2.23: pass (instances="));

    let out = ordcat(&["check", "all", "--bound", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 28);
    assert!(text.lines().all(|line| line.contains(": pass")));
}

#[test]
fn check_bound_can_come_from_the_environment() {
    let out = Command::new(env!("CARGO_BIN_EXE_ordcat"))
        .args(["check", "rigidity"])
        .env("ORD_CHECK_BOUND", "3")
        .output()
        .expect("binary runs");
    assert!(out.status.success());
    assert!(stdout(&out).contains("bound=3"));

    // an explicit flag wins over the environment
    let out = Command::new(env!("CARGO_BIN_EXE_ordcat"))
        .args(["check", "rigidity", "--bound", "2"])
        .env("ORD_CHECK_BOUND", "3")
        .output()
        .expect("binary runs");
    assert!(stdout(&out).contains("bound=2"));
}

#[test]
fn check_json_schema() {
    let out = ordcat(&["check", "thm-2.9", "--bound", "4", "--format", "json"]);
    assert!(out.status.success());
    let value: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let report = &value[0];
    for key in ["suite", "bound", "instances", "failures", "millis"] {
        assert!(report.get(key).is_some(), "missing key {key}");
    }
    assert_eq!(report["suite"], "thm-2.9");
    assert_eq!(report["bound"], 4);
}

#[test]
fn table_renders_all_four_tags() {
    let out = ordcat(&["table", "--bound", "3"]);
    assert!(out.status.success());
    let text = stdout(&out);
    for tag in ["tag=ord", "tag=ord-t", "tag=ord-i", "tag=ord-it"] {
        assert!(text.contains(tag), "missing {tag}");
    }
    // the column of counts into the 3-element order
    assert!(text.contains("10"));
}

#[test]
fn map_literal_round_trip_normalizes_whitespace_only() {
    let out = ordcat(&["apply", "op", "  3 -> 2 :  [0   0 1]  "]);
    assert!(out.status.success());
    assert_eq!(stdout(&out), "3->2:[0 1 1]\n");
}
