use std::process::{Command, Output};

fn superfuse(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_superfuse")).args(args).output().expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn wdiag_reports_one_cap() {
    let out = superfuse(&["wdiag", "(3|1,1,1)"]);
    assert!(out.status.success());
    let text = stdout(&out);
    assert!(text.contains("caps: (2,3)"), "{text}");
    assert!(text.contains("rk=0 d=1 k=1"), "{text}");
    assert!(text.contains("n=1 survives"), "{text}");
}

#[test]
fn wdiag_empty_and_typical() {
    assert!(stdout(&superfuse(&["wdiag", "(|)"])).contains("k=0"));
    let text = stdout(&superfuse(&["wdiag", "(1,1|1,1)"]));
    assert!(text.contains("rk=2 d=0 k=2, not max-atypical"), "{text}");
    assert!(text.contains("n=1 vanishes"), "{text}");
}

#[test]
fn wdiag_window_and_json() {
    let text = stdout(&superfuse(&["wdiag", "(2|2)", "--window", "-3..4"]));
    assert!(text.lines().nth(2).unwrap().trim_start().starts_with("-3"), "{text}");
    let out = superfuse(&["--format", "json", "wdiag", "(3|1,1,1)"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["caps"], serde_json::json!([[2, 3]]));
    assert_eq!(v["d"], 1);
}

#[test]
fn parse_errors_exit_two_with_caret() {
    let out = superfuse(&["wdiag", "(3,4|1)"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains('^'), "{err}");
    assert_eq!(superfuse(&["tensor-gl0", "AS", "AS2"]).status.code(), Some(2));
    assert_eq!(superfuse(&["wdiag", "(1|1)", "--window", "3..x"]).status.code(), Some(2));
}

#[test]
fn lift_of_a_symmetric_tensor() {
    assert_eq!(stdout(&superfuse(&["lift", "(4|1,1,1,1)"])).trim(), "(4) + (3)");
    assert_eq!(stdout(&superfuse(&["lift", "--inverse", "(4|1,1,1,1)"])).trim(), "(4) - (3) + (2) - (1) + ()");
}

#[test]
fn tensor_gl0_display() {
    let out = superfuse(&["tensor-gl0", "AS2", "AS2", "--truncate", "2", "--project-max-atypical"]);
    assert_eq!(stdout(&out).trim(), "AS4 + R(3,1) + R(2^2) + 2 AS3 + 2 R(2,1) + AS2");
    let out = superfuse(&["tensor-gl0", "AS1", "AS1", "--truncate", "1"]);
    assert_eq!(stdout(&out).trim(), "AS2 + AL2 + 2 AS1");
}

#[test]
fn json_output_feeds_back_in() {
    let out = superfuse(&["--format", "json", "tensor-rt", "AS1", "AS1"]);
    let json = stdout(&out);
    let again = superfuse(&["--format", "json", "tensor-rt", json.trim(), "()"]);
    assert!(again.status.success());
    assert_eq!(
        serde_json::from_slice::<serde_json::Value>(&again.stdout).unwrap(),
        serde_json::from_str::<serde_json::Value>(&json).unwrap()
    );
}

#[test]
fn fuse_layers() {
    let text = stdout(&superfuse(&["fuse", "2", "1"]));
    assert!(text.contains("middle    S^3 + B^-1 S^3 + B S^1 + S^1"), "{text}");
    assert!(text.contains("socle     S^2"), "{text}");
    assert!(text.contains("(2)"), "{text}");
    let text = stdout(&superfuse(&["fuse", "1", "1"]));
    assert!(text.contains("split:    1"), "{text}");
}

#[test]
fn fuse_json_and_latex() {
    let out = superfuse(&["--format", "json", "fuse", "3", "2"]);
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["factors"], serde_json::json!([3, 2]));
    assert_eq!(v["layers"].as_array().unwrap().len(), 3);
    let tex = stdout(&superfuse(&["--format", "latex", "fuse", "2", "2"]));
    assert!(tex.contains("pmatrix"), "{tex}");
}

#[test]
fn fuse_rejects_zero() {
    assert_eq!(superfuse(&["fuse", "0", "1"]).status.code(), Some(2));
}

#[test]
fn closed_formula_names() {
    let text = stdout(&superfuse(&["closed", "as-al", "3", "2"]));
    assert_eq!(text.trim(), "AS3 + 2 AS2 + AS1 + R(4,1) + R(3,1^2) + 2 R(3,1) + R(2,1)");
}

#[test]
fn check_suites() {
    let out = superfuse(&["check", "gl22", "--max", "6"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout(&out);
    assert!(text.lines().any(|l| l.starts_with("PASS  gl22.socle")), "{text}");
    assert!(text.contains("note: A_{S^+2}"), "{text}");
    assert!(text.trim_end().lines().last().unwrap().starts_with("PASS"), "{text}");
    assert_eq!(superfuse(&["check", "lr", "--max", "5"]).status.code(), Some(0));
    assert_eq!(superfuse(&["check", "nonsense"]).status.code(), Some(2));
}
