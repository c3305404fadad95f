use std::io::Write;
use std::process::{Command, Output, Stdio};

use cuspkit::geometry::catalog::TWISTED_CUBIC_MANIFEST;
use cuspkit::report::Report;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_cuspkit")).args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_cuspkit"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn report(out: &Output) -> Report {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn y4(r: &Report) -> String {
    r.entry("Y4").unwrap().detail.as_str().unwrap().to_string()
}

#[test]
fn gb_json_round_trips() {
    let out = run(&["--json", "gb", "x0, x1"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r.command, "gb");
    assert!(r.verified);
    assert_eq!(r.entry("size").unwrap().detail, 2);
    let again: Report = serde_json::from_str(&serde_json::to_string(&r).unwrap()).unwrap();
    assert_eq!(again, r);
}

#[test]
fn input_errors_exit_2() {
    assert_eq!(run(&["gb"]).status.code(), Some(2));
    assert_eq!(run(&["gb", "x0 +"]).status.code(), Some(2));
    assert_eq!(run(&["verify-example", "ex99"]).status.code(), Some(2));
    assert_eq!(run(&["code", "111", "1111"]).status.code(), Some(2));
    assert_eq!(run(&["--order", "revlex", "gb", "x0"]).status.code(), Some(2));
    assert_eq!(run_stdin(&["construct", "-"], "Lp = x0\n").status.code(), Some(2));
}

#[test]
fn dependent_forms_exit_3() {
    let out = run_stdin(
        &["construct", "-"],
        "Lp = x0\nLpp = 2*x0\nFp = x2\nFpp = x3\nR = x1^2\n",
    );
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn construct_and_verify_agree_on_the_quartic() {
    let c = run_stdin(&["--json", "construct", "-"], TWISTED_CUBIC_MANIFEST);
    assert_eq!(c.status.code(), Some(0));
    let v = run(&["--json", "verify-example", "ex61"]);
    assert_eq!(v.status.code(), Some(0));
    let (c, v) = (report(&c), report(&v));
    assert_eq!(y4(&c), y4(&v));
    assert!(v.warnings.iter().any(|w| w.contains("printed cusp coordinates")));
}

#[test]
fn type_two_manifest() {
    let out = run_stdin(
        &["--json", "cusps", "-"],
        "# three lines\nLp = x0\nLpp = x1\nFp = x2\nFpp = 6*x1 + 6*x2 - 11*x0\nR = x3^2 - x2^2 - x0*x1\n",
    );
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r.entry("configuration").unwrap().detail["type"], "TypeII");
    assert_eq!(r.entry("cusp candidates").unwrap().detail.as_array().unwrap().len(), 6);
    // A slice through the vertex is a precondition violation.
    let bad = run_stdin(
        &["cusps", "-", "--hyperplane", "x0"],
        "Lp = x0\nLpp = x1\nFp = x2\nFpp = 6*x1 + 6*x2 - 11*x0\nR = x3^2 - x2^2 - x0*x1\n",
    );
    assert_eq!(bad.status.code(), Some(3));
}

#[test]
fn code_and_enumeration() {
    let out = run(&[
        "--json",
        "code",
        "-g",
        "11111100",
        "-g",
        "0011(-1)(-1)11",
        "--claim",
        "8,3,6",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert_eq!(r.entry("dimension").unwrap().detail, 2);
    assert_eq!(r.entry("Griesmer [8,3,6]").unwrap().detail["holds"], false);

    let out = run(&["--json", "enumerate-sets"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(report(&out).entry("family count").unwrap().detail, 1);
}

#[test]
fn barth_warns_but_verifies() {
    let out = run(&["--json", "verify-example", "barth", "--k", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = report(&out);
    assert!(r.verified);
    assert!(!r.warnings.is_empty());
    assert_eq!(run(&["verify-example", "barth", "--k", "0"]).status.code(), Some(3));
}
