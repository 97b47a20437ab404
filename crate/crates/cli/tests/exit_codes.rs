use std::process::Command;

use bergman_cli::{run_args, Outcome};
use proptest::prelude::*;

fn data(file: &str) -> String {
    format!("{}/tests/data/{file}", env!("CARGO_MANIFEST_DIR"))
}

fn run(args: &[&str]) -> Outcome {
    run_args(std::iter::once("bergman").chain(args.iter().copied()))
}

#[test]
fn syntax_errors_exit_one_with_position() {
    let out = run(&["validate", &data("bad_syntax.bp")]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("line 2, column 11"), "{}", out.stderr);
}

#[test]
fn invalid_presentations_exit_one_naming_the_relation() {
    let out = run(&["validate", &data("bad_blue.bp")]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.contains("`r`"), "{}", out.stderr);
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&[]).code, 2);
    assert_eq!(run(&["frobnicate"]).code, 2);
    assert_eq!(run(&["validate", "/nonexistent/x.bp"]).code, 2);
    assert_eq!(run(&["validate", &data("shift.mv")]).code, 2);
    assert_eq!(
        run(&["meq", &data("toeplitz.bg"), "u", "v", "--bound", "0"]).code,
        2
    );
    assert_eq!(run(&["meq", &data("toeplitz.bg"), "u + q", "u"]).code, 2);
    assert_eq!(
        run(&["lpa", "reduce", &data("toeplitz.bg"), "h[u.1][w.1]"]).code,
        2
    );
    assert_eq!(
        run(&[
            "lpa",
            "check",
            &data("toeplitz.bg"),
            "--anchors",
            "k[u.1][u.1]"
        ])
        .code,
        2
    );
}

#[test]
fn help_exits_zero() {
    let out = run(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("validate"));
}

#[test]
fn unknown_within_bound_exits_one() {
    let out = run(&["meq", &data("toeplitz.bg"), "u", "v", "--bound", "3"]);
    assert_eq!(out.code, 1);
    assert!(out.stderr.starts_with("UNKNOWN"), "{}", out.stderr);
}

#[test]
fn failed_precondition_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let script = dir.path().join("bad.mv");
    std::fs::write(&script, "redshift h: u = u + 2 v -- bound 4\n").unwrap();
    let out = run(&["move", &data("toeplitz.bg"), script.to_str().unwrap()]);
    assert_eq!(out.code, 1);
    assert!(
        out.stderr.contains("not found within degree bound"),
        "{}",
        out.stderr
    );
    // blue relations cannot be red shifted
    std::fs::write(&script, "redshift r1: x0_1 + x0_2 = x0_2 + x0_1\n").unwrap();
    assert_eq!(
        run(&["move", &data("worked.bp"), script.to_str().unwrap()]).code,
        1
    );
    // collapsing needs a basic presentation
    assert_eq!(
        run(&["factor", "collapse", &data("worked.bp"), "x1_1", "r3"]).code,
        1
    );
    assert_eq!(run(&["lpa", "corner", &data("toeplitz.bg"), "u"]).code, 1);
}

#[test]
fn empty_file_is_valid() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("empty.bp");
    std::fs::write(&path, "").unwrap();
    let out = run(&["validate", path.to_str().unwrap()]);
    assert_eq!(
        (out.code, out.stdout.as_str()),
        (0, "valid; admissible orderings: ()\n")
    );
}

#[test]
fn out_flag_writes_the_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("t.bp");
    let out = run(&[
        "convert",
        &data("toeplitz.bg"),
        "--out",
        path.to_str().unwrap(),
    ]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.is_empty());
    assert_eq!(
        std::fs::read_to_string(&path).unwrap(),
        "gens u v\nred h: u = u + v\n"
    );
}

#[test]
fn binary_reports_codes() {
    let bin = env!("CARGO_BIN_EXE_bergman");
    let ok = Command::new(bin)
        .args(["validate", &data("worked.bp")])
        .output()
        .unwrap();
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(
        String::from_utf8_lossy(&ok.stdout),
        "valid; admissible orderings: (r1,r2,r3), (r1,r3,r2)\n"
    );
    let bad = Command::new(bin)
        .args(["validate", &data("bad_blue.bp")])
        .output()
        .unwrap();
    assert_eq!(bad.status.code(), Some(1));
    let usage = Command::new(bin).arg("--bound").output().unwrap();
    assert_eq!(usage.status.code(), Some(2));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn malformed_inputs_never_panic(
        text in "(gens|vertices|red|blue|edge|[a-z]|[0-9]|[ :=+>#\\-\n]){0,60}",
        ext in prop::sample::select(vec!["bp", "bg", "dg"]),
    ) {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join(format!("in.{ext}"));
        std::fs::write(&path, &text).unwrap();
        let p = path.to_str().unwrap();
        for args in [
            vec!["validate", p],
            vec!["algebra", p],
            vec!["lpa", "check", p],
            vec!["vmonoid", p],
        ] {
            let out = run(&args);
            prop_assert!((0..=2).contains(&out.code));
        }
    }

    #[test]
    fn malformed_scripts_never_panic(text in "(redshift|insplit|extend|eliminate|[a-z]|[0-9]|[ :=+|\\[\\](),;\n-]){0,60}") {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("s.mv");
        std::fs::write(&path, &text).unwrap();
        let out = run(&["move", &data("toeplitz.bg"), path.to_str().unwrap()]);
        prop_assert!((0..=2).contains(&out.code));
    }
}
