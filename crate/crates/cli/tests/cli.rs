//! End-to-end tests of the `magicplanes` binary: output formats, exit
//! codes, and determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_magicplanes"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(output: &Output) -> String {
    String::from_utf8(output.stdout.clone()).expect("stdout is UTF-8")
}

fn stderr(output: &Output) -> String {
    String::from_utf8(output.stderr.clone()).expect("stderr is UTF-8")
}

fn temp_path(name: &str) -> PathBuf {
    std::env::temp_dir().join(format!("magicplanes-cli-{}-{name}", std::process::id()))
}

#[test]
fn build_emits_plane_json() {
    let output = run(&["plane", "build", "--q", "3"]);
    assert_eq!(output.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["order"], 3);
    assert_eq!(value["points"].as_array().unwrap().len(), 13);
    assert_eq!(value["lines"].as_array().unwrap().len(), 13);
}

#[test]
fn build_check_verify_round_trip() {
    let plane_file = temp_path("p5.json");
    let label_file = temp_path("l5.json");
    let built = run(&["plane", "build", "--q", "5", "--out", plane_file.to_str().unwrap()]);
    assert_eq!(built.status.code(), Some(0));

    let checked = run(&["plane", "check", "--in", plane_file.to_str().unwrap()]);
    assert_eq!(checked.status.code(), Some(0));
    assert!(stdout(&checked).contains("all axioms hold"));

    let labeled = run(&["label", "magic", "--q", "5", "--out", label_file.to_str().unwrap()]);
    assert_eq!(labeled.status.code(), Some(0));
    assert!(stdout(&labeled).contains("classification: magic"));

    let verified = run(&[
        "label",
        "verify",
        "--plane",
        plane_file.to_str().unwrap(),
        "--labeling",
        label_file.to_str().unwrap(),
    ]);
    assert_eq!(verified.status.code(), Some(0));
    assert!(stdout(&verified).contains("classification: magic"));

    let _ = std::fs::remove_file(plane_file);
    let _ = std::fs::remove_file(label_file);
}

#[test]
fn check_rejects_corrupted_incidence_text() {
    let file = temp_path("bad.txt");
    // The 7-point plane with one incidence bit flipped.
    let rows = "\
0 1 1 1 0 0 0
1 0 1 0 1 0 0
1 1 0 0 0 1 0
1 0 0 1 0 0 1
0 1 0 0 1 0 1
0 0 1 0 0 1 1
0 0 0 1 1 1 1
";
    std::fs::write(&file, rows).unwrap();
    let output = run(&[
        "plane",
        "check",
        "--in",
        file.to_str().unwrap(),
        "--format",
        "incidence",
    ]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stdout(&output).contains("violation"));
    let _ = std::fs::remove_file(file);
}

#[test]
fn matrix_prints_determinant_identity() {
    let output = run(&["plane", "matrix", "--q", "2", "--det"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert_eq!(text.lines().count(), 8);
    assert_eq!(text.lines().last().unwrap(), "det 576 = 576");
}

#[test]
fn matrix_gram_rows_are_intersection_counts() {
    let output = run(&["plane", "matrix", "--q", "2", "--gram"]);
    assert_eq!(output.status.code(), Some(0));
    let first = stdout(&output).lines().next().unwrap().to_string();
    assert_eq!(first, "3 1 1 1 1 1 1");
}

#[test]
fn magic_order4_reports_auxiliary_line() {
    let output = run(&["label", "magic", "--q", "4"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("auxiliary line 18: [0:1:a+1] [1:0:1] [1:1:a] [1:a:0] [1:a+1:a+1]"));
    assert!(text.contains("classification: magic"));
}

#[test]
fn vline_reports_pseudomagic() {
    let output = run(&["label", "vline", "--q", "2", "--line", "0", "--mod", "6"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    assert!(text.contains("\"group\": ["));
    assert!(text.contains("classification: pseudomagic"));
    assert!(text.contains("magic constant: 3"));
}

#[test]
fn product_emits_labeling_json() {
    let output = run(&["label", "product", "--q", "2"]);
    assert_eq!(output.status.code(), Some(0));
    let value: serde_json::Value = serde_json::from_str(&stdout(&output)).unwrap();
    assert_eq!(value["group"].as_array().unwrap().len(), 7);
    assert_eq!(value["values"].as_array().unwrap().len(), 7);
}

#[test]
fn oracle_cyclic_emits_csv() {
    let output = run(&["oracle", "cyclic", "--q", "2", "--mod", "2,3"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(
        lines,
        vec![
            "m,count_line_invariant,max_image_size,gcd_n_m,magic_found",
            "2,16,2,2,false",
            "3,3,1,1,false",
        ]
    );
}

#[test]
fn oracle_cyclic_respects_bound_environment() {
    let output = Command::new(env!("CARGO_BIN_EXE_magicplanes"))
        .args(["oracle", "cyclic", "--q", "2", "--mod", "2"])
        .env("MAGICPLANES_BOUND", "10")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(1));
    assert!(stderr(&output).contains("exceeds the bound 10"));

    // An explicit flag wins over the environment.
    let output = Command::new(env!("CARGO_BIN_EXE_magicplanes"))
        .args(["oracle", "cyclic", "--q", "2", "--mod", "2", "--bound", "1000"])
        .env("MAGICPLANES_BOUND", "10")
        .output()
        .unwrap();
    assert_eq!(output.status.code(), Some(0));
}

#[test]
fn acceptance_prints_one_line_per_criterion() {
    let output = run(&["oracle", "acceptance"]);
    assert_eq!(output.status.code(), Some(0));
    let text = stdout(&output);
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines.len(), 11);
    assert!(lines.iter().all(|l| l.starts_with("PASS ")));
}

#[test]
fn domain_errors_exit_one_with_single_line() {
    let output = run(&["plane", "build", "--q", "6"]);
    assert_eq!(output.status.code(), Some(1));
    assert!(stdout(&output).is_empty());
    let err = stderr(&output);
    assert_eq!(err.lines().count(), 1);
    assert!(err.contains("6 is not a prime power"));
}

#[test]
fn parse_errors_exit_two() {
    let output = run(&["plane", "build", "--q", "2", "--bogus"]);
    assert_eq!(output.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["plane", "build", "--q", "9"],
        vec!["label", "magic", "--q", "4"],
        vec!["oracle", "cyclic", "--q", "3", "--mod", "3"],
    ] {
        let first = run(&args);
        let second = run(&args);
        assert_eq!(first.status.code(), second.status.code());
        assert_eq!(first.stdout, second.stdout, "args {args:?}");
    }
}
