use std::path::PathBuf;
use std::process::{Command, Output, Stdio};

use serde_json::Value;
use tempfile::TempDir;

use stcvs_cli::format::{parse_instance, to_suite_instance};
use stcvs_core::suite::{recheck, CheckOutcome, Mutant};

fn stcvs(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stcvs"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn instance_file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let path = dir.path().join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn json_of(output: &Output) -> Value {
    serde_json::from_slice(&output.stdout).expect("stdout is JSON")
}

fn code_of(output: &Output) -> i32 {
    output.status.code().expect("no signal")
}

const PATH3: &str = "p cvs 3 2\ns 0\nt 2\ne 0 1\ne 1 2\n";

#[test]
fn solves_a_path_with_the_chordal_fast_path() {
    let dir = TempDir::new().unwrap();
    let file = instance_file(&dir, "path.cvs", PATH3);
    let out = stcvs(&["solve", file.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code_of(&out), 0);
    let record = json_of(&out);
    assert_eq!(record["method"], "chordal");
    assert_eq!(record["k"], 1);
    assert_eq!(record["size"], 1);
    assert_eq!(record["optimality"], "exact");
    assert_eq!(record["separator"], serde_json::json!([1]));
    assert_eq!(record["recognizers"]["chordal"], true);
}

#[test]
fn reads_stdin_when_the_file_is_a_dash() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_stcvs"))
        .args(["solve", "-"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    use std::io::Write;
    child.stdin.take().unwrap().write_all(PATH3.as_bytes()).unwrap();
    let out = child.wait_with_output().unwrap();
    assert_eq!(code_of(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("separator: 1"), "{text}");
}

#[test]
fn a_four_cycle_has_no_connected_separator() {
    let dir = TempDir::new().unwrap();
    let file = instance_file(
        &dir,
        "c4.cvs",
        "p cvs 4 4\ns 0\nt 2\ne 0 1\ne 1 2\ne 2 3\ne 0 3\n",
    );
    let out = stcvs(&["solve", file.to_str().unwrap(), "--method", "oracle", "--format", "json"]);
    assert_eq!(code_of(&out), 0);
    let record = json_of(&out);
    assert_eq!(record["optimality"], "none-exists");
    assert_eq!(record["separator"], Value::Null);
    assert_eq!(record["method"], "oracle");
}

#[test]
fn the_biclique_needs_a_dominator_vertex() {
    // K_{2,3} with the terminals on the large side: the minimum separator
    // {0, 1} is independent, so the optimum is 3, one above connectivity.
    let dir = TempDir::new().unwrap();
    let file = instance_file(
        &dir,
        "k23.cvs",
        "p cvs 5 6\ns 2\nt 3\ne 0 2\ne 0 3\ne 0 4\ne 1 2\ne 1 3\ne 1 4\n",
    );
    let out = stcvs(&[
        "solve",
        file.to_str().unwrap(),
        "--method",
        "chordal-bipartite",
        "--format",
        "json",
    ]);
    assert_eq!(code_of(&out), 0);
    let record = json_of(&out);
    assert_eq!(record["k"], 2);
    assert_eq!(record["size"], 3);
    assert_eq!(record["optimality"], "exact");
    assert_eq!(record["separator"], serde_json::json!([0, 1, 4]));
}

#[test]
fn self_loops_are_parse_errors_with_a_position() {
    let dir = TempDir::new().unwrap();
    let file = instance_file(&dir, "loop.cvs", "p cvs 3 2\ns 0\nt 2\ne 0 0\ne 1 2\n");
    let out = stcvs(&["solve", file.to_str().unwrap()]);
    assert_eq!(code_of(&out), 3);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("line 4, column 5"), "{stderr}");
    assert!(stderr.contains("self-loop"), "{stderr}");
}

#[test]
fn dangling_group_members_are_parse_errors() {
    let dir = TempDir::new().unwrap();
    let file = instance_file(&dir, "bad.gst", "p gsteiner 4 3\ng 1 5\ne 0 1\ne 1 2\ne 2 3\n");
    let out = stcvs(&["reduce", file.to_str().unwrap()]);
    assert_eq!(code_of(&out), 3);
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("out of range"), "{stderr}");
}

#[test]
fn solve_refuses_non_cvs_instances() {
    let dir = TempDir::new().unwrap();
    let file = instance_file(&dir, "r.steiner", "p steiner 3 2\nR 0 2\ne 0 1\ne 1 2\n");
    let out = stcvs(&["solve", file.to_str().unwrap()]);
    assert_eq!(code_of(&out), 2);
}

#[test]
fn reduces_the_triangle_group_instance_with_a_passing_check() {
    let dir = TempDir::new().unwrap();
    let file = instance_file(
        &dir,
        "tri.gst",
        "p gsteiner 3 3\ng 1 0 1\ng 2 2\ne 0 1\ne 1 2\ne 0 2\n",
    );
    let reduced_path = dir.path().join("tri.cvs");
    let out = stcvs(&[
        "reduce",
        file.to_str().unwrap(),
        "--check",
        "--output",
        reduced_path.to_str().unwrap(),
        "--format",
        "json",
    ]);
    assert_eq!(code_of(&out), 0);
    let record = json_of(&out);
    assert_eq!(record["map"]["construction"], "group");
    assert_eq!(record["map"]["groups"], 2);
    assert_eq!(record["map"]["source_budget"], 1);
    assert_eq!(record["map"]["target_budget"], 4);
    assert_eq!(record["map"]["x_vertices"], serde_json::json!([5, 6]));
    assert_eq!(record["map"]["expected_connectivity"], 2);
    assert_eq!(record["check"]["status"], "passed");

    // The emitted instance re-parses, and the --output copy matches it.
    let embedded = record["instance"].as_str().unwrap();
    let parsed = parse_instance(embedded).expect("reduced instance re-parses");
    assert_eq!(parsed.kind(), "cvs");
    assert_eq!(std::fs::read_to_string(&reduced_path).unwrap(), embedded);

    // Solving the reduced instance confirms the record's own check.
    let solved = stcvs(&["solve", reduced_path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(code_of(&solved), 0);
    assert_eq!(json_of(&solved)["size"], 4);
}

#[test]
fn oversized_reductions_skip_the_check() {
    let dir = TempDir::new().unwrap();
    let mut text = String::from("p gsteiner 17 16\ng 1 0\ng 2 16\n");
    for v in 0..16 {
        text += &format!("e {v} {}\n", v + 1);
    }
    let file = instance_file(&dir, "long.gst", &text);
    let out = stcvs(&["reduce", file.to_str().unwrap(), "--check", "--format", "json"]);
    assert_eq!(code_of(&out), 0);
    let record = json_of(&out);
    assert_eq!(record["check"]["status"], "skipped");
    assert_eq!(record["map"]["source_budget"], Value::Null);
    assert_eq!(record["map"]["target_budget"], Value::Null);
}

#[test]
fn split_reduction_checks_the_tight_translation() {
    // A split graph: clique {0, 1, 2} plus independent {3, 4} attached.
    let dir = TempDir::new().unwrap();
    let file = instance_file(
        &dir,
        "split.steiner",
        "p steiner 5 5\nR 3 4\ne 0 1\ne 0 2\ne 1 2\ne 0 3\ne 1 4\n",
    );
    let out = stcvs(&["reduce", file.to_str().unwrap(), "--check", "--format", "json"]);
    assert_eq!(code_of(&out), 0);
    let record = json_of(&out);
    assert_eq!(record["map"]["construction"], "split");
    assert_eq!(record["check"]["status"], "passed");
    let detail = record["check"]["detail"].as_str().unwrap();
    assert!(detail.contains("no induced cycle"), "{detail}");
}

#[test]
fn force_runs_a_method_past_its_recognizer() {
    // A four-hole with pendant terminals: not chordal, but the cut vertex
    // {0} is trivially a clique, so the forced chordal method stays sound.
    let dir = TempDir::new().unwrap();
    let file = instance_file(
        &dir,
        "holecut.cvs",
        "p cvs 6 6\ns 4\nt 5\ne 0 1\ne 1 2\ne 2 3\ne 0 3\ne 0 4\ne 2 5\n",
    );
    let refused = stcvs(&["solve", file.to_str().unwrap(), "--method", "chordal"]);
    assert_eq!(code_of(&refused), 2);
    let stderr = String::from_utf8(refused.stderr).unwrap();
    assert!(stderr.contains("rerun with --force"), "{stderr}");

    let forced = stcvs(&[
        "solve",
        file.to_str().unwrap(),
        "--method",
        "chordal",
        "--force",
        "--format",
        "json",
    ]);
    assert_eq!(code_of(&forced), 0);
    let record = json_of(&forced);
    assert_eq!(record["size"], 1);
    assert_eq!(record["optimality"], "exact");
    assert_eq!(record["recognizers"]["chordal"], false);
}

#[test]
fn suite_needs_at_least_one_instance() {
    let out = stcvs(&["suite", "--instances", "0"]);
    assert_eq!(code_of(&out), 2);
}

#[test]
fn an_injected_mutant_is_caught_and_its_counterexample_reproduces() {
    let out = stcvs(&[
        "suite",
        "--seed",
        "7",
        "--instances",
        "4",
        "--max-n",
        "8",
        "--inject-mutant",
        "--format",
        "json",
    ]);
    assert_eq!(code_of(&out), 1);
    let record = json_of(&out);
    assert_eq!(record["mutant"], true);
    assert_eq!(record["all_passed"], false);
    let ce = &record["counterexample"];
    assert_eq!(ce["property"], "oracle-soundness");

    // The serialized counterexample re-parses and replays: the planted
    // defect trips on it, the honest check does not.
    let parsed = parse_instance(ce["instance"].as_str().unwrap()).expect("re-parses");
    let instance = to_suite_instance(parsed);
    let planted = recheck("oracle-soundness", &instance, Some(Mutant::OffByOneOptimum)).unwrap();
    assert!(matches!(planted, CheckOutcome::Violation(_)));
    let honest = recheck("oracle-soundness", &instance, None).unwrap();
    assert_eq!(honest, CheckOutcome::Pass);
}

#[test]
fn identical_runs_differ_only_in_wall_time() {
    let strip = |out: &Output| -> Vec<String> {
        String::from_utf8(out.stdout.clone())
            .unwrap()
            .lines()
            .filter(|line| !line.contains("wall_time_ms"))
            .map(str::to_owned)
            .collect()
    };
    let args =
        ["suite", "--seed", "11", "--instances", "6", "--max-n", "9", "--format", "json"];
    let first = stcvs(&args);
    let second = stcvs(&args);
    assert_eq!(code_of(&first), 0);
    assert_eq!(strip(&first), strip(&second));
    assert!(!strip(&first).is_empty());
}
