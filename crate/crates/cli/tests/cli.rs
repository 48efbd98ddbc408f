//! End-to-end tests driving the compiled binary: output shapes, exit
//! codes, and report determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn rhograph(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_rhograph"))
        .args(args)
        .env_remove("RHOGRAPH_JOBS")
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 stdout")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf8 stderr")
}

fn code(out: &Output) -> i32 {
    out.status.code().expect("exit code")
}

#[test]
fn family_output_feeds_back_into_rho() {
    let fam = rhograph(&["family", "star", "4"]);
    assert_eq!(code(&fam), 0);
    let g6 = stdout(&fam).trim().to_string();
    let rho = rhograph(&["rho", &g6, "--exact"]);
    assert_eq!(code(&rho), 0);
    let text = stdout(&rho);
    assert!(text.contains("rho: 2\n"), "{text}");
    assert!(text.contains("enclosure: [2, 2]"), "{text}");
    assert!(text.contains("charpoly: x^5 - 4*x^3"), "{text}");
    assert!(text.contains("largest root in ("), "{text}");
}

#[test]
fn five_cycle_radius_is_two() {
    let fam = rhograph(&["family", "cycle", "5"]);
    let g6 = stdout(&fam).trim().to_string();
    let rho = rhograph(&["rho", &g6]);
    assert_eq!(code(&rho), 0);
    assert!(stdout(&rho).contains("rho: 2\n"));
}

#[test]
fn malformed_graph6_is_a_usage_error() {
    let out = rhograph(&["rho", "@@@bad"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("invalid graph6"));
}

#[test]
fn undersized_family_parameter_is_rejected() {
    let out = rhograph(&["family", "cycle", "2"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("out of range"));
}

#[test]
fn splitting_a_degree_two_vertex_names_the_precondition() {
    let fam = rhograph(&["family", "cycle", "4"]);
    let g6 = stdout(&fam).trim().to_string();
    let out = rhograph(&["transform", "split", &g6, "--vertex", "0", "--x", "1", "--y", "3"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("DegreeTooSmall"), "{}", stderr(&out));
}

#[test]
fn splitting_a_star_center_decreases_the_radius() {
    let fam = rhograph(&["family", "star", "5"]);
    let g6 = stdout(&fam).trim().to_string();
    let out = rhograph(&[
        "transform", "split", &g6, "--vertex", "0", "--x", "1,2", "--y", "3,4,5",
    ]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("verdict: Less"), "{text}");
}

#[test]
fn subdividing_the_double_spider_keeps_the_radius() {
    let fam = rhograph(&["family", "tilde-d", "5"]);
    let g6 = stdout(&fam).trim().to_string();
    let out = rhograph(&["transform", "subdivide", &g6, "--edge", "0,1"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("verdict: Equal"), "{}", stdout(&out));
}

#[test]
fn missing_transform_flag_is_a_usage_error() {
    let out = rhograph(&["transform", "subdivide", "Ds_"]);
    assert_eq!(code(&out), 2);
    assert!(stderr(&out).contains("--edge"));
}

#[test]
fn witness_reports_the_case_and_slack() {
    let fam = rhograph(&["family", "star", "5"]);
    let g6 = stdout(&fam).trim().to_string();
    let out = rhograph(&["witness", &g6, "--vertex", "0", "--x", "1,2", "--y", "3,4,5"]);
    assert_eq!(code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("case: 2"), "{text}");
    assert!(text.contains("all nonnegative: true"), "{text}");
}

#[test]
fn enumerate_counts_connected_graphs() {
    let out = rhograph(&["enumerate", "5"]);
    assert_eq!(code(&out), 0);
    assert!(stdout(&out).contains("728 connected graphs on 5 vertices"));
}

#[test]
fn enumeration_cap_is_a_resource_error() {
    let out = rhograph(&["enumerate", "9"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn oversized_campaign_is_a_resource_error() {
    let out = rhograph(&["verify", "--max-n", "20"]);
    assert_eq!(code(&out), 3);
}

#[test]
fn unknown_theorem_is_a_usage_error() {
    let out = rhograph(&["verify", "--theorems", "nonsense"]);
    assert_eq!(code(&out), 2);
}

#[test]
fn small_campaign_writes_identical_reports() {
    let dir = std::env::temp_dir();
    let path_a: PathBuf = dir.join("rhograph-test-report-a.txt");
    let path_b: PathBuf = dir.join("rhograph-test-report-b.txt");
    let args = |path: &PathBuf| {
        vec![
            "verify".to_string(),
            "--max-n".into(),
            "4".into(),
            "--theorems".into(),
            "subdivision,lemma-deg4".into(),
            "--seed".into(),
            "42".into(),
            "--out".into(),
            path.display().to_string(),
        ]
    };
    let run_a = Command::new(env!("CARGO_BIN_EXE_rhograph"))
        .args(args(&path_a))
        .output()
        .unwrap();
    assert_eq!(run_a.status.code(), Some(0));
    let summary = String::from_utf8(run_a.stdout).unwrap();
    assert!(summary.contains("verified"), "{summary}");
    let run_b = Command::new(env!("CARGO_BIN_EXE_rhograph"))
        .args(args(&path_b))
        .output()
        .unwrap();
    assert_eq!(run_b.status.code(), Some(0));
    let a = std::fs::read(&path_a).unwrap();
    let b = std::fs::read(&path_b).unwrap();
    assert_eq!(a, b, "same seed must reproduce the report byte for byte");
    assert!(!a.is_empty());
    let _ = std::fs::remove_file(&path_a);
    let _ = std::fs::remove_file(&path_b);
}
