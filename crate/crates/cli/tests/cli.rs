use std::path::Path;
use std::process::{Command, Output};

fn stokes(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_stokes"))
        .args(args)
        .current_dir(dir)
        .env_remove("STOKES_CORPUS_DIR")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    assert!(o.status.success(), "stderr: {}", String::from_utf8_lossy(&o.stderr));
    String::from_utf8(o.stdout.clone()).unwrap()
}

// two junctions, n = 6, sub = {0,3}
const STAR_SPLIT: &str = r#"{
  "format": "stokes-sgraph",
  "version": 1,
  "content": {
    "config": {"n": 6, "subdominant": [0, 3]},
    "vertices": [
      {"id": 0, "rotation": ["r0", "r1", "r2", "v1"]},
      {"id": 1, "rotation": ["v0", "r3", "r4", "r5"]}
    ]
  }
}"#;

#[test]
fn schroeder_prints_the_count() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(stdout(&stokes(&["schroeder", "5"], dir.path())).trim(), "197");
}

#[test]
fn components_single_class_without_alternation() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout(&stokes(&["components", "--n", "6", "--sub", "0,3", "--bound", "1"], dir.path()));
    assert!(out.starts_with("1 classes"), "{out}");
}

#[test]
fn components_alternating_keyed_by_face_count() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout(&stokes(&["components", "--n", "6", "--sub", "0,2,4", "--bound", "1"], dir.path()));
    let keys: Vec<&str> = out.lines().skip(1).map(|l| l.split_whitespace().next().unwrap()).collect();
    assert_eq!(keys, ["k=0", "k=1", "k=2", "k=3"]);
}

#[test]
fn enumerate_writes_into_corpus_dir() {
    let dir = tempfile::tempdir().unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_stokes"))
        .args(["enumerate", "--n", "5", "--sub", "0,2", "--max-chain", "1"])
        .env("STOKES_CORPUS_DIR", dir.path())
        .output()
        .unwrap();
    assert!(o.status.success());
    let text = std::fs::read_to_string(dir.path().join("n5_s0-2_c1.corpus")).unwrap();
    assert!(text.contains("\"format\": \"stokes-corpus\""));
}

#[test]
fn act_then_inverse_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("g.sgraph"), STAR_SPLIT).unwrap();
    stdout(&stokes(&["act", "g.sgraph", "1^+2", "-o", "h.sgraph"], dir.path()));
    stdout(&stokes(&["act", "h.sgraph", "1^-2", "-o", "back.sgraph"], dir.path()));
    let orig = stdout(&stokes(&["contract", "g.sgraph", "--target", "ivy"], dir.path()));
    let back = stdout(&stokes(&["contract", "back.sgraph", "--target", "ivy"], dir.path()));
    assert_eq!(orig.lines().last(), back.lines().last());
}

#[test]
fn odd_exponent_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("g.sgraph"), STAR_SPLIT).unwrap();
    let o = stokes(&["act", "g.sgraph", "1^+1"], dir.path());
    assert!(!o.status.success());
}

#[test]
fn contract_reports_word_and_form() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("g.sgraph"), STAR_SPLIT).unwrap();
    let out = stdout(&stokes(&["contract", "g.sgraph"], dir.path()));
    assert!(out.starts_with("word "));
    assert!(out.contains("canonical n6;s0,3;0:"));
}

#[test]
fn export_dot() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("g.sgraph"), STAR_SPLIT).unwrap();
    let out = stdout(&stokes(&["export", "g.sgraph"], dir.path()));
    assert!(out.starts_with("graph"));
    let cells = stdout(&stokes(&["export", "g.sgraph", "--window", "1"], dir.path()));
    assert!(cells.starts_with("digraph"));
}

#[test]
fn loops_action_and_lift() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(stdout(&stokes(&["loops", "--n", "6", "--word", "2^+1"], dir.path())).trim(), "(a,b,cdC,c,e,f)");
    let lift = stdout(&stokes(&["loops", "--n", "6", "--lift", "2", "--project", "0,3"], dir.path()));
    assert_eq!(lift.trim(), "3^-1,2^+1,3^+1");
}

#[test]
fn parse_errors_name_the_field() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("bad.sgraph"), STAR_SPLIT.replace("\"r4\"", "\"q4\"")).unwrap();
    let o = stokes(&["orbit", "bad.sgraph"], dir.path());
    assert!(!o.status.success());
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("content.vertices[1].rotation[2]"), "{err}");
}

#[test]
fn verify_single_suite() {
    let dir = tempfile::tempdir().unwrap();
    let out = stdout(&stokes(&["verify", "loops"], dir.path()));
    assert!(out.contains("PASS"));
    let o = stokes(&["verify", "nonsense"], dir.path());
    assert!(!o.status.success());
}
