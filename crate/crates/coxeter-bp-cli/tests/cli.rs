use std::process::Command;

use coxeter_bp::{CoxeterSystem, GenSet};

fn coxbp(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_coxbp")).args(args).output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn poset_json_matches_library() {
    let (code, stdout) = coxbp(&["--json", "bp", "--type", "A", "--rank", "3", "--w", "4231", "--poset"]);
    assert_eq!(code, 0);
    let sys = CoxeterSystem::build("A", Some(3)).unwrap();
    let poset = sys.bp_poset(&sys.from_permutation(&[4, 2, 3, 1]).unwrap()).unwrap();
    assert_eq!(stdout.trim_end(), serde_json::to_string_pretty(&poset.to_json()).unwrap());
}

#[test]
fn interval_json_matches_library() {
    let (code, stdout) = coxbp(&["--json", "interval", "--type", "B", "--rank", "2", "--w", "1,2,1"]);
    assert_eq!(code, 0);
    let sys = CoxeterSystem::build("B", Some(2)).unwrap();
    let w = sys.element_from_labels(&[1, 2, 1]).unwrap();
    let iv = sys.interval(&w, GenSet::EMPTY).unwrap();
    assert_eq!(stdout.trim_end(), serde_json::to_string_pretty(&iv.to_json(&sys)).unwrap());
}

#[test]
fn bp_verdicts() {
    let (code, stdout) = coxbp(&["bp", "--type", "affineC2", "--w", "srstrsr", "--J", "rs", "--method", "def"]);
    assert_eq!((code, stdout.trim()), (0, "false"));
    let (code, stdout) = coxbp(&["bp", "--type", "A", "--rank", "3", "--w", "1234", "--J", "1", "--method", "jstar"]);
    assert_eq!((code, stdout.trim()), (0, "true"));
}

#[test]
fn verify_only_counterexample() {
    let (code, stdout) = coxbp(&["verify-paper", "--only", "c2-counterexample"]);
    assert_eq!(code, 0);
    assert!(stdout.starts_with("PASS c2-counterexample"));
    assert_eq!(stdout.lines().filter(|l| l.starts_with("PASS") || l.starts_with("FAIL")).count(), 1);
}

#[test]
fn bench_skips_naive_above_limit() {
    let (code, stdout) = coxbp(&["bench", "--n", "12", "--samples", "2", "--naive-limit", "10"]);
    assert_eq!(code, 0);
    assert!(stdout.contains("skipped"), "{stdout}");
}

#[test]
fn usage_errors_exit_2() {
    assert_eq!(coxbp(&["bp", "--type", "Q", "--rank", "3", "--w", "1"]).0, 2);
    assert_eq!(coxbp(&["verify-paper", "--only", "no-such-check"]).0, 2);
    assert_eq!(coxbp(&["rs", "--type", "A", "--rank", "2", "--w", "4231"]).0, 2);
}

#[test]
fn dot_export_is_written() {
    let path = std::env::temp_dir().join(format!("coxbp-{}.dot", std::process::id()));
    let p = path.to_str().unwrap();
    let (code, _) = coxbp(&["--dot", p, "interval", "--type", "A", "--rank", "2", "--w", "321"]);
    assert_eq!(code, 0);
    let dot = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(dot.matches("arrowhead=none").count(), 8);
}
