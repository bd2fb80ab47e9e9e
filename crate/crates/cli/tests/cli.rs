use std::fs;
use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use tempfile::TempDir;

fn root() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../..")
}

fn fixture(rel: &str) -> String {
    root().join("fixtures").join(rel).display().to_string()
}

fn qstar(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qstar")).args(args).output().unwrap()
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn save(dir: &TempDir, name: &str, o: &Output) -> String {
    assert_eq!(code(o), 0, "{}", String::from_utf8_lossy(&o.stderr));
    let p = dir.path().join(name);
    fs::write(&p, &o.stdout).unwrap();
    p.display().to_string()
}

#[test]
fn fixture_passes_fourteen_groups() {
    let o = qstar(&["algebra", "check", &fixture("qmv7.alg")]);
    assert_eq!(code(&o), 0);
    let out = stdout(&o);
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS QMV*")).count(), 14);
    assert_eq!(out.lines().count(), 14);

    let j = qstar(&["--json", "algebra", "check", &fixture("qmv7.alg")]);
    let recs: Vec<serde_json::Value> = stdout(&j).lines().map(|l| serde_json::from_str(l).unwrap()).collect();
    assert_eq!(recs.len(), 14);
    assert!(recs.iter().all(|r| r["verdict"] == "pass"));
    assert_eq!(recs[4]["group"], "QMV*5");
    assert_eq!(recs[4]["laws"].as_array().unwrap().len(), 4);
}

#[test]
fn mutated_table_fails_with_counterexample() {
    let o = qstar(&["algebra", "check", &fixture("qmv7_mutated.alg")]);
    assert_eq!(code(&o), 1);
    let out = stdout(&o);
    assert!(out.contains("FAIL QMV*1: QMV*1 at x=a, y=d"), "{out}");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&qstar(&["bogus"])), 2);
    assert_eq!(code(&qstar(&["model", "check", "--model", "r"])), 2);
    assert_eq!(code(&qstar(&["model", "check", "--model", "q", "--grid", "2"])), 2);
    assert_eq!(code(&qstar(&["algebra", "check", "no/such/file.alg"])), 2);
    assert_eq!(code(&qstar(&["formula", "eval", "p ->", "--val", "p=0,0"])), 2);
    assert_eq!(code(&qstar(&["formula", "eval", "p", "--val", "p=2,0"])), 2);
    let dir = TempDir::new().unwrap();
    let bad = dir.path().join("bad.prf");
    fs::write(&bad, "1. p -> p ; frobnicate\n").unwrap();
    assert_eq!(code(&qstar(&["proof", "check", bad.to_str().unwrap()])), 2);
    assert_eq!(code(&qstar(&["--help"])), 0);
}

#[test]
fn proof_check_reports_theorem() {
    let o = qstar(&["proof", "check", &fixture("proofs/refl.prf")]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).starts_with("theorem p -> p\n"));

    // a wrong citation is a failed check, not a usage error
    let dir = TempDir::new().unwrap();
    let text = fs::read_to_string(fixture("proofs/refl.prf")).unwrap();
    let broken = text.replacen("r2 5", "r2 4", 1);
    assert_ne!(broken, text);
    let p = dir.path().join("broken.prf");
    fs::write(&p, broken).unwrap();
    let o = qstar(&["proof", "check", p.to_str().unwrap()]);
    assert_eq!(code(&o), 1, "{}", stdout(&o));
    assert!(stdout(&o).starts_with("FAIL "));
}

#[test]
fn expand_then_check() {
    let dir = TempDir::new().unwrap();
    let o = qstar(&["proof", "expand", "--combinator", "double-neg", "--arg", "q -> r"]);
    let p = save(&dir, "dn.prf", &o);
    let c = qstar(&["proof", "check", &p]);
    assert_eq!(code(&c), 0);
    let out = stdout(&c);
    assert!(out.contains("theorem (q -> r) -> ~~(q -> r)\n"), "{out}");
    assert!(out.contains("theorem ~~(q -> r) -> q -> r\n"), "{out}");

    let o = qstar(&["proof", "expand", "--combinator", "cong-neg", "--inputs", &p]);
    let n = save(&dir, "neg.prf", &o);
    let out = stdout(&qstar(&["proof", "check", &n]));
    assert!(out.contains("theorem ~(q -> r) -> ~~~(q -> r)\n"), "{out}");
}

#[test]
fn algebra_constructions_round_trip_through_files() {
    let dir = TempDir::new().unwrap();
    let alg = fixture("qmv7.alg");
    let w = save(&dir, "w.alg", &qstar(&["algebra", "transform", &alg, "--to", "qw"]));
    assert_eq!(code(&qstar(&["algebra", "check", &w])), 0);
    assert_eq!(code(&qstar(&["algebra", "props", &w])), 0);
    let back = qstar(&["algebra", "transform", &w, "--to", "qmv"]);
    let same = qstar(&["algebra", "transform", &alg, "--to", "qmv"]);
    assert_eq!(stdout(&back), stdout(&same));

    let mu = save(&dir, "mu.alg", &qstar(&["algebra", "quotient", &alg, "--cong", "mu"]));
    let checked = qstar(&["algebra", "check", &mu]);
    assert_eq!(code(&checked), 0);
    let mv = save(&dir, "mv.alg", &qstar(&["algebra", "transform", &mu, "--to", "mv"]));
    assert_eq!(code(&qstar(&["algebra", "check", &mv])), 0);
    let whole = qstar(&["algebra", "filter", &mv, "--set", "a,b~c,0,d~e,1"]);
    assert_eq!(code(&whole), 0, "{}", stdout(&whole));
    assert_eq!(code(&qstar(&["algebra", "filter", &mv, "--set", "1"])), 1);

    let tau = save(&dir, "tau.alg", &qstar(&["algebra", "quotient", &alg, "--cong", "a,b,0,e,1|c|d"]));
    assert!(fs::read_to_string(&tau).unwrap().contains("elements: "));
    assert_eq!(code(&qstar(&["algebra", "check", &tau])), 0);
    // not compatible with the operations
    assert_eq!(code(&qstar(&["algebra", "quotient", &alg, "--cong", "a,b|c|0,d,e,1"])), 2);

    let prod = save(&dir, "prod.alg", &qstar(&["algebra", "product", &mu, &tau]));
    assert_eq!(code(&qstar(&["algebra", "check", &prod])), 0);

    let cs = qstar(&["algebra", "congruences", &alg]);
    assert_eq!(stdout(&cs).lines().count(), 4);
    let e = qstar(&["algebra", "embed", &alg]);
    assert_eq!(code(&e), 0);
    assert!(stdout(&e).contains("product size: 15\n"));
}

#[test]
fn model_and_formula_evaluation() {
    // clamp(-1/4 - 1/2) = -3/4, second coordinate dropped
    let o = qstar(&["model", "eval", "--model", "rstar-qw", "--op", "arrow", "--args", "1/2,1/3;-1/4,1"]);
    assert_eq!(stdout(&o), "-3/4,0\n");
    let o = qstar(&["model", "eval", "--model", "r", "--op", "plus", "--args", "3/4;1/2"]);
    assert_eq!(stdout(&o), "1\n");
    let o = qstar(&["model", "eval", "--model", "r", "--op", "arrow", "--args", "3/4;1/2"]);
    assert_eq!(code(&o), 2);

    let o = qstar(&["formula", "eval", "p -> q", "--val", "p=1/2,1/3", "--val", "q=1/5,-1"]);
    assert_eq!(stdout(&o), "-3/10,0\n");
    let o = qstar(&["formula", "eval", "q -> p", "--val", "p=1/2,1/3", "--val", "q=1/5,-1"]);
    assert_eq!(stdout(&o), "3/10,0 (designated)\n");

    let o = qstar(&["formula", "falsify", "p", "--grid", "2"]);
    assert_eq!(code(&o), 1);
    assert_eq!(stdout(&o), "COUNTEREXAMPLE p AT p=-1,-1 VALUE -1,-1\n");
    let o = qstar(&["formula", "falsify", "p -> p", "--random", "500", "--seed", "3"]);
    assert_eq!(code(&o), 0);
}

#[test]
fn model_check_samples_every_axiom() {
    let o = qstar(&["model", "check", "--model", "rstar-qw", "--grid", "1"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).lines().all(|l| l.starts_with("PASS QW*")));
    let o = qstar(&["--json", "model", "check", "--model", "r", "--random", "200"]);
    assert_eq!(code(&o), 0);
    assert_eq!(stdout(&o).lines().count(), 12);
}

fn fuzz(args: &[&str]) -> Output {
    let mut all = vec!["--json", "fuzz", "soundness"];
    all.extend_from_slice(args);
    qstar(&all)
}

#[test]
fn fuzz_is_deterministic_and_catches_lax_r2() {
    let a = fuzz(&["--seed", "5", "--proofs", "300"]);
    let b = fuzz(&["--seed", "5", "--proofs", "300", "--jobs", "1"]);
    assert_eq!(code(&a), 0);
    assert_eq!(a.stdout, b.stdout);
    let lax = fuzz(&["--seed", "5", "--lax-r2", "--proofs", "1500"]);
    assert_eq!(code(&lax), 1);
    let rec: serde_json::Value = serde_json::from_str(stdout(&lax).lines().last().unwrap()).unwrap();
    assert!(!rec["violations"].as_array().unwrap().is_empty());
}

fn run_fixtures(dir: &Path) -> Output {
    qstar(&["fixtures", "run", "--dir", dir.to_str().unwrap(), "--proofs", "300", "--valuations", "200"])
}

#[test]
fn fixtures_run_passes_and_notices_damage() {
    let o = run_fixtures(&root().join("fixtures"));
    assert_eq!(code(&o), 0, "{}", stdout(&o));
    let out = stdout(&o);
    let proofs = fs::read_dir(root().join("fixtures/proofs")).unwrap().count();
    assert_eq!(out.lines().filter(|l| l.starts_with("PASS proof ")).count(), proofs);

    // a copy whose fixture algebra is the mutated one
    let dir = TempDir::new().unwrap();
    fs::create_dir(dir.path().join("proofs")).unwrap();
    fs::copy(root().join("fixtures/proofs/refl.prf"), dir.path().join("proofs/refl.prf")).unwrap();
    fs::copy(root().join("fixtures/qmv7_mutated.alg"), dir.path().join("qmv7.alg")).unwrap();
    fs::copy(root().join("fixtures/qmv7_mutated.alg"), dir.path().join("qmv7_mutated.alg")).unwrap();
    let o = run_fixtures(dir.path());
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL QMV*1"));
}
