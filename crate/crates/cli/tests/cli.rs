use std::process::{Command, Output};

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_althecke")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

#[test]
fn tableaux_and_gdim() {
    let o = run(&["tableaux", "--n", "3"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().count(), 4);
    let o = run(&["gdim", "--n", "3", "--algebra", "A"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("1 + q + q^2"));
}

#[test]
fn blocks_json() {
    let o = run(&["blocks", "--n", "3", "--format", "json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v[0]["defect"], 1);
    assert_eq!(v[0]["classifier"], "indecomposable");
}

#[test]
fn basis_csv_and_check() {
    let o = run(&["basis", "--n", "3", "--format", "csv"]);
    assert!(o.status.success());
    assert!(stdout(&o).starts_with("lambda,s,t,primed,degree,z2degree"));
    let o = run(&["basis", "--n", "3", "--check"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("rank 6 of 6"));
}

#[test]
fn verify_exit_status_tracks_failures() {
    assert!(run(&["verify", "--n", "3"]).status.success());
    let o = run(&["verify", "--n", "4", "--suite", "RO"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("FAIL RO"));
    assert!(run(&["verify", "--n", "4", "--suite", "hash-intertwine"]).status.success());
}

#[test]
fn gram_and_specialize() {
    let o = run(&["gram", "--n", "3", "--target", "cyclotomic"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("PASS block"));
    let o = run(&["specialize", "--n", "3", "--target", "fp:3:1", "--word", "e(012) e(012)"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("field F_3"));
}

#[test]
fn guards_and_errors() {
    assert_eq!(run(&["verify", "--n", "6"]).status.code(), Some(2));
    assert_eq!(run(&["gdim", "--n", "7"]).status.code(), Some(2));
    assert_eq!(run(&["gram", "--n", "3", "--target", "fp:4"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "--suite", "nope"]).status.code(), Some(2));
    assert_eq!(run(&["tableaux", "--format", "csv"]).status.code(), Some(2));
    assert_eq!(run(&["gdim", "--e", "2"]).status.code(), Some(2));
}
