use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lie-orbits"))
        .args(args)
        .env_remove("LIE_ORBITS_DATA")
        .output()
        .expect("binary runs")
}

fn code(o: &Output) -> i32 {
    o.status.code().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn algebra_dimensions() {
    let o = run(&["algebra", "--type", "E7", "--orbit-dim-min", "--json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["min_orbit_projective_dim"], 33);
    let o = run(&["algebra", "--type", "F4", "--dim"]);
    assert!(stdout(&o).contains("dim F4 = 52"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(code(&run(&["roots", "--type", "Z3"])), 2);
    assert_eq!(code(&run(&["check", "pairing", "--type", "G2", "--diagram", "0,1,2"])), 2);
    assert_eq!(code(&run(&["check", "pairing", "--type", "G2", "--diagram", "0,3"])), 2);
    assert_eq!(code(&run(&["orbit", "info", "--type", "B3", "--partition", "2,1,1,1,1,1"])), 2);
    assert_eq!(code(&run(&["check", "exclusion", "--type", "B3", "--diagram", "0,1,0"])), 2);
    assert_eq!(code(&run(&["verify", "--only", "no-such-suite"])), 2);
    assert_eq!(code(&run(&["bogus"])), 2);
}

#[test]
fn pairing_verdicts_set_exit_code() {
    assert_eq!(code(&run(&["check", "pairing", "--type", "G2", "--diagram", "1,0"])), 0);
    let o = run(&["check", "pairing", "--type", "G2", "--diagram", "0,2", "--json"]);
    assert_eq!(code(&o), 1);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["status"], "fail");
    assert!(v["witness"]["N"].is_array() && v["witness"]["Q"].is_array());
}

#[test]
fn key_lemma_and_exclusion() {
    assert_eq!(code(&run(&["check", "key-lemma", "--type", "G2", "--diagram", "0,2"])), 1);
    assert_eq!(code(&run(&["check", "key-lemma", "--type", "G2", "--diagram", "1,0"])), 0);
    assert_eq!(code(&run(&["check", "exclusion", "--type", "F4", "--diagram", "0,1,1,0"])), 1);
    assert_eq!(code(&run(&["check", "exclusion", "--type", "F4", "--diagram", "0,0,1,2"])), 0);
}

#[test]
fn table_file_and_env_override() {
    assert_eq!(code(&run(&["check", "table"])), 0);
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("shared_orbits.tsv");
    std::fs::write(&path, "g\tg_prime\torbit\tdegree\nA2\tG2\t(3)\t3\nB4\tF4\t(2,2\t2\n").unwrap();
    let o = run(&["check", "table", "--file", path.to_str().unwrap()]);
    assert_eq!(code(&o), 2);
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    std::fs::write(&path, "g\tg_prime\torbit\tdegree\nA2\tG2\t(3)\t2\n").unwrap();
    let o = Command::new(env!("CARGO_BIN_EXE_lie-orbits"))
        .args(["verify", "--only", "table"])
        .env("LIE_ORBITS_DATA", dir.path())
        .output()
        .unwrap();
    assert_eq!(code(&o), 1);
    assert!(stdout(&o).contains("FAIL [table] row (A2, G2, (3), 2)"));
}

#[test]
fn orbit_commands() {
    let o = run(&["orbit", "list", "--type", "D4", "--poset", "--json"]);
    assert_eq!(code(&o), 0);
    let v: Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["orbits"].as_array().unwrap().len(), 12);
    let o = run(&["orbit", "info", "--type", "C3", "--partition", "2,2,1,1"]);
    assert!(stdout(&o).contains("dim 10"));
    assert!(stdout(&o).contains("pi1 order 2"));
    let o = run(&["model", "sp", "--n", "2", "--demo"]);
    assert_eq!(code(&o), 0);
    assert!(stdout(&o).contains("Kostant-Kirillov rank 4"));
}

#[test]
fn verify_is_deterministic_across_job_counts() {
    let args = ["verify", "--only", "g2-classification", "--only", "properties", "--only", "table", "--json"];
    let one = run(&[&args[..], &["--jobs", "1"]].concat());
    let four = run(&[&args[..], &["--jobs", "4"]].concat());
    assert_eq!(code(&one), 0);
    assert_eq!(one.stdout, four.stdout);
    let again = run(&[&args[..], &["--jobs", "1"]].concat());
    assert_eq!(one.stdout, again.stdout);
    let v: Value = serde_json::from_str(&stdout(&one)).unwrap();
    assert!(v["reports"].as_array().unwrap().iter().all(|r| r["status"] != "fail"));
}
