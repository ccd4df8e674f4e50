use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spreadsplit"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, body: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, body).unwrap();
    p.to_str().unwrap().to_string()
}

fn json(args: &[&str]) -> (Value, i32) {
    let mut a = args.to_vec();
    a.extend(["--json", "-"]);
    let o = run(&a);
    (serde_json::from_slice(&o.stdout).expect("valid json"), o.status.code().unwrap())
}

fn strip_timing(v: &mut Value) {
    match v {
        Value::Object(m) => {
            m.remove("timing_ms");
            m.values_mut().for_each(strip_timing);
        }
        Value::Array(a) => a.iter_mut().for_each(strip_timing),
        _ => {}
    }
}

#[test]
fn toric345_has_three_binomials() {
    let o = run(&["family", "toric345"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    let gens: Vec<&str> = text.lines().filter(|l| !l.contains(':')).collect();
    assert_eq!(gens, ["y^2 - x*z", "x^2*y - z^2", "x^3 - y*z"]);
}

#[test]
fn family_output_round_trips_through_gb() {
    let dir = tempfile::tempdir().unwrap();
    let first = stdout(&run(&["family", "toric345"]));
    let f = write(dir.path(), "t.txt", &first);
    let again = run(&["gb", &f]);
    assert_eq!(again.status.code(), Some(0));
    assert_eq!(stdout(&again), first);
}

#[test]
fn kernel_of_map_file() {
    let dir = tempfile::tempdir().unwrap();
    let m = write(dir.path(), "m.txt", "source: x, y, z\ntarget: t\nx -> t^3\ny -> t^4\nz -> t^5\n");
    let o = run(&["kernel", "--map", &m]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).ends_with("y^2 - x*z\nx^2*y - z^2\nx^3 - y*z\n"));
}

#[test]
fn membership_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let f = write(dir.path(), "i.txt", "vars: x, y\nx^2\nx*y\n");
    assert_eq!(run(&["member", "x^3 + x*y^5", &f]).status.code(), Some(0));
    assert_eq!(run(&["member", "x", &f]).status.code(), Some(1));
    assert_eq!(run(&["radical-member", "x", &f]).status.code(), Some(0));
    assert_eq!(run(&["radical-member", "y", &f]).status.code(), Some(1));
    let nf = run(&["nf", "x^2 + y^3", &f]);
    assert_eq!(stdout(&nf).trim(), "y^3");
}

#[test]
fn verify_thm51_small_case() {
    let (v, code) = json(&["verify", "thm51", "--m", "3", "--v", "2,1,1", "--e", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["status"], "pass");
    assert_eq!(v["summary"]["embedded_count"], 2);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["command"], "verify thm51");
}

#[test]
fn verify_prop33_identities() {
    let (v, code) = json(&["verify", "prop33"]);
    assert_eq!(code, 0);
    assert_eq!(v["summary"]["identities_passed"], "21/21");
}

#[test]
fn json_is_stable_apart_from_timing() {
    let args = ["verify", "thm51", "--m", "3", "--v", "1,2,1", "--seed", "7"];
    let (mut a, _) = json(&args);
    let (mut b, _) = json(&args);
    strip_timing(&mut a);
    strip_timing(&mut b);
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    assert_eq!(a["seed"], 7);
    for key in ["tool", "version", "inputs", "field", "order", "checks", "summary", "engine"] {
        assert!(a.get(key).is_some(), "missing {key}");
    }
}

#[test]
fn json_file_output() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let o = run(&["family", "toric345", "--json", out.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(out).unwrap()).unwrap();
    assert_eq!(v["checks"][0]["data"]["generators"].as_array().unwrap().len(), 3);
}

#[test]
fn usage_errors_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write(dir.path(), "bad.txt", "vars: x, y\nx + y\nx + w\n");
    let o = run(&["gb", &bad]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("3:1: unknown variable `w`"));
    assert_eq!(run(&["gb", "/nonexistent/file"]).status.code(), Some(2));
    assert_eq!(run(&["family", "im"]).status.code(), Some(2));
    assert_eq!(run(&["--field", "fp:12", "family", "toric345"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "thm51", "--m", "3", "--v", "2,1"]).status.code(), Some(2));
}

#[test]
fn budget_exhaustion_exits_3() {
    let (v, code) = json(&["verify", "prop33", "--budget-pairs", "1"]);
    assert_eq!(code, 3);
    assert_eq!(v["status"], "budget-exceeded");
}

#[test]
fn field_and_order_overrides() {
    let (v, code) = json(&["family", "toric345", "--field", "q", "--order", "lex"]);
    assert_eq!(code, 0);
    assert_eq!(v["field"], "q");
    assert_eq!(v["order"], "lex");
    assert_eq!(v["checks"][0]["data"]["generators"].as_array().unwrap().len(), 5);
}

#[test]
fn certify_and_monomial_ass() {
    let dir = tempfile::tempdir().unwrap();
    let i = write(dir.path(), "i.txt", "vars: x, y\nx^2\nx*y\n");
    let p = write(dir.path(), "p.txt", "vars: x, y\nx\ny\n");
    let found = run(&["certify", "--ideal", &i, "--prime", &p]);
    assert_eq!(found.status.code(), Some(0));
    assert!(stdout(&found).contains("status: verified"));
    let refuted = run(&["certify", "--ideal", &i, "--prime", &p, "--witness", "y"]);
    assert_eq!(refuted.status.code(), Some(1));

    let (v, code) = json(&["ass", "monomial", &i]);
    assert_eq!(code, 0);
    assert_eq!(v["summary"]["ass_count"], 2);
    assert_eq!(v["summary"]["embedded_count"], 1);
}

#[test]
fn split_and_spread() {
    let dir = tempfile::tempdir().unwrap();
    let mono = write(dir.path(), "m.txt", "vars: a, b, c\na^2*b^2*c\nb^4\na*b^3\na^3*b\na^4\n");
    let o = run(&["spread", "--kind", "monomial", "--params", "c:3", &mono]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("a^2*b^2*c_3\n"));
    let o = run(&["split", "--spec", "c:2", &mono]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).starts_with("vars: a, b, c_1, c_2\n"));
    assert_eq!(run(&["split", "--spec", "c:", &mono]).status.code(), Some(2));
}
