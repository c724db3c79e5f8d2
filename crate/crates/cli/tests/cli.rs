use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_spherewidth")).args(args).output().unwrap()
}

fn run_stdin(args: &[&str], input: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_spherewidth"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap()
}

#[test]
fn generate_echoes_parameters() {
    let out = run(&["generate", "quarter-disk", "--radius", "0.8"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["version"], 1);
    assert_eq!(v["spec"]["kind"], "quarter_disk");
    assert_eq!(v["spec"]["radius"], 0.8);

    let out = run(&["generate", "reuleaux", "--n", "3", "--width", "1.8", "--label", "r3"]);
    assert_eq!(out.status.code(), Some(0));
    let m = run_stdin(&["measure", "-"], std::str::from_utf8(&out.stdout).unwrap());
    assert_eq!(json(&m)["constant_width"], true);
}

#[test]
fn generate_random_is_deterministic() {
    let args = ["generate", "random", "--cap", "0.4", "--points", "12", "--seed", "7"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    assert_eq!(json(&a)["metadata"]["seed"], 7);
    assert_ne!(a.stdout, run(&["generate", "random", "--cap", "0.4", "--points", "12", "--seed", "8"]).stdout);
}

#[test]
fn generate_rejects_bad_parameters() {
    for args in [
        &["generate", "disk", "--radius", "2"][..],
        &["generate", "regular-odd-gon", "--n", "4", "--thickness", "0.5"],
        &["generate", "isosceles", "--arm", "1.0", "--base", "0.5"],
        &["generate", "random", "--cap", "0.4", "--points", "2"],
        &["generate", "disk", "--radius", "abc"],
        &["generate", "disk", "--radius", "0.3", "--center", "0,0,0"],
    ] {
        let out = run(args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert!(out.stdout.is_empty());
        assert_eq!(String::from_utf8_lossy(&out.stderr).trim().lines().count().min(1), 1);
    }
}

#[test]
fn measure_examples() {
    let q = run(&["generate", "quarter-disk", "--radius", "1.0"]);
    let v = json(&run_stdin(&["measure", "-"], std::str::from_utf8(&q.stdout).unwrap()));
    assert!((v["thickness"].as_f64().unwrap() - 1.0).abs() < 1e-11);
    assert!((v["diameter"].as_f64().unwrap() - (1f64.cos().powi(2)).acos()).abs() < 1e-11);
    assert_eq!(v["reducedness"]["pass"], true);

    let d = run(&["generate", "disk", "--radius", "0.4"]);
    let v = json(&run_stdin(&["measure", "-"], std::str::from_utf8(&d.stdout).unwrap()));
    assert_eq!(v["thickness"], 0.8);
    assert_eq!(v["diameter"], 0.8);
    assert_eq!(v["constant_width"], true);

    let t = run(&["generate", "isosceles", "--arm", "1.7", "--base", "1.0"]);
    let v = json(&run_stdin(&["measure", "-"], std::str::from_utf8(&t.stdout).unwrap()));
    assert_eq!(v["realizing_pairs"][0]["kind"], "vertex-edge");
    assert!(v["diameter"].as_f64().unwrap() > 1.7);
    assert_eq!(v["reducedness"]["pass"], false);
    assert!(v.get("grid_check").is_none());

    let p = json(&run_stdin(&["measure", "-", "--paranoid"], std::str::from_utf8(&t.stdout).unwrap()));
    assert_eq!(p["grid_check"]["consistent"], true);
    let gap = p["diameter"].as_f64().unwrap() - p["grid_check"]["sampled_diameter"].as_f64().unwrap();
    assert!((0.0..1e-4).contains(&gap), "{gap}");
}

#[test]
fn measure_exit_codes() {
    assert_eq!(run_stdin(&["measure", "-"], "{").status.code(), Some(2));
    assert_eq!(
        run_stdin(&["measure", "-"], r#"{"version":1,"spec":{"kind":"disk","radius":0.3},"x":1}"#).status.code(),
        Some(2)
    );
    assert_eq!(run(&["measure", "/nonexistent/body.json"]).status.code(), Some(2));
    // parses, but the spec is geometrically impossible
    assert_eq!(
        run_stdin(&["measure", "-"], r#"{"version":1,"spec":{"kind":"disk","radius":1.6}}"#).status.code(),
        Some(3)
    );
    // a reflex vertex
    let bent = r#"{"version":1,"body":{"start":[0,0,1],"edges":[
        {"kind":"geodesic","to":[0.3,0,0.95]},
        {"kind":"geodesic","to":[0.05,0.05,0.99]},
        {"kind":"geodesic","to":[0,0.3,0.95]},
        {"kind":"geodesic","to":[0,0,1]}]}}"#;
    assert_eq!(run_stdin(&["measure", "-"], bent).status.code(), Some(3));
}

#[test]
fn explicit_body_documents_round_trip() {
    let r = run(&["generate", "random", "--cap", "0.6", "--points", "20", "--seed", "3"]);
    let m1 = run_stdin(&["measure", "-"], std::str::from_utf8(&r.stdout).unwrap());
    let m2 = run_stdin(&["measure", "-"], std::str::from_utf8(&r.stdout).unwrap());
    assert_eq!(m1.status.code(), Some(0));
    assert_eq!(m1.stdout, m2.stdout);
}

#[test]
fn verify_is_deterministic_and_checks_trials() {
    let a = run(&["verify", "lemma2", "--trials", "100", "--seed", "1"]);
    let b = run(&["verify", "lemma2", "--trials", "100", "--seed", "1", "--threads", "3"]);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
    let v = json(&a);
    for key in ["property", "trials", "failures", "worst_violation", "seed", "witness"] {
        assert!(v["reports"][0].get(key).is_some(), "{key}");
    }
    assert_eq!(run(&["verify", "lemma2", "--trials", "0"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "lemma3"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "lemma1", "--tol", "nonsense=1"]).status.code(), Some(2));
    assert_eq!(run(&["verify", "lemma1", "--tol", "lemma1=-1"]).status.code(), Some(2));
}

#[test]
fn tolerance_override_changes_the_verdict() {
    let base = ["verify", "theorem", "--trials", "50", "--seed", "1", "--bound-shift", "0.01"];
    assert_eq!(run(&base).status.code(), Some(1));
    let loose: Vec<&str> = base.iter().copied().chain(["--tol", "theorem=0.1"]).collect();
    assert_eq!(run(&loose).status.code(), Some(0));
}

#[test]
fn injected_bug_is_reported() {
    let out = run(&["verify", "theorem", "--trials", "50", "--seed", "1", "--bound-shift", "0.01"]);
    assert_eq!(out.status.code(), Some(1));
    let v = json(&out);
    assert_eq!(v["passed"], false);
    let r = &v["reports"][0];
    assert!(r["failures"].as_u64().unwrap() > 0);
    assert!(r["worst_violation"].as_f64().unwrap() > 0.0);
    assert!(r["witness"]["candidate"].get("spec").is_some());
}

#[test]
fn render_writes_deterministic_svg() {
    let dir = tempfile::tempdir().unwrap();
    let doc = dir.path().join("q.json");
    std::fs::write(&doc, run(&["generate", "quarter-disk", "--radius", "0.8"]).stdout).unwrap();
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    for out in [&a, &b] {
        let o = run(&["render", doc.to_str().unwrap(), "--out", out.to_str().unwrap(), "--overlay", "minimal-lunes"]);
        assert_eq!(o.status.code(), Some(0));
    }
    let svg = std::fs::read_to_string(&a).unwrap();
    assert_eq!(svg, std::fs::read_to_string(&b).unwrap());
    assert!(svg.starts_with("<svg") && svg.contains("viewBox=\"0 0 1000 1000\""));
    assert!(svg.contains("id=\"minimal-lunes\""));
    let body = svg.split("id=\"body\"").nth(1).unwrap();
    assert_eq!(body.matches(" L ").count(), 2);
    assert_eq!(body.matches(" A ").count(), 1);

    let o = run(&["render", doc.to_str().unwrap(), "--out", "/nonexistent/dir/x.svg"]);
    assert_eq!(o.status.code(), Some(4));
    let o = run(&["render", doc.to_str().unwrap(), "--out", a.to_str().unwrap(), "--view", "0,0,0"]);
    assert_eq!(o.status.code(), Some(2));
}
