use std::path::PathBuf;
use std::process::{Command, Output};

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("tests/fixtures")
        .join(format!("{name}.toml"))
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_trivalent"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn eval(name: &str, extra: &[&str]) -> Output {
    let path = fixture(name);
    let mut args = vec!["eval", path.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

fn pair(f: &str, g: &str, extra: &[&str]) -> Output {
    let (pf, pg) = (fixture(f), fixture(g));
    let mut args = vec!["pair", pf.to_str().unwrap(), pg.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

#[test]
fn circle_evaluates_to_loop_value() {
    let o = eval("circle", &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "d");
}

#[test]
fn tetrahedron_is_half_loop_value() {
    let o = eval("tetrahedron", &["--at", "14"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("1/2*d"));
    assert_eq!(lines.next(), Some("at d = 14: 7"));
}

#[test]
fn girth_six_without_jacobi_is_unevaluated() {
    let o = eval("heawood", &["--ihx-depth", "0"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.starts_with("unevaluated"), "{out}");
    assert!(out.contains("residual"), "{out}");
}

#[test]
fn girth_six_with_jacobi_evaluates() {
    let o = eval("heawood", &[]);
    assert_eq!(o.status.code(), Some(0));
    assert!(!stdout(&o).contains("unevaluated"));
}

#[test]
fn trivalent_mode_accepts_alpha() {
    let o = eval("theta", &["--mode", "T", "--alpha", "1/2"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn quotient_rejects_other_alpha() {
    let o = eval("circle", &["--alpha", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn jail_pairs_to_loop_squared() {
    let o = pair("jail", "jail", &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "d^2");
}

#[test]
fn h_pairs_with_i() {
    let o = pair("h", "i", &["--mode", "F"]);
    assert_eq!(stdout(&o).trim(), "1/2*d");
}

#[test]
fn first_and_last_particles_are_orthogonal() {
    let o = pair("particle1", "particle16", &[]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "0");
}

#[test]
fn profile_mismatch_is_an_error() {
    let o = pair("jail", "circle", &[]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn missing_file_is_an_error() {
    let o = run(&["eval", "no/such/file.toml"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn unknown_target_is_a_usage_error() {
    let o = run(&["verify", "nope"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn structured_pair_output() {
    let o = pair("h", "i", &["--format", "structured", "--at", "3"]);
    let v: serde_json::Value = serde_json::from_str(stdout(&o).trim()).unwrap();
    assert_eq!(v["value"], "1/2*d");
    assert_eq!(v["at"]["value"], "3/2");
}

#[test]
fn verify_octonion_passes() {
    let o = run(&["verify", "octonion"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("octonion"));
}

#[test]
fn structured_report_carries_sources() {
    let o = run(&["verify", "gram5", "--format", "structured"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["passed"], true);
    let lines = v["lines"].as_array().unwrap();
    assert!(!lines.is_empty());
    assert!(lines.iter().all(|l| l["source"].is_string()));
}

#[test]
fn report_is_deterministic() {
    let a = run(&["verify", "windy"]);
    let b = run(&["verify", "windy"]);
    let strip = |o: &Output| {
        stdout(o)
            .lines()
            .filter(|l| !l.contains("ms"))
            .map(String::from)
            .collect::<Vec<_>>()
    };
    assert_eq!(strip(&a), strip(&b));
}
