use std::path::PathBuf;
use std::process::Command;

use frobcheck_cli::model::Model;
use serde_json::Value;

fn corpus(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR"))
        .join("../../corpus")
        .join(format!("{name}.json"))
        .to_string_lossy()
        .into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["frobcheck"];
    argv.extend_from_slice(args);
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = frobcheck_cli::run(argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn payload(args: &[&str]) -> Value {
    let (code, out, err) = run(args);
    assert_eq!(code, 0, "{err}");
    let v: Value = serde_json::from_str(&out).unwrap();
    v["payload"].clone()
}

#[test]
fn info_reports_invariants() {
    let p = payload(&["info", &corpus("B")]);
    assert_eq!(p["dimension"], 2);
    assert_eq!(p["depth"], 2);
    assert_eq!(p["kappa"]["upper_bound"], 1);
    let p = payload(&["info", &corpus("C")]);
    assert_eq!(p["type"]["cm_type"], 2);
    assert_eq!(p["type"]["gorenstein"], false);
}

#[test]
fn freeness_examples_exit_zero() {
    let b = corpus("B");
    let p = payload(&["check", "free", &b, "-m", "R2", "-s", "yz", "-n", "1"]);
    let r = &p["reports"][0];
    assert_eq!(r["verdict"]["status"], "CONSISTENT");
    assert_eq!(r["quantities"]["length_frobenius_quotient"], 36);
    let p = payload(&["check", "free", &b, "-m", "MF", "-s", "yz", "-n", "1"]);
    assert_eq!(p["reports"][0]["conditions"]["1_free"], false);
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["info", "/nonexistent/model.json"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
    // n below the κ bound of B
    let (code, _, err) = run(&[
        "check",
        "free",
        &corpus("B"),
        "-m",
        "MF",
        "-s",
        "yz",
        "-n",
        "0",
    ]);
    assert_eq!(code, 2, "{err}");
    let dir = tempfile::tempdir().unwrap();
    // (x) alone is not a system of parameters of B: skipped, not an error
    let short = dir.path().join("short.json");
    let b = std::fs::read_to_string(corpus("B")).unwrap();
    let mut model: Value = serde_json::from_str(&b).unwrap();
    model["sops"] = serde_json::json!({"x": ["x"]});
    std::fs::write(&short, model.to_string()).unwrap();
    let p = payload(&[
        "check",
        "free",
        short.to_str().unwrap(),
        "-m",
        "MF",
        "-s",
        "x",
        "-n",
        "1",
    ]);
    assert_eq!(p["reports"][0]["verdict"]["status"], "SKIPPED");
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"characteristic": 4, "variables": ["x"]}"#).unwrap();
    assert_eq!(run(&["info", bad.to_str().unwrap()]).0, 2);
}

#[test]
fn budget_exit_code() {
    let out = Command::new(env!("CARGO_BIN_EXE_frobcheck"))
        .args([
            "tor",
            &corpus("C"),
            "-m",
            "k",
            "-n",
            "1",
            "-i",
            "1",
            "--method",
            "pushforward",
        ])
        .env("FROBCHECK_MAX_PUSHFORWARD", "8")
        .output()
        .unwrap();
    assert_eq!(
        out.status.code(),
        Some(3),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(String::from_utf8_lossy(&out.stderr).contains("budget"));
}

#[test]
fn reports_are_deterministic() {
    let args = ["scan", "rigidity", &corpus("C"), "-m", "omega"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.0, 0);
    assert_eq!(a.1, b.1);
    assert!(!a.1.contains("wall_time_ms"));
    let (_, timed, _) = run(&["--timing", "info", &corpus("A")]);
    assert!(timed.contains("wall_time_ms"));
}

#[test]
fn out_and_tsv_files() {
    let dir = tempfile::tempdir().unwrap();
    let json = dir.path().join("r.json");
    let tsv = dir.path().join("r.tsv");
    let (code, stdout, err) = run(&[
        "--out",
        json.to_str().unwrap(),
        "--tsv",
        tsv.to_str().unwrap(),
        "resolve",
        &corpus("E"),
        "-m",
        "k",
    ]);
    assert_eq!(code, 0, "{err}");
    assert!(stdout.is_empty());
    let report: Value = serde_json::from_str(&std::fs::read_to_string(&json).unwrap()).unwrap();
    let betti: Vec<u64> = serde_json::from_value(report["payload"]["betti"].clone()).unwrap();
    assert_eq!(betti[..3], [1, 2, 2]);
    let table = std::fs::read_to_string(&tsv).unwrap();
    assert!(
        table.starts_with("step\trank\n0\t1\n1\t2\n2\t2\n"),
        "{table}"
    );
}

#[test]
fn tor_oracles_agree() {
    let p = payload(&["tor", &corpus("B"), "-m", "MF", "-n", "1", "-i", "1"]);
    assert_eq!(p["oracles_agree"], true);
}

#[test]
fn corpus_round_trips() {
    for name in ["A", "B", "C", "D", "E"] {
        let text = std::fs::read_to_string(corpus(name)).unwrap();
        let m = Model::from_json(&text).unwrap();
        let again = Model::from_json(m.render()).unwrap();
        assert_eq!(m.render(), again.render(), "{name}");
        assert_eq!(m.digest(), again.digest());
        m.verify_assertions().unwrap();
    }
}

#[test]
fn tor_omega_on_t345() {
    let p = payload(&[
        "check",
        "gorenstein",
        &corpus("C"),
        "--method",
        "tor-omega",
        "-s",
        "x",
        "-n",
        "1",
    ]);
    let r = &p["reports"][0];
    assert_eq!(r["verdict"]["status"], "CONSISTENT");
    assert_eq!(r["conditions"]["one_tor_vanishes"], false);
    assert_eq!(r["conditions"]["gorenstein"], false);
}
