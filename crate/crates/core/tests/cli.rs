//! End-to-end tests of the `configurable` binary.

use std::fs;
use std::path::Path;
use std::process::{Command, Output};

use configurable::{verify, Configuration};
use serde_json::Value;
use tempfile::TempDir;

const FANO: &str = r#"{"v":7,"b":7,"r":3,"k":3,"incidences":[[1,1],[1,5],[1,7],[2,1],[2,2],[2,6],[3,2],[3,3],[3,7],[4,1],[4,3],[4,4],[5,2],[5,4],[5,5],[6,3],[6,5],[6,6],[7,4],[7,6],[7,7]]}"#;

fn run(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_configurable"))
        .args(args)
        .env("CONFIGURABLE_OUT_DIR", dir)
        .output()
        .expect("binary runs")
}

fn stdout_json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn read_config(path: &Path) -> Configuration {
    Configuration::from_json(&fs::read_to_string(path).unwrap()).unwrap()
}

#[test]
fn fano_fixture_verifies() {
    assert!(verify(&Configuration::from_json(FANO).unwrap()).is_pass());
}

#[test]
fn construct_two_four_ten() {
    let dir = TempDir::new().unwrap();
    let out = run(dir.path(), &["construct", "--r", "2", "--k", "4", "--d", "10"]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let config = read_config(&dir.path().join("construct-r2-k4-d10.json"));
    assert_eq!((config.v(), config.b(), config.r(), config.k()), (20, 10, 2, 4));
    assert!(verify(&config).is_pass());
    assert!(dir.path().join("construct-r2-k4-d10.trace.json").exists());
}

#[test]
fn drk_two_five() {
    let dir = TempDir::new().unwrap();
    let out = run(dir.path(), &["drk", "--r", "2", "--k", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["generators"], serde_json::json!([3, 4, 5]));
    assert_eq!(doc["frobenius"], 2);
    assert_eq!(doc["gaps"], serde_json::json!([1, 2]));
}

#[test]
fn verify_reports_corruption() {
    let dir = TempDir::new().unwrap();
    let good = dir.path().join("fano.json");
    fs::write(&good, FANO).unwrap();
    let ok = run(dir.path(), &["verify", "--input", good.to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));
    assert_eq!(stdout_json(&ok)["pass"], true);

    // Drop the incidence x1 -- y1.
    let bad = dir.path().join("bad.json");
    fs::write(&bad, FANO.replace("[1,1],", "")).unwrap();
    let out = run(dir.path(), &["verify", "--input", bad.to_str().unwrap()]);
    assert_ne!(out.status.code(), Some(0));
    let stderr = String::from_utf8_lossy(&out.stderr);
    assert!(stderr.contains("point x1 has degree 2, expected 3"), "{stderr}");
    assert!(stderr.contains("line y1 has degree 2, expected 3"), "{stderr}");
}

#[test]
fn export_round_trip_is_byte_identical() {
    let dir = TempDir::new().unwrap();
    let input = dir.path().join("fano.json");
    fs::write(&input, format!("{FANO}\n")).unwrap();
    let once = dir.path().join("once.json");
    let twice = dir.path().join("twice.json");
    for (from, to) in [(&input, &once), (&once, &twice)] {
        let out = run(
            dir.path(),
            &["export", "--input", from.to_str().unwrap(), "--output", to.to_str().unwrap()],
        );
        assert_eq!(out.status.code(), Some(0));
    }
    let a = fs::read(&once).unwrap();
    assert_eq!(a, fs::read(&twice).unwrap());
    assert_eq!(a, fs::read(&input).unwrap());

    let dot = run(dir.path(), &["export", "--input", input.to_str().unwrap(), "--format", "dot"]);
    let text = String::from_utf8(dot.stdout).unwrap();
    assert!(text.starts_with("graph configuration_7_7_3_3 {"));
    assert_eq!(text.matches(" -- ").count(), 21);
}

#[test]
fn same_seed_gives_identical_artifacts() {
    let args = ["--seed", "5", "construct", "--r", "3", "--k", "3", "--d", "29"];
    let a = TempDir::new().unwrap();
    let b = TempDir::new().unwrap();
    for dir in [&a, &b] {
        let out = run(dir.path(), &args);
        assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    }
    for name in ["construct-r3-k3-d29.json", "construct-r3-k3-d29.trace.json"] {
        assert_eq!(fs::read(a.path().join(name)).unwrap(), fs::read(b.path().join(name)).unwrap());
    }
    let search = ["--seed", "3", "search", "--v", "13", "--b", "13", "--r", "4", "--k", "4"];
    let first = run(a.path(), &search);
    let second = run(b.path(), &search);
    assert_eq!(first.stdout, second.stdout);
    assert_eq!(stdout_json(&first)["verdict"], "exists");
}

#[test]
fn trace_export_replays_the_artifact() {
    let dir = TempDir::new().unwrap();
    let out = run(dir.path(), &["construct", "--r", "3", "--k", "3", "--d", "22"]);
    assert_eq!(out.status.code(), Some(0));
    let trace = dir.path().join("construct-r3-k3-d22.trace.json");
    let replayed = run(dir.path(), &["export", "--trace", trace.to_str().unwrap()]);
    assert_eq!(replayed.status.code(), Some(0));
    assert_eq!(replayed.stdout, fs::read(dir.path().join("construct-r3-k3-d22.json")).unwrap());
}

#[test]
fn pipeline_through_files() {
    let dir = TempDir::new().unwrap();
    let fano = dir.path().join("fano.json");
    fs::write(&fano, FANO).unwrap();
    let p = |path: &Path| path.to_str().unwrap().to_owned();

    let out = run(dir.path(), &["anchors", "--input", &p(&fano)]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout_json(&out)["anchors"].as_array().unwrap().len(), 3);

    let out = run(dir.path(), &["theorem", "--input", &p(&fano)]);
    assert_eq!(out.status.code(), Some(0));
    let lifted = dir.path().join("theorem-22-22-3-3.json");
    assert!(verify(&read_config(&lifted)).is_pass());

    let out = run(dir.path(), &["amalgamate", "--left", &p(&fano), "--right", &p(&lifted)]);
    assert_eq!(out.status.code(), Some(0));
    let glued = read_config(&dir.path().join("amalgam-29-29-3-3.json"));
    assert!(verify(&glued).is_pass());
}

#[test]
fn semigroup_queries() {
    let dir = TempDir::new().unwrap();
    let out = run(dir.path(), &["semigroup", "--generators", "5,6,7,8,9", "--member", "13"]);
    assert_eq!(out.status.code(), Some(0));
    let doc = stdout_json(&out);
    assert_eq!(doc["frobenius"], 4);
    assert_eq!(doc["member"]["member"], true);

    let out = run(dir.path(), &["semigroup", "--d2k", "4"]);
    assert_eq!(stdout_json(&out)["generators"], serde_json::json!([5, 6, 7, 8, 9]));
}

#[test]
fn exit_codes() {
    let dir = TempDir::new().unwrap();
    // Usage errors.
    assert_eq!(run(dir.path(), &[]).status.code(), Some(2));
    assert_eq!(run(dir.path(), &["construct", "--r", "3"]).status.code(), Some(2));
    // Infeasible parameters and non-numerical generators.
    assert_eq!(run(dir.path(), &["construct", "--r", "3", "--k", "3", "--d", "5"]).status.code(), Some(3));
    assert_eq!(run(dir.path(), &["semigroup", "--generators", "4,6"]).status.code(), Some(3));
    // A search that runs out of nodes.
    let out = run(
        dir.path(),
        &["search", "--v", "40", "--b", "40", "--r", "4", "--k", "4", "--node-budget", "10"],
    );
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(stdout_json(&out)["verdict"], "unknown");
    // Missing input file.
    let missing = run(dir.path(), &["verify", "--input", "/nonexistent/x.json"]);
    assert_eq!(missing.status.code(), Some(1));
}
