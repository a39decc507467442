//! End-to-end checks of the `exactrep` binary: exit codes, byte-level
//! determinism, cache transparency, and the JSON/CSV artifacts.

use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_exactrep"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn temp_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("exactrep-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

#[test]
fn dim_examples_from_the_interface_contract() {
    let out = run(&["dim", "sn", "--shape", "3,1,1"]);
    assert!(out.status.success());
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "6");

    let out = run(&["dim", "gl", "--shape", "1", "--n", "7"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "7");

    let out = run(&["dim", "tl", "--k", "4", "--l", "1"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "3");

    let out = run(&["decompose", "kronecker", "--mu", "2,1", "--nu", "2,1", "--la", "2,1"]);
    assert_eq!(String::from_utf8_lossy(&out.stdout).trim(), "1");
}

#[test]
fn exit_codes_follow_the_contract() {
    // 0 on success
    assert_eq!(run(&["dim", "sn", "--shape", "2,1"]).status.code(), Some(0));
    // 2 on malformed input, both at the flag level and the value level
    assert_eq!(run(&["dim", "sn"]).status.code(), Some(2));
    assert_eq!(
        run(&["dim", "sn", "--shape", "1,3"]).status.code(),
        Some(2)
    );
    assert_eq!(run(&["verify", "bogus"]).status.code(), Some(2));
    // 0 on a passing verify suite
    assert_eq!(
        run(&["verify", "gt", "--quick", "--nmax", "2"]).status.code(),
        Some(0)
    );
}

#[test]
fn identical_invocations_are_byte_identical() {
    let dir = temp_dir("determinism");
    let j1 = dir.join("a.json");
    let j2 = dir.join("b.json");
    let o1 = bin()
        .args(["char", "sn", "--n", "4", "--json"])
        .arg(&j1)
        .output()
        .unwrap();
    let o2 = bin()
        .args(["char", "sn", "--n", "4", "--json"])
        .arg(&j2)
        .output()
        .unwrap();
    assert_eq!(o1.stdout, o2.stdout);
    assert_eq!(
        std::fs::read(&j1).unwrap(),
        std::fs::read(&j2).unwrap(),
        "JSON artifacts must match byte for byte"
    );
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn cache_is_transparent() {
    let dir = temp_dir("cache");
    let cache = dir.join("store");
    let json_fresh = dir.join("fresh.json");
    let json_miss = dir.join("miss.json");
    let json_hit = dir.join("hit.json");

    let args = ["decompose", "tensor", "--mu", "2,1", "--nu", "2"];
    let fresh = bin().args(args).args(["--json"]).arg(&json_fresh).output().unwrap();
    let miss = bin()
        .args(args)
        .args(["--cache-dir"])
        .arg(&cache)
        .args(["--json"])
        .arg(&json_miss)
        .output()
        .unwrap();
    let hit = bin()
        .args(args)
        .args(["--cache-dir"])
        .arg(&cache)
        .args(["--json"])
        .arg(&json_hit)
        .output()
        .unwrap();

    assert_eq!(fresh.stdout, miss.stdout);
    assert_eq!(miss.stdout, hit.stdout);
    let fresh_bytes = std::fs::read(&json_fresh).unwrap();
    assert_eq!(fresh_bytes, std::fs::read(&json_miss).unwrap());
    assert_eq!(fresh_bytes, std::fs::read(&json_hit).unwrap());

    // The store holds exactly one entry for the repeated request.
    let entries: Vec<_> = std::fs::read_dir(&cache)
        .unwrap()
        .filter_map(|e| e.ok())
        .filter(|e| e.path().extension().is_some_and(|x| x == "json"))
        .collect();
    assert_eq!(entries.len(), 1);

    // --no-cache bypasses the store but produces the same bytes.
    let bypass = bin()
        .args(args)
        .args(["--cache-dir"])
        .arg(&cache)
        .arg("--no-cache")
        .output()
        .unwrap();
    assert_eq!(bypass.stdout, fresh.stdout);
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn csv_is_header_first_and_quoted() {
    let dir = temp_dir("csv");
    let path = dir.join("table.csv");
    let out = bin()
        .args(["char", "sn", "--n", "3", "--csv"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let body = std::fs::read_to_string(&path).unwrap();
    let mut lines = body.lines();
    // Header first; partition labels contain commas and must be quoted.
    let header = lines.next().unwrap();
    assert!(header.starts_with("lambda\\mu"));
    assert!(header.contains("\"2,1\""));
    let mut reader = csv::Reader::from_path(&path).unwrap();
    let rows: Vec<csv::StringRecord> = reader.records().map(|r| r.unwrap()).collect();
    assert_eq!(rows.len(), 3);
    assert_eq!(&rows[0][0], "3");
    assert_eq!(&rows[1][0], "2,1");
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn json_envelope_has_request_result_meta() {
    let dir = temp_dir("envelope");
    let path = dir.join("out.json");
    let out = bin()
        .args(["dim", "sn", "--shape", "3,1,1", "--json"])
        .arg(&path)
        .output()
        .unwrap();
    assert!(out.status.success());
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["request"]["cmd"], "dim");
    assert_eq!(v["request"]["shape"], "3,1,1");
    assert_eq!(v["result"]["dim"], "6");
    assert!(v["meta"]["version"].is_string());
    assert!(v["meta"]["elapsed_ms"].is_number());
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn verify_json_report_is_machine_readable() {
    let dir = temp_dir("verify");
    let path = dir.join("report.json");
    let out = bin()
        .args(["verify", "weyl", "--quick", "--json"])
        .arg(&path)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["suite"], "weyl");
    assert_eq!(v["pass"], true);
    assert!(v["checks"].as_array().unwrap().len() >= 5);
    for c in v["checks"].as_array().unwrap() {
        assert_eq!(c["status"], "pass");
    }
    std::fs::remove_dir_all(dir).unwrap();
}

#[test]
fn worker_count_does_not_change_results() {
    let one = bin()
        .args(["verify", "gt", "--quick", "--nmax", "3"])
        .env("EXACTREP_WORKERS", "1")
        .output()
        .unwrap();
    let four = bin()
        .args(["verify", "gt", "--quick", "--nmax", "3"])
        .env("EXACTREP_WORKERS", "4")
        .output()
        .unwrap();
    assert_eq!(one.status.code(), four.status.code());
    // Reports differ only in the timing line; compare check lines.
    let strip = |raw: &[u8]| -> Vec<String> {
        String::from_utf8_lossy(raw)
            .lines()
            .filter(|l| l.starts_with('['))
            .map(str::to_string)
            .collect()
    };
    assert_eq!(strip(&one.stdout), strip(&four.stdout));
}
