//! End-to-end tests of the `lateq` binary: exit-code contract, certificate
//! round trip, interchange loading, and byte-for-byte determinism.

use std::path::PathBuf;
use std::process::{Command, Output};

fn lateq(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_lateq"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn tmp(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join("lateq_cli_tests");
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn check_exit_codes() {
    let holds = lateq(&["check", "--object", "diamond_f", "--property", "MEET_SUPEREXT"]);
    assert_eq!(holds.status.code(), Some(0));
    assert!(stdout(&holds).contains("holds"));

    let fails = lateq(&["check", "--object", "diamond_f", "--property", "JOIN_SUPEREXT"]);
    assert_eq!(fails.status.code(), Some(1));
    assert!(stdout(&fails).contains("fails at (a, b)"));

    let unknown = lateq(&["check", "--object", "diamond_f", "--property", "NOPE"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn malformed_input_is_exit_2() {
    let path = tmp("malformed.json");
    std::fs::write(&path, "{ not json").unwrap();
    let out = lateq(&["check", "--input", path.to_str().unwrap(), "--object", "f", "--property", "QSM"]);
    assert_eq!(out.status.code(), Some(2));

    let bad = tmp("bad_relation.json");
    std::fs::write(
        &bad,
        r#"{"lattices":{"l":{"elements":["a","b"],"relation":[["a","b"],["b","a"]]}}}"#,
    )
    .unwrap();
    let out = lateq(&["check", "--input", bad.to_str().unwrap(), "--object", "f", "--property", "QSM"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn certificate_roundtrip_through_files() {
    let cert = tmp("cert.json");
    let emit = lateq(&[
        "check",
        "--object",
        "diamond_w",
        "--property",
        "WQSM",
        "--certificate",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(emit.status.code(), Some(1));
    assert!(stdout(&emit).contains("witness certificate written"));

    let recheck = lateq(&["check", "--input", cert.to_str().unwrap()]);
    assert_eq!(recheck.status.code(), Some(0), "{}", stdout(&recheck));
    assert!(stdout(&recheck).contains("confirmed"));

    // tampering with the witness makes the re-check refute it
    let text = std::fs::read_to_string(&cert).unwrap();
    let tampered = text.replace("\"x\": \"a\"", "\"x\": \"0\"");
    assert_ne!(text, tampered);
    let bad = tmp("cert_tampered.json");
    std::fs::write(&bad, tampered).unwrap();
    let refuted = lateq(&["check", "--input", bad.to_str().unwrap()]);
    assert_eq!(refuted.status.code(), Some(1));
}

#[test]
fn crossing_checks_and_certificates() {
    let ok = lateq(&["check", "--object", "mod_not_sc", "--property", "MODULAR_CROSSING"]);
    assert_eq!(ok.status.code(), Some(0));

    let cert = tmp("crossing_cert.json");
    let fails = lateq(&[
        "check",
        "--object",
        "mod_not_sc",
        "--property",
        "SINGLE_CROSSING",
        "--certificate",
        cert.to_str().unwrap(),
    ]);
    assert_eq!(fails.status.code(), Some(1));
    let recheck = lateq(&["check", "--input", cert.to_str().unwrap()]);
    assert_eq!(recheck.status.code(), Some(0), "{}", stdout(&recheck));
}

#[test]
fn solve_and_hypotheses() {
    let solve = lateq(&["solve", "--object", "coordination_2x2", "--direction", "greatest"]);
    assert_eq!(solve.status.code(), Some(0));
    assert!(stdout(&solve).contains("1|1"));

    let hyp = lateq(&["hypotheses", "--object", "eg412_zhou_grid5", "--theorem", "COMPLETE_4.9"]);
    assert_eq!(hyp.status.code(), Some(0));
    assert!(stdout(&hyp).contains("PASS"));
    assert!(stdout(&hyp).contains("trivially satisfied: finite"));

    // the non-lattice game fails the complete-lattice hypotheses
    let fail = lateq(&["hypotheses", "--object", "post44_nolattice_grid3", "--theorem", "COMPLETE_4.9"]);
    assert_eq!(fail.status.code(), Some(1));

    let unknown = lateq(&["hypotheses", "--object", "coordination_2x2", "--theorem", "NOPE_9.9"]);
    assert_eq!(unknown.status.code(), Some(2));
}

#[test]
fn builtin_emission_loads_back() {
    let ws = tmp("builtin_all.json");
    let emit = lateq(&["builtin", "--object", "all"]);
    assert_eq!(emit.status.code(), Some(0));
    std::fs::write(&ws, stdout(&emit)).unwrap();

    let check = lateq(&[
        "check",
        "--input",
        ws.to_str().unwrap(),
        "--object",
        "diamond_g",
        "--property",
        "SUPEREXT",
    ]);
    assert_eq!(check.status.code(), Some(0));

    let solve = lateq(&[
        "solve",
        "--input",
        ws.to_str().unwrap(),
        "--object",
        "eg48_nomin_grid3",
        "--direction",
        "greatest",
    ]);
    assert_eq!(solve.status.code(), Some(0));
    assert!(stdout(&solve).contains("largest: 1|1  least: none"));
}

#[test]
fn atlas_and_grid_flag() {
    let atlas = lateq(&["atlas", "--codomain", "2", "--format", "structured"]);
    assert_eq!(atlas.status.code(), Some(0));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&atlas)).unwrap();
    assert_eq!(parsed["implications"].as_array().unwrap().len(), 156);

    let grid = lateq(&["solve", "--object", "eg48_nomin", "--grid", "6", "--direction", "greatest"]);
    assert_eq!(grid.status.code(), Some(0));
    assert!(stdout(&grid).contains("least: none"));
}

#[test]
fn search_exit_codes() {
    let spec = tmp("search_hit.json");
    std::fs::write(
        &spec,
        r#"{"search":{"kind":"function","lattice":"diamond","codomain":2,
             "satisfy":["SUPEREXT"],"violate":["WQSM"]}}"#,
    )
    .unwrap();
    let hit = lateq(&["search", "--input", spec.to_str().unwrap()]);
    assert_eq!(hit.status.code(), Some(0));

    let spec = tmp("search_miss.json");
    std::fs::write(
        &spec,
        r#"{"search":{"kind":"function","lattice":"diamond","codomain":2,
             "satisfy":["QSM"],"violate":["QSM"]}}"#,
    )
    .unwrap();
    let miss = lateq(&["search", "--input", spec.to_str().unwrap()]);
    assert_eq!(miss.status.code(), Some(1));
    assert!(stdout(&miss).contains("exhausted"));
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["builtin", "--object", "all"],
        vec!["atlas", "--codomain", "3", "--format", "structured"],
        vec!["solve", "--object", "eg412_zhou_grid5", "--format", "structured"],
        vec!["hypotheses", "--object", "coordination_2x2", "--theorem", "EXISTENCE_4.4", "--format", "structured"],
    ] {
        let a = lateq(&args);
        let b = lateq(&args);
        assert_eq!(stdout(&a), stdout(&b), "nondeterministic output for {args:?}");
        assert_eq!(a.status.code(), b.status.code());
    }
}

#[test]
fn structured_check_is_json() {
    let out = lateq(&[
        "check",
        "--object",
        "diamond_f",
        "--property",
        "JOIN_SUPEREXT",
        "--format",
        "structured",
    ]);
    assert_eq!(out.status.code(), Some(1));
    let parsed: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(parsed["holds"], serde_json::Value::Bool(false));
    assert_eq!(parsed["witness"]["x"], "a");
}

#[test]
fn env_budget_is_honored() {
    // a tiny budget via the environment makes the atlas refuse
    let out = Command::new(env!("CARGO_BIN_EXE_lateq"))
        .args(["atlas", "--codomain", "3"])
        .env("LATEQ_BUDGET", "10")
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
}
