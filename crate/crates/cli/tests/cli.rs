use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn strata(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_strata"))
        .args(args)
        .env_remove("STRATA_TABLES")
        .output()
        .expect("run strata")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("json output")
}

#[test]
fn info_reports_counts() {
    let out = strata(&["--json", "info", "E8"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["irr_count"], 111);
    assert_eq!(v["triples"], 165);
    assert_eq!(v["table_rows"], 74);
    let errata: Vec<&str> = v["errata"]
        .as_array()
        .unwrap()
        .iter()
        .map(|e| e.as_str().unwrap())
        .collect();
    assert!(errata.contains(&"e8-missing-84_64"));
}

#[test]
fn verify_all_passes() {
    let out = strata(&["verify", "all"]);
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    let text = stdout(&out);
    for t in ["G2", "F4", "E6", "E7", "E8"] {
        assert!(text.contains(&format!("verify {t}\n")), "{t}");
    }
    assert!(!text.contains(": fail"));
}

#[test]
fn verify_json_lists_every_check() {
    let out = strata(&["--json", "verify", "F4"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["checks"].as_array().unwrap().len(), 11);
}

#[test]
fn bad_input_exits_with_two() {
    assert_eq!(strata(&["info", "Q7"]).status.code(), Some(2));
    assert_eq!(
        strata(&["cstar", "B4", "--stratum", "(4|-)"]).status.code(),
        Some(2)
    );
    assert_eq!(
        strata(&["fiber", "E6", "--stratum", "7_7"]).status.code(),
        Some(2)
    );
}

#[test]
fn tau_and_fiber_agree() {
    let out = strata(&["tau", "G2", "--levi", "G2", "--char", "1", "--d", "1"]);
    assert!(out.status.success());
    assert_eq!(stdout(&out).trim(), "theta'");
    let out = strata(&["--json", "fiber", "E8", "--stratum", "1_0"]);
    let v = json(&out);
    assert_eq!(v["size"], 12);
    let out = strata(&["--json", "cstar", "E8", "--stratum", "112_3"]);
    assert_eq!(json(&out)["size"], 8);
}

#[test]
fn pseudo_levi_check() {
    let out = strata(&["pseudo-levi", "E8", "--check", "A4xA4"]);
    assert!(out.status.success());
    assert!(stdout(&out).contains("true"));
    let out = strata(&["pseudo-levi", "E8", "--check", "A9"]);
    assert!(stdout(&out).contains("false"));
}

fn export(t: &str, what: &str, out: &Path) {
    let status = strata(&["export", t, "--what", what, "--out", out.to_str().unwrap()]).status;
    assert!(status.success());
}

#[test]
fn export_register_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    for t in ["G2", "F4", "E6", "E7", "E8"] {
        let path = dir.path().join(format!("{t}.json"));
        export(t, "table", &path);
        let out = strata(&["register", "--in", path.to_str().unwrap()]);
        assert!(out.status.success(), "{t}");
        assert!(stdout(&out).contains("matches the embedded table"));
        let again = dir.path().join(format!("{t}-again.json"));
        export(t, "table", &again);
        assert_eq!(
            std::fs::read(&path).unwrap(),
            std::fs::read(&again).unwrap()
        );
    }
}

#[test]
fn mutated_table_is_rejected() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("g2.json");
    export("G2", "table", &path);
    let doc = std::fs::read_to_string(&path).unwrap();
    let mut v: Value = serde_json::from_str(&doc).unwrap();
    let rows = v["rows"].as_array_mut().unwrap();
    let moved = rows[4]["fiber"].as_array_mut().unwrap().pop().unwrap();
    rows[0]["fiber"].as_array_mut().unwrap().push(moved);
    std::fs::write(&path, serde_json::to_string_pretty(&v).unwrap()).unwrap();
    let out = strata(&["register", "--in", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8(out.stderr).unwrap();
    assert!(err.contains("(G2,1,1)[0]"), "{err}");
}

fn b3_table(unit_groups: &str) -> String {
    let row = |e: &str, extra: &str, groups: &str, boxed: &str| {
        format!(
            r#"{{"stratum": "{e}", "fiber": [{{"levi": "empty", "character": "{e}", "d": 0, "mult": 1}}{extra}], "groups": {groups}, "boxed": {boxed}, "membership": "full"}}"#
        )
    };
    let b2 = |c: &str| format!(r#", {{"levi": "B2", "character": "{c}", "d": 0, "mult": 1}}"#);
    let mut rows = vec![
        row(
            "(3|-)",
            &b2("(2)"),
            unit_groups,
            if unit_groups.contains("C2") {
                r#"["2"]"#
            } else {
                r#"["single"]"#
            },
        ),
        row("(2|1)", &b2("(1,1)"), r#"{"r0": "C2"}"#, r#"["single"]"#),
    ];
    for e in [
        "(2,1|-)",
        "(1,1,1|-)",
        "(1,1|1)",
        "(1|2)",
        "(1|1,1)",
        "(-|3)",
        "(-|2,1)",
        "(-|1,1,1)",
    ] {
        rows.push(row(e, "", r#"{"r0": "1"}"#, r#"["single"]"#));
    }
    format!(
        r#"{{"schema": "strata-table/1", "type": "B3", "rows": [{}]}}"#,
        rows.join(", ")
    )
}

#[test]
fn registered_tables_persist_through_the_tables_dir() {
    let work = tempfile::tempdir().unwrap();
    let tables = work.path().join("tables");
    let input = work.path().join("b3.json");
    std::fs::write(&input, b3_table(r#"{"r0": "1", "r2": "C2"}"#)).unwrap();
    let out = strata(&[
        "--tables",
        tables.to_str().unwrap(),
        "register",
        "--in",
        input.to_str().unwrap(),
    ]);
    assert!(
        out.status.success(),
        "{}",
        String::from_utf8_lossy(&out.stderr)
    );
    assert!(tables.join("B3.json").exists());

    let out = Command::new(env!("CARGO_BIN_EXE_strata"))
        .args(["verify", "B3"])
        .env("STRATA_TABLES", &tables)
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(0), "{}", stdout(&out));
    assert!(stdout(&out).contains("triple-placement: pass"));

    let out = strata(&["verify", "B3"]);
    assert!(stdout(&out).contains("triple-placement: skipped"));
}

#[test]
fn failing_verification_exits_with_one() {
    let work = tempfile::tempdir().unwrap();
    // consistent placement, but the unit stratum is missing its second
    // irreducible representation
    std::fs::write(work.path().join("B3.json"), b3_table(r#"{"r0": "1"}"#)).unwrap();
    let out = strata(&["--tables", work.path().to_str().unwrap(), "verify", "B3"]);
    assert_eq!(out.status.code(), Some(1), "{}", stdout(&out));
    assert!(stdout(&out).contains("fiber-cstar-cardinality: fail"));
}

#[test]
fn triples_listing_is_canonical() {
    let out = strata(&["export", "E8", "--what", "triples"]);
    let v = json(&out);
    assert_eq!(v["schema"], "strata-triples/1");
    assert_eq!(v["triples"].as_array().unwrap().len(), 165);
    assert_eq!(
        stdout(&out),
        stdout(&strata(&["export", "E8", "--what", "triples"]))
    );
}
