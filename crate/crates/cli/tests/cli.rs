use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn partgal(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_partgal")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("partgal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn sequence_on_e2_is_consistent() {
    let o = partgal(&["--fixture", "E2", "sequence"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("verdict: consistent with exactness"));
    assert!(stdout(&o).contains("M_2(F_4)"));
}

#[test]
fn n1_is_not_galois_but_exits_cleanly() {
    let o = partgal(&["--fixture", "N1", "galois"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("verdict: not Galois"));
    assert!(text.contains("conclusive  true"));
}

#[test]
fn second_cohomology_of_e1_is_trivial() {
    let o = partgal(&["--fixture", "E1", "cohomology", "--n", "2"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verdict: H^2 is trivial"));
}

#[test]
fn sequence_needs_a_galois_instance() {
    let o = partgal(&["--fixture", "N1", "sequence"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("not Galois"));
}

#[test]
fn budget_errors_name_the_budget() {
    let o = partgal(&["--fixture", "G4", "--budget", "1", "cohomology", "--n", "1", "--engine", "enumerate"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("budget 1 exceeded"), "{}", stderr(&o));
}

#[test]
fn parse_errors_carry_line_and_column() {
    let path = scratch("bad.toml");
    std::fs::write(&path, "[ring]\nkind = \"zmod\"\nn = 2\n[action]\nkind = \"global\"\npermutation = [0, 5]\n")
        .unwrap();
    let o = partgal(&["--config", path.to_str().unwrap(), "validate"]);
    assert_eq!(o.status.code(), Some(2));
    let err = stderr(&o);
    assert!(err.contains("bad.toml:"), "{err}");
    assert!(err.contains(":6:"), "{err}");
}

#[test]
fn invalid_tables_exit_with_violations() {
    let path = scratch("broken.toml");
    // alpha_g sends 1 to 0, so the unit is not carried
    std::fs::write(
        &path,
        "[ring]\nkind = \"zmod\"\nn = 2\n[group]\nkind = \"cyclic\"\nn = 2\n[action]\nkind = \"explicit\"\nelements = [\n  { g = \"1\", one = \"1\", alpha = [[\"0\", \"0\"], [\"1\", \"1\"]] },\n  { g = \"g\", one = \"1\", alpha = [[\"0\", \"0\"], [\"1\", \"0\"]] },\n]\n",
    )
    .unwrap();
    for cmd in ["validate", "galois"] {
        let o = partgal(&["--config", path.to_str().unwrap(), cmd]);
        assert_eq!(o.status.code(), Some(1), "{cmd}: {}", stderr(&o));
        assert!(stdout(&o).contains("not a unital partial action"));
    }
}

#[test]
fn twist_that_is_not_a_cocycle_is_reported() {
    let path = scratch("twist.txt");
    std::fs::write(&path, "# f(1,1) moved off the identity\n1 1 (x,1,0)\n").unwrap();
    let arg = format!("file:{}", path.display());
    let o = partgal(&["--fixture", "E2", "crossed", "--twist", &arg]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not a 2-cocycle"));
}

#[test]
fn coboundary_twist_is_isomorphic_to_the_skew_ring() {
    let constants = scratch("constants.txt");
    let o = partgal(&[
        "--fixture",
        "E2",
        "crossed",
        "--twist",
        "coboundary:11",
        "--constants",
        constants.to_str().unwrap(),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert!(stdout(&o).contains("isomorphic to R *_alpha G"));
    let text = std::fs::read_to_string(&constants).unwrap();
    assert!(text.lines().any(|l| l.starts_with('#')));
}

#[test]
fn json_holds_every_table() {
    let out = scratch("pics.json");
    let o = partgal(&["--fixture", "E1", "--out", out.to_str().unwrap(), "pics"]);
    assert_eq!(o.status.code(), Some(0));
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["format"], 1);
    assert_eq!(doc["command"], "pics");
    assert_eq!(doc["ok"], true);
    let names: Vec<&str> = doc["sections"].as_array().unwrap().iter().map(|s| s["name"].as_str().unwrap()).collect();
    let text = stdout(&o);
    for n in &names {
        assert!(text.contains(&format!("== {n} ==")), "{n}");
    }
    assert_eq!(names.len(), text.matches("\n== ").count());
}

#[test]
fn census_covers_every_restriction() {
    let o = partgal(&["--fixture", "E0", "census"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text.contains("7 nonzero restriction idempotents"));
    let o = partgal(&["--fixture", "N1", "census"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn every_command_runs_on_every_fixture_name() {
    for fx in ["E0", "E1", "E2", "N1"] {
        for cmd in
            [&["validate"][..], &["invariants"], &["galois"], &["cohomology", "--n", "1"], &["delta-theta"], &["pics"]]
        {
            let mut args = vec!["--fixture", fx];
            args.extend_from_slice(cmd);
            let o = partgal(&args);
            assert_eq!(o.status.code(), Some(0), "{fx} {cmd:?}: {}", stderr(&o));
        }
    }
}
