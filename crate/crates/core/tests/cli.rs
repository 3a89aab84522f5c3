mod common;

use std::path::Path;
use std::process::{Command, Output};

use common::{golden_path, parse_dot};
use mcluster::io::QuiverDocument;

fn mcluster(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_mcluster"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn write(dir: &Path, name: &str, text: &str) -> String {
    let p = dir.join(name);
    std::fs::write(&p, text).unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn gamma_matches_golden_output() {
    for (args, file) in [
        (vec!["gamma", "-n", "4", "-m", "1"], "gamma_4_1.json"),
        (
            vec!["gamma", "-n", "4", "-m", "2", "--format", "json"],
            "gamma_4_2.json",
        ),
        (vec!["ar-quiver", "-n", "4", "-m", "2"], "ar_4_2.json"),
        (
            vec!["gamma", "-n", "4", "-m", "1", "--format", "dot"],
            "gamma_4_1.dot",
        ),
        (
            vec![
                "facets", "-n", "4", "-m", "1", "--orbits", "--format", "csv",
            ],
            "facet_orbits_4_1.csv",
        ),
    ] {
        let o = mcluster(&args);
        assert_eq!(o.status.code(), Some(0));
        assert_eq!(
            stdout(&o),
            std::fs::read_to_string(golden_path(file)).unwrap(),
            "{file}"
        );
    }
}

#[test]
fn gamma_document_counts() {
    let doc =
        QuiverDocument::from_json(&stdout(&mcluster(&["gamma", "-n", "4", "-m", "1"]))).unwrap();
    assert_eq!(doc.vertices.len(), 9);
    assert_eq!(doc.arrows.iter().map(|a| a.mult).sum::<u32>(), 12);
    assert_eq!(doc.tau.len(), 9);
    assert_eq!(doc.metadata.construction, "gamma");
}

#[test]
fn output_is_deterministic_and_round_trips() {
    for args in [
        ["gamma", "-n", "5", "-m", "3"],
        ["ar-quiver", "-n", "5", "-m", "3"],
        ["gamma", "-n", "7", "-m", "1"],
    ] {
        let a = stdout(&mcluster(&args));
        assert_eq!(a, stdout(&mcluster(&args)));
        let doc = QuiverDocument::from_json(&a).unwrap();
        let tq = doc.to_translation_quiver().unwrap();
        let again = QuiverDocument::from_translation_quiver(&tq, doc.metadata.clone());
        assert_eq!(again, doc);
        assert_eq!(again.to_json(), a);
    }
}

#[test]
fn dot_output_parses() {
    for args in [
        ["gamma", "-n", "4", "-m", "2", "--format", "dot"],
        ["ar-quiver", "-n", "3", "-m", "3", "--format", "dot"],
    ] {
        let text = stdout(&mcluster(&args));
        let g = parse_dot(&text).unwrap();
        let doc = QuiverDocument::from_json(&stdout(&mcluster(&args[..5]))).unwrap();
        assert_eq!(g.nodes.len(), doc.vertices.len());
        let dashed = g
            .edges
            .iter()
            .filter(|e| e.2.get("style").map(String::as_str) == Some("dashed"));
        assert_eq!(dashed.count(), doc.tau.len());
        let solid = g
            .edges
            .iter()
            .filter(|e| !e.2.contains_key("style"))
            .count();
        assert_eq!(solid, doc.arrows.len());
    }
    assert!(parse_dot("digraph x { \"a\" -> ; }").is_err());
}

#[test]
fn verify_succeeds() {
    let o = mcluster(&["verify", "-n", "4", "-m", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert!(text
        .lines()
        .all(|l| l.starts_with("ok") || l.starts_with("skip")));
    assert!(text.contains("ok   psi isomorphism"));
}

#[test]
fn iso_prints_bijection() {
    let dir = tempfile::tempdir().unwrap();
    let left = write(
        dir.path(),
        "gamma_4_2.json",
        &stdout(&mcluster(&["gamma", "-n", "4", "-m", "2"])),
    );
    let right = write(
        dir.path(),
        "ar_4_2.json",
        &stdout(&mcluster(&["ar-quiver", "-n", "4", "-m", "2"])),
    );
    let o = mcluster(&["iso", "--left", &left, "--right", &right]);
    assert_eq!(o.status.code(), Some(0));
    let text = stdout(&o);
    assert_eq!(text.lines().count(), 15);
    assert!(text.lines().all(|l| l.contains(" -> (")));

    let other = write(
        dir.path(),
        "gamma_4_1.json",
        &stdout(&mcluster(&["gamma", "-n", "4", "-m", "1"])),
    );
    let o = mcluster(&["iso", "--left", &left, "--right", &other]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("not isomorphic"));
}

#[test]
fn power_and_components() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(
        dir.path(),
        "g.json",
        &stdout(&mcluster(&["gamma", "-n", "6", "-m", "1"])),
    );
    let o = mcluster(&["power", "--input", &g, "-m", "2"]);
    assert_eq!(o.status.code(), Some(0));
    let sq = write(dir.path(), "sq.json", &stdout(&o));
    let o = mcluster(&["components", "--input", &sq]);
    assert_eq!(o.status.code(), Some(0));
    let comps: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let mut sizes: Vec<u64> = comps
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["size"].as_u64().unwrap())
        .collect();
    sizes.sort();
    assert_eq!(sizes, [6, 6, 8]);
}

#[test]
fn components_of_unstable_quiver_fail_the_property() {
    let dir = tempfile::tempdir().unwrap();
    let doc = r#"{"metadata":{"construction":"hand","version":"0"},
        "vertices":[{"id":0,"label":"a"},{"id":1,"label":"b"}],
        "arrows":[{"src":0,"dst":1,"mult":1}],"tau":[]}"#;
    let f = write(dir.path(), "p.json", doc);
    assert_eq!(
        mcluster(&["components", "--input", &f]).status.code(),
        Some(1)
    );
}

#[test]
fn mesh_and_hom() {
    let dir = tempfile::tempdir().unwrap();
    let g = write(
        dir.path(),
        "g.json",
        &stdout(&mcluster(&["gamma", "-n", "4", "-m", "1"])),
    );
    let o = mcluster(&["mesh", "--input", &g]);
    assert_eq!(o.status.code(), Some(0));
    let mesh: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(mesh["relations"].as_array().unwrap().len(), 9);

    let o = mcluster(&["hom", "--input", &g, "--from", "1-3", "--to", "1-3"]);
    assert_eq!(o.status.code(), Some(0));
    let h: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(h["dimension"], 1);
    assert_eq!(h["stabilized"], true);
    assert_eq!(h["truncation_length"], 18);

    let o = mcluster(&[
        "hom",
        "--input",
        &g,
        "--from",
        "1-3",
        "--to",
        "1-5",
        "--max-len",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));

    let multi = r#"{"metadata":{"construction":"hand","version":"0"},
        "vertices":[{"id":0,"label":"a"},{"id":1,"label":"b"}],
        "arrows":[{"src":0,"dst":1,"mult":2}],"tau":[]}"#;
    let f = write(dir.path(), "multi.json", multi);
    assert_eq!(mcluster(&["mesh", "--input", &f]).status.code(), Some(2));
}

#[test]
fn input_errors_exit_two() {
    let dir = tempfile::tempdir().unwrap();
    let junk = write(dir.path(), "junk.json", "{ not json");
    let cases: Vec<Vec<&str>> = vec![
        vec!["gamma", "-n", "1", "-m", "1"],
        vec!["gamma", "-n", "4"],
        vec!["gamma", "-n", "4", "-m", "1", "--format", "csv"],
        vec!["facets", "-n", "4", "-m", "1", "--format", "dot"],
        vec!["components", "--input", "/definitely/missing.json"],
        vec!["components", "--input", &junk],
        vec!["frobnicate"],
    ];
    for args in cases {
        let o = mcluster(&args);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        let err = String::from_utf8_lossy(&o.stderr);
        assert!(!err.trim().is_empty());
    }
    let g = write(
        dir.path(),
        "g.json",
        &stdout(&mcluster(&["gamma", "-n", "3", "-m", "1"])),
    );
    let o = mcluster(&["hom", "--input", &g, "--from", "9-9", "--to", "1-3"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(String::from_utf8_lossy(&o.stderr).lines().count(), 1);
}

#[test]
fn help_exits_zero() {
    let o = mcluster(&["--help"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("verify"));
}
