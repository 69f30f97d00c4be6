use std::path::Path;
use std::process::{Command, Output};

fn gorlab(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gorlab"))
        .args(args)
        .current_dir(dir)
        .output()
        .expect("the binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).into_owned()
}

fn stderr(o: &Output) -> String {
    String::from_utf8_lossy(&o.stderr).into_owned()
}

fn setup() -> tempfile::TempDir {
    let dir = tempfile::tempdir().unwrap();
    let o = gorlab(
        dir.path(),
        &[
            "ring", "new", "--p", "101", "--e", "3", "--form", "identity", "--out", "r3.json",
        ],
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    dir
}

#[test]
fn ring_files_round_trip() {
    let dir = setup();
    let text = std::fs::read_to_string(dir.path().join("r3.json")).unwrap();
    assert_eq!(
        text,
        "{\"e\":3,\"form\":[[1,0,0],[0,1,0],[0,0,1]],\"p\":101}\n"
    );
    let o = gorlab(dir.path(), &["ring", "check", "r3.json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("\"valid\":true"));
}

#[test]
fn degenerate_rings_exit_2() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(
        dir.path().join("bad.json"),
        r#"{"p":101,"e":2,"form":[[1,1],[1,1]]}"#,
    )
    .unwrap();
    let o = gorlab(dir.path(), &["ring", "check", "bad.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("Degenerate"));
}

#[test]
fn usage_and_schema_errors_exit_2() {
    let dir = setup();
    assert_eq!(gorlab(dir.path(), &["frobnicate"]).status.code(), Some(2));
    assert_eq!(
        gorlab(
            dir.path(),
            &["resolve", "--module", "missing.json", "--steps", "2"]
        )
        .status
        .code(),
        Some(2)
    );
    std::fs::write(
        dir.path().join("m.json"),
        r#"{"ring":"r3.json","presentation":[[[0,1,0,0]]]}"#,
    )
    .unwrap();
    let o = gorlab(dir.path(), &["module", "info", "m.json"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("/presentation/0/0"), "{}", stderr(&o));
}

#[test]
fn module_info_and_resolve() {
    let dir = setup();
    let o = gorlab(
        dir.path(),
        &[
            "module",
            "new",
            "--ring",
            "r3.json",
            "--ideal",
            "[[0,1,0,0,0]]",
            "--out",
            "m1.json",
        ],
    );
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let info: serde_json::Value =
        serde_json::from_str(&stdout(&gorlab(dir.path(), &["module", "info", "m1.json"]))).unwrap();
    assert_eq!(info["dim"], 3);
    assert_eq!(info["nu"], 1);
    assert_eq!(info["hilbert"], serde_json::json!([1, 2]));
    let res: serde_json::Value = serde_json::from_str(&stdout(&gorlab(
        dir.path(),
        &["resolve", "--module", "m1.json", "--steps", "5"],
    )))
    .unwrap();
    assert_eq!(res["betti"], serde_json::json!([1, 1, 2, 5, 13, 34]));
}

#[test]
fn series_certification_and_its_failure() {
    let dir = setup();
    gorlab(
        dir.path(),
        &[
            "module",
            "new",
            "--ring",
            "r3.json",
            "--residue-field",
            "--out",
            "k.json",
        ],
    );
    gorlab(
        dir.path(),
        &[
            "module",
            "new",
            "--ring",
            "r3.json",
            "--ideal",
            "[[0,1,0,0,0]]",
            "--out",
            "m1.json",
        ],
    );
    let o = gorlab(
        dir.path(),
        &[
            "series",
            "poincare",
            "--module",
            "k.json",
            "--steps",
            "5",
            "--certify",
        ],
    );
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["coefficients"], serde_json::json!([1, 3, 8, 21, 55, 144]));
    assert_eq!(v["certificate"]["numerator"], serde_json::json!([1]));

    // the tail of P_{R/(x1)} starts at 1, leaving a margin of 4 < 5
    let o = gorlab(
        dir.path(),
        &[
            "series",
            "poincare",
            "--module",
            "m1.json",
            "--steps",
            "5",
            "--certify",
        ],
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("InsufficientDegree"), "{}", stderr(&o));
    let o = gorlab(
        dir.path(),
        &[
            "series",
            "poincare",
            "--module",
            "m1.json",
            "--steps",
            "5",
            "--certify",
            "--margin",
            "4",
        ],
    );
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn tor_with_induced_ranks_and_koszul() {
    let dir = setup();
    gorlab(
        dir.path(),
        &[
            "module",
            "new",
            "--ring",
            "r3.json",
            "--ideal",
            "[[0,1,0,0,0]]",
            "--out",
            "m1.json",
        ],
    );
    gorlab(
        dir.path(),
        &[
            "module",
            "new",
            "--ring",
            "r3.json",
            "--radical-square-quotient",
            "--out",
            "q.json",
        ],
    );
    let o = gorlab(
        dir.path(),
        &[
            "tor",
            "--m",
            "q.json",
            "--n-mod",
            "m1.json",
            "--range",
            "1..3",
            "--induced",
        ],
    );
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let ranks: Vec<u64> = v["degrees"]
        .as_array()
        .unwrap()
        .iter()
        .map(|d| d["induced_rank"].as_u64().unwrap())
        .collect();
    assert_eq!(ranks, vec![1, 1, 2]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&gorlab(
        dir.path(),
        &["koszul", "--module", "q.json"],
    )))
    .unwrap();
    assert_eq!(v["verdict"], "not_koszul");
    assert_eq!(v["witness"]["j"], 1);
}

#[test]
fn verify_reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let args = [
        "verify",
        "lemma-suite",
        "--lemma",
        "lescot",
        "--trials",
        "6",
        "--cutoff",
        "6",
        "--max-dim",
        "6",
    ];
    let a = gorlab(dir.path(), &args);
    let b = gorlab(dir.path(), &args);
    assert_eq!(a.status.code(), Some(0), "{}", stderr(&a));
    assert_eq!(a.stdout, b.stdout);
    assert!(!stdout(&a).contains("elapsed_ms"));
    let c = gorlab(
        dir.path(),
        &[
            "verify",
            "counterexample-e2",
            "--e",
            "2",
            "--cutoff",
            "8",
            "--timings",
        ],
    );
    assert_eq!(c.status.code(), Some(0));
    assert!(stdout(&c).contains("elapsed_ms"));
}

#[test]
fn verify_failures_exit_1_with_reproducers() {
    let dir = tempfile::tempdir().unwrap();
    let o = gorlab(
        dir.path(),
        &[
            "verify",
            "lofwall",
            "--e",
            "3",
            "--cutoff",
            "6",
            "--max-entries",
            "1",
        ],
    );
    assert_eq!(o.status.code(), Some(1));
    assert!(
        stderr(&o).contains("reproduce: gorlab verify lofwall"),
        "{}",
        stderr(&o)
    );
    let o = gorlab(dir.path(), &["verify", "main-theorem", "--e", "2"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn pretty_output_is_a_table() {
    let dir = setup();
    gorlab(
        dir.path(),
        &[
            "module",
            "new",
            "--ring",
            "r3.json",
            "--residue-field",
            "--out",
            "k.json",
        ],
    );
    let o = gorlab(
        dir.path(),
        &[
            "--pretty", "tor", "--m", "k.json", "--n-mod", "k.json", "--range", "0..2",
        ],
    );
    let text = stdout(&o);
    assert!(text.contains("length"), "{text}");
    assert!(
        text.lines()
            .any(|l| l.split_whitespace().collect::<Vec<_>>() == ["2", "8", "true", "8"]),
        "{text}"
    );
}
