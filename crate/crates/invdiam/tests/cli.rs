use std::path::{Path, PathBuf};
use std::process::Command;

use serde_json::Value;
use tempfile::TempDir;

struct Run {
    code: i32,
    doc: Value,
    stdout: String,
    stderr: String,
}

fn invdiam(args: &[&str]) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_invdiam"))
        .arg("--no-meta")
        .args(args)
        .output()
        .expect("binary runs");
    let stdout = String::from_utf8(out.stdout).unwrap();
    Run {
        code: out.status.code().unwrap(),
        doc: serde_json::from_str(&stdout).unwrap_or(Value::Null),
        stdout,
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn file(dir: &TempDir, name: &str, text: &str) -> PathBuf {
    let p = dir.path().join(name);
    std::fs::write(&p, text).unwrap();
    p
}

fn s(p: &Path) -> &str {
    p.to_str().unwrap()
}

/// Runs `check` on a document and returns whether it was accepted.
fn accepted(dir: &TempDir, doc: &Value) -> bool {
    let p = file(dir, "cert.json", &serde_json::to_string(doc).unwrap());
    let r = invdiam(&["check", s(&p)]);
    assert!(r.code == 0 || r.code == 1, "check failed to run: {}", r.stderr);
    r.doc["valid"] == true && r.code == 0
}

const K2: &str = "2 1\n0 1 1\n";
const C4_OPPOSITE: &str = "4 4\n0 1 1\n1 2 0\n2 3 1\n3 0 0\n";
const K4: &str = "4 6\n0 1 0\n0 2 0\n0 3 0\n1 2 0\n1 3 0\n2 3 0\n";
const P3: &str = "3 2\n0 1 0\n1 2 0\n";

#[test]
fn assign_examples() {
    let d = TempDir::new().unwrap();
    let r = invdiam(&["assign", s(&file(&d, "k2.ilg", K2)), "-t", "1"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.doc["verdict"], "sat");
    assert_eq!(r.doc["assignment"], serde_json::json!(["1", "1"]));
    assert!(accepted(&d, &r.doc));

    let r = invdiam(&["assign", s(&file(&d, "c4.ilg", C4_OPPOSITE)), "-t", "1"]);
    assert_eq!(r.code, 0, "unsat is a completed run");
    assert_eq!(r.doc["verdict"], "unsat");
    assert!(accepted(&d, &r.doc));

    let r = invdiam(&["assign", s(&file(&d, "bad.ilg", "2 1\n0 7 1\n")), "-t", "1"]);
    assert_eq!(r.code, 2);
    assert!(r.stdout.is_empty());
    assert!(r.stderr.contains("line 2"), "{}", r.stderr);
    let r = invdiam(&["assign", "/nonexistent/graph.ilg", "-t", "1"]);
    assert_eq!(r.code, 2);
}

#[test]
fn distance_examples() {
    let d = TempDir::new().unwrap();
    let g = file(&d, "c4.ilg", C4_OPPOSITE);
    let o = |name: &str, bits: &str| file(&d, name, &format!("{bits}\n"));
    let (a, b, c, e) = (o("a", "0000"), o("b", "0000"), o("c", "0010"), o("e", "1001"));
    let r = invdiam(&["distance", s(&g), s(&a), s(&b)]);
    assert_eq!(r.doc["distance"], 0);
    let r = invdiam(&["distance", s(&g), s(&a), s(&c)]);
    assert_eq!(r.doc["distance"], 1);
    let r = invdiam(&["distance", s(&g), s(&a), s(&e), "--oracle"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.doc["distance"], 2);
    assert_eq!(r.doc["oracle"]["bfs_distance"], 2);
    assert_eq!(r.doc["oracle"]["agree"], true);
    assert!(accepted(&d, &r.doc));
    let r = invdiam(&["distance", s(&g), s(&a), s(&o("short", "01"))]);
    assert_eq!(r.code, 2);
}

#[test]
fn diameter_examples() {
    let d = TempDir::new().unwrap();
    let r = invdiam(&["diameter", s(&file(&d, "k4.ilg", K4)), "--engine", "both"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.doc["assign"]["diameter"], 3);
    assert_eq!(r.doc["bfs"]["diameter"], 3);
    assert_eq!(r.doc["agree"], true);
    assert!(accepted(&d, &r.doc));
    for (text, want) in [(K2, 1), (P3, 1)] {
        for engine in ["assign", "bfs"] {
            let r = invdiam(&["diameter", s(&file(&d, "g.ilg", text)), "--engine", engine]);
            assert_eq!(r.doc["diameter"], want, "{engine}");
            assert!(accepted(&d, &r.doc));
        }
    }
    let r = invdiam(&["bfs-diameter", s(&file(&d, "k4.ilg", K4))]);
    assert_eq!(r.doc["diameter"], 3);
    assert!(accepted(&d, &r.doc));
    // K6 has 15 edges, past the BFS diameter budget
    let k6 = invdiam_core::graph::Graph::complete(6);
    let text = invdiam::ilg::write_ilg(&k6, &invdiam_core::graph::Label::zeros(15));
    let r = invdiam(&["bfs-diameter", s(&file(&d, "k6.ilg", &text))]);
    assert_eq!(r.code, 3);
}

#[test]
fn mindim_certificates() {
    let d = TempDir::new().unwrap();
    let r = invdiam(&["mindim", s(&file(&d, "c4.ilg", C4_OPPOSITE))]);
    assert_eq!(r.doc["min_dim"], 2);
    assert!(accepted(&d, &r.doc));
    let mut forged = r.doc.clone();
    forged["min_dim"] = 1.into();
    forged["witness"] = serde_json::json!(["1", "1", "1", "1"]);
    assert!(!accepted(&d, &forged));
}

#[test]
fn family_examples() {
    let d = TempDir::new().unwrap();
    let ilg = d.path().join("g.ilg");
    let lv = d.path().join("g.levels");
    let r = invdiam(&["family", "-k", "1", "-m", "2", "--ilg", s(&ilg), "--levels", s(&lv)]);
    assert_eq!(r.code, 0);
    assert_eq!(
        (r.doc["vertices"].clone(), r.doc["edges"].clone()),
        (9.into(), 8.into())
    );
    let (g, label) = invdiam::ilg::parse_ilg(&std::fs::read_to_string(&ilg).unwrap()).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count(), label.len()), (9, 8, 8));
    let levels = invdiam::ilg::parse_levels(&std::fs::read_to_string(&lv).unwrap()).unwrap();
    assert_eq!(levels.iter().filter(|&&l| l == 2).count(), 6);
    assert!(accepted(&d, &r.doc));

    let r = invdiam(&["family", "-k", "2", "-m", "1"]);
    assert_eq!(
        (r.doc["vertices"].clone(), r.doc["edges"].clone()),
        (6.into(), 9.into())
    );
    assert_eq!(r.doc["is_k_tree"], true);

    // the projected size first passes the million-vertex guard at m = 7
    let r = invdiam(&["family", "-k", "2", "-m", "6"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.doc["vertices"], 265_722);
    let r = invdiam(&["family", "-k", "2", "-m", "7"]);
    assert_eq!(r.code, 3);
    assert!(r.stderr.contains("guard"));

    let r = invdiam(&["family", "-k", "2", "-m", "1", "--initial-label", "01"]);
    assert_eq!(r.code, 2);
}

#[test]
fn probe_and_scan() {
    let d = TempDir::new().unwrap();
    let r = invdiam(&["probe", "-k", "2", "-m", "1", "--cap", "50"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.doc["assignments"], 50);
    assert_eq!(r.doc["passed"], true);
    let p = file(&d, "probe.json", &r.stdout);
    let c = invdiam(&["check", s(&p), "--deep"]);
    assert_eq!(c.doc["valid"], true);

    let r = invdiam(&["scan", "-k", "1", "--m-max", "3", "-t", "1"]);
    let verdicts: Vec<_> = r.doc["rows"]
        .as_array()
        .unwrap()
        .iter()
        .map(|r| r["verdict"].clone())
        .collect();
    assert_eq!(verdicts, ["sat", "sat", "unsat", "unsat"]);
    assert!(accepted(&d, &r.doc));

    // probe an assignment taken from an assign certificate
    let fam = d.path().join("f.ilg");
    invdiam(&["family", "-k", "1", "-m", "2", "--ilg", s(&fam)]);
    let a = invdiam(&["assign", s(&fam), "-t", "1"]);
    assert_eq!(a.doc["verdict"], "unsat");
    let a = invdiam(&["assign", s(&fam), "-t", "2"]);
    let cert = file(&d, "a.json", &a.stdout);
    let r = invdiam(&["probe", "-k", "1", "-m", "2", "--assignment", s(&cert)]);
    assert_eq!(r.code, 2, "probing needs dimension 2k-1 = 1");
}

#[test]
fn reduce_examples() {
    let d = TempDir::new().unwrap();
    let r = invdiam(&["reduce", "--config", "P3"]);
    assert_eq!(r.code, 0);
    assert_eq!(r.doc["configs"][0]["reducible"], true);
    assert_eq!(r.doc["configs"][0]["parts"][0]["set_tuples"], 50_421);

    let r = invdiam(&["reduce", "--config", "nosuch"]);
    assert_eq!(r.code, 2);
    let r = invdiam(&["reduce", "--config", "P3", "--mutate", "drop-everything"]);
    assert_eq!(r.code, 2);

    let r = invdiam(&["reduce", "--config", "P3", "--mutate", "drop-zero-exclusion"]);
    assert_eq!(r.code, 1, "a counterexample is a negative verdict");
    let cx = &r.doc["configs"][0]["parts"][0]["counterexample"];
    assert_eq!(cx["failure"], "stuck");
    assert!(accepted(&d, &r.doc));

    // a counterexample moved onto a configuration where it does not hold
    let mut forged = cx.clone();
    forged["kind"] = "counterexample".into();
    forged["mutations"] = serde_json::json!([]);
    assert!(!accepted(&d, &forged));
}

#[test]
fn reduce_is_schedule_independent() {
    let one = invdiam(&["reduce", "--config", "triangle", "--controls"]);
    let three = invdiam(&["reduce", "--config", "triangle", "--controls", "--jobs", "3"]);
    assert_eq!(one.code, 1);
    let strip = |mut v: Value| {
        v["params"]["jobs"] = Value::Null;
        v
    };
    assert_eq!(strip(one.doc), strip(three.doc));
}

#[test]
fn search_hard_examples() {
    let d = TempDir::new().unwrap();
    let f = file(&d, "g.ilg", &format!("{K4}\n{C4_OPPOSITE}"));
    let r = invdiam(&["search-hard", s(&f), "--t-max", "4", "--seed", "5"]);
    assert_eq!(r.code, 0);
    let res = r.doc["results"].as_array().unwrap();
    assert_eq!(res[0]["min_dim"], 3);
    assert_eq!(res[1]["min_dim"], 2);
    assert_eq!(res[0]["exhaustive"], true);
    assert_eq!(r.doc["params"]["seed"], 5);
    assert!(accepted(&d, &r.doc));

    let r = invdiam(&["search-hard", s(&file(&d, "empty.ilg", "# nothing\n"))]);
    assert_eq!(r.code, 0);
    assert_eq!(r.doc["results"], serde_json::json!([]));
    assert_eq!(r.doc["best"], Value::Null);
}

#[test]
fn output_flag_and_meta() {
    let d = TempDir::new().unwrap();
    let g = file(&d, "k2.ilg", K2);
    let out = d.path().join("out.json");
    let r = invdiam(&["assign", s(&g), "-t", "1", "--output", s(&out)]);
    assert!(r.stdout.is_empty());
    let doc: Value = serde_json::from_str(&std::fs::read_to_string(&out).unwrap()).unwrap();
    assert_eq!(doc["verdict"], "sat");
    assert!(doc.get("meta").is_none());

    let with_meta = Command::new(env!("CARGO_BIN_EXE_invdiam"))
        .args(["assign", s(&g), "-t", "1"])
        .output()
        .unwrap();
    let doc: Value = serde_json::from_slice(&with_meta.stdout).unwrap();
    assert_eq!(doc["meta"]["version"], env!("CARGO_PKG_VERSION"));

    let r = invdiam(&["assign", s(&g), "-t", "1", "--pretty"]);
    assert!(r.stderr.contains("sat"));
}

#[test]
fn identical_runs_are_byte_identical() {
    let d = TempDir::new().unwrap();
    let k4 = file(&d, "k4.ilg", K4);
    let corpus = file(&d, "c.ilg", &format!("{K4}\n{C4_OPPOSITE}\n{P3}"));
    let runs: [&[&str]; 5] = [
        &["diameter", s(&k4), "--engine", "both"],
        &["search-hard", s(&corpus), "--budget", "8", "--seed", "3"],
        &["reduce", "--config", "C4_a"],
        &["probe", "-k", "1", "-m", "1"],
        &["scan", "-k", "1", "--m-max", "2", "-t", "2"],
    ];
    for args in runs {
        let a = invdiam(args);
        let b = invdiam(args);
        assert_eq!(a.code, 0, "{args:?}: {}", a.stderr);
        assert_eq!(a.stdout, b.stdout, "{args:?}");
    }
}

#[test]
fn check_rejects_garbage() {
    let d = TempDir::new().unwrap();
    let r = invdiam(&["check", s(&file(&d, "x.json", "not json"))]);
    assert_eq!(r.code, 2);
    let r = invdiam(&["check", s(&file(&d, "x.json", r#"{"kind":"mystery"}"#))]);
    assert_eq!(r.code, 2);
}
