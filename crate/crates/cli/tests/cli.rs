use std::path::{Path, PathBuf};
use std::process::{Command, Output};
use std::sync::OnceLock;

use jsonschema::JSONSchema;
use oddcolor::io::parse_dimacs;
use serde_json::Value;

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_oddcolor"));
    for var in [
        "ODDCOLOR_VMAX_CAP",
        "ODDCOLOR_SCHRIJVER_CAP",
        "ODDCOLOR_BUDGET",
    ] {
        c.env_remove(var);
    }
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().unwrap()
}

fn code(out: &Output) -> i32 {
    out.status.code().unwrap()
}

fn schema() -> &'static JSONSchema {
    static SCHEMA: OnceLock<JSONSchema> = OnceLock::new();
    SCHEMA.get_or_init(|| {
        let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("../../schema/output.schema.json");
        let value: Value = serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap();
        JSONSchema::compile(&value).unwrap()
    })
}

/// Parses stdout as JSON and validates it against the shipped schema.
fn json(out: &Output) -> Value {
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    if let Err(errors) = schema().validate(&v) {
        let msgs: Vec<String> = errors
            .map(|e| format!("{e} at {}", e.instance_path))
            .collect();
        panic!("schema violations: {msgs:?}\n{v:#}");
    }
    v
}

fn write(dir: &Path, name: &str, args: &[&str]) -> PathBuf {
    let path = dir.join(name);
    let mut full = vec!["gen"];
    full.extend_from_slice(args);
    full.extend_from_slice(&["--out", path.to_str().unwrap()]);
    let out = run(&full);
    assert_eq!(code(&out), 0, "{}", String::from_utf8_lossy(&out.stderr));
    path
}

#[test]
fn schema_rejects_malformed_documents() {
    for doc in [
        serde_json::json!({ "command": "check" }),
        serde_json::json!({ "command": "bounds", "rows": [{ "n": 2 }] }),
        serde_json::json!({ "command": "unknown" }),
    ] {
        assert!(!schema().is_valid(&doc), "{doc}");
    }
}

#[test]
fn bounds_csv_and_json() {
    let out = run(&["bounds", "--n", "2..6", "--k", "2..4", "--format", "csv"]);
    assert_eq!(code(&out), 0);
    let text = String::from_utf8(out.stdout).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next(),
        Some("n,k,kst_lower,quad_lower,factorial_lower,recurrent_lower,schrijver_upper_incl,erdos_upper_incl,best_lower,best_upper")
    );
    assert_eq!(lines.count(), 15);

    let v = json(&run(&[
        "bounds", "--n", "2", "--k", "2", "--format", "json",
    ]));
    assert_eq!(v["rows"][0]["best_lower"], 4);
    assert_eq!(v["rows"][0]["best_upper"], "4");

    let v = json(&run(&[
        "bounds", "--n", "1..1", "--k", "2", "--format", "json",
    ]));
    assert_eq!(v["rows"][0]["best_lower"], 1);

    let md = run(&["bounds", "--n", "2..3", "--k", "3", "--format", "markdown"]);
    assert!(String::from_utf8(md.stdout).unwrap().starts_with('|'));
}

#[test]
fn bounds_rejects_bad_ranges() {
    for (n, k) in [
        ("0..3", "2"),
        ("4..2", "2"),
        ("2", "1"),
        ("2", "x"),
        ("2..500", "2"),
    ] {
        assert_eq!(
            code(&run(&["bounds", "--n", n, "--k", k])),
            2,
            "n={n} k={k}"
        );
    }
}

#[test]
fn generated_graphs_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let cases: &[(&str, &[&str], usize)] = &[
        ("sg.col", &["schrijver", "--m", "2", "--d", "1"], 5),
        ("c7.col", &["cycle", "--len", "7"], 7),
        (
            "rand.col",
            &["random", "--vertices", "12", "--density", "0.3"],
            12,
        ),
    ];
    for (name, args, vertices) in cases {
        let path = write(dir.path(), name, args);
        let emitted = parse_dimacs(&std::fs::read_to_string(&path).unwrap()).unwrap();
        assert_eq!(emitted.vertex_count(), *vertices);
        let v = json(&run(&[
            "check",
            "--input",
            path.to_str().unwrap(),
            "--k",
            "2",
        ]));
        assert_eq!(v["vertices"], emitted.vertex_count());
        assert_eq!(v["edges"], emitted.edge_count());
    }
    let c5 = write(dir.path(), "c5.col", &["cycle", "--len", "5"]);
    let m = write(
        dir.path(),
        "m.col",
        &["mycielski", "--input", c5.to_str().unwrap()],
    );
    let g = parse_dimacs(&std::fs::read_to_string(m).unwrap()).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (11, 20));

    let a = run(&["gen", "random", "--vertices", "10", "--density", "0.4"]);
    let b = run(&[
        "gen",
        "random",
        "--vertices",
        "10",
        "--density",
        "0.4",
        "--seed",
        "1",
    ]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn check_reports_violations() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.col", &["cycle", "--len", "5"]);
    let path = c5.to_str().unwrap();

    let ok = run(&["check", "--input", path, "--k", "2"]);
    assert_eq!(code(&ok), 0);
    assert_eq!(json(&ok)["status"], "ok");

    let bad = run(&["check", "--input", path, "--k", "3"]);
    assert_eq!(code(&bad), 1);
    let v = json(&bad);
    assert_eq!(v["status"], "violation");
    assert_eq!(v["violation"]["violation"]["radius"], 2);
    assert_eq!(
        v["violation"]["certificate"]["vertices"]
            .as_array()
            .unwrap()
            .len(),
        5
    );
}

#[test]
fn colorings() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.col", &["cycle", "--len", "5"]);
    let grotzsch = write(
        dir.path(),
        "g.col",
        &["mycielski", "--input", c5.to_str().unwrap()],
    );
    let g = grotzsch.to_str().unwrap();

    let out = run(&[
        "color", "--input", g, "--n", "4", "--k", "2", "--method", "exact",
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["result"]["status"], "colored");
    assert_eq!(
        v["result"]["coloring"]["assignment"]
            .as_array()
            .unwrap()
            .len(),
        11
    );

    let out = run(&["color", "--input", g, "--n", "3", "--method", "exact"]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["result"]["status"], "not_colorable");

    let out = run(&[
        "color", "--input", g, "--n", "3", "--k", "2", "--method", "carve",
    ]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["result"]["status"], "failed");

    let out = run(&[
        "color",
        "--input",
        c5.to_str().unwrap(),
        "--n",
        "2",
        "--method",
        "bipartite",
    ]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["result"]["status"], "odd_cycle");

    let c8 = write(dir.path(), "c8.col", &["cycle", "--len", "8"]);
    let out = run(&[
        "color",
        "--input",
        c8.to_str().unwrap(),
        "--n",
        "2",
        "--k",
        "5",
        "--method",
        "layer",
    ]);
    assert_eq!(code(&out), 0);
    assert_eq!(
        json(&out)["result"]["coloring"]["assignment"],
        serde_json::json!([0, 1, 0, 1, 0, 1, 0, 1])
    );

    let out = run(&["color", "--input", g, "--n", "4", "--format", "dimacs"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("v ")).count(), 11);
}

#[test]
fn decomposition() {
    let dir = tempfile::tempdir().unwrap();
    let c5 = write(dir.path(), "c5.col", &["cycle", "--len", "5"]);
    let path = c5.to_str().unwrap();
    let out = run(&["decompose", "--input", path, "--k", "2"]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["result"]["balls"], serde_json::json!([[0], [2]]));
    assert_eq!(v["result"]["boundary"], serde_json::json!([1, 3, 4]));

    let out = run(&[
        "decompose",
        "--input",
        path,
        "--k",
        "3",
        "--rule",
        "min-ball",
        "--variant",
        "vertex-count-root",
    ]);
    assert_eq!(code(&out), 1);
    assert_eq!(json(&out)["status"], "violation");
}

#[test]
fn oracle_exit_codes_and_witness() {
    let dir = tempfile::tempdir().unwrap();
    let witness = dir.path().join("w.col");
    let out = run(&[
        "oracle",
        "--n",
        "2",
        "--k",
        "2",
        "--vmax",
        "6",
        "--witness-out",
        witness.to_str().unwrap(),
    ]);
    assert_eq!(code(&out), 0);
    let v = json(&out);
    assert_eq!(v["result"]["status"], "exact");
    assert_eq!(v["result"]["value"], 4);
    let g = parse_dimacs(&std::fs::read_to_string(&witness).unwrap()).unwrap();
    assert_eq!((g.vertex_count(), g.edge_count()), (5, 5));

    let out = run(&[
        "oracle", "--n", "2", "--k", "2", "--vmax", "4", "--jobs", "2",
    ]);
    assert_eq!(code(&out), 1);
    let v = json(&out);
    assert_eq!(v["result"]["status"], "lower_bound_only");
    assert!(v["witness_path"].is_null());

    assert_eq!(
        code(&run(&["oracle", "--n", "3", "--k", "2", "--vmax", "11"])),
        2
    );
    assert_eq!(
        code(&run(&["oracle", "--n", "2", "--k", "1", "--vmax", "4"])),
        2
    );
}

#[test]
fn environment_caps() {
    let out = bin()
        .args(["oracle", "--n", "2", "--k", "2", "--vmax", "6"])
        .env("ODDCOLOR_VMAX_CAP", "5")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
    let out = bin()
        .args(["gen", "schrijver", "--m", "2", "--d", "2"])
        .env("ODDCOLOR_SCHRIJVER_CAP", "8")
        .output()
        .unwrap();
    assert_eq!(code(&out), 2);
    let out = bin()
        .args(["gen", "schrijver", "--m", "2", "--d", "2", "--cap", "9"])
        .env("ODDCOLOR_SCHRIJVER_CAP", "8")
        .output()
        .unwrap();
    assert_eq!(code(&out), 0);
}

#[test]
fn usage_and_input_errors() {
    let dir = tempfile::tempdir().unwrap();
    assert_eq!(code(&run(&[])), 2);
    assert_eq!(code(&run(&["frobnicate"])), 2);
    assert_eq!(
        code(&run(&["check", "--input", "/nonexistent.col", "--k", "2"])),
        2
    );
    assert_eq!(code(&run(&["gen", "cycle", "--len", "2"])), 2);
    assert_eq!(code(&run(&["gen", "schrijver", "--m", "0", "--d", "1"])), 2);
    assert_eq!(
        code(&run(&[
            "gen",
            "random",
            "--vertices",
            "4",
            "--density",
            "1.5"
        ])),
        2
    );

    let bad = dir.path().join("bad.col");
    std::fs::write(&bad, "p edge 3 2\ne 1 2\ne 2 1\n").unwrap();
    let out = run(&["check", "--input", bad.to_str().unwrap(), "--k", "2"]);
    assert_eq!(code(&out), 2);
    assert!(String::from_utf8_lossy(&out.stderr).contains("line 3"));

    let edges = dir.path().join("tri.txt");
    std::fs::write(&edges, "0 1\n1 2\n2 0\n").unwrap();
    let out = run(&["check", "--input", edges.to_str().unwrap(), "--k", "2"]);
    assert_eq!(code(&out), 1);
    let out = run(&[
        "check",
        "--input",
        edges.to_str().unwrap(),
        "--input-format",
        "dimacs",
        "--k",
        "2",
    ]);
    assert_eq!(code(&out), 2);
}
