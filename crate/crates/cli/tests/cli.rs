//! End-to-end checks of the command-line surface: exit codes, output
//! determinism, and the JSON file formats.

use std::path::{Path, PathBuf};
use std::process::{Command, Output};

fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_splines")
}

fn run(args: &[&str]) -> Output {
    Command::new(bin())
        .args(args)
        .output()
        .expect("binary runs")
}

fn write(dir: &Path, name: &str, contents: &str) -> PathBuf {
    let path = dir.join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn scratch_dir(tag: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("splines-cli-{tag}-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    dir
}

const SQUARE: &str = r#"{
  "vertices": ["v1", "v2", "v3", "v4"],
  "edges": [
    {"u": "v1", "v": "v2", "label": "(x+y)^2"},
    {"u": "v1", "v": "v3", "label": "(x+2y)^2"},
    {"u": "v2", "v": "v4", "label": "(x+2y)^2"},
    {"u": "v3", "v": "v4", "label": "(x+y)^2"}
  ]
}"#;

const TRIANGLE: &str = r#"{
  "vertices": ["v1", "v2", "v3"],
  "edges": [
    {"u": "v1", "v": "v2", "label": "(x+y)^2"},
    {"u": "v1", "v": "v3", "label": "(x+2y)^2"},
    {"u": "v2", "v": "v3", "label": "(x+2y)^2 - (x+y)^2"}
  ]
}"#;

#[test]
fn mgs_square_prints_sequence_and_writes_json() {
    let dir = scratch_dir("mgs");
    let graph = write(&dir, "square.json", SQUARE);
    let out_path = dir.join("set.json");
    let out = run(&[
        "mgs",
        graph.to_str().unwrap(),
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("generators: 4"));
    assert!(text.contains("degree sequence: (1,0,2,0,1)"));
    // The last generator carries the product of the two labels.
    assert!(text.contains("x^4 + 6x^3y + 13x^2y^2 + 12xy^3 + 4y^4"));

    let json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&out_path).unwrap()).unwrap();
    assert_eq!(json["generators"].as_array().unwrap().len(), 4);
    assert_eq!(json["degree_sequence"], serde_json::json!([1, 0, 2, 0, 1]));

    // Identical inputs give byte-identical outputs.
    let rerun = run(&["mgs", graph.to_str().unwrap()]);
    let rerun2 = run(&["mgs", graph.to_str().unwrap()]);
    assert_eq!(rerun.stdout, rerun2.stdout);
}

#[test]
fn mgs_one_label_edge() {
    let dir = scratch_dir("edge");
    let graph = write(
        &dir,
        "edge.json",
        r#"{"vertices": ["u", "v"],
            "edges": [{"u": "u", "v": "v", "label": "(x+y)^2"}]}"#,
    );
    let out = run(&["mgs", graph.to_str().unwrap()]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("generators: 2"));
    assert!(text.contains("degree sequence: (1,0,1)"));
}

#[test]
fn mgs_unsupported_graph_exits_two() {
    let dir = scratch_dir("unsupported");
    let graph = write(
        &dir,
        "k4.json",
        r#"{
          "vertices": ["a", "b", "c", "d"],
          "edges": [
            {"u": "a", "v": "b", "label": "(x+y)^2"},
            {"u": "a", "v": "c", "label": "(x+2y)^2"},
            {"u": "a", "v": "d", "label": "(x+3y)^2"},
            {"u": "b", "v": "c", "label": "(x+3y)^2"},
            {"u": "b", "v": "d", "label": "(x+2y)^2"},
            {"u": "c", "v": "d", "label": "(x+y)^2"}
          ]
        }"#,
    );
    let out = run(&["mgs", graph.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_accepts_classic_triangle_spline() {
    let dir = scratch_dir("verify");
    let graph = write(&dir, "triangle.json", TRIANGLE);
    let spline = write(
        &dir,
        "spline.json",
        r#"{"entries": {"v1": "0", "v2": "(x+y)^2(x+2y)^2", "v3": "(x+2y)^4"}}"#,
    );
    let out = run(&["verify", graph.to_str().unwrap(), spline.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().contains("PASS"));

    let constant = write(
        &dir,
        "constant.json",
        r#"{"entries": {"v1": "5/3", "v2": "5/3", "v3": "5/3"}}"#,
    );
    let out = run(&[
        "verify",
        graph.to_str().unwrap(),
        constant.to_str().unwrap(),
    ]);
    assert!(out.status.success());
}

#[test]
fn verify_reports_violating_edges() {
    let dir = scratch_dir("verify-fail");
    let graph = write(&dir, "triangle.json", TRIANGLE);
    let spline = write(
        &dir,
        "bad.json",
        r#"{"entries": {"v1": "0", "v2": "x", "v3": "0"}}"#,
    );
    let out = run(&["verify", graph.to_str().unwrap(), spline.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(1));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("FAIL"));
    assert!(text.contains("edge v1-v2"));
}

#[test]
fn certify_passes_construction_and_fails_redundant() {
    let dir = scratch_dir("certify");
    let graph = write(&dir, "square.json", SQUARE);
    let set_path = dir.join("set.json");
    let out = run(&[
        "mgs",
        graph.to_str().unwrap(),
        "--out",
        set_path.to_str().unwrap(),
    ]);
    assert!(out.status.success());

    let out = run(&[
        "certify",
        graph.to_str().unwrap(),
        set_path.to_str().unwrap(),
        "--dmax",
        "4",
    ]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().ends_with("PASS\n"));

    // Append a duplicate generator: certification must fail with exit 1.
    let mut json: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&set_path).unwrap()).unwrap();
    let dup = json["generators"][1].clone();
    json["generators"].as_array_mut().unwrap().push(dup);
    json.as_object_mut().unwrap().remove("degree_sequence");
    let redundant = write(&dir, "redundant.json", &json.to_string());
    let out = run(&[
        "certify",
        graph.to_str().unwrap(),
        redundant.to_str().unwrap(),
        "--dmax",
        "4",
    ]);
    assert_eq!(out.status.code(), Some(1));

    // Degree zero alone checks the constants and passes for the real set.
    let out = run(&[
        "certify",
        graph.to_str().unwrap(),
        set_path.to_str().unwrap(),
        "--dmax",
        "0",
    ]);
    assert!(out.status.success());
}

#[test]
fn pinwheel_reports_three_way_agreement() {
    let dir = scratch_dir("pinwheel");
    let pin = write(
        &dir,
        "singular.json",
        r#"{"center": [0, 0], "rays": ["x", "y", "-x", "-y"], "r": 1}"#,
    );
    let out = run(&["pinwheel", pin.to_str().unwrap(), "--dmax", "5"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("singular"));
    assert!(text.contains("degree 4: generators 28 formula 28 oracle 28 PASS"));

    let generic = write(
        &dir,
        "generic.json",
        r#"{"center": ["1/2", "-1"], "rays": ["x - 1/2", "y + 1", "x + y + 1/2", "x - y - 3/2", "x + 2y + 3/2"], "r": 1}"#,
    );
    let out = run(&["pinwheel", generic.to_str().unwrap(), "--dmax", "6"]);
    assert!(out.status.success());
    assert!(String::from_utf8(out.stdout).unwrap().ends_with("PASS\n"));

    // Adjacent collinear rays are rejected as degenerate geometry.
    let degenerate = write(
        &dir,
        "degenerate.json",
        r#"{"center": [0, 0], "rays": ["x", "2x", "y"], "r": 1}"#,
    );
    let out = run(&["pinwheel", degenerate.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn degseq_lookup() {
    for (n, labels, expect) in [
        ("6", "3", "(1,0,3,2)"),
        ("4", "2", "(1,0,2,0,1)"),
        ("3", "1", "(1,0,2)"),
        ("8", "5", "(1,0,5,2)"),
    ] {
        let out = run(&["degseq", n, labels]);
        assert!(out.status.success());
        assert_eq!(String::from_utf8(out.stdout).unwrap().trim(), expect);
    }
    let out = run(&["degseq", "2", "1"]);
    assert_eq!(out.status.code(), Some(2));
}
