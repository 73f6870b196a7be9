use std::path::Path;
use std::process::{Command, Output};

fn balloon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_balloon")).args(args).output().unwrap()
}

fn path(p: &Path) -> &str {
    p.to_str().unwrap()
}

fn json(p: &Path) -> serde_json::Value {
    serde_json::from_slice(&std::fs::read(p).unwrap()).unwrap()
}

#[test]
fn two_free_single_balloon() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("one.json");
    let out = dir.path().join("layout.json");
    std::fs::write(&inst, r#"{"radii": [1], "free_spokes": 2}"#).unwrap();
    let o = balloon(&["layout", "--in", path(&inst), "--out", path(&out), "--format", "json"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let r = json(&out)["covering_radius"].as_f64().unwrap();
    assert!((r - 2.05146).abs() < 1e-5);
    assert_eq!(balloon(&["verify", "--in", path(&out)]).status.code(), Some(0));
}

#[test]
fn corrupted_layout_fails_verification() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("i.json");
    let out = dir.path().join("l.json");
    std::fs::write(&inst, r#"{"radii": [0.25, 0.25, 0.25, 0.25]}"#).unwrap();
    assert_eq!(balloon(&["layout", "--in", path(&inst), "--out", path(&out)]).status.code(), Some(0));
    let mut doc = json(&out);
    doc["placements"][0]["center_distance"] = serde_json::json!(0.01);
    std::fs::write(&out, serde_json::to_vec(&doc).unwrap()).unwrap();
    let o = balloon(&["verify", "--in", path(&out)]);
    assert_eq!(o.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&o.stdout).contains("FAIL"));
}

#[test]
fn generated_equal_instance() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("i.json");
    let out = dir.path().join("l.json");
    let g = balloon(&["gen", "--kind", "radii", "--n", "8", "--dist", "equal", "--seed", "1", "--out", path(&inst)]);
    assert_eq!(g.status.code(), Some(0));
    assert_eq!(balloon(&["layout", "--in", path(&inst), "--out", path(&out)]).status.code(), Some(0));
    let r = json(&out)["covering_radius"].as_f64().unwrap();
    // π/2 wedges, then a contact round, then the two-spoke base case
    let expected = 0.5 + 0.125 * (1.0 + 2f64.sqrt());
    assert!((r - expected).abs() < 1e-12, "{r}");
    assert!(r <= 2.0);
}

#[test]
fn bad_usage_exits_two() {
    assert_eq!(balloon(&["layout"]).status.code(), Some(2));
    assert_eq!(balloon(&["frobnicate"]).status.code(), Some(2));
    assert_eq!(balloon(&["gen", "--kind", "radii", "--n", "4", "--dist", "zipf"]).status.code(), Some(2));
    let dir = tempfile::tempdir().unwrap();
    let missing = dir.path().join("nope.json");
    assert_eq!(balloon(&["verify", "--in", path(&missing)]).status.code(), Some(2));
    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, r#"{"free_spokes": 0}"#).unwrap();
    let o = balloon(&["layout", "--in", path(&bad)]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("radii"));
}

#[test]
fn tree_round_trip_and_determinism() {
    let dir = tempfile::tempdir().unwrap();
    let tree = dir.path().join("t.txt");
    let a = dir.path().join("a.svg");
    let b = dir.path().join("b.svg");
    let d = dir.path().join("d.json");
    let g = balloon(&["gen", "--kind", "tree", "--n", "60", "--dist", "powerlaw", "--seed", "4", "--out", path(&tree)]);
    assert_eq!(g.status.code(), Some(0));
    for out in [&a, &b] {
        assert_eq!(balloon(&["tree", "--in", path(&tree), "--out", path(out), "--format", "svg"]).status.code(), Some(0));
    }
    assert_eq!(std::fs::read(&a).unwrap(), std::fs::read(&b).unwrap());

    let o = balloon(&["tree", "--in", path(&tree), "--out", path(&d), "--stats"]);
    assert_eq!(o.status.code(), Some(0));
    let stats: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(stats["n"], 60);
    assert!(stats["exponent"].as_f64().unwrap() < 3.0367);
    assert!(stats["min_edge_length"].as_f64().unwrap() >= 1.0 - 1e-9);
    assert_eq!(balloon(&["verify", "--in", path(&d)]).status.code(), Some(0));

    let parens = dir.path().join("p.txt");
    std::fs::write(&parens, "(()(()()))").unwrap();
    assert_eq!(balloon(&["tree", "--in", path(&parens), "--out", path(&d)]).status.code(), Some(0));
}

#[test]
fn json_output_is_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let inst = dir.path().join("i.json");
    let g = balloon(&["gen", "--kind", "radii", "--n", "50", "--dist", "uniform", "--seed", "9", "--free", "1", "--out", path(&inst)]);
    assert_eq!(g.status.code(), Some(0));
    let x = balloon(&["layout", "--in", path(&inst)]);
    let y = balloon(&["layout", "--in", path(&inst)]);
    assert_eq!(x.status.code(), Some(0));
    assert_eq!(x.stdout, y.stdout);
    assert_eq!(serde_json::from_slice::<serde_json::Value>(&x.stdout).unwrap()["free_spokes"].as_array().unwrap().len(), 1);
}

#[test]
fn bench_prints_ratios() {
    let o = balloon(&["bench", "--max-n", "4096", "--runs", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let text = String::from_utf8_lossy(&o.stdout);
    assert_eq!(text.lines().filter(|l| l.contains(") / t(")).count(), 2);
}
