//! End-to-end checks of the binary: file round-trips, exit codes, and
//! determinism of the verify reports.

use std::process::{Command, Output};

fn ffchain(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_ffchain"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf8 output")
}

#[test]
fn generate_load_reserialize_is_byte_identical() {
    let dir = tempfile::tempdir().unwrap();
    for family in ["ladder", "n", "butterfly", "skewed"] {
        let path = dir.path().join(format!("{family}.json"));
        let args: Vec<String> = match family {
            "ladder" => vec!["generate".into(), family.into(), "4".into()],
            _ => vec!["generate".into(), family.into()],
        };
        let mut full: Vec<&str> = args.iter().map(String::as_str).collect();
        let path_str = path.to_str().unwrap();
        full.extend(["--out", path_str]);
        let out = ffchain(&full);
        assert!(out.status.success(), "generate {family} failed");

        let first = std::fs::read_to_string(&path).unwrap();
        let reloaded = ffchain::io::poset_from_json(&first).unwrap();
        let second = ffchain::io::poset_to_json(&reloaded);
        assert_eq!(first, second, "{family} round-trip changed bytes");
    }
}

#[test]
fn generate_ladder_four_has_eight_elements() {
    let out = ffchain(&["generate", "ladder", "4"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["n"], 8);
}

#[test]
fn generate_reservoir_bundle_has_full_order() {
    let out = ffchain(&["generate", "reservoir", "3"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["order"].as_array().unwrap().len(), 17);
    assert_eq!(v["wall"]["chains"].as_array().unwrap().len(), 7);
}

#[test]
fn generate_butterfly_lb_bundle() {
    let out = ffchain(&["generate", "butterfly-lb", "2"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["wall"]["chains"].as_array().unwrap().len(), 21);
    assert_eq!(v["meta"]["width"], 7);
}

#[test]
fn unknown_family_exits_two() {
    let out = ffchain(&["generate", "zigzag"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn malformed_poset_file_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    std::fs::write(&path, r#"{"n": 2, "relations": [[0, 1], [1, 0]]}"#).unwrap();
    let out = ffchain(&["firstfit", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn firstfit_on_reservoir_bundle_poset(){
    let dir = tempfile::tempdir().unwrap();
    let bundle = dir.path().join("r2.json");
    assert!(ffchain(&["generate", "reservoir", "2", "--out", bundle.to_str().unwrap()])
        .status
        .success());
    // extract poset and order from the bundle into standalone files
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&bundle).unwrap()).unwrap();
    let poset_path = dir.path().join("poset.json");
    std::fs::write(&poset_path, serde_json::to_string(&v["poset"]).unwrap()).unwrap();
    let order_path = dir.path().join("order.json");
    std::fs::write(
        &order_path,
        serde_json::to_string(&serde_json::json!({ "order": v["order"] })).unwrap(),
    )
    .unwrap();

    let out = ffchain(&[
        "firstfit",
        poset_path.to_str().unwrap(),
        "--order-file",
        order_path.to_str().unwrap(),
        "--trace",
    ]);
    assert!(out.status.success());
    let report: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(report["maxChainsObserved"], 3);
    assert!(report["runs"][0]["trace"].is_array());
}

#[test]
fn firstfit_random_orders_deterministic_under_seed() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("l3.json");
    assert!(ffchain(&["generate", "ladder", "3", "--out", path.to_str().unwrap()])
        .status
        .success());
    let a = stdout_str(&ffchain(&[
        "firstfit",
        path.to_str().unwrap(),
        "--random-orders",
        "5",
        "--seed",
        "99",
    ]));
    let b = stdout_str(&ffchain(&[
        "firstfit",
        path.to_str().unwrap(),
        "--random-orders",
        "5",
        "--seed",
        "99",
    ]));
    assert_eq!(a, b);
}

#[test]
fn classify_skewed_butterfly_is_exponential_lower() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("skew.json");
    assert!(ffchain(&["generate", "skewed", "--out", path.to_str().unwrap()])
        .status
        .success());
    let out = ffchain(&["classify", path.to_str().unwrap(), "--gamma", "1.0"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["inQ"], false);
    assert_eq!(v["bound"]["kind"], "exponentialLower");
}

#[test]
fn classify_chain_reports_the_constant() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c1.json");
    assert!(ffchain(&["generate", "chain", "1", "--out", path.to_str().unwrap()])
        .status
        .success());
    let out = ffchain(&["classify", path.to_str().unwrap(), "--gamma", "1.0"]);
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["inQ"], true);
    assert_eq!(v["bound"]["C"], 7.0); // 6k + γ(1 + lg 1) = 6 + 1
}

#[test]
fn classify_wide_poset_exits_two() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("a3.json");
    assert!(ffchain(&["generate", "antichain", "3", "--out", path.to_str().unwrap()])
        .status
        .success());
    let out = ffchain(&["classify", path.to_str().unwrap(), "--gamma", "1.0"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn verify_reservoir_passes_and_is_deterministic() {
    let strip_timing = |s: &str| -> serde_json::Value {
        let mut v: serde_json::Value = serde_json::from_str(s).unwrap();
        v.as_object_mut().unwrap().remove("timingMs");
        v
    };
    let a = stdout_str(&ffchain(&["verify", "reservoir", "--kmax", "3", "--seed", "7"]));
    let b = stdout_str(&ffchain(&["verify", "reservoir", "--kmax", "3", "--seed", "7"]));
    assert_eq!(strip_timing(&a), strip_timing(&b));
    assert_eq!(strip_timing(&a)["pass"], true);
}

#[test]
fn verify_classifier_small_sweep_passes() {
    let out = ffchain(&["verify", "classifier", "--nmax", "4"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["instances"][4]["labeledPosets"], 219);
}

#[test]
fn verify_dilworth_small_sweep_passes() {
    let out = ffchain(&["verify", "dilworth", "--nmax", "4"]);
    assert!(out.status.success());
}

#[test]
fn verify_butterfly_passes() {
    let out = ffchain(&["verify", "butterfly", "--q", "2"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["pass"], true);
    assert_eq!(v["instances"][0]["wallSize"], 21);
    assert_eq!(v["instances"][0]["butterflyFree"], true);
}

#[test]
fn verify_unknown_target_exits_two() {
    let out = ffchain(&["verify", "everything"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn maxwall_of_butterfly() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("b.json");
    assert!(ffchain(&["generate", "butterfly", "--out", path.to_str().unwrap()])
        .status
        .success());
    let out = ffchain(&["maxwall", path.to_str().unwrap()]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["maxWallSize"], 2);
    assert_eq!(v["exact"], true);
    assert_eq!(v["replayMatches"], true);
}

#[test]
fn bounds_eval_kinds() {
    let out = ffchain(&[
        "bounds", "eval", "--kind", "seriesComposition", "--params", "s=1,t=2,w=2",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["value"], 14);

    let out = ffchain(&[
        "bounds", "eval", "--kind", "corollarySeries", "--params", "cs=1:1,w=4",
    ]);
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["exponentLog2"], 56.0);

    let out = ffchain(&["bounds", "eval", "--kind", "ksLadder", "--params", "w=2,n=2,gamma=1"]);
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["exponentLog2"], 2.0);

    let out = ffchain(&["bounds", "eval", "--kind", "stackedButterfly", "--params", "k=1,w=4"]);
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["exponentLog2"], 3.0);
    assert!(v["note"].is_string());

    let out = ffchain(&["bounds", "eval", "--kind", "nonsense", "--params", "w=2"]);
    assert_eq!(out.status.code(), Some(2));

    // corollary formula degenerates below w = 2
    let out = ffchain(&[
        "bounds", "eval", "--kind", "corollarySeries", "--params", "cs=1,w=1",
    ]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn export_dot_draws_cover_edges() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("c3.json");
    assert!(ffchain(&["generate", "chain", "3", "--out", path.to_str().unwrap()])
        .status
        .success());
    let out = ffchain(&["export-dot", path.to_str().unwrap()]);
    let dot = stdout_str(&out);
    assert_eq!(dot.matches("->").count(), 2);
}

#[test]
fn export_dot_uses_labels() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("skew.json");
    assert!(ffchain(&["generate", "skewed", "--out", path.to_str().unwrap()])
        .status
        .success());
    let dot = stdout_str(&ffchain(&["export-dot", path.to_str().unwrap()]));
    assert!(dot.contains("label=\"x1\""));
    assert!(dot.contains("label=\"y2\""));
}
