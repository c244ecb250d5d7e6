use std::fs;
use std::process::{Command, Output};

use serde_json::Value;

fn sgeo(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sgeo")).args(args).output().expect("failed to run sgeo")
}

fn json(out: &Output) -> Value {
    assert!(out.status.success(), "stderr: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn without_elapsed(mut v: Value) -> Value {
    v.as_object_mut().unwrap().remove("elapsed_ms");
    v
}

#[test]
fn compute_petersen() {
    let v = json(&sgeo(&["compute", "--named", "petersen"]));
    assert_eq!(v["schema"], 1);
    assert_eq!(v["sg"], 4);
    assert_eq!(v["method"], "exact");
    assert_eq!(v["geodesics"].as_array().unwrap().len(), 6);
    assert_eq!(v["bounds"]["lb_interior_capacity"], 4);
    assert_eq!(v["lower_bound_used"]["source"], "interior_capacity");
}

#[test]
fn compute_path_and_methods() {
    assert_eq!(json(&sgeo(&["compute", "--named", "path:9"]))["sg"], 2);
    let oracle = json(&sgeo(&["compute", "--named", "cycle:6", "--method", "oracle"]));
    assert_eq!((oracle["sg"].clone(), oracle["method"].clone()), (3.into(), "oracle".into()));
    let formula = json(&sgeo(&["compute", "--named", "kmn:7,7", "--method", "formula"]));
    assert_eq!(formula["sg"], 7);
    assert_eq!(sgeo(&["compute", "--named", "path:4", "--method", "formula"]).status.code(), Some(8));
    assert_eq!(sgeo(&["compute", "--named", "path:11", "--method", "oracle"]).status.code(), Some(6));
}

#[test]
fn output_is_stable_across_runs_and_threads() {
    let args = ["compute", "--named", "random:9,0.4,7"];
    let a = without_elapsed(json(&sgeo(&args)));
    let b = without_elapsed(json(&sgeo(&args)));
    let c = without_elapsed(json(&sgeo(&[&args[..], &["--threads", "3"]].concat())));
    assert_eq!(a, b);
    assert_eq!(a, c);
}

#[test]
fn error_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let disconnected = dir.path().join("d.edges");
    fs::write(&disconnected, "4 2\n0 1\n2 3\n").unwrap();
    let out = sgeo(&["compute", "--file", disconnected.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(4));
    assert!(String::from_utf8_lossy(&out.stderr).contains("between 0 and 2"));

    let malformed = dir.path().join("m.edges");
    fs::write(&malformed, "3 2\n0 1\n").unwrap();
    assert_eq!(sgeo(&["compute", "--file", malformed.to_str().unwrap()]).status.code(), Some(3));
    assert_eq!(sgeo(&["compute", "--file", "/nonexistent/g.edges"]).status.code(), Some(3));

    assert_eq!(sgeo(&["compute", "--named", "kmn:5,5", "--budget", "10"]).status.code(), Some(5));
    assert_eq!(sgeo(&["compute", "--named", "kmn:3,3", "--geodesic-cap", "1"]).status.code(), Some(5));
    assert_eq!(sgeo(&["compute", "--named", "cycle:2"]).status.code(), Some(6));
    assert_eq!(sgeo(&["compute"]).status.code(), Some(2));
    assert_eq!(sgeo(&["verify", "no-such-suite"]).status.code(), Some(6));
}

#[test]
fn formulas() {
    let knn = json(&sgeo(&["formula", "knn", "7"]));
    assert_eq!((knn["value"].clone(), knn["case"].clone()), (7.into(), "square".into()));
    assert_eq!(json(&sgeo(&["formula", "knn", "6"]))["case"], "non_square");
    let b = json(&sgeo(&["formula", "bounds", "--n", "10", "--d", "2"]));
    assert_eq!(
        (b["lb_interior_capacity"].clone(), b["lb_path_capacity"].clone(), b["ub_diameter"].clone()),
        (4.into(), 4.into(), 9.into())
    );
    let g = json(&sgeo(&["formula", "bounds", "--named", "petersen"]));
    assert_eq!((g["lower"]["value"].clone(), g["upper"].clone()), (4.into(), 9.into()));
    assert_eq!(sgeo(&["formula", "unbalanced", "4", "4"]).status.code(), Some(8));
    assert_eq!(json(&sgeo(&["formula", "unbalanced", "10", "3"]))["value"], 10);
    assert_eq!(json(&sgeo(&["formula", "bipartite", "4", "4"]))["value"], 4);
    assert_eq!(sgeo(&["formula", "knn", "1"]).status.code(), Some(6));
}

#[test]
fn verify_suites() {
    let v = json(&sgeo(&["verify", "knn-formula", "--max-n", "500"]));
    assert_eq!((v["suite"].clone(), v["passed"].clone()), ("knn-formula".into(), true.into()));
    let v = json(&sgeo(&["verify", "constructions", "--k", "3..5", "--d", "2..4"]));
    assert_eq!(v["passed"], true);
    let v = json(&sgeo(&["verify", "oracle-equivalence", "--max-n", "7", "--samples", "200", "--seed", "1"]));
    assert_eq!((v["passed"].clone(), v["checks"].clone()), (true.into(), 200.into()));
    for suite in ["balancing", "unbalanced-formula"] {
        assert_eq!(json(&sgeo(&["verify", suite]))["passed"], true);
    }
}

#[test]
fn construct_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("out.edges");
    let meta = json(&sgeo(&["construct", "gkd", "--k", "4", "--d", "3", "-o", path.to_str().unwrap()]));
    assert_eq!((meta["n"].clone(), meta["diameter"].clone()), (16.into(), 3.into()));
    let text = fs::read_to_string(&path).unwrap();
    assert!(text.starts_with("# gkd:4,3\n16 "));

    let out = sgeo(&["construct", "gk", "--k", "4"]);
    assert!(out.status.success());
    assert!(String::from_utf8_lossy(&out.stdout).lines().nth(1).unwrap().starts_with("10 "));
    let out = sgeo(&["construct", "petersen"]);
    assert!(String::from_utf8_lossy(&out.stdout).contains("\n10 15\n"));

    let v = json(&sgeo(&["compute", "--file", path.to_str().unwrap()]));
    assert_eq!((v["n"].clone(), v["sg"].clone()), (16.into(), 4.into()));
    assert_eq!(sgeo(&["construct", "gkd", "--k", "4"]).status.code(), Some(6));
    assert_eq!(sgeo(&["construct", "gk", "--k", "2"]).status.code(), Some(6));
}
