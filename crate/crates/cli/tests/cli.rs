use std::process::{Command, Output};

use dualsurf_core::{parse_poly, Field, Ring};
use serde_json::Value;

fn dualsurf(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_dualsurf"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn code(args: &[&str]) -> i32 {
    dualsurf(args).status.code().expect("exit code")
}

fn json(args: &[&str]) -> Value {
    let mut full = vec!["--json"];
    full.extend_from_slice(args);
    let out = dualsurf(&full);
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

#[test]
fn json_has_the_four_top_level_keys() {
    let v = json(&["invariants", "surface", "--degree", "4"]);
    let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    assert_eq!(keys, ["command", "inputs", "results", "checks"]);
    assert_eq!(v["results"]["tritangent"], "3200");
    assert_eq!(v["command"], "invariants surface");
}

#[test]
fn integers_are_strings() {
    let v = json(&["invariants", "surface", "--degree", "200"]);
    for (key, value) in v["results"].as_object().unwrap() {
        assert!(value.is_string(), "{key}");
    }
    let tritangents: num_bigint::BigInt = v["results"]["tritangent"].as_str().unwrap().parse().unwrap();
    assert!(tritangents > num_bigint::BigInt::from(1u64 << 53));
}

#[test]
fn steiner_surface() {
    let v = json(&[
        "invariants",
        "projected",
        "--n",
        "4",
        "--pi",
        "0",
        "--pa",
        "0",
        "--ksq",
        "9",
    ]);
    let r = &v["results"];
    assert_eq!([&r["class"], &r["triple_points"], &r["pinch_points"]], ["3", "1", "6"]);
    assert_eq!(
        code(&[
            "invariants",
            "projected",
            "--n",
            "4",
            "--pi",
            "0",
            "--pa",
            "0",
            "--ksq",
            "9"
        ]),
        0
    );
}

#[test]
fn branch_and_developable_tables() {
    let v = json(&["invariants", "branch", "--degree", "4"]);
    assert_eq!(v["results"]["bitangents"], "480");
    let v = json(&["invariants", "developable", "--degree", "3"]);
    assert_eq!(v["results"]["hessian"]["m"], "72");
    assert_eq!(v["results"]["node_couple"]["r"], "0");
    assert_eq!(code(&["invariants", "developable", "--degree", "4"]), 0);
}

#[test]
fn degree_below_range_is_a_usage_error() {
    assert_eq!(code(&["invariants", "surface", "--degree", "2"]), 2);
    assert_eq!(code(&["invariants", "surface"]), 2);
}

#[test]
fn symbolic_suite_passes() {
    let v = json(&["verify", "all", "--symbolic"]);
    let checks = v["checks"].as_array().unwrap();
    assert!(!checks.is_empty());
    assert!(checks.iter().all(|c| c["status"] == "pass"), "{checks:?}");
    assert_eq!(code(&["verify", "all"]), 0);
}

#[test]
fn degree_sweep_repeats_the_suite() {
    let v = json(&["verify", "all", "--degree-range", "3..12"]);
    let checks = v["checks"].as_array().unwrap();
    let single = json(&["verify", "all", "--degree-range", "5..5"])["checks"]
        .as_array()
        .unwrap()
        .len();
    let warnings = checks.iter().filter(|c| c["status"] == "warn").count();
    assert_eq!(checks.len() - warnings, 10 * single);
    assert!(checks.iter().all(|c| c["status"] != "fail"));
    assert_eq!(code(&["verify", "all", "--degree-range", "12..3"]), 2);
}

#[test]
fn local_models_verify() {
    let v = json(&["verify", "models"]);
    assert_eq!(v["results"]["tacnode_unit"], "1");
    assert!(v["checks"].as_array().unwrap().iter().all(|c| c["status"] == "pass"));
    assert_eq!(code(&["verify", "models"]), 0);
}

#[test]
fn plucker_exit_codes() {
    assert_eq!(code(&["verify", "plucker", "--chars", "4,12,0,0,28,24"]), 0);
    assert_eq!(code(&["verify", "plucker", "--chars", "4,12,0,0,29,24"]), 1);
    assert_eq!(code(&["verify", "plucker", "--chars", "4,12,0"]), 2);
    assert_eq!(code(&["verify", "plucker", "--chars", "4,-12,0,0,28,24"]), 3);
}

#[test]
fn property_suites_are_reproducible() {
    let args = [
        "verify",
        "properties",
        "--count",
        "6",
        "--seed",
        "9",
        "--modp",
        "2147483647",
    ];
    let first = json(&args);
    assert_eq!(first, json(&args));
    assert!(first["checks"]
        .as_array()
        .unwrap()
        .iter()
        .all(|c| c["status"] == "pass"));
    assert_eq!(code(&["verify", "properties", "--modp", "7"]), 2);
}

#[test]
fn worked_poly_examples() {
    let fermat = "x^3+y^3+z^3+w^3";
    let v = json(&[
        "poly",
        "line-mult",
        "--expr",
        fermat,
        "--point",
        "1,-1,0,0",
        "--dir",
        "0,0,1,0",
    ]);
    assert_eq!(v["results"]["multiplicity"], "3");
    let v = json(&["poly", "hessian", "--expr", fermat]);
    assert_eq!(v["results"]["hessian"], "1296*x*y*z*w");
    let v = json(&["poly", "dejonquieres", "--m", "4", "--genus", "0", "--mult", "2:1"]);
    assert_eq!(v["results"]["count"], "6");
    let v = json(&[
        "poly",
        "rank-profile",
        "--ambient",
        "3",
        "--m",
        "3",
        "--genus",
        "0",
        "--stationary",
        "0,0,0",
    ]);
    assert_eq!(v["results"]["ranks"], serde_json::json!(["3", "4", "3"]));
    let v = json(&["poly", "developable", "--known", "m=3,p_g=0,alpha=0,beta=0"]);
    assert_eq!([&v["results"]["r"], &v["results"]["h"]], ["4", "1"]);
}

#[test]
fn surface_point_commands() {
    let v = json(&["poly", "flecnodal", "--expr", "x^3+y^3+z^3-3*w^3", "--point", "1,1,1,1"]);
    assert_eq!(v["results"]["member"], false);
    let v = json(&["poly", "flecnodal", "--expr", "x*w-y*z", "--point", "2,3,4,6"]);
    assert_eq!(v["results"]["member"], true);
    let v = json(&["poly", "classify", "--expr", "x*w-y*z", "--point", "2,3,4,6"]);
    assert_eq!(v["results"]["kind"], "non_parabolic");
    let v = json(&["poly", "tangent-cone", "--expr", "y^2*w-x^3", "--point", "0,0,0,1"]);
    assert_eq!(
        [&v["results"]["cone"], &v["results"]["multiplicity"]],
        [&Value::from("y^2"), &Value::from(2)]
    );
    assert_eq!(
        code(&[
            "poly",
            "fundamental-form",
            "--expr",
            "x^3+y^3+z^3+w^3",
            "--point",
            "1,-1,0,0"
        ]),
        0
    );
}

#[test]
fn emitted_polynomials_reparse() {
    let ring = Ring::space(Field::Rational);
    let cubic = "x^3 + 2*y^2*z - 3/4*z*w^2 + x*y*w";
    for args in [
        vec!["poly", "hessian", "--expr", cubic],
        vec!["poly", "polar", "--expr", cubic, "--point", "1,2,-1,3", "--order", "1"],
        vec![
            "poly",
            "polar-kic",
            "--expr",
            cubic,
            "--point",
            "1,2,-1,3",
            "--order",
            "2",
        ],
        vec!["poly", "covariants", "--expr", cubic],
    ] {
        let v = json(&args);
        for key in ["hessian", "polar", "theta", "phi"] {
            if let Some(text) = v["results"][key].as_str() {
                let p = parse_poly(text, &ring).unwrap();
                assert_eq!(p.to_string(), text);
            }
        }
    }
}

#[test]
fn error_exit_codes() {
    assert_eq!(code(&["poly", "hessian", "--expr", "x^3+(y"]), 2);
    assert_eq!(code(&["poly", "hessian", "--expr", "x^3+y"]), 3);
    assert_eq!(
        code(&["poly", "tangent-plane", "--expr", "y^2*w-x^3", "--point", "0,0,0,1"]),
        3
    );
    assert_eq!(code(&["poly", "hessian", "--expr", "x^3", "--modp", "2147483647"]), 2);
    assert_eq!(
        code(&[
            "poly",
            "polar",
            "--expr",
            "x^2+y^2+z^2+w^2",
            "--point",
            "1,2",
            "--order",
            "1"
        ]),
        2
    );
    assert_eq!(code(&["poly", "hessian"]), 2);
    assert_eq!(code(&["poly", "hessian", "--surface", "/nonexistent/surface.txt"]), 2);
    assert_eq!(code(&["bogus"]), 2);
}

#[test]
fn surface_files() {
    let dir = std::env::temp_dir().join(format!("dualsurf-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("fermat.txt");
    std::fs::write(&path, "x^3+y^3+z^3+w^3\n").unwrap();
    let v = json(&["poly", "hessian", "--surface", path.to_str().unwrap()]);
    assert_eq!(v["results"]["hessian"], "1296*x*y*z*w");
    std::fs::remove_dir_all(&dir).unwrap();
}
