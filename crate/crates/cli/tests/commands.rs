use std::path::Path;
use std::process::{Command, Output};

use proptest::prelude::*;
use serde_json::{json, Value};
use upsilon_cli::complex_file::to_json;
use upsilon_core::exactmath::q;
use upsilon_core::invariants;
use upsilon_core::knotzoo::{pretzel, torus_knot};
use upsilon_core::{BaseGenerator, KnotComplex, Rational, SouthWestRegion};

fn upsilon(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_upsilon"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn upsilon_in(dir: &Path, args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_upsilon"))
        .current_dir(dir)
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    assert_eq!(
        out.status.code(),
        Some(0),
        "stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn int_or_string(b: &num_bigint::BigInt) -> Value {
    let text = b.to_string();
    text.parse::<i64>().map(|v| json!(v)).unwrap_or(json!(text))
}

fn exact(r: &Rational) -> Value {
    json!({ "num": int_or_string(r.numer()), "den": int_or_string(r.denom()) })
}

fn breakpoints(f: &upsilon_core::PLFunction) -> Value {
    let pts: Vec<Value> = f.breakpoints().iter().map(|(t, v)| json!([t.to_string(), v.to_string()])).collect();
    json!({ "breakpoints": pts })
}

#[test]
fn eta_of_the_pretzel_knot() {
    let doc = json_of(&upsilon(&["eta", "P(-2,3,9)", "--region", "H(2/3)"]));
    assert_eq!(doc["value"], json!({"num": 2, "den": 1}));
    assert_eq!(doc["command"], "eta");
    assert_eq!(doc["knot"], "P(-2,3,9)");
    let k = pretzel(9).unwrap();
    let h = SouthWestRegion::classical(&q(2, 3)).unwrap();
    assert_eq!(doc["value"], exact(&invariants::eta(&k, &h).unwrap()));
}

#[test]
fn kim_livingston_of_t43() {
    let doc = json_of(&upsilon(&["kl", "T(4,3)", "--t", "2/3", "--s", "2/3"]));
    assert_eq!(doc["value"], json!({"num": -4, "den": 3}));
    let doc = json_of(&upsilon(&["kl", "T(4,3)", "--t", "2/3", "--s", "2/3", "--oracle"]));
    assert_eq!(doc["value"], json!({"num": -4, "den": 3}));
    assert_eq!(doc["provenance"].as_array().unwrap().len(), 2);
}

#[test]
fn upsilon_of_the_thin_looking_sum_is_the_trefoil() {
    let doc = json_of(&upsilon(&["upsilon", "T(8,5) # -T(6,5) # -T(4,3)"]));
    let trefoil = invariants::upsilon_function(&torus_knot(3, 2).unwrap()).unwrap();
    assert_eq!(doc["value"], breakpoints(&trefoil));
    assert_eq!(doc["value"]["breakpoints"], json!([["0", "0"], ["1", "-1"], ["2", "0"]]));
}

#[test]
fn numeric_outputs_match_library_calls() {
    let k = torus_knot(7, 3).unwrap();
    let r = SouthWestRegion::quadrant(&Rational::from(1)).union(&SouthWestRegion::classical(&q(1, 2)).unwrap());
    let region = r.to_string();

    let doc = json_of(&upsilon(&["region-upsilon", "T(7,3)", "--region", &region, "--oracle"]));
    assert_eq!(doc["value"], exact(&invariants::upsilon_region(&k, &r).unwrap()));
    assert_eq!(doc["region"], json!(region));

    let doc = json_of(&upsilon(&["upsilon-at", "T(7,3)", "--t", "3/4"]));
    let h = SouthWestRegion::classical(&q(3, 4)).unwrap();
    assert_eq!(doc["value"], exact(&invariants::upsilon_region(&k, &h).unwrap().mul_int(-2)));

    for s in [-1i64, 0, 2, 5] {
        let doc = json_of(&upsilon(&["vk", "T(7,3)", "--s", &s.to_string()]));
        assert_eq!(doc["value"], exact(&invariants::vk(&k, s).unwrap()));
        assert_eq!(doc["label"], "V (region convention, -2 upsilon of Q_s)");
    }

    let doc = json_of(&upsilon(&["nu-plus", "T(7,3)"]));
    assert_eq!(doc["value"], exact(&Rational::from(invariants::nu_plus(&k).unwrap())));

    let doc = json_of(&upsilon(&["dinv", "T(7,3)", "--q", "13", "--m", "2"]));
    assert_eq!(doc["value"], exact(&invariants::d_invariant(&k, 13, 2).unwrap()));

    let doc = json_of(&upsilon(&["upsilon", "T(7,3)", "--oracle"]));
    assert_eq!(doc["value"], breakpoints(&invariants::upsilon_function(&k).unwrap()));

    let doc = json_of(&upsilon(&["breaking-points", "T(7,3)"]));
    let bps = invariants::breaking_points(&k).unwrap();
    let ts: Vec<Value> = doc["value"].as_array().unwrap().iter().map(|b| b["t"].clone()).collect();
    assert_eq!(ts, bps.iter().map(|b| exact(&b.t)).collect::<Vec<_>>());
    assert!(doc["value"][0]["i_minus"].is_u64());

    let (cp, cm, c) = ("H(2/3)", "H(2/3)", "H(1)");
    let doc = json_of(&upsilon(&["secondary", "T(4,3)", "--plus", cp, "--minus", cm, "--region", c, "--oracle"]));
    let lib = invariants::secondary(
        &torus_knot(4, 3).unwrap(),
        &upsilon_cli::parse_region(cp).unwrap(),
        &upsilon_cli::parse_region(cm).unwrap(),
        &upsilon_cli::parse_region(c).unwrap(),
    )
    .unwrap();
    match lib.value() {
        Some(v) => assert_eq!(doc["value"], exact(v)),
        None => assert_eq!(doc["value"], "no-obstruction"),
    }
}

#[test]
fn csv_output() {
    let out = upsilon(&["--format", "csv", "upsilon", "T(3,2)", "--samples", "5"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "t,value");
    assert_eq!(lines.len(), 6);
    assert_eq!(lines[3], "1.000000000000,-1.000000000000");
    assert!(String::from_utf8_lossy(&out.stderr).contains("display"));

    let out = upsilon(&["eta", "T(5,2)", "--region", "H(1)", "--format", "csv"]);
    assert_eq!(String::from_utf8(out.stdout).unwrap(), "value\n-1.000000000000\n");

    assert_eq!(upsilon(&["--format", "csv", "thin-check", "T(3,2)"]).status.code(), Some(1));
}

#[test]
fn exit_codes() {
    // parse and usage errors
    assert_eq!(upsilon(&["upsilon", "T(4,6)"]).status.code(), Some(1));
    assert_eq!(upsilon(&["eta", "T(3,2)", "--region", "hp(-1,1,0)"]).status.code(), Some(1));
    assert_eq!(upsilon(&["kl", "T(4,3)", "--t", "2/x", "--s", "1"]).status.code(), Some(1));
    assert_eq!(upsilon(&["kl", "T(4,3)", "--t", "1/2", "--s", "1"]).status.code(), Some(1));
    assert_eq!(upsilon(&["upsilon"]).status.code(), Some(1));
    assert_eq!(upsilon(&["frobnicate"]).status.code(), Some(1));
    assert_eq!(upsilon(&["nu-plus", "T(3,2)", "--oracle"]).status.code(), Some(1));
    assert_eq!(upsilon(&["--help"]).status.code(), Some(0));
    // oracle guard: T(45,2) has 22 degree-1 generators
    let out = upsilon(&["vk", "T(45,2)", "--s", "0", "--oracle"]);
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
    assert_eq!(upsilon(&["vk", "T(45,2)", "--s", "0"]).status.code(), Some(0));
}

#[test]
fn complex_files() {
    let dir = tempfile::tempdir().unwrap();
    let k = torus_knot(5, 3).unwrap().add_box((2, -1), 1);
    std::fs::write(dir.path().join("k.json"), to_json(&k)).unwrap();
    let path = dir.path().join("k.json");
    let path = path.to_str().unwrap();

    let doc = json_of(&upsilon(&["--complex-file", path, "upsilon"]));
    assert_eq!(doc["value"], breakpoints(&invariants::upsilon_function(&k).unwrap()));

    // file(...) atoms resolve relative to the working directory
    let doc = json_of(&upsilon_in(dir.path(), &["upsilon", "file(k.json) # -T(5,3)"]));
    assert_eq!(doc["value"]["breakpoints"], json!([["0", "0"], ["2", "0"]]));

    assert_eq!(upsilon(&["--complex-file", path, "upsilon", "T(3,2)"]).status.code(), Some(1));
    assert_eq!(upsilon(&["--complex-file", "/nonexistent/k.json", "upsilon"]).status.code(), Some(1));

    std::fs::write(dir.path().join("bad.json"), r#"{"generators": [}"#).unwrap();
    let bad = dir.path().join("bad.json");
    assert_eq!(upsilon(&["--complex-file", bad.to_str().unwrap(), "upsilon"]).status.code(), Some(2));

    // two generators, no differential: H_0 has rank two
    let two = KnotComplex::new(
        vec![BaseGenerator::new("a", 0, 0, 0), BaseGenerator::new("b", 1, 1, 0)],
        vec![],
    )
    .unwrap();
    std::fs::write(dir.path().join("two.json"), to_json(&two)).unwrap();
    let two_path = dir.path().join("two.json");
    let two_path = two_path.to_str().unwrap();
    assert_eq!(upsilon(&["--complex-file", two_path, "validate"]).status.code(), Some(2));
    assert_eq!(upsilon(&["--complex-file", two_path, "upsilon"]).status.code(), Some(2));
    assert_eq!(upsilon(&["--complex-file", path, "validate"]).status.code(), Some(0));
}

#[test]
fn thin_check_reports() {
    let doc = json_of(&upsilon(&["thin-check", "T(8,5) # -T(6,5) # -T(4,3)"]));
    let report = &doc["value"];
    let verdict = report["verdict"].as_str().unwrap();
    assert!(verdict.starts_with("obstructed"), "{verdict}");
    let find = |name: &str| {
        report["quantities"]
            .as_array()
            .unwrap()
            .iter()
            .find(|q| q["name"] == name)
            .map(|q| q["value"].clone())
    };
    let t85 = torus_knot(8, 5).unwrap();
    let kl = invariants::kim_livingston(&t85, &q(2, 3), &q(2, 3)).unwrap();
    assert_eq!(find("KL(T(8,5), 2/3, 2/3)").unwrap(), exact(kl.value().unwrap()));
    assert_eq!(find("KL(T(4,3), 2/3, 2/3)").unwrap(), json!({"num": -4, "den": 3}));
    assert_eq!(find("tau = -upsilon'(0)").unwrap(), json!({"num": 1, "den": 1}));

    let doc = json_of(&upsilon(&["thin-check", "T(4,3)"]));
    assert!(doc["value"]["verdict"].as_str().unwrap().starts_with("obstructed"));
    let doc = json_of(&upsilon(&["thin-check", "thin(-2) # T(3,2)"]));
    assert!(doc["value"]["verdict"].as_str().unwrap().starts_with("not obstructed"));
}

#[test]
fn pretzel_report() {
    let doc = json_of(&upsilon(&["pretzel-report", "--q", "11"]));
    let report = &doc["value"];
    let find = |name: &str| {
        report["quantities"]
            .as_array()
            .unwrap()
            .iter()
            .find(|q| q["name"] == name)
            .map(|q| q["value"].clone())
            .unwrap()
    };
    assert_eq!(find("tau"), json!({"num": 7, "den": 1}));
    assert_eq!(find("eta(H(2/3))"), json!({"num": 8, "den": 3}));
    assert_eq!(find("candidates"), json!(["T(3,4) # J", "T(3,5) # J"]));
    assert!(report["notes"].to_string().contains("out of scope"));
}

fn arb_complex() -> impl Strategy<Value = KnotComplex> {
    let gens = prop::collection::vec((-2i64..=2, -2i64..=2, -1i64..=1), 1..5);
    (gens, prop::collection::vec((0usize..5, 0usize..5, 0u32..2), 0..5)).prop_map(|(gens, arrows)| {
        let n = gens.len();
        let generators: Vec<BaseGenerator> = gens
            .into_iter()
            .enumerate()
            .map(|(i, (a, j, m))| BaseGenerator::new(format!("g{i}"), a, j, m))
            .collect();
        let arrows: Vec<(String, String, u32)> = arrows
            .into_iter()
            .map(|(s, t, u)| (format!("g{}", s % n), format!("g{}", t % n), u))
            .collect();
        KnotComplex::with_named_arrows(generators.clone(), arrows)
            .unwrap_or_else(|_| KnotComplex::with_named_arrows(generators, Vec::<(String, String, u32)>::new()).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn validate_exit_code_tracks_knot_type(k in arb_complex()) {
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("k.json");
        std::fs::write(&path, to_json(&k)).unwrap();
        let out = upsilon(&["--complex-file", path.to_str().unwrap(), "validate"]);
        let expected = if k.validate().is_knot_type() { 0 } else { 2 };
        prop_assert_eq!(out.status.code(), Some(expected));
    }
}
