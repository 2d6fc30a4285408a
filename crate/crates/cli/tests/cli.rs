use std::path::Path;
use std::process::{Command, Output};

use odcodes::{build_field, MonomialOrder, PolyRing, Polynomial, Presentation, WeightMatrix};
use serde_json::Value;

fn odcodes(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_odcodes")).args(args).output().expect("binary runs")
}

fn results(out: &Output) -> Value {
    let v: Value = serde_json::from_slice(&out.stdout).expect("stdout is a run report");
    v["results"].clone()
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("{}: {e}", path.display()))
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).unwrap() + "\n"
}

#[test]
fn verify_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let surface = dir.path().join("surface.json");
    let out = odcodes(&["variety", "herm:2:2", "--save", surface.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    let out = odcodes(&["verify", surface.to_str().unwrap(), "--probe", "100"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(results(&out)["passed"], Value::Bool(true));

    let f = build_field(3, 1).unwrap();
    let ring = PolyRing::new(f, ["X", "Y"]);
    let g = Polynomial::from_int_terms(&ring, &[(vec![1, 1], 1), (vec![0, 0], -1)]).unwrap();
    let conic =
        Presentation::new("xy-1", ring, vec![g], WeightMatrix::new(vec![vec![1, 1]]).unwrap(), MonomialOrder::Lex)
            .unwrap();
    let path = dir.path().join("conic.json");
    std::fs::write(&path, serde_json::to_string(&conic.to_json()).unwrap()).unwrap();
    let out = odcodes(&["verify", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let w = results(&out)["witness"].as_str().unwrap().to_string();
    assert!(w.contains("single max-weight monomial"), "{w}");

    let bad = dir.path().join("bad.json");
    std::fs::write(&bad, "{not json").unwrap();
    assert_eq!(odcodes(&["verify", bad.to_str().unwrap()]).status.code(), Some(1));
    assert_eq!(odcodes(&["verify", dir.path().join("missing.json").to_str().unwrap()]).status.code(), Some(1));
}

#[test]
fn code_exit_codes() {
    let out = odcodes(&["code", "--variety", "herm:2:2", "--a", "1", "--distance", "exhaustive"]);
    assert_eq!(out.status.code(), Some(0));
    let params = &results(&out)["code"]["params"];
    assert_eq!((params["n"].as_u64(), params["k"].as_u64()), (Some(36), Some(4)));
    assert_eq!(params["distance"]["lower"].as_u64(), Some(24));

    let out = odcodes(&["code", "--variety", "herm:2:2", "--ell", "1"]);
    let params = &results(&out)["code"]["params"];
    assert_eq!(params["distance"]["lower"].as_u64(), Some(36));

    let out = odcodes(&["code", "--variety", "herm-tangent:2:2", "--a", "1", "--max-codewords", "10"]);
    assert_eq!(out.status.code(), Some(3));
    let r = results(&out);
    assert_eq!(r["code"]["params"]["n"].as_u64(), Some(32));
    assert_eq!(r["code"]["params"]["distance"]["method"], "bound");
}

#[test]
fn bad_arguments_exit_nonzero() {
    assert_eq!(odcodes(&["code", "--variety", "nope:1", "--a", "1"]).status.code(), Some(1));
    assert_eq!(odcodes(&["code", "--variety", "herm:2", "--a", "1"]).status.code(), Some(1));
    assert_eq!(odcodes(&["--help"]).status.code(), Some(0));
    assert_eq!(odcodes(&["code", "--variety", "herm:2:2"]).status.code(), Some(1));
    assert_eq!(odcodes(&["variety", "herm:2:2", "--max-points", "10"]).status.code(), Some(1));
}

#[test]
fn reproduce_hermitian_matches_golden() {
    let out = odcodes(&["reproduce", "--family", "hermitian", "--q", "2", "--r-max", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let r = results(&out);
    let computed: Vec<&str> =
        r["rows"].as_array().unwrap().iter().map(|row| row["computed"].as_str().unwrap()).collect();
    assert_eq!(computed, ["[36,4,24]", "[120,5,84]", "[528,6,384]"]);
    assert_eq!(pretty(&r), golden("reproduce_hermitian_q2.json"));
}

#[test]
fn reproduce_grassmann_and_orbits() {
    let out = odcodes(&["reproduce", "--family", "grassmann"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(pretty(&results(&out)), golden("reproduce_grassmann.json"));
    let out = odcodes(&["reproduce", "--family", "orbits", "--q", "3"]);
    assert_eq!(out.status.code(), Some(0));
    let r = results(&out);
    assert_eq!(r["histogram"], serde_json::json!({"1": 1, "2": 1, "8": 30}));
}

#[test]
fn results_are_byte_stable() {
    let args = ["verify", "--variety", "herm-tangent:2:3", "--probe", "300", "--seed", "7"];
    let a = odcodes(&args);
    let b = odcodes(&[&args[..], &["--threads", "3"]].concat());
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(pretty(&results(&a)), pretty(&results(&b)));
    let c = odcodes(&["code", "--variety", "herm:2:2", "--a", "1", "--threads", "2"]);
    assert_eq!(pretty(&results(&c)), golden("code_herm_2_2_a1.json"));
}
