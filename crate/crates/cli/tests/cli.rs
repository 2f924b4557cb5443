use std::path::PathBuf;
use std::process::{Command, Output};

use polyadic_core::reference::example3;
use polyadic_core::ring_r::{RPoly, RingSpec};
use serde_json::Value;

fn polyadic(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_polyadic")).args(args).output().expect("binary runs")
}

fn job(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "jobs", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

fn temp_file(name: &str, contents: &[u8]) -> String {
    let p = std::env::temp_dir().join(format!("polyadic-cli-{}-{name}", std::process::id()));
    std::fs::write(&p, contents).unwrap();
    p.to_string_lossy().into_owned()
}

/// Orbits of Z_n under multiplication by q, smallest element first.
fn orbits(n: usize, q: usize) -> Vec<Vec<usize>> {
    let mut seen = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if seen[s] {
            continue;
        }
        let mut orbit = Vec::new();
        let mut x = s;
        while !seen[x] {
            seen[x] = true;
            orbit.push(x);
            x = x * q % n;
        }
        orbit.sort();
        out.push(orbit);
    }
    out
}

#[test]
fn cosets_mod_13_over_gf3() {
    let out = polyadic(&["cosets", "--n", "13", "--q", "3"]);
    assert!(out.status.success());
    let got: Vec<Vec<usize>> = serde_json::from_value(json(&out)["cosets"].clone()).unwrap();
    assert_eq!(got, orbits(13, 3));
    assert_eq!(got.len(), 5);
}

#[test]
fn cosets_mod_3_over_gf13_are_singletons() {
    let out = polyadic(&["cosets", "--n", "3", "--q", "13"]);
    let got: Vec<Vec<usize>> = serde_json::from_value(json(&out)["cosets"].clone()).unwrap();
    assert_eq!(got, vec![vec![0], vec![1], vec![2]]);
}

#[test]
fn cosets_reject_non_coprime_length() {
    let out = polyadic(&["cosets", "--n", "6", "--q", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "domain");
}

#[test]
fn split_classes_are_cycled_by_the_multiplier() {
    let out = polyadic(&["split", "--n", "13", "--q", "3", "--m", "4"]);
    assert!(out.status.success());
    let found = json(&out);
    let found = found.as_array().unwrap();
    assert!(!found.is_empty());
    for s in found {
        let a = s["a"].as_u64().unwrap() as usize;
        let classes: Vec<Vec<usize>> = serde_json::from_value(s["S"].clone()).unwrap();
        let inf: Vec<usize> = serde_json::from_value(s["S_inf"].clone()).unwrap();
        let mut all: Vec<usize> = classes.iter().flatten().chain(&inf).copied().collect();
        all.sort();
        assert_eq!(all, (0..13).collect::<Vec<_>>());
        for (i, c) in classes.iter().enumerate() {
            let mut img: Vec<usize> = c.iter().map(|x| x * a % 13).collect();
            img.sort();
            let mut next = classes[(i + 1) % 4].clone();
            next.sort();
            assert_eq!(img, next);
        }
    }
}

#[test]
fn construct_example3_reproduces_the_idempotents() {
    let out = polyadic(&["construct", "--spec", &job("example3.json")]);
    assert!(out.status.success(), "{}", String::from_utf8_lossy(&out.stderr));
    let r = json(&out);
    let ring = RingSpec::from_json(&example3().ring).unwrap();
    let parse = |s: &str| RPoly::parse(&ring, 3, s).unwrap();
    let ids: Vec<(String, String)> = serde_json::from_value(r["idempotents"].clone()).unwrap();
    let e1 = &ids.iter().find(|(k, _)| k == "E_1").unwrap().1;
    assert_eq!(parse(e1), parse("-x^2(uv^2+uv-3)+x(uv^2+uv+1)+9"));
    assert_eq!(r["gamma"], 2);
    assert_eq!(r["lambda"], 5);
    assert_eq!(r["gray_extended"]["n"], 24);
    assert_eq!(r["gray_extended"]["k"], 12);
    assert_eq!(r["gray_extended"]["flags"]["self_dual"], true);
}

#[test]
fn construct_example4_image_is_lcd() {
    let out = polyadic(&["construct", "--spec", &job("example4.json")]);
    assert!(out.status.success());
    let r = json(&out);
    assert_eq!(r["gray"]["flags"]["lcd"], true);
    assert_eq!(r["gray"]["hull_dimension"], 0);
    assert_eq!(r["neg_one_shift"], 0);
}

#[test]
fn construct_generalized_code() {
    let out = polyadic(&["construct", "--spec", &job("remark.json")]);
    assert!(out.status.success());
    let p = &json(&out)["code"]["params"];
    assert_eq!((p["n"].as_u64(), p["k"].as_u64(), p["d"]["exact"].as_u64()), (Some(5), Some(3), Some(3)));
}

#[test]
fn reports_are_byte_stable() {
    let a = polyadic(&["construct", "--spec", &job("example3.json")]);
    let b = polyadic(&["construct", "--spec", &job("example3.json")]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn malformed_job_is_a_parse_error() {
    let path = temp_file("bad.json", b"{ \"n\": 3,");
    let out = polyadic(&["construct", "--spec", &path]);
    assert_eq!(out.status.code(), Some(3));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "input");
}

#[test]
fn bad_code_index_is_a_domain_error() {
    let text = std::fs::read_to_string(job("example3.json")).unwrap().replace("\"i\": 1", "\"i\": 3");
    let out = polyadic(&["construct", "--spec", &temp_file("index.json", text.as_bytes())]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn gray_matrix_round_trips_through_analyze() {
    let out = polyadic(&["gray", "--spec", &job("example3.json")]);
    assert!(out.status.success());
    let path = temp_file("gray.json", &out.stdout);
    let a = polyadic(&["analyze", "--spec", &path, "--budget", "1000"]);
    assert!(a.status.success());
    let r = json(&a);
    assert_eq!(r["n"], 24);
    assert_eq!(r["flags"]["self_dual"], true);
    assert!(r["d"].get("interval").is_some());
}

#[test]
fn analyze_hadamard_rows() {
    let out = polyadic(&["analyze", "--spec", &job("h4_matrix.json")]);
    let r = json(&out);
    assert_eq!(r["k"], 4);
    assert_eq!(r["flags"]["lcd"], true);
    assert_eq!(r["griesmer"]["status"], "attains");
}

#[test]
fn verify_example1_passes() {
    let out = polyadic(&["verify", "example1", "--pretty"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("PASS example1.p1_griesmer"));
}

#[test]
fn verify_props_on_default_instance() {
    let out = polyadic(&["verify", "props", "--n", "13", "--q", "3", "--m", "4"]);
    assert_eq!(out.status.code(), Some(0));
    let reports = json(&out);
    let checks = reports[0]["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["status"] != "fail"));
    assert!(checks.iter().any(|c| c["id"] == "fq.even_join_even_weight" && c["status"] == "pass"));
}

#[test]
fn verify_props_needs_parameters() {
    let out = polyadic(&["verify", "props", "--n", "13"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn verify_table1_skips_large_distances() {
    let out = polyadic(&["verify", "table1", "--pretty"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("SKIPPED table1.q13n17m4.p.distance"));
    assert!(text.contains("ANNOTATION table1.q3n13m4.p.length"));
}

#[test]
fn verify_reports_failures_with_exit_code_1() {
    let out = polyadic(&["verify", "example3"]);
    assert_eq!(out.status.code(), Some(1));
    let reports = json(&out);
    let failed: Vec<&Value> = reports[0]["checks"].as_array().unwrap().iter().filter(|c| c["status"] == "fail").collect();
    assert_eq!(failed.len(), 1);
    assert_eq!(failed[0]["id"], "example3.F1");
    assert!(failed[0]["computed"].as_str().is_some_and(|s| !s.is_empty()));
}

#[test]
fn unknown_target_is_an_input_error() {
    assert_eq!(polyadic(&["verify", "example9"]).status.code(), Some(3));
}
