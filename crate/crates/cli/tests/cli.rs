use std::path::Path;
use std::process::{Command, Output};

use hyperbent_core::catalog::definition_oracle;
use hyperbent_core::families::{kloosterman, FamilySpec};
use hyperbent_core::field::{FieldSpec, QuadraticExtension};
use serde_json::Value;

fn hyperbent(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hyperbent")).args(args).output().expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "{e}: stdout {:?} stderr {:?}",
            String::from_utf8_lossy(&out.stdout),
            String::from_utf8_lossy(&out.stderr)
        )
    })
}

fn write_spec(dir: &Path, name: &str, body: &str) -> String {
    let path = dir.join(name);
    std::fs::write(&path, body).unwrap();
    path.to_str().unwrap().to_string()
}

fn hex(x: u32) -> String {
    format!("{x:#x}")
}

fn certified_coefficients(out: &Output) -> Vec<(String, Option<String>)> {
    let mut v: Vec<_> = json(out)["result"]["certified"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| {
            let spec = &c["spec"];
            (spec["terms"][0]["a"].as_str().unwrap().to_string(), spec["b"].as_str().map(String::from))
        })
        .collect();
    v.sort();
    v
}

#[test]
fn field_info_reports_both_fields() {
    let out = hyperbent(&["field-info", "-m", "3"]);
    assert!(out.status.success());
    let v = json(&out);
    assert_eq!(v["schema"], "1");
    assert_eq!(v["config"]["command"]["name"], "field-info");
    let r = &v["result"];
    assert_eq!(r["big"]["degree"], 6);
    assert_eq!(r["small"]["degree"], 3);
    assert_eq!(r["unit_circle"].as_array().unwrap().len(), 9);
    assert_eq!(r["f4"].as_array().unwrap().len(), 4);
}

#[test]
fn verify_zero_spec_is_consistent() {
    let dir = tempfile::tempdir().unwrap();
    let spec = write_spec(dir.path(), "zero.json", r#"{"m":3,"field":"0x43","terms":[{"r":1,"a":"0x0"}]}"#);
    let out = hyperbent(&["verify", &spec]);
    assert_eq!(out.status.code(), Some(0));
    let r = &json(&out)["result"];
    assert_eq!(r["hyper_bent"], false);
    assert_eq!(r["consistent"], true);
}

#[test]
fn verify_kloosterman_zero_witness_passes_every_criterion() {
    let ext = QuadraticExtension::with_defaults(3).unwrap();
    let a = (1..8).find(|&a| kloosterman(ext.small(), a) == 0).unwrap();
    let dir = tempfile::tempdir().unwrap();
    let body = format!(r#"{{"m":3,"field":"0x43","terms":[{{"r":1,"a":"{}"}}]}}"#, hex(ext.embed(a)));
    let spec = write_spec(dir.path(), "witness.json", &body);

    let out = hyperbent(&["verify", &spec]);
    assert_eq!(out.status.code(), Some(0));
    let r = &json(&out)["result"];
    assert_eq!(r["hyper_bent"], true);
    for c in r["criteria"].as_array().unwrap() {
        if !c["report"].is_null() {
            assert_eq!(c["report"]["verdict"], true, "{}", c["name"]);
        }
    }

    let corrupted = hyperbent(&["verify", &spec, "--corrupt", "lambda"]);
    assert_eq!(corrupted.status.code(), Some(1));
    assert_eq!(json(&corrupted)["result"]["consistent"], false);
}

#[test]
fn verify_rejects_bad_input() {
    let dir = tempfile::tempdir().unwrap();
    let bad = write_spec(dir.path(), "bad.json", "{not json");
    assert_eq!(hyperbent(&["verify", &bad]).status.code(), Some(2));
    let not_leader = write_spec(dir.path(), "r2.json", r#"{"m":3,"field":"0x43","terms":[{"r":2,"a":"0x1"}]}"#);
    assert_eq!(hyperbent(&["verify", &not_leader]).status.code(), Some(2));
    assert_eq!(hyperbent(&["verify", "/nonexistent/spec.json"]).status.code(), Some(2));
}

#[test]
fn search_monomials_match_kloosterman_zeros() {
    for m in [3u32, 5] {
        let ext = QuadraticExtension::with_defaults(m).unwrap();
        let out = hyperbent(&["search", "-m", &m.to_string(), "--a-range", "subfield-nonzero"]);
        assert_eq!(out.status.code(), Some(0));
        let mut want: Vec<_> = (1..ext.small().size())
            .filter(|&a| kloosterman(ext.small(), a) == 0)
            .map(|a| (hex(ext.embed(a)), None))
            .collect();
        want.sort();
        assert_eq!(certified_coefficients(&out), want, "m = {m}");
    }
}

#[test]
fn search_binomials_match_definition() {
    let ext = QuadraticExtension::with_defaults(3).unwrap();
    let out = hyperbent(&["search", "-m", "3", "--a-range", "subfield-nonzero", "--b-range", "primitive"]);
    let mut want = Vec::new();
    for a in 1..8 {
        for b in &ext.f4()[2..] {
            let spec = FamilySpec::monomial(&ext, 1, ext.embed(a), Some(*b)).unwrap();
            if definition_oracle(&ext, &spec) {
                want.push((hex(ext.embed(a)), Some(hex(*b))));
            }
        }
    }
    want.sort();
    assert_eq!(certified_coefficients(&out), want);
    let mismatches = json(&out)["result"]["dickson_split_mismatches"].as_u64().unwrap();
    assert_eq!(out.status.code(), Some(if mismatches == 0 { 0 } else { 1 }));
}

#[test]
fn search_m5_binomials_match_kloosterman_four() {
    let ext = QuadraticExtension::with_defaults(5).unwrap();
    let out = hyperbent(&["search", "-m", "5", "--a-range", "subfield-nonzero", "--b-range", "primitive"]);
    let mut want = Vec::new();
    for a in (1..32).filter(|&a| kloosterman(ext.small(), a) == 4) {
        for b in &ext.f4()[2..] {
            want.push((hex(ext.embed(a)), Some(hex(*b))));
        }
    }
    want.sort();
    assert_eq!(certified_coefficients(&out), want);
}

#[test]
fn search_edges() {
    let empty = hyperbent(&["search", "-m", "3", "--a-range", ""]);
    assert_eq!(empty.status.code(), Some(0));
    assert!(certified_coefficients(&empty).is_empty());

    let too_large = hyperbent(&["search", "-m", "5", "--r", "1,3,5"]);
    assert_eq!(too_large.status.code(), Some(2));
    let sampled = hyperbent(&["search", "-m", "5", "--r", "1,3,5", "--sample", "20", "--seed", "7"]);
    assert_eq!(json(&sampled)["result"]["candidates"], 20);
}

#[test]
fn crosscheck_rejects_even_m() {
    let out = hyperbent(&["crosscheck", "-m", "4"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn crosscheck_is_repeatable() {
    let args =
        ["crosscheck", "-m", "5", "--seed", "3", "--samples", "20", "--identity-samples", "50", "--format", "csv"];
    let (a, b) = (hyperbent(&args), hyperbent(&args));
    assert_eq!(a.stdout, b.stdout);
    let text = String::from_utf8(a.stdout).unwrap();
    assert!(text.starts_with("# hyperbent crosscheck report v1\n# config {"));
    assert!(text.contains("# suite mobius-bijection "));
}

#[test]
fn out_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("k.csv");
    let out = hyperbent(&["kloosterman", "-m", "3", "--all", "--format", "csv", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    let text = std::fs::read_to_string(path).unwrap();
    let lines: Vec<&str> = text.lines().collect();
    assert_eq!(lines[0], "# hyperbent kloosterman report v1");
    assert_eq!(lines[2], "a,k");
    assert_eq!(lines.len(), 3 + 8);
}

/// Affine solutions of `y^2 + y D(x) = (c x^2 + a) D(x)`, plus infinity.
fn brute_force_count(f: &FieldSpec, a: u32, c: u32) -> i64 {
    let mut n = 1;
    for x in f.elements() {
        let d = f.square(x) ^ x ^ 1;
        let rhs = f.mul(f.mul(c, f.square(x)) ^ a, d);
        n += f.elements().filter(|&y| f.square(y) ^ f.mul(y, d) == rhs).count() as i64;
    }
    n
}

#[test]
fn curve_count_matches_brute_force() {
    let f = FieldSpec::new(5, None).unwrap();
    for (a, c) in [(0, 0), (1, 0), (3, 7), (0x1f, 0x10)] {
        let out = hyperbent(&["curve-count", "-m", "5", "--a", &hex(a), "--c", &hex(c)]);
        assert!(out.status.success());
        let r = &json(&out)["result"];
        assert_eq!(r["count"].as_i64().unwrap(), brute_force_count(&f, a, c), "a={a} c={c}");
        assert_eq!(r["target"], 32 + 2 - if f.abs_trace(c) == 0 { 1 } else { -1 });
    }
    assert_eq!(hyperbent(&["curve-count", "-m", "4", "--a", "0x1", "--c", "0x0"]).status.code(), Some(2));
}
