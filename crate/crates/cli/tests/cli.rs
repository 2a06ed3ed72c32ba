use std::path::{Path, PathBuf};
use std::process::{Command, Output};

use serde_json::Value;
use symalg_cli::{parse_args, run, ErrorKind, Invocation, JobReport};

fn jobs() -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("jobs")
}

fn job(name: &str) -> String {
    jobs().join(name).display().to_string()
}

fn symalg(args: &[&str]) -> (Output, Value) {
    let out = Command::new(env!("CARGO_BIN_EXE_symalg"))
        .args(args)
        .output()
        .unwrap();
    let v: Value = serde_json::from_slice(&out.stdout).unwrap_or_else(|e| {
        panic!(
            "stdout is not JSON ({e}): {}",
            String::from_utf8_lossy(&out.stdout)
        )
    });
    (out, v)
}

fn in_process(args: &[&str]) -> JobReport {
    let argv = std::iter::once("symalg").chain(args.iter().copied());
    match parse_args(argv) {
        Invocation::Run(job) => run(&job),
        Invocation::Reject(r) => *r,
        Invocation::Print(text) => panic!("unexpected help output: {text}"),
    }
}

fn tmp_file(name: &str, contents: &[u8]) -> String {
    let path = Path::new(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path.display().to_string()
}

#[test]
fn jacobi_on_sl2() {
    let (out, v) = symalg(&["jacobi", &job("sl2.json")]);
    assert!(out.status.success());
    assert_eq!(v["status"], "ok");
    assert_eq!(v["payload"]["dim"], 3);
    assert_eq!(v["payload"]["jacobi"], "pass");
    assert_eq!(v["provenance"]["engine_version"], symalg::VERSION);
    assert_eq!(v["provenance"]["input_sha256"].as_str().unwrap().len(), 64);
    assert!(String::from_utf8_lossy(&out.stderr).starts_with("jacobi: ok"));
}

#[test]
fn c2_loads_and_passes_jacobi() {
    let c = symalg_cli::load_algebra(&jobs().join("c2.json"), false).unwrap();
    assert_eq!(c.dim(), 6);
    let (_, v) = symalg(&["jacobi", &job("c2.json")]);
    assert_eq!(v["payload"]["dim"], 6);
}

#[test]
fn broken_jacobi_is_a_validation_error() {
    let (out, v) = symalg(&["jacobi", &job("broken_sl2.json")]);
    assert_eq!(out.status.code(), Some(3));
    assert_eq!(v["error"]["kind"], "ValidationError");
    assert_eq!(
        v["error"]["detail"][0]["triple"],
        serde_json::json!([1, 2, 3])
    );

    // other commands refuse the file unless asked not to check
    let r = in_process(&["commutant", &job("broken_sl2.json")]);
    assert_eq!(r.error.unwrap().kind, ErrorKind::ValidationError);
    let r = in_process(&["commutant", &job("broken_sl2.json"), "--skip-jacobi"]);
    assert_eq!(r.error.unwrap().kind, ErrorKind::ValidationError);
}

#[test]
fn duplicate_bracket_is_a_parse_error() {
    let path = tmp_file(
        "duplicate.json",
        br#"{"dim": 2, "names": ["a", "b"], "brackets": [
            {"j": 1, "k": 2, "terms": {"1": "1"}},
            {"j": 2, "k": 1, "terms": {"1": "-1"}}
        ]}"#,
    );
    let (out, v) = symalg(&["jacobi", &path]);
    assert_eq!(out.status.code(), Some(2));
    assert_eq!(v["error"]["kind"], "ParseError");
    assert!(v["error"]["message"]
        .as_str()
        .unwrap()
        .contains("brackets[1]"));
}

#[test]
fn c2_commutant_lists_six_generators() {
    let (out, v) = symalg(&["commutant", &job("c2.json"), "--sub", "1", "--maxdeg", "2"]);
    assert!(out.status.success());
    let gens: Vec<&str> = v["payload"]["generators"]
        .as_array()
        .unwrap()
        .iter()
        .map(|g| g["poly"].as_str().unwrap())
        .collect();
    assert_eq!(
        gens,
        [
            "x1",
            "x2",
            "x1*x3 + x2*x4",
            "x3^2 + x2*x6",
            "x3*x4 + 1/2*x2*x5 - 1/2*x1*x6",
            "x4^2 - x1*x5"
        ]
    );
    assert_eq!(v["payload"]["sub"], serde_json::json!([1]));
}

#[test]
fn closure_and_center() {
    let (out, v) = symalg(&[
        "closure",
        &job("c2.json"),
        "--gens",
        &job("c2_generators.json"),
        "--maxdeg",
        "2",
    ]);
    assert!(out.status.success());
    assert_eq!(v["payload"]["center"], serde_json::json!(["A1", "A5"]));
    assert_eq!(v["payload"]["verified"], true);
    let rel = v["payload"]["relations"]
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["left"] == "A2" && r["right"] == "A3")
        .unwrap();
    assert_eq!(rel["value"], "A1^2 + A2^2");
    assert!(v["provenance"]["gens_sha256"].is_string());
}

#[test]
fn closure_without_a3_is_an_engine_error() {
    let path = tmp_file(
        "gens_no_a3.json",
        br#"{"generators": [
            {"name": "A1", "poly": "x1"},
            {"name": "A2", "poly": "x2"},
            {"name": "A4", "poly": "x2*x6 + x3^2"},
            {"name": "A5", "poly": "x1*x6 - 2*x3*x4 - x2*x5"},
            {"name": "A6", "poly": "x1*x5 - x4^2"}
        ]}"#,
    );
    let (out, v) = symalg(&["closure", &job("c2.json"), "--gens", &path, "--maxdeg", "2"]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(v["error"]["kind"], "EngineError");
    assert_eq!(v["error"]["detail"]["left"], "A2");
}

#[test]
fn casimirs_report() {
    let (out, v) = symalg(&[
        "casimirs",
        &job("c2.json"),
        "--gens",
        &job("c2_generators.json"),
        "--maxdeg",
        "3",
        "--closure-maxdeg",
        "2",
        "--seed",
        "7",
    ]);
    assert!(out.status.success());
    let exprs: Vec<&str> = v["payload"]["casimirs"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["expression"].as_str().unwrap())
        .collect();
    assert_eq!(exprs[..3], ["A1", "A4 + A6", "A5"]);
    assert_eq!(exprs.len(), 4);
    assert_eq!(v["payload"]["seed"], 7);
    assert_eq!(v["provenance"]["seed"], 7);
}

#[test]
fn hamiltonian_commutes() {
    let (out, v) = symalg(&[
        "hamiltonian",
        &job("c2.json"),
        "--alpha",
        "2",
        "--gamma1",
        "-1/3",
        "--gamma2",
        "5",
    ]);
    assert!(out.status.success(), "{v}");
    assert_eq!(v["payload"]["verified"], true);
    assert_eq!(v["payload"]["brackets"].as_array().unwrap().len(), 6);
    assert_eq!(v["payload"]["gammas"], serde_json::json!(["-1/3", "5"]));

    let r = in_process(&["hamiltonian", &job("c2.json"), "--gammas", "1,2,3"]);
    assert_eq!(r.error.unwrap().kind, ErrorKind::ValidationError);
    let r = in_process(&["hamiltonian", &job("c2.json"), "--alpha", "x"]);
    assert_eq!(r.error.unwrap().kind, ErrorKind::ParseError);
}

#[test]
fn spectrum_reports_all_three_families() {
    let (out, v) = symalg(&["spectrum", &job("spectrum_half_two.json")]);
    assert!(out.status.success());
    let sols = v["payload"]["solutions"].as_array().unwrap();
    assert_eq!(sols.len(), 3);
    let verified: Vec<bool> = sols
        .iter()
        .map(|s| s["verified"].as_bool().unwrap())
        .collect();
    // the second family's structure function is negative at k = 1
    assert_eq!(verified, [true, true, false]);
    assert_eq!(v["payload"]["all_verified"], false);
    assert_eq!(sols[2]["energy"], 9.25);
}

#[test]
fn spectrum_reality_violation() {
    let path = tmp_file("spectrum_bad.json", br#"{"a": 20.0, "p": 0}"#);
    let r = in_process(&["spectrum", &path]);
    let e = r.error.unwrap();
    assert_eq!(e.kind, ErrorKind::EngineError);
    assert!(e.detail["radicand"].as_f64().unwrap() < 0.0);
}

#[test]
fn fock_sources() {
    let (out, v) = symalg(&["fock", &job("fock_double_root.json")]);
    assert!(out.status.success());
    assert_eq!(v["payload"]["dim"], 4);
    assert!(v["payload"]["relative_residual"].as_f64().unwrap() <= 1e-12);

    let (_, v) = symalg(&["fock", &job("fock_eps_plus.json")]);
    assert_eq!(v["payload"]["family"], "eps+");

    let (_, v) = symalg(&["fock", &job("fock_darboux2.json")]);
    assert!(v["payload"]["residual_ac"].as_f64().unwrap() <= 1e-9);
    assert!(v["payload"]["residual_bc"].as_f64().unwrap() <= 1e-9);

    let second = tmp_file(
        "fock_second.json",
        br#"{"spectrum": {"a": 0.5, "p": 2, "family": "second"}}"#,
    );
    let (out, v) = symalg(&["fock", &second]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(v["error"]["detail"]["k"], 1);

    let two = tmp_file(
        "fock_two.json",
        br#"{"p": 2, "phi": [0, 1], "roots": [0, 3]}"#,
    );
    assert_eq!(
        in_process(&["fock", &two]).error.unwrap().kind,
        ErrorKind::ParseError
    );
}

#[test]
fn verma_small_instance_matches_fixture() {
    let fixture: Value = serde_json::from_str(include_str!(
        "../../core/fixtures/verma_small_instance.json"
    ))
    .unwrap();
    let (out, v) = symalg(&["verma-verify", &job("verma_small.json")]);
    assert!(out.status.success());
    let p = &v["payload"];
    assert_eq!(p["feasible"], false);
    assert_eq!(p["residual_sum_squares"], fixture["residual_sum_squares"]);
    assert_eq!(
        p["max_residual_commutator"],
        fixture["max_residual_commutator"]
    );
    assert_eq!(p["max_residual_cubic"], fixture["max_residual_cubic"]);
    let nonzero: Vec<Value> = p["coefficients"]
        .as_array()
        .unwrap()
        .iter()
        .filter(|c| c["value"] != "0")
        .map(|c| serde_json::json!({"k": c["k"], "m": c["m"], "value": c["value"]}))
        .collect();
    let mut want = fixture["coefficients"].as_array().unwrap().clone();
    want.sort_by_key(|c| (c["m"].as_i64(), c["k"].as_i64()));
    assert_eq!(nonzero, want);
}

#[test]
fn verma_infeasible_is_an_engine_error_by_default() {
    let path = tmp_file(
        "verma_strict.json",
        br#"{"M": 10, "E": 1, "lambda": 1, "u": 1, "v1": "1"}"#,
    );
    let (out, v) = symalg(&["verma-verify", &path]);
    assert_eq!(out.status.code(), Some(4));
    assert_eq!(v["error"]["kind"], "EngineError");
    assert_eq!(v["error"]["detail"]["certificate"]["residual"], "1151/11");

    let (out, v) = symalg(&["verma-verify", &job("verma_raising.json")]);
    assert!(out.status.success());
    assert_eq!(v["payload"]["feasible"], true);
    assert_eq!(
        v["payload"]["fits"][0]["coefficients"],
        serde_json::json!(["2"])
    );
    assert_eq!(v["payload"]["report"]["x1f_scaled"], 0.0);
}

#[test]
fn reports_are_deterministic() {
    for args in [
        vec![
            "casimirs",
            &job("c2.json") as &str,
            "--gens",
            &job("c2_generators.json"),
            "--closure-maxdeg",
            "2",
        ],
        vec!["verma-verify", &job("verma_small.json")],
        vec!["spectrum", &job("spectrum_half_two.json")],
    ] {
        let a = Command::new(env!("CARGO_BIN_EXE_symalg"))
            .args(&args)
            .output()
            .unwrap();
        let b = Command::new(env!("CARGO_BIN_EXE_symalg"))
            .args(&args)
            .output()
            .unwrap();
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn command_line_errors_are_json() {
    for args in [
        vec![],
        vec!["bogus"],
        vec!["commutant"],
        vec!["commutant", "x.json", "--maxdeg", "two"],
    ] {
        let (out, v) = symalg(&args);
        assert_eq!(out.status.code(), Some(2), "{args:?}");
        assert_eq!(v["error"]["kind"], "ParseError");
    }
    let (_, v) = symalg(&["commutant", "x.json", "--maxdeg", "two"]);
    assert_eq!(v["command"], "commutant");
    let help = Command::new(env!("CARGO_BIN_EXE_symalg"))
        .arg("--help")
        .output()
        .unwrap();
    assert!(help.status.success());
}

/// Every malformed input must come back as a structured error, never a panic.
#[test]
fn malformed_inputs_fuzz() {
    let cases: Vec<(&str, String)> = vec![
        ("jacobi", job("sl2.json")),
        ("commutant", job("c2.json")),
        ("spectrum", job("spectrum_half_two.json")),
        ("fock", job("fock_double_root.json")),
        ("fock", job("fock_darboux2.json")),
        ("verma-verify", job("verma_small.json")),
    ];
    let garbage: Vec<&[u8]> = vec![
        b"",
        b"\xff\xfe\x00",
        b"null",
        b"[]",
        b"{}",
        b"{\"dim\": -1}",
        b"{\"a\": \"half\", \"p\": 2}",
        b"{\"a\": 0.5, \"p\": -2}",
        b"{\"M\": 3, \"E\": 1, \"lambda\": 1, \"u\": 1}",
        b"{\"M\": 10, \"E\": \"1/0\", \"lambda\": 1, \"u\": 1}",
        b"{\"p\": 2, \"phi\": [0, 1], \"extra\": 1}",
        b"{\"dim\": 2, \"names\": [\"a\", \"a\"], \"brackets\": []}",
        b"{\"dim\": 2, \"names\": [\"a\", \"b\"], \"brackets\": [{\"j\": 1, \"k\": 1, \"terms\": {}}]}",
        b"{\"dim\": 2, \"names\": [\"a\", \"b\"], \"brackets\": [{\"j\": 1, \"k\": 9, \"terms\": {}}]}",
        b"{\"dim\": 2, \"names\": [\"a\", \"b\"], \"brackets\": [{\"j\": 1, \"k\": 2, \"terms\": {\"1\": \"q\"}}]}",
    ];
    let mut n = 0;
    for (cmd, valid) in &cases {
        let bytes = std::fs::read(valid).unwrap();
        let mut inputs: Vec<Vec<u8>> = garbage.iter().map(|g| g.to_vec()).collect();
        for cut in (0..bytes.len()).step_by(7) {
            inputs.push(bytes[..cut].to_vec());
        }
        for (i, input) in inputs.iter().enumerate() {
            let path = tmp_file(&format!("fuzz_{cmd}_{i}.json"), input);
            let report = in_process(&[cmd, &path]);
            let text = report.to_json();
            let v: Value = serde_json::from_str(&text).unwrap();
            assert_eq!(v["command"], *cmd);
            if v["status"] == "error" {
                assert!(v["error"]["kind"].is_string());
                assert_ne!(report.exit_code(), 0);
            }
            n += 1;
        }
    }
    assert!(n > 100);
}
