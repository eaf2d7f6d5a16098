use std::f64::consts::PI;
use std::process::Command;

use serde_json::Value;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_mtzeta"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
    )
}

fn run_json(args: &[&str]) -> (i32, Value) {
    let (code, out) = run(args);
    (code, serde_json::from_str(&out).unwrap_or(Value::Null))
}

fn f(v: &Value) -> f64 {
    v.as_f64().unwrap()
}

#[test]
fn eval_mt_examples() {
    let (code, doc) = run_json(&["eval-mt", "2", "2", "2"]);
    assert_eq!(code, 0);
    for key in ["command", "inputs", "config", "outputs"] {
        assert!(doc.get(key).is_some(), "missing {key}");
    }
    assert!(doc.get("error").is_none());
    assert_eq!(doc["outputs"]["method"], "direct-sum");
    let re = f(&doc["outputs"]["value"]["re"]);
    assert!((re - PI.powi(6) / 2835.0).abs() < 1e-10);

    let (code, doc) = run_json(&["eval-mt", "0.3", "0.4", "0.2"]);
    assert_eq!(code, 0);
    assert_eq!(doc["outputs"]["method"], "mellin-barnes");
    assert!(f(&doc["outputs"]["err"]) < 1e-8);

    let (code, doc) = run_json(&["eval-mt", "0.5", "0.5", "0.5"]);
    assert_eq!(code, 2);
    assert_eq!(doc["error"]["kind"], "pair_hyperplane");
}

#[test]
fn complex_arguments_and_parse_errors() {
    let (code, doc) = run_json(&["eval-mt", "3+1i", "2.5-0.5i", "-0.25"]);
    assert_eq!(code, 0, "{doc}");
    assert_eq!(f(&doc["inputs"]["s"][0]["im"]), 1.0);
    assert_eq!(run(&["eval-mt", "abc", "1", "1"]).0, 1);
    assert_eq!(run(&["eval-mt", "1", "1"]).0, 1);
    assert_eq!(run(&["no-such-command"]).0, 1);
}

#[test]
fn omega_value() {
    let (code, doc) = run_json(&["eval-omega-u", "2", "2", "2"]);
    assert_eq!(code, 0);
    assert!((f(&doc["outputs"]["value"]["re"]) - PI.powi(6) / 945.0).abs() < 1e-8);
}

#[test]
fn limit_sweep_examples() {
    let (code, doc) = run_json(&[
        "limit-sweep",
        "0",
        "0",
        "0",
        "--direction",
        "1,2,4",
        "--deltas",
        "1e-2,1e-3,1e-4",
    ]);
    assert_eq!(code, 0);
    assert!((f(&doc["outputs"]["limit"]["re"]) - 1.0).abs() < 1e-3);
    assert_eq!(doc["outputs"]["rows"].as_array().unwrap().len(), 3);
    assert!(doc["outputs"]["order"].is_number());

    let (code, doc) = run_json(&["limit-sweep", "1", "1", "1", "--direction", "1,2,4"]);
    assert_eq!(code, 0);
    assert!(f(&doc["outputs"]["limit"]["re"]).abs() < 1e-3);

    let (code, doc) = run_json(&["limit-sweep", "0", "0", "0", "--direction", "1,-1,2"]);
    assert_eq!(code, 1);
    assert_eq!(doc["error"]["kind"], "degenerate_direction");
}

#[test]
fn sweep_csv() {
    let (code, out) = run(&["limit-sweep", "0", "1", "0", "--format", "csv"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("delta,re,im,err"));
    let rows: Vec<Vec<f64>> = lines
        .map(|l| l.split(',').map(|x| x.parse().unwrap()).collect())
        .collect();
    assert_eq!(rows.len(), 4);
    assert_eq!(rows[3][0], 0.0);
    assert!(rows[3][1].abs() < 1e-3);
    assert_eq!(run(&["coeffs", "--format", "csv"]).0, 1);
}

#[test]
fn identity_checks_pass() {
    for args in [
        vec!["identity-check", "structural", "--max-m", "8"],
        vec!["identity-check", "cyclic-series", "--degree", "12"],
        vec!["identity-check", "partial-fraction"],
        vec!["identity-check", "exponential"],
        vec![
            "identity-check",
            "binomial-modp",
            "--max-abs-k",
            "4",
            "--primes-up-to",
            "200",
        ],
        vec!["series-check", "--degree", "10"],
    ] {
        let (code, doc) = run_json(&args);
        assert_eq!(code, 0, "{args:?}");
        assert_eq!(doc["outputs"]["passed"], true, "{args:?}");
    }
    let (_, doc) = run_json(&["identity-check", "structural", "--max-m", "8"]);
    assert_eq!(doc["outputs"]["checked"], 729);
}

#[test]
fn finite_examples() {
    let (code, doc) = run_json(&["finite", "0", "0", "0", "--primes-up-to", "100"]);
    assert_eq!(code, 0);
    let res = doc["outputs"]["residues"].as_array().unwrap();
    assert_eq!(res.len(), 23);
    assert!(res.iter().all(|r| r["residue"] == 1));

    let (_, doc) = run_json(&["finite", "-2", "0", "-1", "--primes-up-to", "100"]);
    assert_eq!(doc["outputs"]["pattern"]["holds"], true);
    let threshold = doc["outputs"]["pattern"]["threshold"].as_u64().unwrap();
    for r in doc["outputs"]["residues"].as_array().unwrap() {
        if r["p"].as_u64().unwrap() > threshold {
            assert_eq!(r["residue"], 0);
        }
    }

    let (_, doc) = run_json(&["finite", "1", "1", "1", "--primes-up-to", "20"]);
    assert_eq!(doc["outputs"]["pattern"]["applies"], false);
    assert_eq!(doc["outputs"]["residues"][0]["p"], 5);
    assert_eq!(doc["outputs"]["residues"][0]["residue"], 3);
}

#[test]
fn singularity_examples() {
    let (_, doc) = run_json(&["singularity", "0", "0", "1"]);
    assert_eq!(
        doc["outputs"]["classification"]["kind"],
        "integer_indeterminacy"
    );
    let (code, doc) = run_json(&[
        "singularity",
        "0.5",
        "3",
        "0.5",
        "--coeff",
        "pair",
        "--l",
        "0",
    ]);
    assert_eq!(code, 0);
    let v = &doc["outputs"]["coefficient"]["value"];
    let zeta3 = 1.2020569031595942;
    assert!(f(&v["re"]).abs() < 1e-14);
    assert!((f(&v["im"]) - 2.0 * zeta3).abs() < 1e-12);
    let (_, doc) = run_json(&["singularity", "0.3", "0.4", "0.2"]);
    assert_eq!(doc["outputs"]["classification"]["kind"], "regular");
}

#[test]
fn output_is_deterministic() {
    let args = ["limit-sweep", "1", "0", "2", "--deltas", "1e-2,1e-3"];
    assert_eq!(run(&args).1, run(&args).1);
    let args = ["finite", "-1", "-1", "0"];
    assert_eq!(run(&args).1, run(&args).1);
}

#[test]
fn config_file_and_precedence() {
    let path = std::env::temp_dir().join(format!("mtzeta-cli-{}.cfg", std::process::id()));
    std::fs::write(&path, "primes_up_to = 30\nformat = json\ntol = 1e-9\n").unwrap();
    let p = path.to_string_lossy().into_owned();
    let (_, doc) = run_json(&["finite", "0", "0", "0", "--config", &p]);
    assert_eq!(doc["config"]["primes_up_to"], 30);
    assert_eq!(f(&doc["config"]["tol"]), 1e-9);
    let (_, doc) = run_json(&[
        "finite",
        "0",
        "0",
        "0",
        "--config",
        &p,
        "--primes-up-to",
        "40",
    ]);
    assert_eq!(doc["config"]["primes_up_to"], 40);
    std::fs::remove_file(&path).ok();
    assert_eq!(
        run(&["finite", "0", "0", "0", "--precision", "binary128"]).0,
        1
    );
}
