use mtzeta_wasm::{finite_residues, limit_sweep, pole_scan};
use serde_json::Value;

fn parse(s: String) -> Value {
    serde_json::from_str(&s).expect("valid JSON")
}

#[test]
fn sweep_at_origin_tends_to_one() {
    let v = parse(limit_sweep(0, 0, 0, "1,2,4", "1e-2,1e-3,1e-4", 1e-10));
    assert_eq!(v["rows"].as_array().unwrap().len(), 3);
    assert!((v["limit"]["re"].as_f64().unwrap() - 1.0).abs() < 1e-3);
    assert_eq!(v["expected"], 1.0);
}

#[test]
fn sweep_rejects_bad_input() {
    let v = parse(limit_sweep(0, 0, 0, "1,-1,2", "1e-2", 1e-10));
    assert_eq!(v["error"]["kind"], "degenerate_direction");
    let v = parse(limit_sweep(0, 0, 0, "1,2", "1e-2", 1e-10));
    assert_eq!(v["error"]["kind"], "usage");
    let v = parse(limit_sweep(0, 0, 0, "1,2,4", "x", 1e-10));
    assert_eq!(v["error"]["kind"], "usage");
}

#[test]
fn pole_scan_shows_simple_pole() {
    let v = parse(pole_scan(0.35, 1.7, 4));
    let rows = v["rows"].as_array().unwrap();
    assert_eq!(rows.len(), 4);
    let scaled: Vec<f64> = rows.iter().map(|r| r["scaled"].as_f64().unwrap()).collect();
    let last = scaled[3];
    assert!(last > 0.0);
    assert!((scaled[2] - last).abs() / last < 0.05, "{scaled:?}");
    assert_eq!(parse(pole_scan(0.35, 2.0, 4))["error"]["kind"], "usage");
}

#[test]
fn finite_table() {
    let v = parse(finite_residues(0, 0, 0, 50));
    let r = v["residues"].as_array().unwrap();
    assert_eq!(r.len(), 13);
    assert!(r.iter().all(|e| e["residue"] == 1));
    assert_eq!(v["pattern"]["holds"], true);
    let v = parse(finite_residues(1, 1, 1, 20));
    assert_eq!(v["pattern"]["applies"], false);
    assert_eq!(v["residues"][0]["residue"], 3);
    assert_eq!(parse(finite_residues(0, 0, 0, 4))["error"]["kind"], "usage");
}
