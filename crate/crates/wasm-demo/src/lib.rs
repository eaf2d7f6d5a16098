//! Browser bindings for the `mtzeta` demo page.
//!
//! Every export takes plain numbers or comma-separated lists and returns a
//! JSON string. Failures come back as `{"error": {"kind", "message"}}`, so the
//! page never has to catch exceptions.

use mtzeta::finite::{omega_a, pattern_holds, pattern_threshold, pattern_value, IndexTuple};
use mtzeta::mt::{mt_continued, MtParams};
use mtzeta::omega::{expected_limit, limit_sweep as sweep, LimitPath};
use mtzeta::{Complex64, Error};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

const MAX_PRIME: u64 = 5000;

fn fail(kind: &str, message: impl ToString) -> String {
    json!({ "error": { "kind": kind, "message": message.to_string() } }).to_string()
}

fn eval_fail(e: Error) -> String {
    let kind = match &e {
        Error::NearSingularSet(r) => r.kind.name(),
        Error::DegenerateDirection(..) => "degenerate_direction",
        Error::CancellationLoss { .. } => "cancellation_loss",
        _ => "evaluation",
    };
    fail(kind, e)
}

fn parse_list(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| {
            t.trim()
                .parse::<f64>()
                .map_err(|_| format!("not a number: {:?}", t.trim()))
        })
        .collect()
}

fn finite(x: f64) -> Value {
    if x.is_finite() {
        json!(x)
    } else {
        Value::Null
    }
}

/// Directed limit of omega_U at `(-m1, -m2, -m3)` along `direction`
/// (three comma-separated reals), sampled at `deltas`.
#[wasm_bindgen]
pub fn limit_sweep(m1: u32, m2: u32, m3: u32, direction: &str, deltas: &str, tol: f64) -> String {
    if m1.max(m2).max(m3) > 6 {
        return fail("usage", "keep each m at 6 or below in the demo");
    }
    let dir: [f64; 3] = match parse_list(direction).map(<[f64; 3]>::try_from) {
        Ok(Ok(d)) => d,
        Ok(Err(_)) => return fail("usage", "direction needs three components"),
        Err(e) => return fail("usage", e),
    };
    let deltas = match parse_list(deltas) {
        Ok(d) if !d.is_empty() && d.iter().all(|x| *x > 0.0 && x.is_finite()) => d,
        Ok(_) => return fail("usage", "deltas must be positive"),
        Err(e) => return fail("usage", e),
    };
    if !(tol > 0.0 && tol < 1.0) {
        return fail("usage", "tol must lie in (0, 1)");
    }
    let path = match LimitPath::new(dir, deltas) {
        Ok(p) => p,
        Err(e) => return eval_fail(e),
    };
    let m = [m1, m2, m3];
    match sweep(m, &path, &MtParams::with_tol(tol)) {
        Ok(r) => json!({
            "m": m,
            "direction": dir,
            "rows": r.rows.iter().map(|row| json!({
                "delta": row.delta,
                "re": row.value.re(),
                "im": row.value.im(),
                "err": row.value.err,
            })).collect::<Vec<_>>(),
            "limit": { "re": r.limit.re(), "im": r.limit.im(), "err": finite(r.limit.err) },
            "order": r.order.map(finite),
            "expected": expected_limit(m),
        })
        .to_string(),
        Err(e) => eval_fail(e),
    }
}

/// `|zeta_MT|` along the normal approach to the hyperplane `s1 + s3 = 1`
/// at `(a, s2, 1 - a)`: the point at distance `d` is
/// `(a - d/2, s2, 1 - a - d/2)`. A simple pole shows as `d * |zeta_MT|`
/// settling to a constant.
#[wasm_bindgen]
pub fn pole_scan(a: f64, s2: f64, steps: u32) -> String {
    if !(1..=40).contains(&steps) {
        return fail("usage", "steps must lie in [1, 40]");
    }
    if !(a.is_finite() && s2.is_finite()) || s2 <= 1.0 || s2.fract() == 0.0 {
        return fail("usage", "s2 must be a non-integer real above 1");
    }
    let params = MtParams::default();
    let span = f64::from(steps.max(2) - 1);
    let mut rows = Vec::with_capacity(steps as usize);
    for i in 0..steps {
        // d runs from 10^-0.5 down to 10^-3.5.
        let d = 10f64.powf(-0.5 - 3.0 * f64::from(i) / span);
        let s1 = Complex64::new(a - d / 2.0, 0.0);
        let s3 = Complex64::new(1.0 - a - d / 2.0, 0.0);
        match mt_continued(s1, Complex64::new(s2, 0.0), s3, &params) {
            Ok(r) => {
                let mag = r.value.norm();
                rows.push(json!({
                    "d": d,
                    "re": r.value.re(),
                    "im": r.value.im(),
                    "abs": mag,
                    "scaled": d * mag,
                }));
            }
            Err(e) => return eval_fail(e),
        }
    }
    json!({ "a": a, "s2": s2, "rows": rows }).to_string()
}

/// `omega_p(k1, k2, k3)` mod `p` for primes `5 <= p <= primes_up_to`, with
/// the residue pattern for non-positive indices.
#[wasm_bindgen]
pub fn finite_residues(k1: i32, k2: i32, k3: i32, primes_up_to: u32) -> String {
    let bound = u64::from(primes_up_to);
    if !(5..=MAX_PRIME).contains(&bound) {
        return fail(
            "usage",
            format!("primes_up_to must lie in [5, {MAX_PRIME}]"),
        );
    }
    if [k1, k2, k3].iter().any(|k| k.abs() > 12) {
        return fail("usage", "keep |k| at 12 or below in the demo");
    }
    let k = IndexTuple::from([i64::from(k1), i64::from(k2), i64::from(k3)]);
    let v = match omega_a(&k, bound) {
        Ok(v) => v,
        Err(e) => return eval_fail(e),
    };
    let applies = k.components().iter().all(|&x| x <= 0);
    let pattern = if applies {
        json!({
            "applies": true,
            "threshold": pattern_threshold(&k),
            "value": pattern_value(&k),
            "holds": pattern_holds(&k, &v),
        })
    } else {
        json!({ "applies": false })
    };
    json!({
        "k": k.components(),
        "residues": v.entries().iter().map(|&(p, r)| json!({ "p": p, "residue": r })).collect::<Vec<_>>(),
        "pattern": pattern,
    })
    .to_string()
}
