//! JSON envelope, float formatting and error records.

use mtzeta::special::ComplexValue;
use mtzeta::{Complex64, Error};
use serde_json::{json, Map, Number, Value};

/// A finite float as a JSON number with 17 significant digits; non-finite
/// values become strings.
pub fn num(x: f64) -> Value {
    if x.is_finite() {
        let text = format!("{x:.16e}");
        Value::Number(text.parse::<Number>().expect("valid JSON number"))
    } else {
        Value::String(x.to_string())
    }
}

pub fn complex(z: Complex64) -> Value {
    json!({ "re": num(z.re), "im": num(z.im) })
}

pub fn complex_value(z: &ComplexValue) -> Value {
    json!({ "re": num(z.re()), "im": num(z.im()), "err": num(z.err) })
}

/// Rewrites every non-integer number in `v` with 17 significant digits.
pub fn normalise(v: Value) -> Value {
    match v {
        Value::Number(n) if !(n.is_i64() || n.is_u64()) => {
            n.as_f64().map(num).unwrap_or(Value::Number(n))
        }
        Value::Array(a) => Value::Array(a.into_iter().map(normalise).collect()),
        Value::Object(o) => Value::Object(o.into_iter().map(|(k, v)| (k, normalise(v))).collect()),
        other => other,
    }
}

pub fn to_json<T: serde::Serialize>(x: &T) -> Value {
    normalise(serde_json::to_value(x).expect("serialisable"))
}

pub fn error_kind(e: &Error) -> &'static str {
    match e {
        Error::PoleAtOne => "pole_at_one",
        Error::OutOfRegion { .. } => "out_of_region",
        Error::OutsideHolomorphyRegion { .. } => "outside_holomorphy_region",
        Error::TailBoundExceeded { .. } => "tail_bound_exceeded",
        Error::NearSingularSet(r) => r.kind.name(),
        Error::CancellationLoss { .. } => "cancellation_loss",
        Error::DegenerateDirection(..) => "degenerate_direction",
        Error::IndeterminateAtLattice => "indeterminate_at_lattice",
        Error::CoefficientPole => "coefficient_pole",
        Error::OffTotalPlane(_) => "off_total_plane",
        Error::DegenerateSample => "degenerate_sample",
        Error::NonPrimeModulus(_) => "non_prime_modulus",
        Error::InverseOfZero(_) => "inverse_of_zero",
        Error::InvalidParameter(_) => "invalid_parameter",
    }
}

/// Usage-type failures exit with 1, evaluation refusals with 2.
pub fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::DegenerateDirection(..)
        | Error::InvalidParameter(_)
        | Error::NonPrimeModulus(_)
        | Error::DegenerateSample => 1,
        _ => 2,
    }
}

pub fn error_record(e: &Error) -> Value {
    let mut m = Map::new();
    m.insert("kind".into(), json!(error_kind(e)));
    m.insert("message".into(), json!(e.to_string()));
    match e {
        Error::NearSingularSet(r) => {
            m.insert("distance".into(), num(r.distance));
            m.insert("hits".into(), to_json(&r.hits));
        }
        Error::OutOfRegion { margin } => {
            m.insert("margin".into(), num(*margin));
        }
        Error::CancellationLoss { err, tol } => {
            m.insert("err".into(), num(*err));
            m.insert("tol".into(), num(*tol));
        }
        _ => {}
    }
    Value::Object(m)
}

pub fn usage_record(msg: &str) -> Value {
    json!({ "kind": "usage", "message": msg })
}

/// `{command, inputs, config, outputs, error?}`.
pub fn envelope(
    command: &str,
    inputs: Value,
    config: Value,
    outputs: Value,
    error: Option<Value>,
) -> Value {
    let mut m = Map::new();
    m.insert("command".into(), json!(command));
    m.insert("inputs".into(), inputs);
    m.insert("config".into(), config);
    m.insert("outputs".into(), outputs);
    if let Some(e) = error {
        m.insert("error".into(), e);
    }
    Value::Object(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits() {
        assert_eq!(num(0.1).to_string(), "1.0000000000000001e-1");
        assert_eq!(num(-2.0).to_string(), "-2.0000000000000000e+0");
        assert_eq!(num(f64::INFINITY), json!("inf"));
        let v = normalise(json!({"a": [0.5, 3], "b": 1e-300}));
        assert_eq!(
            v.to_string(),
            r#"{"a":[5.0000000000000000e-1,3],"b":1.0000000000000000e-300}"#
        );
    }
}
