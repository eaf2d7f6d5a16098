use std::fmt::Write as _;

use mtzeta::coeffs::{b_coeff, c_coeff, structural_sweep, structural_target};
use mtzeta::finite::{
    binomial_reduction_check, omega_a, pattern_holds, pattern_threshold, pattern_value,
    primes_between, IndexTuple, SMALLEST_PRIME,
};
use mtzeta::mt::{auto_params, mt_eval, MtParams};
use mtzeta::omega::{
    classify_point, expected_limit, limit_sweep, omega_u, singular_coefficient_pair,
    singular_coefficient_total, LimitPath,
};
use mtzeta::rational::ExactRational;
use mtzeta::series::{
    coefficient_mismatches, cyclic_sum_check, divided_difference_check, exponential_identity_check,
    partial_fraction_identity_check,
};
use mtzeta::{Complex64, Error};
use num_traits::{One, Zero};
use serde_json::{json, Value};

use crate::config::{Format, RunConfig};
use crate::output::{complex, complex_value, num, to_json};

pub struct Outcome {
    pub inputs: Value,
    pub outputs: Value,
    pub text: String,
    pub csv: Option<String>,
    /// An identity check found a counterexample.
    pub violation: bool,
}

pub enum Failure {
    Usage(String),
    Eval { inputs: Value, error: Box<Error> },
}

pub type CmdResult = Result<Outcome, Failure>;

fn eval_err(inputs: &Value) -> impl Fn(Error) -> Failure + '_ {
    move |error| Failure::Eval {
        inputs: inputs.clone(),
        error: Box::new(error),
    }
}

fn point_inputs(s: &[Complex64; 3]) -> Value {
    json!({ "s": s.iter().map(|&z| complex(z)).collect::<Vec<_>>() })
}

fn fmt_c(z: Complex64) -> String {
    format!("{:.16e} {:+.16e}i", z.re, z.im)
}

fn point_params(cfg: &RunConfig, s: &[Complex64; 3]) -> MtParams {
    let t_auto = [(0, 1, 2), (2, 0, 1), (1, 2, 0)]
        .iter()
        .map(|&(a, b, c)| auto_params(s[a], s[b], s[c], cfg.tol).t_max)
        .fold(0.0, f64::max);
    let mut p = auto_params(s[0], s[1], s[2], cfg.tol);
    p.eta = cfg.eta;
    p.t_max = cfg.tail_t.unwrap_or(t_auto);
    if let Some(m) = cfg.mb_m {
        p.m = m;
    }
    p
}

fn fixed_params(cfg: &RunConfig) -> MtParams {
    let d = MtParams::default();
    MtParams {
        m: cfg.mb_m.unwrap_or(d.m),
        eta: cfg.eta,
        t_max: cfg.tail_t.unwrap_or(d.t_max),
        tol: cfg.tol,
        ..d
    }
}

pub fn eval_mt(s: [Complex64; 3], cfg: &RunConfig) -> CmdResult {
    let inputs = point_inputs(&s);
    let params = point_params(cfg, &s);
    let r = mt_eval(s[0], s[1], s[2], &params).map_err(eval_err(&inputs))?;
    let outputs = json!({
        "method": r.method.to_string(),
        "value": complex(r.value.value),
        "err": num(r.err()),
        "M": r.m,
        "params": to_json(&params),
    });
    let text = format!(
        "zeta_MT = {}\nerr = {:.3e}\nmethod = {}\n",
        fmt_c(r.value.value),
        r.err(),
        r.method
    );
    Ok(Outcome {
        inputs,
        outputs,
        text,
        csv: None,
        violation: false,
    })
}

pub fn eval_omega_u(s: [Complex64; 3], cfg: &RunConfig) -> CmdResult {
    let inputs = point_inputs(&s);
    let params = point_params(cfg, &s);
    let r = omega_u(s[0], s[1], s[2], &params).map_err(eval_err(&inputs))?;
    let outputs = json!({
        "method": r.method.to_string(),
        "value": complex(r.value.value),
        "err": num(r.err()),
        "M": r.m,
        "params": to_json(&params),
    });
    let text = format!(
        "omega_U = {}\nerr = {:.3e}\n",
        fmt_c(r.value.value),
        r.err()
    );
    Ok(Outcome {
        inputs,
        outputs,
        text,
        csv: None,
        violation: false,
    })
}

pub fn sweep(m: [u32; 3], cfg: &RunConfig) -> CmdResult {
    let inputs = json!({ "m": m });
    let path = LimitPath::new(cfg.direction, cfg.deltas.clone()).map_err(eval_err(&inputs))?;
    let params = fixed_params(cfg);
    let s = limit_sweep(m, &path, &params).map_err(eval_err(&inputs))?;
    let rows: Vec<Value> = s
        .rows
        .iter()
        .map(|r| {
            json!({
                "delta": num(r.delta),
                "re": num(r.value.re()),
                "im": num(r.value.im()),
                "err": num(r.value.err),
                "residual": num(r.residual),
            })
        })
        .collect();
    let target = expected_limit(m);
    let outputs = json!({
        "direction": s.direction.iter().map(|&d| num(d)).collect::<Vec<_>>(),
        "rows": rows,
        "limit": complex_value(&s.limit),
        "order": s.order.map(num),
        "target": num(target),
        "limit_error": num((s.limit.value - target).norm()),
    });
    let mut csv = String::from("delta,re,im,err\n");
    for r in &s.rows {
        writeln!(
            csv,
            "{:.16e},{:.16e},{:.16e},{:.16e}",
            r.delta,
            r.value.re(),
            r.value.im(),
            r.value.err
        )
        .unwrap();
    }
    writeln!(
        csv,
        "{:.16e},{:.16e},{:.16e},{:.16e}",
        0.0,
        s.limit.re(),
        s.limit.im(),
        s.limit.err
    )
    .unwrap();
    let mut text = String::new();
    for r in &s.rows {
        writeln!(text, "delta = {:.1e}: {}", r.delta, fmt_c(r.value.value)).unwrap();
    }
    writeln!(
        text,
        "limit = {} (err {:.1e})",
        fmt_c(s.limit.value),
        s.limit.err
    )
    .unwrap();
    if let Some(o) = s.order {
        writeln!(text, "observed order = {o:.3}").unwrap();
    }
    writeln!(text, "expected = {target}").unwrap();
    Ok(Outcome {
        inputs,
        outputs,
        text,
        csv: Some(csv),
        violation: false,
    })
}

pub fn coeffs(max_m: u32) -> CmdResult {
    let inputs = json!({ "max_m": max_m });
    let mut table = Vec::new();
    let mut text = String::from("m1 m2 m3  b  c\n");
    for m1 in 0..=max_m {
        for m2 in 0..=max_m {
            for m3 in 0..=max_m {
                let (b, c) = (b_coeff(m1, m2, m3), c_coeff(m1, m2, m3));
                writeln!(text, "{m1} {m2} {m3}  {b}  {c}").unwrap();
                table.push(json!({
                    "m": [m1, m2, m3],
                    "b": b.to_string(),
                    "c": c.to_string(),
                }));
            }
        }
    }
    Ok(Outcome {
        inputs,
        outputs: json!({ "coefficients": table }),
        text,
        csv: None,
        violation: false,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum IdentityKind {
    Structural,
    CyclicSeries,
    PartialFraction,
    Exponential,
    BinomialModp,
}

impl IdentityKind {
    fn name(self) -> &'static str {
        match self {
            Self::Structural => "structural",
            Self::CyclicSeries => "cyclic-series",
            Self::PartialFraction => "partial-fraction",
            Self::Exponential => "exponential",
            Self::BinomialModp => "binomial-modp",
        }
    }
}

pub struct IdentityOptions {
    pub max_m: u32,
    pub samples: usize,
    pub max_abs_k: i64,
}

fn report(kind: &str, inputs: Value, checked: usize, counterexample: Option<Value>) -> Outcome {
    let passed = counterexample.is_none();
    let text = match &counterexample {
        None => format!("{kind}: pass ({checked} checked)\n"),
        Some(c) => format!("{kind}: FAIL ({checked} checked), counterexample {c}\n"),
    };
    Outcome {
        inputs,
        outputs: json!({
            "kind": kind,
            "passed": passed,
            "checked": checked,
            "counterexample": counterexample,
        }),
        text,
        csv: None,
        violation: !passed,
    }
}

pub fn identity_check(kind: IdentityKind, opts: &IdentityOptions, cfg: &RunConfig) -> CmdResult {
    let name = kind.name();
    Ok(match kind {
        IdentityKind::Structural => {
            let inputs = json!({ "max_m": opts.max_m });
            let sweep = structural_sweep(opts.max_m);
            let bad = sweep
                .iter()
                .find(|(t, v)| *v != structural_target(t.m1, t.m2, t.m3));
            let cx = bad.map(|(t, v)| {
                json!({
                    "m": t.as_array(),
                    "value": v.to_string(),
                    "expected": structural_target(t.m1, t.m2, t.m3).to_string(),
                })
            });
            report(name, inputs, sweep.len(), cx)
        }
        IdentityKind::CyclicSeries => {
            let n = cfg.degree;
            let inputs = json!({ "degree": n });
            let s = cyclic_sum_check(n);
            let bad = s.terms().find(|(e, v)| {
                let expected = if *e == [0, 0, 0] {
                    ExactRational::one()
                } else {
                    ExactRational::zero()
                };
                **v != expected
            });
            let missing_one = s.coeff(0, 0, 0) != ExactRational::one();
            let cx = match (bad, missing_one) {
                (Some((e, v)), _) => Some(json!({ "monomial": e, "coefficient": v.to_string() })),
                (None, true) => Some(
                    json!({ "monomial": [0, 0, 0], "coefficient": s.coeff(0, 0, 0).to_string() }),
                ),
                (None, false) => None,
            };
            let n = n as usize;
            let monomials = (n + 1) * (n + 2) * (n + 3) / 6;
            report(name, inputs, monomials, cx)
        }
        IdentityKind::PartialFraction => {
            let inputs = json!({ "samples": opts.samples });
            let ok = partial_fraction_identity_check(opts.samples);
            report(
                name,
                inputs,
                opts.samples + 1,
                (!ok).then(|| json!("sampled or symbolic check failed")),
            )
        }
        IdentityKind::Exponential => {
            let ok = exponential_identity_check();
            report(
                name,
                json!({}),
                3,
                (!ok).then(|| json!("symbolic or spot check failed")),
            )
        }
        IdentityKind::BinomialModp => {
            let k = opts.max_abs_k;
            let inputs = json!({ "max_abs_k": k, "primes_up_to": cfg.primes_up_to });
            if k < 0 {
                return Err(Failure::Usage("max-abs-k must be non-negative".into()));
            }
            let primes = primes_between(SMALLEST_PRIME, cfg.primes_up_to);
            let mut checked = 0;
            let mut cx = None;
            'outer: for k1 in -k..=0 {
                for k2 in -k..=0 {
                    for k3 in -k..=0 {
                        for &p in &primes {
                            let ok = binomial_reduction_check(k1, k2, k3, p)
                                .map_err(eval_err(&inputs))?;
                            checked += 1;
                            if !ok {
                                cx = Some(json!({ "k": [k1, k2, k3], "p": p }));
                                break 'outer;
                            }
                        }
                    }
                }
            }
            report(name, inputs, checked, cx)
        }
    })
}

pub fn series_check(cfg: &RunConfig) -> CmdResult {
    let n = cfg.degree;
    let inputs = json!({ "degree": n });
    let cyclic = cyclic_sum_check(n).is_constant(&ExactRational::one());
    let divided = divided_difference_check(n);
    let mismatches = coefficient_mismatches(n);
    let ok = cyclic && divided && mismatches.is_empty();
    let text = format!(
        "degree {n}\ncyclic sum is 1: {cyclic}\ndivided difference exact: {divided}\ncoefficient mismatches: {}\n",
        mismatches.len()
    );
    Ok(Outcome {
        inputs,
        outputs: json!({
            "passed": ok,
            "cyclic_sum_is_one": cyclic,
            "divided_difference_exact": divided,
            "coefficient_mismatches": mismatches,
        }),
        text,
        csv: None,
        violation: !ok,
    })
}

pub fn finite(k: [i64; 3], cfg: &RunConfig) -> CmdResult {
    let inputs = json!({ "k": k });
    let idx = IndexTuple::from(k);
    let v = omega_a(&idx, cfg.primes_up_to).map_err(eval_err(&inputs))?;
    let residues: Vec<Value> = v
        .entries()
        .iter()
        .map(|&(p, r)| json!({ "p": p, "residue": r }))
        .collect();
    let applies = k.iter().all(|&ki| ki <= 0);
    let pattern = if applies {
        json!({
            "applies": true,
            "expected": pattern_value(&idx),
            "threshold": if idx.is_zero() { 0 } else { pattern_threshold(&idx) },
            "holds": pattern_holds(&idx, &v),
        })
    } else {
        json!({ "applies": false })
    };
    let mut text = String::new();
    for &(p, r) in v.entries() {
        writeln!(text, "p = {p}: {r}").unwrap();
    }
    if applies {
        writeln!(text, "pattern holds: {}", pattern_holds(&idx, &v)).unwrap();
    }
    Ok(Outcome {
        inputs,
        outputs: json!({ "residues": residues, "pattern": pattern }),
        text,
        csv: None,
        violation: false,
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum CoeffKind {
    Pair,
    Total,
}

pub fn singularity(s: [Complex64; 3], coeff: Option<CoeffKind>, l: u32) -> CmdResult {
    let inputs = point_inputs(&s);
    let report = classify_point(s[0], s[1], s[2]);
    let mut text = format!("{} (distance {:.3e})\n", report.kind, report.distance);
    let coefficient = match coeff {
        None => Value::Null,
        Some(kind) => {
            let (name, v) = match kind {
                CoeffKind::Pair => ("pair", singular_coefficient_pair(s[0], l, s[1])),
                CoeffKind::Total => ("total", singular_coefficient_total(s[0], s[1], s[2])),
            };
            let v = v.map_err(eval_err(&inputs))?;
            writeln!(text, "{name} coefficient = {}", fmt_c(v.value)).unwrap();
            json!({ "kind": name, "l": l, "value": complex_value(&v) })
        }
    };
    Ok(Outcome {
        inputs,
        outputs: json!({ "classification": to_json(&report), "coefficient": coefficient }),
        text,
        csv: None,
        violation: false,
    })
}

pub fn check_format(format: Format, tabular: bool) -> Result<(), Failure> {
    if format == Format::Csv && !tabular {
        return Err(Failure::Usage(
            "csv output is only available for limit-sweep".into(),
        ));
    }
    Ok(())
}
