//! Both evaluation routes contain the pair
//! `Gamma(1 - b) * (...)  +  binom(-c, l - 1) * zeta(b - l + 1) * (...)`
//! whose poles at `b = l` cancel. Near such `b` the pair is evaluated as the
//! mean over a circle around `b`, which equals its value at the center by
//! the mean value property and never samples the cancelling poles.

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::special::{nearest_positive_integer, ComplexValue, EPS};

/// Below this distance from a positive integer the circle is used.
pub(crate) const PAIR_RADIUS: f64 = 0.05;
const CIRCLE_NODES: usize = 64;

/// Positive integer `l` with `|b - l| < PAIR_RADIUS`, if any.
pub(crate) fn near_positive_integer(b: Complex64) -> Option<u64> {
    let (l, d) = nearest_positive_integer(b);
    (d < PAIR_RADIUS).then_some(l as u64)
}

/// Distance from `b` to the closest singularity of the pair function:
/// the other poles of `Gamma(1 - b)`, the poles of `Gamma(b + c - 1)`, and
/// the pole of `zeta(a + b + c - 1)` (or its Hurwitz tail).
pub(crate) fn pair_radius(a: Complex64, b: Complex64, c: Complex64, l: u64) -> f64 {
    let lf = l as f64;
    let mut r = (b - (lf + 1.0)).norm();
    if l >= 2 {
        r = r.min((b - (lf - 1.0)).norm());
    }
    let w = b + c - 1.0;
    let j = (-w.re).round().max(0.0);
    r = r.min((w + j).norm());
    r.min((a + b + c - 2.0).norm())
}

/// Mean of `f` over the circle `|z - center| = radius`, with the error
/// estimate combining the samples' own errors, rounding, and the
/// truncation `(radius / r_analytic)^n` of the trapezoid rule.
pub(crate) fn circle_mean<F>(center: Complex64, radius: f64, r_analytic: f64, f: F) -> ComplexValue
where
    F: Fn(Complex64) -> ComplexValue,
{
    let n = CIRCLE_NODES;
    let mut acc = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    let mut peak: f64 = 0.0;
    for q in 0..n {
        let theta = 2.0 * PI * (q as f64 + 0.5) / n as f64;
        let v = f(center + Complex64::from_polar(radius, theta));
        acc += v.value;
        err += v.err;
        peak = peak.max(v.norm());
    }
    let mean = acc / n as f64;
    let ratio = radius / r_analytic;
    let trunc = peak * ratio.powi(n as i32) / (1.0 - ratio.powi(n as i32));
    ComplexValue::with_err(mean, err / n as f64 + 4.0 * EPS * peak + trunc)
}

/// Radius used for a pair whose analytic radius is `r`.
pub(crate) fn circle_radius(r: f64) -> f64 {
    (0.5 * r).min(0.25)
}
