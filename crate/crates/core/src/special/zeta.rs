//! Riemann zeta: Euler-Maclaurin summation on `Re s >= 1/2`, the
//! functional equation to the left of it.

use std::f64::consts::{LN_2, PI};

use num_complex::Complex64;

use super::bernoulli::even_bernoulli_over_factorial;
use super::complex::{sin_pi, ComplexValue, EPS};
use super::gamma::ln_gamma;
use crate::error::{Error, Result};

const MAX_CORRECTIONS: usize = 60;
const LN_PI: f64 = 1.144_729_885_849_400_2;

/// Euler-Maclaurin for the tail `sum_{n >= a} n^{-s}`, `a >= 1`.
///
/// Returns the value and an absolute error estimate. `rel_tol` bounds the
/// first omitted correction relative to the result.
pub(crate) fn tail_sum_em(s: Complex64, a: u64, rel_tol: f64) -> Option<(Complex64, f64)> {
    let b = even_bernoulli_over_factorial(MAX_CORRECTIONS);
    let af = a as f64;
    let ln_a = af.ln();
    let a_pow = (-s * ln_a).exp(); // a^{-s}
    let sm1 = s - 1.0;
    let mut sum = a_pow * af / sm1 + a_pow * 0.5;
    let mut abs_sum = sum.norm();
    let mut poch = s;
    let mut pw = a_pow / af;
    let inv_a2 = 1.0 / (af * af);
    let mut prev = f64::INFINITY;
    for (k, &bk) in b.iter().enumerate().take(MAX_CORRECTIONS).skip(1) {
        let term = poch * pw * bk;
        let tn = term.norm();
        sum += term;
        abs_sum += tn;
        if tn <= rel_tol * sum.norm() || tn == 0.0 {
            return Some((sum, tn + 4.0 * EPS * abs_sum));
        }
        if tn > prev && k > 4 {
            return None;
        }
        prev = tn;
        let kk = (2 * k) as f64;
        poch *= (s + (kk - 1.0)) * (s + kk);
        pw *= inv_a2;
    }
    None
}

/// `sum_{n > a} n^{-s}` for `Re s > 1`, i.e. the Hurwitz tail `zeta(s, a+1)`.
pub(crate) fn zeta_tail(s: Complex64, a: u64) -> (Complex64, f64) {
    let mut start = a + 1;
    let mut head = Complex64::new(0.0, 0.0);
    let mut head_abs = 0.0;
    loop {
        if let Some((v, e)) = tail_sum_em(s, start, 1e-17) {
            return (head + v, e + 4.0 * EPS * head_abs);
        }
        // Move the Euler-Maclaurin start point out until it converges.
        let stop = start + 8 + (s.norm() as u64) / 2;
        for n in start..stop {
            let t = (-s * (n as f64).ln()).exp();
            head += t;
            head_abs += t.norm();
        }
        start = stop;
    }
}

fn zeta_right(s: Complex64) -> (Complex64, f64) {
    let mut n = (0.5 * s.norm()).ceil() as u64 + 10;
    loop {
        let mut head = Complex64::new(0.0, 0.0);
        let mut head_abs = 0.0;
        for k in 1..n {
            let t = (-s * (k as f64).ln()).exp();
            head += t;
            head_abs += t.norm();
        }
        if let Some((tail, e)) = tail_sum_em(s, n, 1e-17) {
            let v = head + tail;
            return (v, e + 4.0 * EPS * (head_abs + v.norm()));
        }
        n *= 2;
    }
}

/// `zeta(s)` with an absolute error estimate. Returns an infinite value at
/// `s = 1`.
pub fn zeta(s: Complex64) -> (Complex64, f64) {
    if s == Complex64::new(1.0, 0.0) {
        return (Complex64::new(f64::INFINITY, 0.0), 0.0);
    }
    // Near s = 0 the reflection would need zeta(1 - s) with 1 - s rounded,
    // so stay with Euler-Maclaurin there.
    if s.re >= 0.5 || s.norm() < 0.5 {
        return zeta_right(s);
    }
    let w = 1.0 - s;
    let (zw, ew) = zeta_right(w);
    let lg = ln_gamma(w);
    let expo = s * LN_2 + (s - 1.0) * LN_PI + lg;
    let factor = expo.exp() * sin_pi(s * 0.5);
    let v = factor * zw;
    let rel = 8.0 * EPS * (16.0 + 3.0 * s.norm() + lg.norm()) + ew / zw.norm().max(1e-300);
    (v, v.norm() * rel)
}

/// `zeta(s)`, refusing the pole.
pub fn riemann_zeta(s: ComplexValue) -> Result<ComplexValue> {
    if s.value == Complex64::new(1.0, 0.0) {
        return Err(Error::PoleAtOne);
    }
    let (v, mut e) = zeta(s.value);
    if s.err > 0.0 {
        let h = (s.err * 1e3).max(1e-6).min(0.5 * (s.value - 1.0).norm());
        let (v2, _) = zeta(s.value + h);
        e += (v2 - v).norm() / h * s.err;
    }
    Ok(ComplexValue::with_err(v, e))
}

/// `zeta` as a ComplexValue, for internal callers that have already
/// excluded the pole.
pub(crate) fn zeta_value(s: Complex64) -> ComplexValue {
    let (v, e) = zeta(s);
    ComplexValue::with_err(v, e)
}

/// The `j`-th Stieltjes constant `gamma_j`, where
/// `zeta(s) = 1/(s-1) + sum_j (-1)^j gamma_j / j! (s-1)^j`.
///
/// Computed from a Cauchy integral of the entire function
/// `zeta(s) - 1/(s-1)` over the unit circle about `s = 1`.
pub fn zeta_laurent_at_one(j: usize) -> ComplexValue {
    const NODES: usize = 96;
    let mut acc = Complex64::new(0.0, 0.0);
    let mut err = 0.0;
    for q in 0..NODES {
        let theta = 2.0 * PI * (q as f64 + 0.5) / NODES as f64;
        let u = Complex64::from_polar(1.0, theta);
        let (z, e) = zeta(1.0 + u);
        let g = z - u.inv();
        acc += g * u.powi(-(j as i32));
        err += e;
    }
    let a_j = acc / NODES as f64;
    let fact: f64 = (1..=j).map(|k| k as f64).product();
    let sign = if j.is_multiple_of(2) { 1.0 } else { -1.0 };
    let v = a_j * (sign * fact);
    ComplexValue::with_err(
        Complex64::new(v.re, 0.0),
        fact * (err / NODES as f64 + 1e-15) + v.im.abs(),
    )
}
