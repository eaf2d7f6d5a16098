//! Complex Gamma, its reciprocal (entire, exact zeros at the poles of
//! Gamma), and pole expansion data at the non-positive integers.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::complex::{sin_pi, ComplexValue, EPS};
use crate::rational::{factorial, from_bigint, ExactRational};

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

const LANCZOS_G: f64 = 7.0;
const LANCZOS: [f64; 9] = [
    0.999_999_999_999_809_9,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_1,
    -176.615_029_162_140_6,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_572e-6,
    1.505_632_735_149_311_6e-7,
];

const HALF_LN_2PI: f64 = 0.918_938_533_204_672_8;

// Lanczos sum, valid for Re z >= 1/2.
fn ln_gamma_right(z: Complex64) -> Complex64 {
    let z = z - 1.0;
    let mut x = Complex64::new(LANCZOS[0], 0.0);
    for (i, &c) in LANCZOS.iter().enumerate().skip(1) {
        x += c / (z + i as f64);
    }
    let t = z + LANCZOS_G + 0.5;
    HALF_LN_2PI + (z + 0.5) * t.ln() - t + x.ln()
}

/// `ln Gamma(z)` on some branch (only its exponential is meaningful).
pub fn ln_gamma(z: Complex64) -> Complex64 {
    if z.re >= 0.5 {
        ln_gamma_right(z)
    } else {
        // Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
        Complex64::new(PI.ln(), 0.0) - sin_pi(z).ln() - ln_gamma_right(1.0 - z)
    }
}

/// Relative accuracy estimate of the Lanczos evaluation at `z`.
fn lanczos_rel_err(z: Complex64) -> f64 {
    4.0 * EPS * (16.0 + z.norm() * (1.0 + z.norm().ln().abs()))
}

/// `Gamma(z)`. Infinite (or NaN) at the non-positive integers.
pub fn gamma(z: Complex64) -> Complex64 {
    if z.re >= 0.5 {
        ln_gamma_right(z).exp()
    } else {
        PI / (sin_pi(z) * ln_gamma_right(1.0 - z).exp())
    }
}

pub fn gamma_value(z: Complex64) -> ComplexValue {
    let v = gamma(z);
    let zz = if z.re >= 0.5 { z } else { 1.0 - z };
    ComplexValue::with_err(v, v.norm() * lanczos_rel_err(zz))
}

/// `1/Gamma(z)` evaluated directly as an entire function.
pub fn recip_gamma(z: Complex64) -> Complex64 {
    if z.re >= 0.5 {
        (-ln_gamma_right(z)).exp()
    } else {
        let s = sin_pi(z);
        if s == Complex64::new(0.0, 0.0) {
            return s;
        }
        s * ln_gamma_right(1.0 - z).exp() / PI
    }
}

pub fn recip_gamma_value(z: ComplexValue) -> ComplexValue {
    let v = recip_gamma(z.value);
    let zz = if z.re() >= 0.5 {
        z.value
    } else {
        1.0 - z.value
    };
    // d/dz (1/Gamma) = -psi/Gamma; |psi| ~ ln|z| is a fair scale for input error.
    let deriv = v.norm() * (1.0 + zz.norm()).ln().max(1.0) + 1.0;
    ComplexValue::with_err(v, v.norm() * lanczos_rel_err(zz) + deriv * z.err)
}

/// `psi(n + 1) = -gamma + H_n`.
pub fn digamma_at_positive_integer(n: u64) -> f64 {
    let h: f64 = (1..=n).rev().map(|k| 1.0 / k as f64).sum();
    h - EULER_GAMMA
}

/// Laurent data of `Gamma(s)` at a non-positive integer `n`:
/// `Gamma(s) = residue/(s - n) + constant + O(s - n)`.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaPoleData {
    pub n: i64,
    pub residue: ExactRational,
    pub constant: ComplexValue,
}

pub fn gamma_pole_data(n: i64) -> GammaPoleData {
    assert!(n <= 0, "gamma_pole_data needs n <= 0, got {n}");
    let k = n.unsigned_abs();
    let fact = factorial(k);
    let sign = if k.is_multiple_of(2) { 1.0 } else { -1.0 };
    let residue = if k.is_multiple_of(2) {
        from_bigint(fact.clone()).recip()
    } else {
        -from_bigint(fact.clone()).recip()
    };
    let fact_f = crate::rational::to_f64(&from_bigint(fact));
    let c = sign * digamma_at_positive_integer(k) / fact_f;
    GammaPoleData {
        n,
        residue,
        constant: ComplexValue::with_err(Complex64::new(c, 0.0), 8.0 * EPS * (c.abs() + 1.0)),
    }
}
