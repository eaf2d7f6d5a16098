//! Direct summation of the double series inside its region of absolute
//! convergence.
//!
//! The sum over `m <= N, n <= K` is taken term by term. For `m <= N` the
//! `n > K` tail comes from expanding `(m + n)^{-c}` binomially in `m / n`
//! against Hurwitz tails. For `m > N` the inner sum is replaced by its large-`m`
//! expansion
//! `Gamma(b+c-1) Gamma(1-b) / Gamma(c) m^{1-b-c} + sum_k binom(-c,k) zeta(b-k) m^{-c-k}`,
//! which resums against Hurwitz tails in `m`.

use num_complex::Complex64;

use super::pair::{circle_mean, circle_radius, near_positive_integer, pair_radius};
use super::params::{EvalResult, Method};
use crate::error::{Error, Result};
use crate::special::{
    binomial_complex, gamma, nearest_positive_integer, recip_gamma, zeta_tail, zeta_value,
    ComplexValue, EPS,
};

const N_OUTER: u64 = 40;
const K_INNER: u64 = 80;
const TAIL_TERMS: usize = 32;
const MAX_BINOMIAL_TERMS: usize = 150;

/// Smallest of the three convergence margins
/// `Re(s1+s3) - 1`, `Re(s2+s3) - 1`, `Re(s1+s2+s3) - 2`.
pub fn convergence_margin(s1: Complex64, s2: Complex64, s3: Complex64) -> f64 {
    ((s1 + s3).re - 1.0)
        .min((s2 + s3).re - 1.0)
        .min((s1 + s2 + s3).re - 2.0)
}

/// `zeta_MT(s1, s2; s3)` by direct summation. Requires every convergence
/// margin to be at least `0.05`.
pub fn mt_direct(s1: Complex64, s2: Complex64, s3: Complex64, tol: f64) -> Result<EvalResult> {
    let margin = convergence_margin(s1, s2, s3);
    if margin.is_nan() || margin < 0.05 {
        return Err(Error::OutOfRegion { margin });
    }
    // The function is symmetric in s1, s2; put the argument farther from the
    // positive integers in the slot that meets Gamma(1 - b).
    let (a, b) = if nearest_positive_integer(s2).1 < nearest_positive_integer(s1).1 {
        (s2, s1)
    } else {
        (s1, s2)
    };
    let c = s3;
    let head = head_block(a, b, c);
    let tail = outer_tail(a, b, c);
    let value = head + tail;
    if value.err > tol {
        return Err(Error::CancellationLoss {
            err: value.err,
            tol,
        });
    }
    Ok(EvalResult {
        value,
        method: Method::DirectSum,
        m: None,
    })
}

fn pow_table(s: Complex64, upto: u64) -> Vec<Complex64> {
    (0..=upto)
        .map(|n| {
            if n == 0 {
                Complex64::new(0.0, 0.0)
            } else {
                (-s * (n as f64).ln()).exp()
            }
        })
        .collect()
}

// sum_{m <= N} m^{-a} sum_{n >= 1} n^{-b} (m + n)^{-c}
fn head_block(a: Complex64, b: Complex64, c: Complex64) -> ComplexValue {
    let n = N_OUTER;
    let k = K_INNER;
    let pa = pow_table(a, n);
    let pb = pow_table(b, k);
    let pc = pow_table(c, n + k);

    // coef_j = binom(-c, j) * K^j * sum_{n > K} n^{-(b+c+j)}
    let kf = k as f64;
    let ratio_max = n as f64 / kf;
    let mut coefs: Vec<Complex64> = Vec::new();
    let mut coef_err = 0.0;
    let mut quiet = 0;
    for j in 0..MAX_BINOMIAL_TERMS {
        let binom = binomial_complex(-c, j);
        let (h, he) = zeta_tail(b + c + j as f64, k);
        let scale = kf.powi(j as i32);
        let coef = binom * h * scale;
        let weight = ratio_max.powi(j as i32);
        coef_err += binom.norm() * he * scale * weight;
        coefs.push(coef);
        let size = coef.norm() * weight;
        if size <= 1e-18 * coefs[0].norm() {
            quiet += 1;
            if quiet >= 3 && j as f64 > c.re.abs() + 2.0 {
                break;
            }
        } else {
            quiet = 0;
        }
    }
    let trunc =
        coefs.last().map(|z| z.norm()).unwrap_or(0.0) * ratio_max.powi(coefs.len() as i32 - 1);

    let mut total = Complex64::new(0.0, 0.0);
    let mut abs_total = 0.0;
    for m in 1..=n {
        let mut inner = Complex64::new(0.0, 0.0);
        let mut inner_abs = 0.0;
        for q in 1..=k {
            let t = pb[q as usize] * pc[(m + q) as usize];
            inner += t;
            inner_abs += t.norm();
        }
        // Horner in m / K
        let x = m as f64 / kf;
        let mut tail = Complex64::new(0.0, 0.0);
        for coef in coefs.iter().rev() {
            tail = tail * x + coef;
        }
        inner += tail;
        inner_abs += tail.norm();
        let t = pa[m as usize] * inner;
        total += t;
        abs_total += pa[m as usize].norm() * inner_abs;
    }
    let lnmax = ((n + k) as f64).ln();
    let rounding = 8.0 * EPS * (4.0 + (a.norm() + b.norm() + c.norm()) * lnmax) * abs_total;
    let pa_sum: f64 = pa.iter().map(|z| z.norm()).sum();
    ComplexValue::with_err(total, rounding + (coef_err + trunc) * pa_sum)
}

// Hurwitz tail over m > N.
fn tail_value(s: Complex64) -> ComplexValue {
    let (v, e) = zeta_tail(s, N_OUTER);
    ComplexValue::with_err(v, e)
}

// Gamma(b + c - 1) Gamma(1 - b) / Gamma(c) * zeta_N(a + b + c - 1)
fn prefactor(a: Complex64, b: Complex64, c: Complex64) -> ComplexValue {
    let rg = recip_gamma(c);
    if rg == Complex64::new(0.0, 0.0) {
        return ComplexValue::ZERO;
    }
    let g = gamma(b + c - 1.0) * gamma(1.0 - b) * rg;
    let t = tail_value(a + b + c - 1.0);
    let v = g * t.value;
    let rel = 1e-14 * (1.0 + (b + c).norm().ln().max(0.0) + b.norm().ln().max(0.0));
    ComplexValue::with_err(v, v.norm() * rel + g.norm() * t.err)
}

// binom(-c, k) zeta(b - k) zeta_N(a + c + k)
fn series_term(a: Complex64, b: Complex64, c: Complex64, k: usize) -> ComplexValue {
    let binom = binomial_complex(-c, k);
    if binom == Complex64::new(0.0, 0.0) {
        return ComplexValue::ZERO;
    }
    let z = zeta_value(b - k as f64);
    let t = tail_value(a + c + k as f64);
    let v = binom * z.value * t.value;
    let err = binom.norm() * (z.err * t.value.norm() + z.value.norm() * t.err)
        + 4.0 * EPS * v.norm() * (k as f64 + 1.0);
    ComplexValue::with_err(v, err)
}

fn outer_tail(a: Complex64, b: Complex64, c: Complex64) -> ComplexValue {
    let near = near_positive_integer(b);
    let skip = near.map(|l| (l - 1) as usize);
    let mut acc = ComplexValue::ZERO;
    let mut last = 0.0f64;
    for k in 0..TAIL_TERMS {
        if Some(k) == skip {
            continue;
        }
        let t = series_term(a, b, c, k);
        if k + 2 >= TAIL_TERMS {
            last = last.max(t.norm());
        }
        acc = acc + t;
    }
    acc.err += last;
    match near {
        None => acc + prefactor(a, b, c),
        Some(l) => {
            let r = pair_radius(a, b, c, l);
            let k = (l - 1) as usize;
            let pair = circle_mean(b, circle_radius(r), r, |bb| {
                prefactor(a, bb, c) + series_term(a, bb, c, k)
            });
            acc + pair
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    // Plain truncated double sum; only for strongly convergent points.
    fn brute(s: [Complex64; 3]) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for m in 1..=600u32 {
            let mf = m as f64;
            for n in 1..=600u32 {
                let nf = n as f64;
                acc += (-s[0] * mf.ln() - s[1] * nf.ln() - s[2] * (mf + nf).ln()).exp();
            }
        }
        acc
    }

    #[test]
    fn examples() {
        let v = mt_direct(c(2.0), c(2.0), c(2.0), 1e-12).unwrap();
        assert_eq!(v.method, Method::DirectSum);
        assert!(
            (v.value.re() - PI.powi(6) / 2835.0).abs() < 1e-13,
            "{}",
            v.value
        );
        assert!(v.value.im().abs() < 1e-15);

        let z2 = PI * PI / 6.0;
        let v = mt_direct(c(2.0), c(2.0), c(0.0), 1e-12).unwrap();
        assert!((v.value.re() - z2 * z2).abs() < 1e-13);

        let z3 = 1.202_056_903_159_594_2;
        let v = mt_direct(c(1.0), c(1.0), c(1.0), 1e-12).unwrap();
        assert!((v.value.re() - 2.0 * z3).abs() < 1e-13, "{}", v.value);
    }

    #[test]
    fn refuses_outside_region() {
        assert!(matches!(
            mt_direct(c(0.3), c(0.4), c(0.2), 1e-10),
            Err(Error::OutOfRegion { .. })
        ));
        assert!(matches!(
            mt_direct(c(1.0), c(1.0), c(0.02), 1e-10),
            Err(Error::OutOfRegion { .. })
        ));
    }

    #[test]
    fn matches_brute_force_at_fast_decay() {
        let s = [
            Complex64::new(3.3, 1.0),
            Complex64::new(2.9, -0.5),
            Complex64::new(3.1, 0.3),
        ];
        let v = mt_direct(s[0], s[1], s[2], 1e-12).unwrap();
        let b = brute(s);
        // neglected terms of the brute force are below 600^{-5}
        assert!((v.value.value - b).norm() < 1e-11, "{} vs {b}", v.value);
    }

    #[test]
    fn partial_fraction_value() {
        // 1/(mn) = (1/m + 1/n)/(m+n) turns zeta_MT(1,1;2) into 2 zeta(3,1) = pi^4/180.
        let v = mt_direct(c(1.0), c(1.0), c(2.0), 1e-12).unwrap();
        assert!(
            (v.value.re() - PI.powi(4) / 180.0).abs() < 1e-13,
            "{}",
            v.value
        );
    }
}
