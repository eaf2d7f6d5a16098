//! Continuation by the Mellin-Barnes formula
//!
//! `zeta_MT(s1,s2;s3) = Gamma(s2+s3-1) Gamma(1-s2) / Gamma(s3) * zeta(s1+s2+s3-1)
//!   + sum_{k<M} binom(-s3,k) zeta(s1+s3+k) zeta(s2-k)
//!   + I(s1,s2,s3; M-eta) / Gamma(s3)`,
//!
//! with `I = (1/2 pi i) int_{(M-eta)} Gamma(s3+z) Gamma(-z) zeta(s1+s3+z) zeta(s2-z) dz`.

use std::f64::consts::PI;

use num_complex::Complex64;

use super::pair::{circle_mean, circle_radius, near_positive_integer, pair_radius};
use super::params::{decay_exponent, min_m, EvalResult, Method, MtParams};
use super::quadrature::GaussLegendre;
use crate::error::{Error, Result};
use crate::omega::singular::mt_singularity;
use crate::special::{
    binomial_complex, gamma, ln_gamma, nearest_positive_integer, recip_gamma, sin_pi, zeta,
    zeta_value, ComplexValue, EPS,
};

/// Whether `(s1, s2, s3)` lies in `D_M` for the given offset.
pub fn in_holomorphy_region(
    s1: Complex64,
    s2: Complex64,
    s3: Complex64,
    m: usize,
    eta: f64,
) -> bool {
    let mf = m as f64;
    s3.re > -mf + eta && (s1 + s3).re > 1.0 - mf + eta && s2.re < 1.0 + mf - eta
}

// Gamma(s3+z) Gamma(-z) zeta(s1+s3+z) zeta(s2-z) with a relative error.
fn integrand(s1: Complex64, s2: Complex64, s3: Complex64, z: Complex64) -> (Complex64, f64) {
    // Gamma(-z) = -pi / (sin(pi z) Gamma(1 + z))
    let lg = ln_gamma(s3 + z) - ln_gamma(1.0 + z);
    let g = -PI * lg.exp() / sin_pi(z);
    let (z1, e1) = zeta(s1 + s3 + z);
    let (z2, e2) = zeta(s2 - z);
    let v = g * z1 * z2;
    let rel = 16.0 * EPS * (8.0 + lg.norm() + z.norm()) + e1 / z1.norm() + e2 / z2.norm();
    (v, rel)
}

/// Horizontal gap between the line `Re z = c` and the nearest pole of the
/// integrand.
fn pole_gap(s1: Complex64, s2: Complex64, s3: Complex64, c: f64) -> f64 {
    let gamma_minus = (c - c.floor()).min(c.ceil() - c);
    let gamma_plus = c + s3.re;
    let zeta_left = c - (1.0 - (s1 + s3).re);
    let zeta_right = (s2.re - 1.0) - c;
    gamma_minus.min(gamma_plus).min(zeta_left).min(-zeta_right)
}

/// `I(s1, s2, s3; M - eta)` by composite Gauss-Legendre quadrature on
/// panels marching outward from `t = 0` until the analytic tail estimate
/// drops below `tol`.
pub fn mb_integral(
    s1: Complex64,
    s2: Complex64,
    s3: Complex64,
    params: &MtParams,
) -> Result<ComplexValue> {
    params.validate()?;
    if !in_holomorphy_region(s1, s2, s3, params.m, params.eta) {
        return Err(Error::OutsideHolomorphyRegion { m: params.m });
    }
    let c = params.m as f64 - params.eta;
    let rule = GaussLegendre::new(params.nodes);
    let h = 1.0 / params.panels as f64;
    let gap = pole_gap(s1, s2, s3, c);
    let r = gap / h;
    let rho = r + (r * r + 1.0).sqrt();
    let n = params.nodes as i32;
    let quad_factor = (64.0 / 15.0) / (rho * rho - 1.0) * rho.powi(-2 * n) * 4.0;

    let p = decay_exponent(s2, s3, c);
    let shift = s1.im.abs().max(s2.im.abs()).max(s3.im.abs());
    let t_min = (2.0f64).max(2.0 * p / PI) + shift;
    // Absolute target on the unnormalised integral, floored at rounding.
    let tail_tol = 0.01 * params.tol * 2.0 * PI;

    let panel = |lo: f64| -> (Complex64, f64, f64, f64) {
        // (sum, sum |f| w, sum rounding, |f| at the outer end)
        let mut s = Complex64::new(0.0, 0.0);
        let mut abs = 0.0;
        let mut round = 0.0;
        let mut edge = 0.0;
        for (i, (x, w)) in rule.nodes.iter().zip(&rule.weights).enumerate() {
            let t = lo + 0.5 * h * (x + 1.0);
            let (f, rel) = integrand(s1, s2, s3, Complex64::new(c, t));
            let wf = 0.5 * h * w;
            s += f * wf;
            abs += f.norm() * wf;
            round += f.norm() * wf * rel;
            let outer = if lo >= 0.0 { rule.len() - 1 } else { 0 };
            if i == outer {
                edge = f.norm();
            }
        }
        (s, abs, round, edge)
    };

    let mut sum = Complex64::new(0.0, 0.0);
    let mut abs_sum = 0.0;
    let mut round = 0.0;
    let mut t = 0.0;
    let tail = loop {
        let (sp, ap, rp, ep) = panel(t);
        let (sm, am, rm, em) = panel(-t - h);
        sum += sp + sm;
        abs_sum += ap + am;
        round += rp + rm;
        t += h;
        let edge = ep.max(em);
        let slope = PI - p.max(0.0) / t;
        let tail = if slope > 0.5 {
            2.0 * edge / slope
        } else {
            f64::INFINITY
        };
        if t >= t_min && tail <= tail_tol.max(EPS * abs_sum) {
            break tail;
        }
        if t >= params.t_max {
            if tail <= params.tol {
                break tail;
            }
            return Err(Error::TailBoundExceeded {
                estimate: tail / (2.0 * PI),
                t_max: params.t_max,
            });
        }
    };
    let value = sum / (2.0 * PI);
    let err = (abs_sum * quad_factor + round + tail + 4.0 * EPS * abs_sum) / (2.0 * PI);
    Ok(ComplexValue::with_err(value, err))
}

// Gamma(s2+s3-1) Gamma(1-s2) / Gamma(s3) * zeta(s1+s2+s3-1)
fn prefactor(a: Complex64, b: Complex64, c: Complex64, rg: Complex64) -> ComplexValue {
    if rg == Complex64::new(0.0, 0.0) {
        return ComplexValue::ZERO;
    }
    let g = gamma(b + c - 1.0) * gamma(1.0 - b) * rg;
    let z = zeta_value(a + b + c - 1.0);
    let v = g * z.value;
    let rel = 1e-14 * (1.0 + (b + c).norm().ln().max(0.0) + b.norm().ln().max(0.0));
    ComplexValue::with_err(v, v.norm() * rel + g.norm() * z.err)
}

// binom(-s3, k) zeta(s1+s3+k) zeta(s2-k)
fn series_term(a: Complex64, b: Complex64, c: Complex64, k: usize) -> ComplexValue {
    let binom = binomial_complex(-c, k);
    if binom == Complex64::new(0.0, 0.0) {
        return ComplexValue::ZERO;
    }
    let z1 = zeta_value(a + c + k as f64);
    let z2 = zeta_value(b - k as f64);
    let v = binom * z1.value * z2.value;
    let err = binom.norm() * (z1.err * z2.value.norm() + z1.value.norm() * z2.err)
        + 4.0 * EPS * v.norm() * (k as f64 + 1.0);
    ComplexValue::with_err(v, err)
}

/// The three-part assembly at a fixed `M`, without any role swap.
pub fn mb_assemble(
    s1: Complex64,
    s2: Complex64,
    s3: Complex64,
    params: &MtParams,
) -> Result<ComplexValue> {
    let (a, b, c) = (s1, s2, s3);
    let rg = recip_gamma(c);
    let near = near_positive_integer(b).filter(|&l| (l as usize) <= params.m);
    let skip = near.map(|l| (l - 1) as usize);

    let mut acc = ComplexValue::ZERO;
    for k in 0..params.m {
        if Some(k) != skip {
            acc = acc + series_term(a, b, c, k);
        }
    }
    acc = acc
        + match near {
            None => prefactor(a, b, c, rg),
            Some(l) => {
                let r = pair_radius(a, b, c, l);
                let k = (l - 1) as usize;
                circle_mean(b, circle_radius(r), r, |bb| {
                    prefactor(a, bb, c, recip_gamma(c)) + series_term(a, bb, c, k)
                })
            }
        };
    if rg != Complex64::new(0.0, 0.0) {
        let scaled = MtParams {
            tol: params.tol / rg.norm().max(1.0),
            ..*params
        };
        let i = mb_integral(a, b, c, &scaled)?;
        let rgv = ComplexValue::with_err(rg, rg.norm() * 1e-14);
        acc = acc + rgv * i;
    }
    Ok(acc)
}

/// `zeta_MT(s1, s2; s3)` anywhere off its singular set.
///
/// `params.m` is raised as needed so the point lies in `D_M`. When `s2` is
/// near a positive integer the arguments are swapped if `s1` is farther
/// away; otherwise the cancelling pair is evaluated on a circle.
pub fn mt_continued(
    s1: Complex64,
    s2: Complex64,
    s3: Complex64,
    params: &MtParams,
) -> Result<EvalResult> {
    params.validate()?;
    let report = mt_singularity(&[s1, s2, s3], params.tol.sqrt());
    if !report.hits.is_empty() {
        return Err(Error::NearSingularSet(report));
    }
    let (a, b) = if nearest_positive_integer(s2).1 < nearest_positive_integer(s1).1 {
        (s2, s1)
    } else {
        (s1, s2)
    };
    let m = params.m.max(min_m(a, b, s3));
    let p = MtParams { m, ..*params };
    let value = mb_assemble(a, b, s3, &p)?;
    if value.err.is_nan() || value.err > params.tol {
        return Err(Error::CancellationLoss {
            err: value.err,
            tol: params.tol,
        });
    }
    Ok(EvalResult {
        value,
        method: Method::MellinBarnes,
        m: Some(m),
    })
}
