//! The unified omega function
//! `omega_U(s1,s2,s3) = (-1)^{s3} zeta_MT(s1,s2;s3) + (-1)^{s2} zeta_MT(s3,s1;s2) + (-1)^{s1} zeta_MT(s2,s3;s1)`
//! with `(-1)^s = e^{pi i s}`, its directed limits at non-positive integer
//! points, and its singular structure.

pub mod singular;

pub use singular::{
    classify_point, classify_point_with_tol, possible_singular_hyperplanes,
    singular_coefficient_pair, singular_coefficient_total, total_plane_numerator, HyperplaneFamily,
    SingularFeature, SingularityKind, SingularityReport,
};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::mt::{mt_continued, EvalResult, Method, MtParams};
use crate::special::{unit_power, ComplexValue, EPS};

/// `omega_U(s1, s2, s3)`, each Mordell-Tornheim value by the contour
/// continuation.
pub fn omega_u(
    s1: Complex64,
    s2: Complex64,
    s3: Complex64,
    params: &MtParams,
) -> Result<EvalResult> {
    params.validate()?;
    let report = classify_point_with_tol(s1, s2, s3, params.tol.sqrt());
    if !report.hits.is_empty() {
        return Err(Error::NearSingularSet(report));
    }
    let mut total = ComplexValue::ZERO;
    let mut m_used = 0;
    for (a, b, c) in [(s1, s2, s3), (s3, s1, s2), (s2, s3, s1)] {
        let phase = unit_power(c);
        // Each term gets a share of the budget, shrunk by its phase.
        let share = MtParams {
            tol: params.tol / (3.0 * phase.norm().max(1.0)),
            ..*params
        };
        let z = mt_continued(a, b, c, &share)?;
        m_used = m_used.max(z.m.unwrap_or(0));
        let term = z.value.scale(phase);
        total = total + ComplexValue::with_err(term.value, term.err + 4.0 * EPS * term.norm());
    }
    if total.err.is_nan() || total.err > params.tol {
        return Err(Error::CancellationLoss {
            err: total.err,
            tol: params.tol,
        });
    }
    Ok(EvalResult {
        value: total,
        method: Method::MellinBarnes,
        m: Some(m_used),
    })
}

/// A straight approach `-m + delta * direction` to a lattice point.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LimitPath {
    direction: [f64; 3],
    deltas: Vec<f64>,
}

impl LimitPath {
    /// Requires `d_a != 0` and `d_a + d_b != 0`; deltas must be positive and
    /// are sorted in decreasing order.
    pub fn new(direction: [f64; 3], deltas: Vec<f64>) -> Result<Self> {
        let [d1, d2, d3] = direction;
        let scale = direction.iter().map(|d| d.abs()).fold(0.0, f64::max);
        let tiny = 1e-12 * scale;
        let degenerate = !direction.iter().all(|d| d.is_finite())
            || [d1, d2, d3].iter().any(|d| d.abs() <= tiny)
            || [d1 + d2, d1 + d3, d2 + d3].iter().any(|d| d.abs() <= tiny);
        if degenerate {
            return Err(Error::DegenerateDirection(d1, d2, d3));
        }
        if deltas.is_empty() || deltas.iter().any(|d| !(d.is_finite() && *d > 0.0)) {
            return Err(Error::InvalidParameter(
                "deltas must be a non-empty list of positive numbers".into(),
            ));
        }
        let mut deltas = deltas;
        deltas.sort_by(|a, b| b.total_cmp(a));
        deltas.dedup();
        Ok(Self { direction, deltas })
    }

    pub fn direction(&self) -> [f64; 3] {
        self.direction
    }

    pub fn deltas(&self) -> &[f64] {
        &self.deltas
    }

    /// The point `-m + delta * direction`.
    pub fn point(&self, m: [u32; 3], delta: f64) -> [Complex64; 3] {
        std::array::from_fn(|a| Complex64::new(-(m[a] as f64) + delta * self.direction[a], 0.0))
    }
}

impl Default for LimitPath {
    fn default() -> Self {
        Self::new([1.0, 2.0, 4.0], vec![1e-2, 1e-3, 1e-4]).expect("default path is admissible")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct SweepRow {
    pub delta: f64,
    pub value: ComplexValue,
    /// `|value - extrapolated limit|`.
    pub residual: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LimitSweep {
    pub m: [u32; 3],
    pub direction: [f64; 3],
    pub rows: Vec<SweepRow>,
    pub limit: ComplexValue,
    /// Observed convergence order in `delta`, when at least three deltas in
    /// geometric progression were evaluated.
    pub order: Option<f64>,
}

/// Extrapolates samples `(x_i, f_i)` to `x = 0` by the interpolating
/// polynomial (Neville). Returns the value and the sum of absolute Lagrange
/// weights, which bounds the amplification of sample errors.
pub fn extrapolate_to_zero(xs: &[f64], fs: &[Complex64]) -> (Complex64, f64) {
    assert_eq!(xs.len(), fs.len());
    assert!(!xs.is_empty());
    let mut amplification = 0.0;
    for i in 0..xs.len() {
        let mut w = 1.0;
        for j in 0..xs.len() {
            if i != j {
                w *= xs[j] / (xs[j] - xs[i]);
            }
        }
        amplification += f64::abs(w);
    }
    let mut p: Vec<Complex64> = fs.to_vec();
    let n = xs.len();
    for k in 1..n {
        for i in 0..n - k {
            p[i] = (xs[i + k] * p[i] - xs[i] * p[i + 1]) / (xs[i + k] - xs[i]);
        }
    }
    (p[0], amplification)
}

fn observed_order(xs: &[f64], fs: &[Complex64]) -> Option<f64> {
    if xs.len() < 3 {
        return None;
    }
    let n = xs.len();
    let d1 = (fs[n - 3] - fs[n - 2]).norm();
    let d2 = (fs[n - 2] - fs[n - 1]).norm();
    let r = xs[n - 3] / xs[n - 2];
    if d1 == 0.0 || d2 == 0.0 || r <= 1.0 {
        return None;
    }
    Some((d1 / d2).ln() / r.ln())
}

#[cfg(feature = "parallel")]
fn evaluate_all(points: Vec<[Complex64; 3]>, params: &MtParams) -> Vec<Result<EvalResult>> {
    use rayon::prelude::*;
    points
        .into_par_iter()
        .map(|s| omega_u(s[0], s[1], s[2], params))
        .collect()
}

#[cfg(not(feature = "parallel"))]
fn evaluate_all(points: Vec<[Complex64; 3]>, params: &MtParams) -> Vec<Result<EvalResult>> {
    points
        .into_iter()
        .map(|s| omega_u(s[0], s[1], s[2], params))
        .collect()
}

/// Evaluates `omega_U(-m + delta * d)` for every delta of the path and
/// extrapolates to `delta = 0`.
pub fn limit_sweep(m: [u32; 3], path: &LimitPath, params: &MtParams) -> Result<LimitSweep> {
    let points: Vec<[Complex64; 3]> = path.deltas().iter().map(|&d| path.point(m, d)).collect();
    let values = evaluate_all(points, params)
        .into_iter()
        .collect::<Result<Vec<EvalResult>>>()?;
    let xs = path.deltas();
    let fs: Vec<Complex64> = values.iter().map(|v| v.value.value).collect();
    let (limit, amplification) = extrapolate_to_zero(xs, &fs);
    let max_err = values.iter().map(|v| v.err()).fold(0.0, f64::max);
    // Compare with the extrapolation that drops the coarsest sample.
    let spread = if xs.len() >= 2 {
        (extrapolate_to_zero(&xs[1..], &fs[1..]).0 - limit).norm()
    } else {
        f64::INFINITY
    };
    let limit = ComplexValue::with_err(limit, amplification * max_err + spread);
    let rows = xs
        .iter()
        .zip(&values)
        .map(|(&delta, v)| SweepRow {
            delta,
            value: v.value,
            residual: (v.value.value - limit.value).norm(),
        })
        .collect();
    Ok(LimitSweep {
        m,
        direction: path.direction(),
        rows,
        limit,
        order: observed_order(xs, &fs),
    })
}

/// The value the directed limit must take at `-m`: 1 at the origin, 0 at
/// every other non-positive integer point.
pub fn expected_limit(m: [u32; 3]) -> f64 {
    if m == [0, 0, 0] {
        1.0
    } else {
        0.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn c(x: f64) -> Complex64 {
        Complex64::new(x, 0.0)
    }

    #[test]
    fn omega_examples() {
        let p = MtParams::default();
        let v = omega_u(c(2.0), c(2.0), c(2.0), &p).unwrap();
        assert!(
            (v.value.re() - PI.powi(6) / 945.0).abs() < 1e-8,
            "{}",
            v.value
        );

        let a = omega_u(c(0.3), c(0.4), c(0.2), &p).unwrap();
        let b = omega_u(c(0.4), c(0.2), c(0.3), &p).unwrap();
        assert!((a.value.value - b.value.value).norm() <= 2.0 * (a.err() + b.err()) + 1e-12);

        let d = 1e-3;
        let v = omega_u(c(d), c(2.0 * d), c(4.0 * d), &p).unwrap();
        assert!((v.value.value - 1.0).norm() < 2e-2, "{}", v.value);
    }

    #[test]
    fn omega_refuses_singular_points() {
        let p = MtParams::default();
        match omega_u(c(0.5), c(0.5), c(0.5), &p) {
            Err(Error::NearSingularSet(r)) => assert_eq!(r.hits.len(), 3),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn path_validation() {
        assert!(matches!(
            LimitPath::new([1.0, -1.0, 2.0], vec![1e-2]),
            Err(Error::DegenerateDirection(..))
        ));
        assert!(matches!(
            LimitPath::new([0.0, 1.0, 2.0], vec![1e-2]),
            Err(Error::DegenerateDirection(..))
        ));
        assert!(LimitPath::new([1.0, 2.0, 4.0], vec![]).is_err());
        let p = LimitPath::new([1.0, -3.0, 5.0], vec![1e-4, 1e-2, 1e-3]).unwrap();
        assert_eq!(p.deltas(), &[1e-2, 1e-3, 1e-4]);
    }

    #[test]
    fn neville_recovers_polynomials() {
        let xs = [0.3, 0.1, 0.05];
        let f = |x: f64| Complex64::new(2.0 - 3.0 * x + 7.0 * x * x, x);
        let fs: Vec<_> = xs.iter().map(|&x| f(x)).collect();
        let (v, amp) = extrapolate_to_zero(&xs, &fs);
        assert!((v - Complex64::new(2.0, 0.0)).norm() < 1e-13);
        assert!(amp >= 1.0);
        let fs1: Vec<_> = xs
            .iter()
            .map(|&x| Complex64::new(1.0 + 0.5 * x, 0.0))
            .collect();
        let order = observed_order(&[1e-2, 1e-3, 1e-4], &[fs1[0], fs1[1], fs1[2]]);
        assert!(order.is_none() || order.unwrap().is_finite());
    }

    #[test]
    fn sweep_examples() {
        let p = MtParams::default();
        let path = LimitPath::default();
        for (m, target) in [([0, 0, 0], 1.0), ([1, 0, 0], 0.0), ([1, 1, 1], 0.0)] {
            let s = limit_sweep(m, &path, &p).unwrap();
            assert!(
                (s.limit.value - target).norm() < 1e-3,
                "m = {m:?}: {}",
                s.limit
            );
            let order = s.order.unwrap();
            assert!(order > 0.5, "order {order}");
        }
    }
}
