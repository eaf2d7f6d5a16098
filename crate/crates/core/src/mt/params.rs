use std::f64::consts::PI;
use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::special::ComplexValue;

/// Numerical policy for the contour-integral continuation.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct MtParams {
    /// Split point between the finite zeta series and the contour integral.
    pub m: usize,
    /// Contour offset: the line is `Re z = m - eta`.
    pub eta: f64,
    /// Largest contour height the integration may reach.
    pub t_max: f64,
    /// Gauss-Legendre panels per unit height.
    pub panels: usize,
    /// Nodes per panel.
    pub nodes: usize,
    pub tol: f64,
}

impl Default for MtParams {
    fn default() -> Self {
        Self {
            m: 3,
            eta: 0.5,
            t_max: 40.0,
            panels: 2,
            nodes: 16,
            tol: 1e-10,
        }
    }
}

impl MtParams {
    pub fn with_tol(tol: f64) -> Self {
        Self {
            tol,
            ..Self::default()
        }
    }

    pub fn validate(&self) -> Result<()> {
        let bad = |msg: &str| Err(Error::InvalidParameter(msg.to_string()));
        if !(self.eta > 0.0 && self.eta < 1.0) {
            return bad("eta must lie in (0, 1)");
        }
        if !(self.t_max >= 10.0 && self.t_max <= 200.0) {
            return bad("T must lie in [10, 200]");
        }
        if self.m < 1 {
            return bad("M must be at least 1");
        }
        if self.panels < 1 || self.nodes < 2 || self.nodes > 128 {
            return bad("need panels >= 1 and 2 <= nodes <= 128");
        }
        if !(self.tol > 0.0 && self.tol < 1.0) {
            return bad("tol must lie in (0, 1)");
        }
        Ok(())
    }
}

/// Smallest `M` keeping every pole of the contour integrand at least
/// `1 - eta` away from the line (besides the `eta` gap to `Gamma(-z)`).
pub(crate) fn min_m(s1: Complex64, s2: Complex64, s3: Complex64) -> usize {
    let a = (2.0 - (s1 + s3).re).ceil();
    let b = (1.0 - s3.re).ceil();
    let c = s2.re.ceil() + 2.0;
    a.max(b).max(c).max(1.0) as usize
}

/// Growth exponent `p` in `|integrand(t)| <~ |t|^p e^{-pi |t|}` on the line
/// `Re z = c`.
pub(crate) fn decay_exponent(s2: Complex64, s3: Complex64, c: f64) -> f64 {
    s3.re - 1.0 + (0.5 - s2.re + c).max(0.0)
}

/// Parameters sized for the point: the `M` formula with floor 3, `eta = 1/2`,
/// and `T` from the `e^{-pi |t|}` decay so that the neglected tail is well
/// below `tol`.
pub fn auto_params(s1: Complex64, s2: Complex64, s3: Complex64, tol: f64) -> MtParams {
    let m = min_m(s1, s2, s3).max(3);
    let eta = 0.5;
    let c = m as f64 - eta;
    let p = decay_exponent(s2, s3, c).max(0.0);
    let shift = s1.im.abs().max(s2.im.abs()).max(s3.im.abs());
    let target = (1.0 / tol).ln() + 10.0;
    let mut t: f64 = 10.0;
    while t < 200.0 && PI * t - p * t.ln() < target {
        t += 1.0;
    }
    let t_max = (t + shift).clamp(10.0, 200.0);
    // Panel width 1/2, pole gap >= 1/2: rho = 1 + sqrt 2 per node pair.
    let rho: f64 = 1.0 + 2f64.sqrt();
    let nodes = ((10.0 / tol).ln() / (2.0 * rho.ln())).ceil().max(8.0) as usize;
    MtParams {
        m,
        eta,
        t_max,
        panels: 2,
        nodes: nodes.min(128),
        tol,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    DirectSum,
    MellinBarnes,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::DirectSum => "direct-sum",
            Method::MellinBarnes => "mellin-barnes",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct EvalResult {
    pub value: ComplexValue,
    pub method: Method,
    /// Split point actually used by the contour assembly.
    pub m: Option<usize>,
}

impl EvalResult {
    pub fn err(&self) -> f64 {
        self.value.err
    }
}
