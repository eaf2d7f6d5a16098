//! Complex values with an attached absolute error estimate, and the
//! exact-phase trigonometric helpers everything else leans on.

use std::f64::consts::PI;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::ser::{Serialize, SerializeStruct, Serializer};

/// Unit roundoff for binary64.
pub const EPS: f64 = f64::EPSILON * 0.5;

/// A complex number together with an absolute error bound estimate.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ComplexValue {
    pub value: Complex64,
    pub err: f64,
}

impl ComplexValue {
    pub const ZERO: ComplexValue = ComplexValue {
        value: Complex64::new(0.0, 0.0),
        err: 0.0,
    };

    pub fn new(re: f64, im: f64) -> Self {
        Self {
            value: Complex64::new(re, im),
            err: 0.0,
        }
    }

    pub fn real(re: f64) -> Self {
        Self::new(re, 0.0)
    }

    pub fn exact(value: Complex64) -> Self {
        Self { value, err: 0.0 }
    }

    pub fn with_err(value: Complex64, err: f64) -> Self {
        debug_assert!(err >= 0.0 || err.is_nan());
        Self { value, err }
    }

    #[inline]
    pub fn re(&self) -> f64 {
        self.value.re
    }

    #[inline]
    pub fn im(&self) -> f64 {
        self.value.im
    }

    pub fn norm(&self) -> f64 {
        self.value.norm()
    }

    pub fn is_finite(&self) -> bool {
        self.value.re.is_finite() && self.value.im.is_finite() && self.err.is_finite()
    }

    /// Scales by an exactly known complex factor.
    pub fn scale(self, k: Complex64) -> Self {
        let v = self.value * k;
        Self::with_err(v, self.err * k.norm() + 2.0 * EPS * v.norm())
    }
}

impl Serialize for ComplexValue {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut st = serializer.serialize_struct("ComplexValue", 3)?;
        st.serialize_field("re", &self.value.re)?;
        st.serialize_field("im", &self.value.im)?;
        st.serialize_field("err", &self.err)?;
        st.end()
    }
}

impl From<Complex64> for ComplexValue {
    fn from(value: Complex64) -> Self {
        Self::exact(value)
    }
}

impl From<f64> for ComplexValue {
    fn from(x: f64) -> Self {
        Self::real(x)
    }
}

impl Add for ComplexValue {
    type Output = ComplexValue;
    fn add(self, rhs: Self) -> Self {
        let v = self.value + rhs.value;
        Self::with_err(v, self.err + rhs.err + EPS * v.norm())
    }
}

impl Sub for ComplexValue {
    type Output = ComplexValue;
    fn sub(self, rhs: Self) -> Self {
        let v = self.value - rhs.value;
        Self::with_err(v, self.err + rhs.err + EPS * v.norm())
    }
}

impl Neg for ComplexValue {
    type Output = ComplexValue;
    fn neg(self) -> Self {
        Self::with_err(-self.value, self.err)
    }
}

impl Mul for ComplexValue {
    type Output = ComplexValue;
    fn mul(self, rhs: Self) -> Self {
        let v = self.value * rhs.value;
        let err = self.value.norm() * rhs.err
            + rhs.value.norm() * self.err
            + self.err * rhs.err
            + 2.0 * EPS * v.norm();
        Self::with_err(v, err)
    }
}

impl std::iter::Sum for ComplexValue {
    fn sum<I: Iterator<Item = Self>>(iter: I) -> Self {
        iter.fold(ComplexValue::ZERO, |a, b| a + b)
    }
}

impl fmt::Display for ComplexValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:.16e} {} {:.16e}i (err {:.2e})",
            self.value.re,
            if self.value.im < 0.0 { '-' } else { '+' },
            self.value.im.abs(),
            self.err
        )
    }
}

/// `(sin(pi x), cos(pi x))` with the argument reduced exactly, so integers
/// and half-integers give exact zeros and units.
pub fn sin_cos_pi(x: f64) -> (f64, f64) {
    if !x.is_finite() {
        return (f64::NAN, f64::NAN);
    }
    let n = (2.0 * x).round();
    let r = x - 0.5 * n;
    let (s, c) = (PI * r).sin_cos();
    match (n.rem_euclid(4.0)) as u8 {
        0 => (s, c),
        1 => (c, -s),
        2 => (-s, -c),
        _ => (-c, s),
    }
}

/// `sin(pi z)` for complex `z`.
pub fn sin_pi(z: Complex64) -> Complex64 {
    let (s, c) = sin_cos_pi(z.re);
    let y = PI * z.im;
    Complex64::new(s * y.cosh(), c * y.sinh())
}

/// `cos(pi z)` for complex `z`.
pub fn cos_pi(z: Complex64) -> Complex64 {
    let (s, c) = sin_cos_pi(z.re);
    let y = PI * z.im;
    Complex64::new(c * y.cosh(), -s * y.sinh())
}

/// `(-1)^s`, always on the branch `e^{pi i s}`.
pub fn unit_power(s: Complex64) -> Complex64 {
    let (sn, cs) = sin_cos_pi(s.re);
    let mag = (-PI * s.im).exp();
    Complex64::new(mag * cs, mag * sn)
}

/// Distance from `z` to the nearest integer, in the complex plane.
pub fn dist_to_integer(z: Complex64) -> f64 {
    Complex64::new(z.re - z.re.round(), z.im).norm()
}

/// Distance from `z` to the nearest positive integer, with that integer.
pub fn nearest_positive_integer(z: Complex64) -> (i64, f64) {
    let n = z.re.round().max(1.0);
    (n as i64, Complex64::new(z.re - n, z.im).norm())
}

/// Distance from `z` to the nearest non-positive integer, with that integer.
pub fn nearest_nonpositive_integer(z: Complex64) -> (i64, f64) {
    let n = z.re.round().min(0.0);
    (n as i64, Complex64::new(z.re - n, z.im).norm())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sin_cos_pi_exact_at_lattice() {
        for k in -20..=20 {
            let (s, c) = sin_cos_pi(k as f64);
            assert_eq!(s, 0.0);
            assert_eq!(c.abs(), 1.0);
            let (s, c) = sin_cos_pi(k as f64 + 0.5);
            assert_eq!(s.abs(), 1.0);
            assert_eq!(c, 0.0);
        }
        let (s, c) = sin_cos_pi(0.3);
        assert!((s - (0.3 * PI).sin()).abs() < 1e-15);
        assert!((c - (0.3 * PI).cos()).abs() < 1e-15);
    }

    #[test]
    fn unit_power_examples() {
        assert_eq!(
            unit_power(Complex64::new(2.0, 0.0)),
            Complex64::new(1.0, 0.0)
        );
        assert_eq!(
            unit_power(Complex64::new(0.5, 0.0)),
            Complex64::new(0.0, 1.0)
        );
        let v = unit_power(Complex64::new(-1.0, 0.001));
        let expect = -(-0.001 * PI).exp();
        assert!((v.re - expect).abs() < 1e-15);
        assert!((v.re - -0.99686).abs() < 1e-5);
        assert_eq!(v.im, 0.0);
    }

    #[test]
    fn sin_pi_small_offset_keeps_relative_precision() {
        // sin(pi(-3 + 1e-9)) = -pi * 1e-9 * cos(...) ~ +-pi e-9
        let v = sin_pi(Complex64::new(-3.0 + 1e-9, 0.0));
        let rel = (v.re.abs() - (PI * 1e-9)).abs() / (PI * 1e-9);
        assert!(rel < 1e-6, "{rel}");
    }

    #[test]
    fn error_propagates_through_arithmetic() {
        let a = ComplexValue::with_err(Complex64::new(2.0, 0.0), 1e-3);
        let b = ComplexValue::with_err(Complex64::new(3.0, 0.0), 2e-3);
        assert!((a + b).err >= 3e-3);
        assert!((a * b).err >= 2.0 * 2e-3 + 3.0 * 1e-3);
    }
}
