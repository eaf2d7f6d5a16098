//! Exact Bernoulli numbers and binary64 complex special functions with
//! error estimates.

mod bernoulli;
mod complex;
mod gamma;
mod zeta;

pub use bernoulli::{bernoulli, BernoulliTable};
pub use complex::{
    cos_pi, dist_to_integer, nearest_nonpositive_integer, nearest_positive_integer, sin_cos_pi,
    sin_pi, unit_power, ComplexValue, EPS,
};
pub use gamma::{
    digamma_at_positive_integer, gamma, gamma_pole_data, gamma_value, ln_gamma, recip_gamma,
    recip_gamma_value, GammaPoleData, EULER_GAMMA,
};
pub use zeta::{riemann_zeta, zeta, zeta_laurent_at_one};

pub(crate) use zeta::{zeta_tail, zeta_value};

use num_complex::Complex64;

/// `binom(a, k) = a (a-1) ... (a-k+1) / k!` for complex `a`.
pub fn binomial_complex(a: Complex64, k: usize) -> Complex64 {
    let mut acc = Complex64::new(1.0, 0.0);
    for i in 0..k {
        acc *= (a - i as f64) / (i + 1) as f64;
    }
    acc
}

/// `unit_power` lifted to ComplexValue.
pub fn unit_power_value(s: ComplexValue) -> ComplexValue {
    let v = unit_power(s.value);
    ComplexValue::with_err(v, v.norm() * (std::f64::consts::PI * s.err + 2.0 * EPS))
}
