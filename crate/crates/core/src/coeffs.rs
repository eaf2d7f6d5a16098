//! Exact coefficients `b`, `c` of the near-lattice expansion of
//! `zeta_MT(-m1+e1, -m2+e2; -m3+e3)`, the cyclic identity they satisfy, and
//! the leading-order model built from them.

use num_complex::Complex64;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::{binomial, factorial, from_bigint, int, sign, to_f64, ExactRational};
use crate::special::{bernoulli, ComplexValue, EPS};

/// A lattice triple `(m1, m2, m3)` and its weight `m = m1 + m2 + m3 + 2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct CoeffTriple {
    pub m1: u32,
    pub m2: u32,
    pub m3: u32,
}

impl CoeffTriple {
    pub fn new(m1: u32, m2: u32, m3: u32) -> Self {
        Self { m1, m2, m3 }
    }

    pub fn m(&self) -> u64 {
        self.m1 as u64 + self.m2 as u64 + self.m3 as u64 + 2
    }

    pub fn as_array(&self) -> [u32; 3] {
        [self.m1, self.m2, self.m3]
    }

    /// `(m1, m2, m3) -> (m2, m3, m1)`.
    pub fn rotate(&self) -> Self {
        Self::new(self.m2, self.m3, self.m1)
    }
}

impl From<[u32; 3]> for CoeffTriple {
    fn from(m: [u32; 3]) -> Self {
        Self::new(m[0], m[1], m[2])
    }
}

fn fact(n: u32) -> ExactRational {
    from_bigint(factorial(n as u64))
}

// B_k / k
fn bernoulli_over_index(k: u64) -> ExactRational {
    bernoulli(k as usize) / int(k as i64)
}

/// `b(m1, m2; m3) = m1! m2! m3! binom(m-1, m3) B_m / m!`.
pub fn b_coeff(m1: u32, m2: u32, m3: u32) -> ExactRational {
    let t = CoeffTriple::new(m1, m2, m3);
    let m = t.m();
    let bm = bernoulli(m as usize);
    if bm.is_zero() {
        return bm;
    }
    fact(m1) * fact(m2) * fact(m3) * from_bigint(binomial(m - 1, m3 as u64)) * bm
        / from_bigint(factorial(m))
}

/// `c(m1, m2; m3) = sum_{n1+n2=m3} binom(m3, n1) B_{m1+n1+1}/(m1+n1+1) * B_{m2+n2+1}/(m2+n2+1)`.
pub fn c_coeff(m1: u32, m2: u32, m3: u32) -> ExactRational {
    let mut acc = ExactRational::zero();
    for n1 in 0..=m3 {
        let n2 = m3 - n1;
        let x = bernoulli_over_index((m1 + n1 + 1) as u64);
        if x.is_zero() {
            continue;
        }
        let y = bernoulli_over_index((m2 + n2 + 1) as u64);
        if y.is_zero() {
            continue;
        }
        acc += from_bigint(binomial(m3 as u64, n1 as u64)) * x * y;
    }
    acc
}

/// The cyclic combination
/// `sum_j (-1)^{m_{1+j}+m_{2+j}} b(m_{1+j}, m_{2+j}; m_{3+j}) + sum_j (-1)^{m_{3+j}} c(m_{1+j}, m_{2+j}; m_{3+j})`,
/// which is 1 at the origin and 0 at every other triple.
pub fn structural_sum(m1: u32, m2: u32, m3: u32) -> ExactRational {
    let mut t = CoeffTriple::new(m1, m2, m3);
    let mut acc = ExactRational::zero();
    for _ in 0..3 {
        let (a, b, c) = (t.m1, t.m2, t.m3);
        acc += sign((a + b) as u64) * b_coeff(a, b, c);
        acc += sign(c as u64) * c_coeff(a, b, c);
        t = t.rotate();
    }
    acc
}

/// The value `structural_sum` must take.
pub fn structural_target(m1: u32, m2: u32, m3: u32) -> ExactRational {
    if (m1, m2, m3) == (0, 0, 0) {
        ExactRational::one()
    } else {
        ExactRational::zero()
    }
}

/// `structural_sum` on every triple with entries `<= max_m`, in
/// lexicographic order.
pub fn structural_sweep(max_m: u32) -> Vec<(CoeffTriple, ExactRational)> {
    let triples: Vec<CoeffTriple> = (0..=max_m)
        .flat_map(|a| {
            (0..=max_m).flat_map(move |b| (0..=max_m).map(move |c| CoeffTriple::new(a, b, c)))
        })
        .collect();
    let eval = |t: &CoeffTriple| (*t, structural_sum(t.m1, t.m2, t.m3));
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;
        triples.par_iter().map(eval).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        triples.iter().map(eval).collect()
    }
}

fn check_direction(e1: Complex64, e2: Complex64, e3: Complex64) -> Result<()> {
    let zero = Complex64::new(0.0, 0.0);
    if e2 + e3 == zero || e1 + e3 == zero {
        return Err(Error::DegenerateDirection(e1.re, e2.re, e3.re));
    }
    Ok(())
}

/// Leading-order prediction of `zeta_MT(-m1+e1, -m2+e2; -m3+e3)`:
/// `(-1)^{m2} b(m2,m3;m1) e3/(e2+e3) + (-1)^{m1} b(m3,m1;m2) e3/(e1+e3) + c(m1,m2;m3)`.
pub fn asymptotic_model(m: [u32; 3], e: [Complex64; 3]) -> Result<ComplexValue> {
    let [m1, m2, m3] = m;
    let [e1, e2, e3] = e;
    check_direction(e1, e2, e3)?;
    let b1 = to_f64(&(sign(m2 as u64) * b_coeff(m2, m3, m1)));
    let b2 = to_f64(&(sign(m1 as u64) * b_coeff(m3, m1, m2)));
    let c = to_f64(&c_coeff(m1, m2, m3));
    let v = b1 * e3 / (e2 + e3) + b2 * e3 / (e1 + e3) + c;
    let scale = b1.abs() * (e3 / (e2 + e3)).norm() + b2.abs() * (e3 / (e1 + e3)).norm() + c.abs();
    Ok(ComplexValue::with_err(v, 8.0 * EPS * scale))
}

/// `asymptotic_model` in exact arithmetic for rational `e`.
pub fn asymptotic_model_exact(m: [u32; 3], e: [ExactRational; 3]) -> Result<ExactRational> {
    let [m1, m2, m3] = m;
    let [e1, e2, e3] = e;
    if (&e2 + &e3).is_zero() || (&e1 + &e3).is_zero() {
        return Err(Error::DegenerateDirection(
            to_f64(&e1),
            to_f64(&e2),
            to_f64(&e3),
        ));
    }
    let r1 = &e3 / (&e2 + &e3);
    let r2 = &e3 / (&e1 + &e3);
    Ok(sign(m2 as u64) * b_coeff(m2, m3, m1) * r1
        + sign(m1 as u64) * b_coeff(m3, m1, m2) * r2
        + c_coeff(m1, m2, m3))
}

/// Coefficients of `binom(m - eps, k)` as a polynomial in `eps`
/// (index = power of `eps`).
pub fn signed_binomial_poly(m: i64, k: u32) -> Vec<ExactRational> {
    // prod_{i<k} ((m - i) - eps) / k!
    let mut poly = vec![ExactRational::one()];
    for i in 0..k as i64 {
        let a = int(m - i);
        let mut next = vec![ExactRational::zero(); poly.len() + 1];
        for (j, p) in poly.iter().enumerate() {
            next[j] += &a * p;
            next[j + 1] -= p;
        }
        poly = next;
    }
    let kf = fact(k);
    poly.into_iter().map(|p| p / &kf).collect()
}

/// `binom(m - eps, k)` evaluated from its exact polynomial.
pub fn signed_binomial(m: i64, eps: Complex64, k: u32) -> ComplexValue {
    let poly = signed_binomial_poly(m, k);
    let mut acc = Complex64::new(0.0, 0.0);
    let mut abs = 0.0;
    for p in poly.iter().rev() {
        let pf = to_f64(p);
        acc = acc * eps + pf;
        abs = abs * eps.norm() + pf.abs();
    }
    ComplexValue::with_err(acc, 4.0 * EPS * (k as f64 + 1.0) * abs)
}

/// Leading behaviour `coefficient * eps^order` of `binom(m - eps, k)` as
/// `eps -> 0`, from the closed forms: `binom(m, k)` when `m >= k` or `m < 0`,
/// and `(-1)^{k-m} m! (k-m-1)! / k! * eps` when `0 <= m < k`.
pub fn signed_binomial_leading(m: i64, k: u32) -> (u32, ExactRational) {
    let k64 = k as i64;
    if m >= 0 && m < k64 {
        let mm = m as u32;
        let v = sign((k64 - m) as u64) * fact(mm) * fact(k - mm - 1) / fact(k);
        (1, v)
    } else if m >= k64 {
        (0, from_bigint(binomial(m as u64, k as u64)))
    } else {
        // binom(m, k) = (-1)^k binom(k - m - 1, k) for negative m
        let v = sign(k as u64) * from_bigint(binomial((k64 - m - 1) as u64, k as u64));
        (0, v)
    }
}

/// `(-1)^{m1+m2} b(m1,m2;m3) / (m1! m2! m3!)`, the expected coefficient of
/// `t1^m1 t2^m2 t3^m3` in the generating function of the `b` terms.
pub fn b_series_coefficient(m1: u32, m2: u32, m3: u32) -> ExactRational {
    sign((m1 + m2) as u64) * b_coeff(m1, m2, m3) / (fact(m1) * fact(m2) * fact(m3))
}

/// `(-1)^{m3} c(m1,m2;m3) / (m1! m2! m3!)`.
pub fn c_series_coefficient(m1: u32, m2: u32, m3: u32) -> ExactRational {
    sign(m3 as u64) * c_coeff(m1, m2, m3) / (fact(m1) * fact(m2) * fact(m3))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn b_examples() {
        assert_eq!(b_coeff(0, 0, 0), ratio(1, 12));
        assert_eq!(b_coeff(0, 0, 1), ratio(0, 1));
        assert_eq!(b_coeff(1, 1, 0), ratio(-1, 720));
    }

    #[test]
    fn c_examples() {
        assert_eq!(c_coeff(0, 0, 0), ratio(1, 4));
        assert_eq!(c_coeff(1, 0, 0), ratio(1, 24));
        assert_eq!(c_coeff(0, 0, 1), ratio(1, 12));
    }

    #[test]
    fn structural_examples() {
        assert_eq!(structural_sum(0, 0, 0), ratio(1, 1));
        assert_eq!(structural_sum(1, 0, 0), ratio(0, 1));
        assert_eq!(structural_sum(2, 3, 1), ratio(0, 1));
    }

    #[test]
    fn structural_is_cyclic_and_b_symmetric() {
        for a in 0..6 {
            for b in 0..6 {
                for c in 0..6 {
                    assert_eq!(structural_sum(a, b, c), structural_sum(b, c, a));
                    assert_eq!(b_coeff(a, b, c), b_coeff(b, a, c));
                }
            }
        }
    }

    #[test]
    fn model_examples() {
        let e = [ratio(1, 1000), ratio(2, 1000), ratio(4, 1000)];
        assert_eq!(
            asymptotic_model_exact([0, 0, 0], e.clone()).unwrap(),
            ratio(67, 180)
        );
        assert_eq!(
            asymptotic_model_exact([1, 0, 0], e.clone()).unwrap(),
            ratio(1, 24)
        );
        let e2 = [ratio(3, 7), ratio(-1, 5), ratio(9, 11)];
        assert_eq!(asymptotic_model_exact([0, 0, 1], e2).unwrap(), ratio(1, 12));

        let d = 1e-4;
        let v = asymptotic_model(
            [0, 0, 0],
            [d, 2.0 * d, 4.0 * d].map(|x| Complex64::new(x, 0.0)),
        )
        .unwrap();
        assert!((v.re() - 67.0 / 180.0).abs() < 1e-15);

        let bad = asymptotic_model([0, 0, 0], [1.0, -1.0, 1.0].map(|x| Complex64::new(x, 0.0)));
        assert!(matches!(bad, Err(Error::DegenerateDirection(..))));
    }

    #[test]
    fn signed_binomial_examples() {
        let z = Complex64::new(0.0, 0.0);
        assert_eq!(signed_binomial(3, z, 2).re(), 3.0);
        let (order, lead) = signed_binomial_leading(1, 3);
        assert_eq!((order, lead.clone()), (1, ratio(1, 6)));
        assert_eq!(signed_binomial_poly(1, 3)[1], lead);
        let v = signed_binomial(0, Complex64::new(0.01, 0.0), 1);
        assert!((v.re() + 0.01).abs() < 1e-17);
    }

    #[test]
    fn leading_forms_match_polynomials() {
        for m in -6i64..8 {
            for k in 0..9u32 {
                let poly = signed_binomial_poly(m, k);
                let first = poly.iter().position(|p| !p.is_zero()).unwrap();
                let (order, lead) = signed_binomial_leading(m, k);
                assert_eq!(first as u32, order, "m = {m}, k = {k}");
                assert_eq!(poly[first], lead, "m = {m}, k = {k}");
            }
        }
    }
}
