//! Truncated power series in one and three variables.

use std::ops::{Add, Mul, Sub};

use num_traits::{One, Zero};

use super::poly::Poly;
use crate::rational::ExactRational;

/// `sum_{k <= N} a_k t^k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UniSeries {
    coeffs: Vec<ExactRational>,
}

impl UniSeries {
    /// Coefficients `a_0..=a_N`; the length fixes the degree bound.
    pub fn from_coeffs(coeffs: Vec<ExactRational>) -> Self {
        assert!(
            !coeffs.is_empty(),
            "a series needs at least the constant term"
        );
        Self { coeffs }
    }

    pub fn degree_bound(&self) -> u32 {
        (self.coeffs.len() - 1) as u32
    }

    pub fn coeff(&self, k: u32) -> ExactRational {
        self.coeffs
            .get(k as usize)
            .cloned()
            .unwrap_or_else(ExactRational::zero)
    }

    pub fn coeffs(&self) -> &[ExactRational] {
        &self.coeffs
    }

    /// `f(l1 t1 + l2 t2 + l3 t3)` truncated at the same degree bound.
    pub fn compose_linear(&self, l: [i64; 3]) -> TriSeries {
        let n = self.degree_bound();
        let inner = Poly::<3>::linear(l, 0);
        let mut power = Poly::<3>::one();
        let mut acc = Poly::<3>::zero();
        for (k, a) in self.coeffs.iter().enumerate() {
            if k > 0 {
                power = power.mul_truncated(&inner, Some(n));
            }
            if !a.is_zero() {
                acc = &acc + &power.scale(a);
            }
        }
        TriSeries::from_poly(n, acc)
    }
}

/// `sum_{i+j+k <= N} c_{ijk} t1^i t2^j t3^k`; arithmetic truncates at the
/// smaller degree bound of the operands.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TriSeries {
    bound: u32,
    poly: Poly<3>,
}

impl TriSeries {
    pub fn zero(bound: u32) -> Self {
        Self {
            bound,
            poly: Poly::zero(),
        }
    }

    pub fn one(bound: u32) -> Self {
        Self::constant(bound, ExactRational::one())
    }

    pub fn constant(bound: u32, c: ExactRational) -> Self {
        Self {
            bound,
            poly: Poly::constant(c),
        }
    }

    /// Drops every monomial above the bound.
    pub fn from_poly(bound: u32, poly: Poly<3>) -> Self {
        Self {
            bound,
            poly: poly.truncate(bound),
        }
    }

    pub fn degree_bound(&self) -> u32 {
        self.bound
    }

    pub fn coeff(&self, i: u32, j: u32, k: u32) -> ExactRational {
        self.poly.coeff(&[i, j, k])
    }

    pub fn poly(&self) -> &Poly<3> {
        &self.poly
    }

    /// Nonzero coefficients by multi-index.
    pub fn terms(&self) -> impl Iterator<Item = ([u32; 3], &ExactRational)> {
        self.poly.terms().map(|(e, v)| (*e, v))
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn is_constant(&self, c: &ExactRational) -> bool {
        (&self.poly - &Poly::constant(c.clone())).is_zero()
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        Self {
            bound: self.bound,
            poly: self.poly.scale(c),
        }
    }

    /// Lowers the degree bound.
    pub fn truncate(&self, bound: u32) -> Self {
        Self::from_poly(bound.min(self.bound), self.poly.clone())
    }

    /// `G(t1, t2, t3) = F(t2, t3, t1)`, applied `j` times.
    pub fn rotate(&self, j: usize) -> Self {
        let mut poly = self.poly.clone();
        for _ in 0..j % 3 {
            poly = poly.permute([1, 2, 0]);
        }
        Self {
            bound: self.bound,
            poly,
        }
    }

    /// Multiplication by a polynomial, e.g. `t1 - t2`.
    pub fn mul_poly(&self, p: &Poly<3>) -> Self {
        Self {
            bound: self.bound,
            poly: self.poly.mul_truncated(p, Some(self.bound)),
        }
    }
}

impl Add for &TriSeries {
    type Output = TriSeries;
    fn add(self, rhs: &TriSeries) -> TriSeries {
        let bound = self.bound.min(rhs.bound);
        TriSeries::from_poly(bound, &self.poly + &rhs.poly)
    }
}

impl Sub for &TriSeries {
    type Output = TriSeries;
    fn sub(self, rhs: &TriSeries) -> TriSeries {
        let bound = self.bound.min(rhs.bound);
        TriSeries::from_poly(bound, &self.poly - &rhs.poly)
    }
}

impl Mul for &TriSeries {
    type Output = TriSeries;
    fn mul(self, rhs: &TriSeries) -> TriSeries {
        let bound = self.bound.min(rhs.bound);
        TriSeries {
            bound,
            poly: self.poly.mul_truncated(&rhs.poly, Some(bound)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn geometric_composition() {
        // 1/(1 - t) composed with t1 - t3.
        let g = UniSeries::from_coeffs(vec![int(1); 5]);
        let s = g.compose_linear([1, 0, -1]);
        assert_eq!(s.coeff(2, 0, 1), int(-3));
        assert_eq!(s.coeff(0, 0, 4), int(1));
        assert_eq!(s.coeff(1, 0, 4), int(0));
        let one_minus = TriSeries::from_poly(4, Poly::linear([-1, 0, 1], 1));
        assert!((&s * &one_minus).is_constant(&int(1)));
    }

    #[test]
    fn rotation_has_order_three() {
        let p = TriSeries::from_poly(5, Poly::monomial([1, 0, 2], ratio(3, 7)));
        assert_eq!(p.rotate(1).coeff(2, 1, 0), ratio(3, 7));
        assert_eq!(p.rotate(3), p);
        assert_eq!(p.rotate(1).rotate(2), p);
    }

    #[test]
    fn truncation_respects_smaller_bound() {
        let a = TriSeries::from_poly(3, Poly::linear([1, 1, 1], 1));
        let b = TriSeries::from_poly(1, Poly::linear([1, 0, 0], 1));
        let c = &a * &b;
        assert_eq!(c.degree_bound(), 1);
        assert!(c.terms().all(|(e, _)| e.iter().sum::<u32>() <= 1));
    }
}
