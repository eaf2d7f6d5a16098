//! Sparse multivariate polynomials and bivariate rational functions over Q.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::rational::ExactRational;

/// A polynomial in `N` variables; zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly<const N: usize> {
    terms: BTreeMap<[u32; N], ExactRational>,
}

impl<const N: usize> Poly<N> {
    pub fn zero() -> Self {
        Self {
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: ExactRational) -> Self {
        let mut p = Self::zero();
        p.add_term([0; N], c);
        p
    }

    pub fn one() -> Self {
        Self::constant(ExactRational::one())
    }

    /// The variable with index `i`.
    pub fn var(i: usize) -> Self {
        let mut e = [0; N];
        e[i] = 1;
        Self::monomial(e, ExactRational::one())
    }

    pub fn monomial(exp: [u32; N], c: ExactRational) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, c);
        p
    }

    /// `sum_i coeffs[i] * x_i + constant`.
    pub fn linear(coeffs: [i64; N], constant: i64) -> Self {
        let mut p = Self::constant(ExactRational::from_integer(constant.into()));
        for (i, &c) in coeffs.iter().enumerate() {
            let mut e = [0; N];
            e[i] = 1;
            p.add_term(e, ExactRational::from_integer(c.into()));
        }
        p
    }

    pub fn add_term(&mut self, exp: [u32; N], c: ExactRational) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(exp).or_insert_with(ExactRational::zero);
        *entry += c;
        if entry.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn coeff(&self, exp: &[u32; N]) -> ExactRational {
        self.terms
            .get(exp)
            .cloned()
            .unwrap_or_else(ExactRational::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[u32; N], &ExactRational)> {
        self.terms.iter()
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &ExactRational) -> Self {
        let mut p = Self::zero();
        for (e, v) in &self.terms {
            p.add_term(*e, v * c);
        }
        p
    }

    /// Product keeping only monomials of total degree `<= bound`.
    pub fn mul_truncated(&self, other: &Self, bound: Option<u32>) -> Self {
        let mut p = Self::zero();
        for (ea, va) in &self.terms {
            let da: u32 = ea.iter().sum();
            for (eb, vb) in &other.terms {
                if let Some(b) = bound {
                    if da + eb.iter().sum::<u32>() > b {
                        continue;
                    }
                }
                let e: [u32; N] = std::array::from_fn(|i| ea[i] + eb[i]);
                p.add_term(e, va * vb);
            }
        }
        p
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = acc.mul_truncated(self, None);
        }
        acc
    }

    pub fn eval(&self, x: &[ExactRational; N]) -> ExactRational {
        let mut acc = ExactRational::zero();
        for (e, v) in &self.terms {
            let mut t = v.clone();
            for i in 0..N {
                for _ in 0..e[i] {
                    t *= &x[i];
                }
            }
            acc += t;
        }
        acc
    }

    /// Keeps monomials of total degree `<= bound`.
    pub fn truncate(&self, bound: u32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| e.iter().sum::<u32>() <= bound)
                .map(|(e, v)| (*e, v.clone()))
                .collect(),
        }
    }

    /// Relabels variables: exponent slot `i` moves to slot `perm[i]`.
    pub fn permute(&self, perm: [usize; N]) -> Self {
        let mut p = Self::zero();
        for (e, v) in &self.terms {
            let mut f = [0; N];
            for i in 0..N {
                f[perm[i]] = e[i];
            }
            p.add_term(f, v.clone());
        }
        p
    }

    /// Substitutes polynomial `images[i]` for variable `i`.
    pub fn compose<const M: usize>(&self, images: &[Poly<M>; N]) -> Poly<M> {
        let mut acc = Poly::<M>::zero();
        for (e, v) in &self.terms {
            let mut t = Poly::<M>::constant(v.clone());
            for i in 0..N {
                t = &t * &images[i].pow(e[i]);
            }
            acc = &acc + &t;
        }
        acc
    }

    /// Largest monomial in the term order, with its coefficient.
    pub fn leading(&self) -> Option<(&[u32; N], &ExactRational)> {
        self.terms.iter().next_back()
    }

    /// Positive rational `c` such that `self / c` has coprime integer
    /// coefficients.
    pub fn content(&self) -> ExactRational {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for v in self.terms.values() {
            num = num.gcd(v.numer());
            den = den.lcm(v.denom());
        }
        if num.is_zero() {
            ExactRational::one()
        } else {
            ExactRational::new(num, den)
        }
    }
}

impl<const N: usize> Add for &Poly<N> {
    type Output = Poly<N>;
    fn add(self, rhs: &Poly<N>) -> Poly<N> {
        let mut p = self.clone();
        for (e, v) in &rhs.terms {
            p.add_term(*e, v.clone());
        }
        p
    }
}

impl<const N: usize> Sub for &Poly<N> {
    type Output = Poly<N>;
    fn sub(self, rhs: &Poly<N>) -> Poly<N> {
        let mut p = self.clone();
        for (e, v) in &rhs.terms {
            p.add_term(*e, -v.clone());
        }
        p
    }
}

impl<const N: usize> Mul for &Poly<N> {
    type Output = Poly<N>;
    fn mul(self, rhs: &Poly<N>) -> Poly<N> {
        self.mul_truncated(rhs, None)
    }
}

impl<const N: usize> Neg for &Poly<N> {
    type Output = Poly<N>;
    fn neg(self) -> Poly<N> {
        self.scale(&-ExactRational::one())
    }
}

impl<const N: usize> fmt::Debug for Poly<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<const N: usize> fmt::Display for Poly<N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(e, v)| {
                let vars: Vec<String> = e
                    .iter()
                    .enumerate()
                    .filter(|(_, &k)| k > 0)
                    .map(|(i, &k)| {
                        if k == 1 {
                            format!("x{}", i + 1)
                        } else {
                            format!("x{}^{k}", i + 1)
                        }
                    })
                    .collect();
                if vars.is_empty() {
                    format!("{v}")
                } else {
                    format!("({v})*{}", vars.join("*"))
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `numerator / denominator` in two variables `X`, `Y`, with the pair
/// scaled so the denominator has coprime integer coefficients and a
/// positive leading coefficient.
#[derive(Clone, Debug)]
pub struct RationalFunction2 {
    numerator: Poly<2>,
    denominator: Poly<2>,
}

impl RationalFunction2 {
    /// `None` when the denominator is the zero polynomial.
    pub fn new(numerator: Poly<2>, denominator: Poly<2>) -> Option<Self> {
        if denominator.is_zero() {
            return None;
        }
        let mut c = denominator.content();
        if denominator
            .leading()
            .map(|(_, v)| v.is_negative())
            .unwrap_or(false)
        {
            c = -c;
        }
        let inv = c.recip();
        Some(Self {
            numerator: numerator.scale(&inv),
            denominator: denominator.scale(&inv),
        })
    }

    pub fn from_poly(p: Poly<2>) -> Self {
        Self::new(p, Poly::one()).expect("constant denominator")
    }

    pub fn numerator(&self) -> &Poly<2> {
        &self.numerator
    }

    pub fn denominator(&self) -> &Poly<2> {
        &self.denominator
    }

    pub fn add(&self, other: &Self) -> Self {
        let num = &(&self.numerator * &other.denominator) + &(&other.numerator * &self.denominator);
        let den = &self.denominator * &other.denominator;
        Self::new(num, den).expect("product of nonzero polynomials")
    }

    pub fn mul(&self, other: &Self) -> Self {
        let num = &self.numerator * &other.numerator;
        let den = &self.denominator * &other.denominator;
        Self::new(num, den).expect("product of nonzero polynomials")
    }

    /// `None` when the value is undefined there.
    pub fn eval(&self, x: &ExactRational, y: &ExactRational) -> Option<ExactRational> {
        let pt = [x.clone(), y.clone()];
        let d = self.denominator.eval(&pt);
        if d.is_zero() {
            return None;
        }
        Some(self.numerator.eval(&pt) / d)
    }

    /// Exact equality as rational functions: `a d - b c = 0`.
    pub fn equals(&self, other: &Self) -> bool {
        (&(&self.numerator * &other.denominator) - &(&other.numerator * &self.denominator))
            .is_zero()
    }

    /// `numerator - denominator`, the polynomial that vanishes iff this is 1.
    pub fn minus_one_numerator(&self) -> Poly<2> {
        &self.numerator - &self.denominator
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ratio;

    #[test]
    fn arithmetic() {
        let x = Poly::<2>::var(0);
        let y = Poly::<2>::var(1);
        let s = &x + &y;
        let sq = &s * &s;
        assert_eq!(sq.coeff(&[1, 1]), ratio(2, 1));
        assert_eq!(sq.term_count(), 3);
        assert!((&sq - &sq).is_zero());
        assert_eq!(sq.eval(&[ratio(1, 2), ratio(1, 3)]), ratio(25, 36));
        assert_eq!(s.pow(3).degree(), 3);
        assert_eq!(sq.truncate(1).term_count(), 0);
    }

    #[test]
    fn content_normalisation() {
        let p = Poly::<2>::linear([2, -4], 6).scale(&ratio(1, 3));
        assert_eq!(p.content(), ratio(2, 3));
        let f = RationalFunction2::new(Poly::one(), &Poly::<2>::linear([-2, 0], 4) * &Poly::one())
            .unwrap();
        let g = RationalFunction2::new(Poly::constant(ratio(-1, 2)), Poly::<2>::linear([1, 0], -2))
            .unwrap();
        assert!(f.equals(&g));
        assert!(RationalFunction2::new(Poly::one(), Poly::zero()).is_none());
    }

    #[test]
    fn permute_moves_exponents() {
        let p = Poly::<3>::monomial([1, 2, 3], ratio(1, 1));
        let q = p.permute([1, 2, 0]);
        assert_eq!(q.coeff(&[3, 1, 2]), ratio(1, 1));
    }
}
