//! Exact integer/rational helpers.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type ExactRational = BigRational;

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn int(n: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> ExactRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn from_bigint(n: BigInt) -> ExactRational {
    BigRational::from_integer(n)
}

pub fn sign(k: u64) -> ExactRational {
    if k.is_multiple_of(2) {
        ExactRational::one()
    } else {
        -ExactRational::one()
    }
}

/// Nearest binary64, robust to numerators/denominators beyond f64 range.
pub fn to_f64(q: &ExactRational) -> f64 {
    if let Some(x) = q.to_f64() {
        if x.is_finite() {
            return x;
        }
    }
    let n = q.numer();
    let d = q.denom();
    let shift = n.bits() as i64 - d.bits() as i64;
    let scaled = if shift > 0 {
        BigRational::new(n.clone(), d.clone() << (shift as usize))
    } else {
        BigRational::new(n.clone() << ((-shift) as usize), d.clone())
    };
    let m = scaled.to_f64().unwrap_or(0.0);
    let m = if scaled.is_negative() {
        -m.abs()
    } else {
        m.abs()
    };
    m * 2f64.powi(shift as i32)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomials() {
        assert_eq!(binomial(5, 2), BigInt::from(10));
        assert_eq!(binomial(5, 6), BigInt::zero());
        assert_eq!(binomial(40, 20), BigInt::from(137846528820u64));
        assert_eq!(factorial(25).to_string(), "15511210043330985984000000");
    }

    #[test]
    fn to_f64_handles_huge_parts() {
        let big = factorial(200);
        let q = BigRational::new(big.clone() * BigInt::from(3), big);
        assert_eq!(to_f64(&q), 3.0);
        assert_eq!(to_f64(&ratio(-1, 30)), -1.0 / 30.0);
    }
}
