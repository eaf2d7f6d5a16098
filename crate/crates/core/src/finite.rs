//! Multiple harmonic sums, depth-2 finite zeta values and finite omega
//! values modulo primes.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::binomial;

/// Smallest prime used for residue vectors.
pub const SMALLEST_PRIME: u64 = 5;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Primes in `lo..=hi`, ascending.
pub fn primes_between(lo: u64, hi: u64) -> Vec<u64> {
    (lo..=hi).filter(|&n| is_prime(n)).collect()
}

fn check_prime(p: u64) -> Result<()> {
    if is_prime(p) {
        Ok(())
    } else {
        Err(Error::NonPrimeModulus(p))
    }
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn pow_mod(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, a, p);
        }
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    acc
}

/// Inverse by Fermat's little theorem; `p` must be prime.
pub fn inv_mod(a: u64, p: u64) -> Result<u64> {
    if a.is_multiple_of(p) {
        return Err(Error::InverseOfZero(p));
    }
    Ok(pow_mod(a, p - 2, p))
}

/// `n^{-k} mod p`; negative `k` means the positive power `n^{|k|}`.
pub fn power_residue(n: u64, k: i64, p: u64) -> Result<u64> {
    if k > 0 {
        Ok(pow_mod(inv_mod(n, p)?, k as u64, p))
    } else {
        Ok(pow_mod(n, k.unsigned_abs(), p))
    }
}

/// `a mod p` for a signed `a`, in `[0, p)`.
fn reduce(a: i64, p: u64) -> u64 {
    a.rem_euclid(p as i64) as u64
}

/// An index `(k_1, ..., k_r)`; the empty tuple is the unit index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IndexTuple(Vec<i64>);

impl IndexTuple {
    pub fn new(components: impl Into<Vec<i64>>) -> Self {
        Self(components.into())
    }

    pub fn unit() -> Self {
        Self(Vec::new())
    }

    pub fn depth(&self) -> usize {
        self.0.len()
    }

    pub fn components(&self) -> &[i64] {
        &self.0
    }

    /// `sum |k_i|`.
    pub fn weight(&self) -> u64 {
        self.0.iter().map(|k| k.unsigned_abs()).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&k| k == 0)
    }
}

impl From<[i64; 3]> for IndexTuple {
    fn from(k: [i64; 3]) -> Self {
        Self(k.to_vec())
    }
}

impl fmt::Display for IndexTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|k| k.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Residues `(p, r mod p)` over increasing primes.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct PrimeResidueVector {
    entries: Vec<(u64, u64)>,
}

impl PrimeResidueVector {
    pub fn new(entries: Vec<(u64, u64)>) -> Result<Self> {
        for w in entries.windows(2) {
            if w[0].0 >= w[1].0 {
                return Err(Error::InvalidParameter(
                    "primes must be strictly increasing".into(),
                ));
            }
        }
        for &(p, r) in &entries {
            check_prime(p)?;
            if r >= p {
                return Err(Error::InvalidParameter(format!(
                    "residue {r} is not reduced mod {p}"
                )));
            }
        }
        Ok(Self { entries })
    }

    pub fn entries(&self) -> &[(u64, u64)] {
        &self.entries
    }

    pub fn get(&self, p: u64) -> Option<u64> {
        self.entries
            .binary_search_by_key(&p, |e| e.0)
            .ok()
            .map(|i| self.entries[i].1)
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// Whether every residue at a prime `p > threshold` equals `r`.
    pub fn constant_above(&self, threshold: u64, r: u64) -> bool {
        self.entries
            .iter()
            .filter(|(p, _)| *p > threshold)
            .all(|&(p, v)| v == r % p)
    }
}

/// `H_n(k) = sum_{1 <= n_1 < ... < n_r <= n} prod n_i^{-k_i} mod p`.
pub fn harmonic_sum_mod_p(k: &IndexTuple, n: u64, p: u64) -> Result<u64> {
    check_prime(p)?;
    let r = k.depth();
    // dp[i]: sum over increasing chains of length i ending at or below the
    // current n.
    let mut dp = vec![0u64; r + 1];
    dp[0] = 1 % p;
    for m in 1..=n {
        for i in (1..=r).rev() {
            let w = power_residue(m, k.0[i - 1], p)?;
            dp[i] = (dp[i] + mul_mod(dp[i - 1], w, p)) % p;
        }
    }
    Ok(dp[r])
}

/// `zeta_A(k1, k2)` at `p`: `H_{p-1}(k1, k2) mod p`.
pub fn zeta_a_depth2(k1: i64, k2: i64, p: u64) -> Result<u64> {
    check_prime(p)?;
    harmonic_sum_mod_p(&IndexTuple::new([k1, k2]), p - 1, p)
}

/// Table `n -> n^{-k} mod p` for `n = 0..p` (entry 0 unused).
fn power_table(k: i64, p: u64) -> Vec<u64> {
    let mut t = vec![0; p as usize];
    for n in 1..p {
        t[n as usize] = power_residue(n, k, p).expect("n < p is invertible");
    }
    t
}

/// `omega_p(k) = sum_{n_1 + ... + n_r = p, n_i >= 1} prod n_i^{-k_i} mod p`
/// by enumerating the compositions of `p`.
pub fn omega_sum_mod_p(k: &IndexTuple, p: u64) -> Result<u64> {
    check_prime(p)?;
    let r = k.depth();
    if r < 2 {
        return Err(Error::InvalidParameter("omega sums need depth >= 2".into()));
    }
    if (r as u64) > p {
        return Ok(0);
    }
    let tables: Vec<Vec<u64>> = k.0.iter().map(|&ki| power_table(ki, p)).collect();
    fn rec(tables: &[Vec<u64>], i: usize, left: u64, acc: u64, p: u64) -> u64 {
        let last = tables.len() - 1;
        if i == last {
            return mul_mod(acc, tables[i][left as usize], p);
        }
        let slots_after = (last - i) as u64;
        let mut sum = 0;
        for n in 1..=left - slots_after {
            let a = mul_mod(acc, tables[i][n as usize], p);
            if a != 0 {
                sum = (sum + rec(tables, i + 1, left - n, a, p)) % p;
            }
        }
        sum
    }
    Ok(rec(&tables, 0, p, 1, p))
}

/// The depth-3 sum in convolution order:
/// `sum_{m2=2}^{p-1} sum_{m1<m2} m1^{-k1} (m2-m1)^{-k2} (-m2)^{-k3}`.
pub fn omega_convolution_mod_p(k: [i64; 3], p: u64) -> Result<u64> {
    check_prime(p)?;
    let t: Vec<Vec<u64>> = k.iter().map(|&ki| power_table(ki, p)).collect();
    let mut sum = 0;
    for m2 in 2..p {
        let outer = t[2][(p - m2) as usize];
        let mut inner = 0;
        for m1 in 1..m2 {
            inner = (inner + mul_mod(t[0][m1 as usize], t[1][(m2 - m1) as usize], p)) % p;
        }
        sum = (sum + mul_mod(inner, outer, p)) % p;
    }
    Ok(sum)
}

/// `omega_A(k) = (omega_p(k) mod p)_p` for primes `5 <= p <= primes_up_to`.
pub fn omega_a(k: &IndexTuple, primes_up_to: u64) -> Result<PrimeResidueVector> {
    if k.depth() != 3 {
        return Err(Error::InvalidParameter(
            "omega_A takes a depth-3 index".into(),
        ));
    }
    if primes_up_to < SMALLEST_PRIME {
        return Err(Error::InvalidParameter(format!(
            "primes_up_to must be at least {SMALLEST_PRIME}"
        )));
    }
    let primes = primes_between(SMALLEST_PRIME, primes_up_to);
    let run = |p: u64| omega_sum_mod_p(k, p).map(|r| (p, r));
    #[cfg(feature = "parallel")]
    let entries = {
        use rayon::prelude::*;
        primes
            .into_par_iter()
            .map(run)
            .collect::<Result<Vec<_>>>()?
    };
    #[cfg(not(feature = "parallel"))]
    let entries = primes.into_iter().map(run).collect::<Result<Vec<_>>>()?;
    PrimeResidueVector::new(entries)
}

/// Right-hand side of the binomial reduction
/// `(-1)^{-k2-k3} sum_{l=0}^{-k2} (-1)^l C(-k2, l) zeta_A(k1+k2+l, k3-l)` at `p`.
pub fn binomial_reduction_rhs(k: [i64; 3], p: u64) -> Result<u64> {
    check_prime(p)?;
    let [k1, k2, k3] = k;
    if k.iter().any(|&ki| ki > 0) {
        return Err(Error::InvalidParameter(
            "binomial reduction needs non-positive indices".into(),
        ));
    }
    let n = (-k2) as u64;
    let mut sum: i64 = 0;
    for l in 0..=n {
        let c = reduce(
            i64::try_from(binomial(n, l) % num_bigint::BigInt::from(p)).expect("reduced"),
            p,
        );
        let z = zeta_a_depth2(k1 + k2 + l as i64, k3 - l as i64, p)?;
        let term = mul_mod(c, z, p) as i64;
        sum += if l % 2 == 0 { term } else { -term };
        sum = sum.rem_euclid(p as i64);
    }
    let sign_exp = (-k2 - k3) as u64;
    Ok(if sign_exp.is_multiple_of(2) {
        reduce(sum, p)
    } else {
        reduce(-sum, p)
    })
}

/// Compares the enumerated `omega_p(k)` with the binomial combination of
/// depth-2 finite zeta values.
pub fn binomial_reduction_check(k1: i64, k2: i64, k3: i64, p: u64) -> Result<bool> {
    let rhs = binomial_reduction_rhs([k1, k2, k3], p)?;
    let lhs = omega_sum_mod_p(&IndexTuple::new([k1, k2, k3]), p)?;
    Ok(lhs == rhs)
}

/// Primes above this bound are expected to follow the 0/1 pattern.
pub fn pattern_threshold(k: &IndexTuple) -> u64 {
    k.weight() + 3
}

/// The expected residue of `omega_A(k)` for non-positive `k`: 1 at the
/// origin, 0 elsewhere.
pub fn pattern_value(k: &IndexTuple) -> u64 {
    u64::from(k.is_zero())
}

/// Whether `v` follows the pattern at every prime above the threshold.
pub fn pattern_holds(k: &IndexTuple, v: &PrimeResidueVector) -> bool {
    let threshold = if k.is_zero() { 0 } else { pattern_threshold(k) };
    v.constant_above(threshold, pattern_value(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{ratio, ExactRational};
    use num_traits::{ToPrimitive, Zero};

    fn rational_mod(q: &ExactRational, p: u64) -> u64 {
        let n = reduce((q.numer() % p as i64).to_i64().unwrap(), p);
        let d = reduce((q.denom() % p as i64).to_i64().unwrap(), p);
        mul_mod(n, inv_mod(d, p).unwrap(), p)
    }

    #[test]
    fn primes_and_inverses() {
        assert_eq!(
            primes_between(1, 30),
            vec![2, 3, 5, 7, 11, 13, 17, 19, 23, 29]
        );
        assert_eq!(inv_mod(12, 7).unwrap(), 3);
        assert!(matches!(inv_mod(14, 7), Err(Error::InverseOfZero(7))));
        assert_eq!(power_residue(3, -2, 7).unwrap(), 2);
    }

    #[test]
    fn harmonic_examples() {
        let one = IndexTuple::new([1]);
        assert_eq!(harmonic_sum_mod_p(&one, 4, 7).unwrap(), 5);
        assert_eq!(harmonic_sum_mod_p(&IndexTuple::unit(), 9, 11).unwrap(), 1);
        assert_eq!(harmonic_sum_mod_p(&one, 12, 13).unwrap(), 0);
        assert!(matches!(
            harmonic_sum_mod_p(&one, 7, 7),
            Err(Error::InverseOfZero(7))
        ));
        assert!(matches!(
            harmonic_sum_mod_p(&one, 3, 9),
            Err(Error::NonPrimeModulus(9))
        ));
    }

    #[test]
    fn harmonic_matches_rationals() {
        let p = 31;
        for k in [vec![1, 2], vec![2, -1], vec![-1, 1, 3]] {
            for n in 1..8u64 {
                let r = k.len();
                let mut exact = ExactRational::zero();
                // Enumerate increasing chains by bitmask.
                for mask in 0u32..(1 << n) {
                    if mask.count_ones() as usize != r {
                        continue;
                    }
                    let chain: Vec<i64> = (1..=n as i64)
                        .filter(|i| mask >> (i - 1) & 1 == 1)
                        .collect();
                    let mut t = ratio(1, 1);
                    for (ni, ki) in chain.iter().zip(&k) {
                        t *= if *ki >= 0 {
                            ratio(1, ni.pow(*ki as u32))
                        } else {
                            ratio(ni.pow((-ki) as u32), 1)
                        };
                    }
                    exact += t;
                }
                let got = harmonic_sum_mod_p(&IndexTuple::new(k.clone()), n, p).unwrap();
                assert_eq!(got, rational_mod(&exact, p), "k = {k:?}, n = {n}");
            }
        }
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega_sum_mod_p(&[0, 0, 0].into(), 11).unwrap(), 1);
        assert_eq!(omega_sum_mod_p(&[-1, 0, 0].into(), 11).unwrap(), 0);
        assert_eq!(omega_sum_mod_p(&[1, 1, 1].into(), 5).unwrap(), 3);
        assert!(omega_sum_mod_p(&IndexTuple::new([1]), 5).is_err());
    }

    #[test]
    fn omega_orders_agree() {
        for p in [5, 7, 13] {
            for k in [[0, 0, 0], [1, 1, 1], [-2, 3, 1], [-1, -2, 0]] {
                let a = omega_sum_mod_p(&k.into(), p).unwrap();
                let b = omega_convolution_mod_p(k, p).unwrap();
                assert_eq!(a, b, "k = {k:?}, p = {p}");
                let perm = [k[2], k[0], k[1]];
                assert_eq!(omega_sum_mod_p(&perm.into(), p).unwrap(), a);
            }
        }
    }

    #[test]
    fn zeta_a_examples() {
        assert_eq!(zeta_a_depth2(0, 0, 7).unwrap(), 1);
        assert_eq!(zeta_a_depth2(-1, 0, 7).unwrap(), 0);
        assert_eq!(zeta_a_depth2(1, 1, 7).unwrap(), 0);
    }

    #[test]
    fn omega_a_examples() {
        for k in [[0, 0, 0], [-1, 0, 0], [-2, -2, -2]] {
            let k = IndexTuple::from(k);
            let v = omega_a(&k, 100).unwrap();
            assert_eq!(v.entries().first().unwrap().0, 5);
            let expected = pattern_value(&k);
            assert!(
                v.entries().iter().all(|&(_, r)| r == expected),
                "{k}: {v:?}"
            );
        }
        assert!(omega_a(&IndexTuple::new([0, 0]), 100).is_err());
    }

    #[test]
    fn binomial_examples() {
        assert!(binomial_reduction_check(0, 0, 0, 11).unwrap());
        assert!(binomial_reduction_check(-1, -2, 0, 13).unwrap());
        assert!(binomial_reduction_check(-3, -1, -2, 17).unwrap());
        assert!(binomial_reduction_check(1, 0, 0, 17).is_err());
    }

    #[test]
    fn residue_vector_validation() {
        assert!(PrimeResidueVector::new(vec![(5, 1), (7, 6)]).is_ok());
        assert!(PrimeResidueVector::new(vec![(7, 1), (5, 1)]).is_err());
        assert!(PrimeResidueVector::new(vec![(9, 1)]).is_err());
        assert!(PrimeResidueVector::new(vec![(5, 5)]).is_err());
    }
}
