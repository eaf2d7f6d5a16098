//! Bernoulli numbers in the `t e^t / (e^t - 1)` convention (`B_1 = +1/2`).

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::rational::binomial;

/// Append-only cache of exact Bernoulli numbers, safe to share between
/// threads.
#[derive(Debug, Default)]
pub struct BernoulliTable {
    cache: RwLock<Vec<BigRational>>,
}

impl BernoulliTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `B_k`, extending the cache as needed.
    pub fn get(&self, k: usize) -> BigRational {
        if let Some(b) = self.cache.read().expect("bernoulli cache poisoned").get(k) {
            return b.clone();
        }
        let mut cache = self.cache.write().expect("bernoulli cache poisoned");
        while cache.len() <= k {
            let n = cache.len();
            let next = next_bernoulli(&cache, n);
            cache.push(next);
        }
        cache[k].clone()
    }

    pub fn len(&self) -> usize {
        self.cache.read().expect("bernoulli cache poisoned").len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Snapshot of `B_0 .. B_{n-1}`.
    pub fn prefix(&self, n: usize) -> Vec<BigRational> {
        if n > 0 {
            self.get(n - 1);
        }
        self.cache.read().expect("bernoulli cache poisoned")[..n].to_vec()
    }
}

// sum_{j=0}^{n} C(n+1, j) B_j = n + 1 in this convention.
fn next_bernoulli(prev: &[BigRational], n: usize) -> BigRational {
    if n == 0 {
        return BigRational::one();
    }
    if n >= 3 && n % 2 == 1 {
        return BigRational::zero();
    }
    let mut acc = BigRational::from_integer(BigInt::from(n + 1));
    for (j, b) in prev.iter().enumerate() {
        if b.is_zero() {
            continue;
        }
        acc -= BigRational::from_integer(binomial(n as u64 + 1, j as u64)) * b;
    }
    acc / BigRational::from_integer(BigInt::from(n + 1))
}

fn table() -> &'static BernoulliTable {
    static TABLE: OnceLock<BernoulliTable> = OnceLock::new();
    TABLE.get_or_init(BernoulliTable::new)
}

/// `B_k` from the shared process-wide table.
pub fn bernoulli(k: usize) -> BigRational {
    table().get(k)
}

/// `B_{2k} / (2k)!` as binary64, for `k = 0 .. n`.
pub(crate) fn even_bernoulli_over_factorial(n: usize) -> &'static [f64] {
    static CACHE: OnceLock<Vec<f64>> = OnceLock::new();
    const MAX: usize = 64;
    let v = CACHE.get_or_init(|| {
        let mut fact = BigInt::one();
        let mut out = Vec::with_capacity(MAX + 1);
        for k in 0..=MAX {
            if k > 0 {
                fact *= BigInt::from(2 * k - 1) * BigInt::from(2 * k);
            }
            let r = bernoulli(2 * k) / BigRational::from_integer(fact.clone());
            out.push(r.to_f64().unwrap_or(0.0));
        }
        out
    });
    &v[..=n.min(MAX)]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn small_values() {
        assert_eq!(bernoulli(0), q(1, 1));
        assert_eq!(bernoulli(1), q(1, 2));
        assert_eq!(bernoulli(2), q(1, 6));
        assert_eq!(bernoulli(4), q(-1, 30));
        assert_eq!(bernoulli(6), q(1, 42));
        assert_eq!(bernoulli(12), q(-691, 2730));
    }

    #[test]
    fn odd_values_vanish() {
        for k in 1..30 {
            assert!(bernoulli(2 * k + 1).is_zero(), "B_{}", 2 * k + 1);
        }
    }

    // Independent route: invert (e^t - 1)/t = sum t^k/(k+1)! as a power
    // series, multiply by e^t, read off B_k / k!.
    #[test]
    fn matches_generating_function() {
        let n = 24;
        let mut fact = vec![BigRational::one()];
        for k in 1..=n + 1 {
            let prev = fact[k - 1].clone();
            fact.push(prev * BigRational::from_integer(BigInt::from(k)));
        }
        let a: Vec<BigRational> = (0..=n).map(|k| fact[k + 1].recip()).collect();
        let mut inv = vec![BigRational::zero(); n + 1];
        inv[0] = BigRational::one();
        for k in 1..=n {
            let mut s = BigRational::zero();
            for j in 1..=k {
                s += &a[j] * &inv[k - j];
            }
            inv[k] = -s;
        }
        for k in 0..=n {
            let mut c = BigRational::zero();
            for j in 0..=k {
                c += fact[j].recip() * &inv[k - j];
            }
            assert_eq!(c * &fact[k], bernoulli(k), "k = {k}");
        }
    }

    #[test]
    fn fresh_table_regenerates_cached_entries() {
        let t = BernoulliTable::new();
        let warm = t.prefix(40);
        let cold = BernoulliTable::new();
        for (k, b) in warm.iter().enumerate().rev() {
            assert_eq!(&cold.get(k), b);
        }
    }

    #[test]
    fn shared_across_threads() {
        let t = std::sync::Arc::new(BernoulliTable::new());
        let handles: Vec<_> = (0..4)
            .map(|i| {
                let t = t.clone();
                std::thread::spawn(move || t.get(10 + 7 * i))
            })
            .collect();
        for h in handles {
            h.join().unwrap();
        }
        assert_eq!(t.get(10), q(5, 66));
    }
}
