//! Exact Bernoulli numbers `B_n`, the coefficients of `x / (e^x - 1)`,
//! generated by the recursion `Σ_{j<k} C(k, j) B_j = 0` with `B_0 = 1`.
//!
//! The convention is `B_1 = -1/2`. Odd-indexed values beyond `B_1` come
//! out of the recursion as zero; they are computed, not assumed.

use std::sync::{Mutex, OnceLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::numcore::BigRational;

/// `B_0 ..= B_n_max`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BernoulliTable {
    values: Vec<BigRational>,
}

impl BernoulliTable {
    pub fn values(&self) -> &[BigRational] {
        &self.values
    }

    pub fn get(&self, n: usize) -> Option<&BigRational> {
        self.values.get(n)
    }

    pub fn n_max(&self) -> usize {
        self.values.len() - 1
    }

    /// `Σ_{j=0}^{k-1} C(k, j) B_j`, which the recursion forces to zero
    /// for every `k >= 2`. Needs `k - 1 <= n_max`.
    pub fn recursion_residual(&self, k: usize) -> Option<BigRational> {
        if k == 0 || k - 1 > self.n_max() {
            return None;
        }
        let row = binomial_row(k as u64);
        let sum = self.values[..k]
            .iter()
            .zip(&row)
            .fold(BigRational::zero(), |acc, (b, c)| acc + b * BigRational::from_integer(c.clone()));
        Some(sum)
    }
}

static CACHE: OnceLock<Mutex<Vec<BigRational>>> = OnceLock::new();

fn with_cache<R>(n: usize, f: impl FnOnce(&[BigRational]) -> R) -> R {
    let cache = CACHE.get_or_init(|| Mutex::new(Vec::new()));
    // A panic while extending leaves a valid (shorter) prefix behind.
    let mut values = cache.lock().unwrap_or_else(|e| e.into_inner());
    while values.len() <= n {
        let next = next_bernoulli(&values);
        values.push(next);
    }
    f(&values[..=n])
}

/// `B_n` given `B_0 ..= B_{n-1}`:
/// `B_n = -1/(n+1) · Σ_{j=0}^{n-1} C(n+1, j) B_j`.
fn next_bernoulli(previous: &[BigRational]) -> BigRational {
    let n = previous.len();
    if n == 0 {
        return BigRational::one();
    }
    let row = binomial_row(n as u64 + 1);
    // Put the sum over the lcm of the denominators so only one reduction
    // happens per new value.
    let common = previous
        .iter()
        .filter(|b| !b.is_zero())
        .fold(BigInt::one(), |acc, b| acc.lcm(b.denom()));
    let numerator = previous
        .iter()
        .zip(&row)
        .filter(|(b, _)| !b.is_zero())
        .fold(BigInt::zero(), |acc, (b, c)| acc + c * b.numer() * (&common / b.denom()));
    BigRational::new(-numerator, common * BigInt::from(n + 1))
}

/// `C(m, 0), C(m, 1), ..., C(m, m)` by the multiplicative formula.
fn binomial_row(m: u64) -> Vec<BigInt> {
    let mut row = Vec::with_capacity(m as usize + 1);
    let mut c = BigInt::one();
    row.push(c.clone());
    for j in 0..m {
        c = c * BigInt::from(m - j) / BigInt::from(j + 1);
        row.push(c.clone());
    }
    row
}

/// Binomial coefficient `C(n, k)`, zero for `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    (0..k).fold(BigInt::one(), |acc, j| acc * BigInt::from(n - j) / BigInt::from(j + 1))
}

/// Exact `B_n`. Computing it makes every `B_m`, `m <= n`, available
/// without further work.
pub fn bernoulli(n: usize) -> BigRational {
    with_cache(n, |values| values[n].clone())
}

pub fn bernoulli_table(n_max: usize) -> BernoulliTable {
    with_cache(n_max, |values| BernoulliTable { values: values.to_vec() })
}
