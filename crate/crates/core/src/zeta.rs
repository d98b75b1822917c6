//! The Riemann zeta function for `Re(s) > 1`.
//!
//! Three routes: the exact closed form at even integers (through the
//! Bernoulli numbers), the truncated Dirichlet series `Σ_{n<=N} n^-s` with
//! an integral-test tail bound, and the truncated Euler product over the
//! primes.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed};

use crate::bernoulli::bernoulli;
use crate::error::{Error, Result};
use crate::numcore::{
    sieve_primes, ApproxReal, BigRational, BoundedValue, Complex, ErrorBound, PiPowerExact,
    Precision, PrimeList,
};

/// Default tolerance for [`product_convergence_check`].
pub const CONVERGENCE_EPSILON: f64 = 1e-6;

/// A point `s` with `Re(s) > 1`.
#[derive(Clone, Debug)]
pub struct ZetaArgument {
    s: Complex,
}

impl ZetaArgument {
    pub fn new(s: Complex) -> Result<Self> {
        let one = ApproxReal::one(s.precision());
        if s.re.partial_cmp(&one) != Some(Ordering::Greater) {
            return Err(Error::domain(format!(
                "zeta series and product need Re(s) > 1, got Re(s) = {}",
                s.re.to_decimal(15)
            )));
        }
        Ok(ZetaArgument { s })
    }

    pub fn real(s: ApproxReal) -> Result<Self> {
        Self::new(Complex::from_real(s))
    }

    pub fn from_f64(re: f64, im: f64, precision: Precision) -> Result<Self> {
        Self::new(Complex::new(
            ApproxReal::from_f64(re, precision),
            ApproxReal::from_f64(im, precision),
        ))
    }

    pub fn s(&self) -> &Complex {
        &self.s
    }

    pub fn re(&self) -> &ApproxReal {
        &self.s.re
    }

    fn at(&self, precision: Precision) -> Complex {
        Complex::new(self.s.re.with_precision(precision), self.s.im.with_precision(precision))
    }
}

/// Exact `ζ(2n) = (-1)^(n-1) (2π)^(2n) B_2n / (2 (2n)!)`.
pub fn zeta_even_exact(n: u32) -> Result<PiPowerExact> {
    if n == 0 {
        return Err(Error::domain("zeta_even_exact needs n >= 1 (zeta(0) is not covered)"));
    }
    let two_n = 2 * n;
    let factorial: BigInt = (1..=u64::from(two_n)).map(BigInt::from).product();
    let power_of_two = BigInt::one() << two_n as usize;
    let coefficient = BigRational::new(power_of_two, factorial * 2) * bernoulli(two_n as usize);
    let coefficient = if n.is_multiple_of(2) { -coefficient } else { coefficient };
    debug_assert!(coefficient.is_positive());
    Ok(PiPowerExact::new(coefficient, two_n, false))
}

/// Integral-test bound `Σ_{n>N} n^-σ <= N^(1-σ) / (σ-1)`.
pub fn zeta_tail_bound(s_real: &ApproxReal, n: u64) -> Result<ErrorBound> {
    let precision = s_real.precision();
    let one = ApproxReal::one(precision);
    if s_real.partial_cmp(&one) != Some(Ordering::Greater) {
        return Err(Error::domain("tail bound needs s > 1"));
    }
    if n == 0 {
        return Err(Error::domain("tail bound needs N >= 1"));
    }
    let sigma_minus_one = s_real - &one;
    let n_pow = ApproxReal::from_u64(n, precision).pow(&(-&sigma_minus_one));
    Ok(ErrorBound::rigorous_from(&(&n_pow / &sigma_minus_one)))
}

fn guard_bits(count: u64) -> usize {
    (64 - count.leading_zeros()) as usize + 16
}

/// `Σ_{n=1}^{terms} n^-s` with a rigorous tail bound.
///
/// Terms are accumulated smallest first at extra precision, then rounded
/// once to `precision`.
pub fn zeta_dirichlet(
    s: &ZetaArgument,
    terms: u64,
    precision: Precision,
) -> Result<BoundedValue<Complex>> {
    if terms == 0 {
        return Err(Error::domain("zeta_dirichlet needs at least one term"));
    }
    let work = precision.with_guard(guard_bits(terms));
    let s_work = s.at(work);
    let mut acc = Complex::from_real(ApproxReal::zero(work));
    for n in (1..=terms).rev() {
        acc = acc.add(&Complex::integer_pow_neg(n, &s_work));
    }
    let value = Complex::new(acc.re.with_precision(precision), acc.im.with_precision(precision));
    let error = zeta_tail_bound(s.re(), terms)?;
    Ok(BoundedValue::new(value, error))
}

/// How [`zeta_euler_product`] reports its truncation error.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EulerProductMode {
    /// `|P(L) - P(L/2)|`: the change since the previous checkpoint.
    #[default]
    Heuristic,
    /// `|P| (e^B - 1)` with `B = T / (1 - (L+1)^-σ)` and `T` the zeta tail
    /// bound at `σ = Re(s)` over the integers above `L`. This bounds the
    /// logarithm of the omitted product.
    Rigorous,
}

/// `∏_{p <= prime_limit} (1 - p^-s)^-1`.
pub fn zeta_euler_product(
    s: &ZetaArgument,
    prime_limit: u64,
    mode: EulerProductMode,
    precision: Precision,
) -> Result<BoundedValue<Complex>> {
    if prime_limit == 0 {
        return Err(Error::domain("prime_limit must be positive"));
    }
    let primes = sieve_primes(prime_limit);
    let work = precision.with_guard(guard_bits(primes.len() as u64 + 1));
    let s_work = s.at(work);
    let one = Complex::from_real(ApproxReal::one(work));
    let checkpoint = prime_limit / 2;
    let mut product = one.clone();
    let mut at_checkpoint = one.clone();
    for p in primes.iter() {
        let factor = one.sub(&Complex::integer_pow_neg(p, &s_work)).recip();
        product = product.mul(&factor);
        if p <= checkpoint {
            at_checkpoint = product.clone();
        }
    }
    let error = match mode {
        EulerProductMode::Heuristic => {
            ErrorBound::heuristic(product.sub(&at_checkpoint).abs().to_f64())
        }
        EulerProductMode::Rigorous => {
            let sigma = s.re().with_precision(work);
            let tail = ApproxReal::from_f64(zeta_tail_bound(&sigma, prime_limit)?.bound, work);
            let next = ApproxReal::from_u64(prime_limit + 1, work).pow(&(-&sigma));
            let log_bound = &tail / &(&ApproxReal::one(work) - &next);
            let relative = &log_bound.exp() - &ApproxReal::one(work);
            ErrorBound::rigorous_from(&(&product.abs() * &relative))
        }
    };
    let value =
        Complex::new(product.re.with_precision(precision), product.im.with_precision(precision));
    Ok(BoundedValue::new(value, error))
}

/// `|p^-s| = p^-σ` for each prime, as `f64`: the `|a_n|` of the factors
/// `1 + a_n` whose absolute summability makes the product converge.
pub fn euler_factor_magnitudes(s: &ZetaArgument, primes: &PrimeList) -> Vec<f64> {
    let sigma = s.re().to_f64();
    primes.iter().map(|p| (p as f64).powf(-sigma)).collect()
}

/// Runtime sanity check for a truncated product `∏ (1 + a_n)`: true when
/// the partial sums of `|a_n|` grow by less than `epsilon` across the last
/// quarter of the supplied terms (at least the last one).
pub fn product_convergence_check(terms: &[f64], epsilon: f64) -> Result<bool> {
    if terms.is_empty() {
        return Err(Error::domain("product_convergence_check needs at least one term"));
    }
    let quarter = (terms.len() / 4).max(1);
    let growth: f64 = terms[terms.len() - quarter..].iter().map(|a| a.abs()).sum();
    Ok(growth < epsilon)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numcore::make_rational;

    fn p() -> Precision {
        Precision::new(128).unwrap()
    }

    fn real(s: f64) -> ZetaArgument {
        ZetaArgument::from_f64(s, 0.0, p()).unwrap()
    }

    #[test]
    fn exact_even_values() {
        let expect = [(1, 6), (2, 90), (3, 945), (4, 9450)];
        for (n, den) in expect {
            let z = zeta_even_exact(n).unwrap();
            assert_eq!(z, PiPowerExact::new(make_rational(1, den).unwrap(), 2 * n, false));
        }
        assert!(matches!(zeta_even_exact(0), Err(Error::Domain(_))));
    }

    #[test]
    fn tail_bound_examples() {
        let b = |s: f64, n| zeta_tail_bound(&ApproxReal::from_f64(s, p()), n).unwrap().bound;
        assert!((b(2.0, 10) - 0.1).abs() < 1e-16);
        assert!((b(4.0, 1) - 1.0 / 3.0).abs() < 1e-16);
        assert!((b(2.0, 1000) - 0.001).abs() < 1e-18);
        assert!(b(2.0, 10) >= 0.1);
        assert!(zeta_tail_bound(&ApproxReal::from_f64(1.0, p()), 5).is_err());
    }

    #[test]
    fn dirichlet_small_cases() {
        let one_term = zeta_dirichlet(&real(4.0), 1, p()).unwrap();
        assert_eq!(one_term.value.re.to_f64(), 1.0);
        assert!((one_term.error.bound - 1.0 / 3.0).abs() < 1e-15);
        assert!(zeta_dirichlet(&real(4.0), 0, p()).is_err());
        // 1 + 1/4 + ... + 1/100
        let ten = zeta_dirichlet(&real(2.0), 10, p()).unwrap();
        assert!((ten.value.re.to_f64() - 1.549_767_731_166_540_7).abs() < 1e-15);
    }

    #[test]
    fn domain_guard() {
        assert!(ZetaArgument::from_f64(1.0, 0.0, p()).is_err());
        assert!(ZetaArgument::from_f64(0.5, 3.0, p()).is_err());
        assert!(ZetaArgument::from_f64(1.0 + 1e-9, 0.0, p()).is_ok());
    }

    #[test]
    fn euler_product_single_factor() {
        let v = zeta_euler_product(&real(2.0), 2, EulerProductMode::Heuristic, p()).unwrap();
        assert_eq!(v.value.re.to_decimal(10), "1.333333333");
        assert!(zeta_euler_product(&real(2.0), 0, EulerProductMode::Heuristic, p()).is_err());
    }

    #[test]
    fn complex_series_and_product_agree() {
        let s = ZetaArgument::from_f64(3.0, 2.0, p()).unwrap();
        let series = zeta_dirichlet(&s, 2000, p()).unwrap();
        let product = zeta_euler_product(&s, 2000, EulerProductMode::Rigorous, p()).unwrap();
        let gap = series.value.sub(&product.value).abs().to_f64();
        assert!(gap <= series.error.bound + product.error.bound, "gap {gap}");
        assert!(!series.value.is_real());
    }

    #[test]
    fn convergence_check() {
        let geometric: Vec<f64> = (1..=64).map(|n| 2f64.powi(-n)).collect();
        assert!(product_convergence_check(&geometric, CONVERGENCE_EPSILON).unwrap());
        let harmonic: Vec<f64> = (1..=64).map(|n| 1.0 / n as f64).collect();
        assert!(!product_convergence_check(&harmonic, CONVERGENCE_EPSILON).unwrap());
        assert!(product_convergence_check(&[0.0], CONVERGENCE_EPSILON).unwrap());
        assert!(product_convergence_check(&[], CONVERGENCE_EPSILON).is_err());
    }
}
