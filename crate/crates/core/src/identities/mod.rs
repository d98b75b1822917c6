//! Numerical checks of the classical identities around `ζ(2n)` and `Γ`.
//!
//! Three independent expansions of `z cot z`:
//!
//! * the Taylor series `1 + Σ (-4)^n B_2n z^2n / (2n)!`,
//! * the partial fractions `1 - 2 Σ_j z² / (j²π² - z²)`,
//! * the zeta series `1 - 2 Σ ζ(2n) (z/π)^2n`,
//!
//! which, compared term by term, give the closed form for `ζ(2n)`. Direct
//! `z cos z / sin z` at working precision is the reference for all three.
//! Also here: the iterated cotangent halving formula, the sine product
//! and both Gamma reflection formulae.

mod suite;

use std::collections::BTreeMap;

use num_bigint::BigInt;

use crate::bernoulli::bernoulli;
use crate::error::{Error, Result};
use crate::gamma::{gamma, GammaArgument};
use crate::numcore::{is_integer, pi_power_eval, ApproxReal, BigRational, ErrorBound, Precision};
use crate::zeta::zeta_even_exact;

pub use suite::{
    parse_grid, run_identity_suite, threshold_for, GridPoint, GridSpec, Identity, ResidualRecord,
    ResidualReport, SuiteConfig, Verdict, THRESHOLDS,
};

/// Closeness to a pole, relative to π, below which evaluators refuse.
fn pole_tolerance(precision: Precision) -> ApproxReal {
    ApproxReal::from_f64(2f64.powi(-(precision.bits() as i32) / 2), precision)
}

/// True when `x / unit` is within the pole tolerance of an integer.
fn near_multiple(x: &ApproxReal, unit: &ApproxReal) -> bool {
    (x / unit).distance_to_integer() < pole_tolerance(x.precision())
}

/// `z cot z` by direct trigonometry; 1 at `z = 0`.
pub fn zcot_direct(z: &ApproxReal) -> ApproxReal {
    if z.is_zero() {
        return ApproxReal::one(z.precision());
    }
    &(z * &z.cos()) / &z.sin()
}

fn check_series_radius(z: &ApproxReal) -> Result<()> {
    if z.abs() >= ApproxReal::pi(z.precision()) {
        return Err(Error::domain(format!(
            "power series for z cot z needs |z| < pi, got z = {}",
            z.to_decimal(15)
        )));
    }
    Ok(())
}

/// Coefficient of `z^2n` in the Taylor series: `(-4)^n B_2n / (2n)!`.
pub fn zcot_bernoulli_coefficient(n: u32) -> BigRational {
    let factorial: BigInt = (1..=u64::from(2 * n)).map(BigInt::from).product();
    let four_pow = BigInt::from(4).pow(n);
    let signed = if n.is_multiple_of(2) { four_pow } else { -four_pow };
    bernoulli(2 * n as usize) * BigRational::new(signed, factorial)
}

/// Coefficient of `z^2n` in the zeta series: `-2 ζ(2n) / π^2n`, exact
/// because `ζ(2n)` is a rational multiple of `π^2n`.
pub fn zcot_zeta_coefficient(n: u32) -> Result<BigRational> {
    let reduced = zeta_even_exact(n)?.div_pi_power(2 * n)?;
    debug_assert!(reduced.pi_exponent() == 0 && !reduced.has_sqrt_pi());
    Ok(reduced.coefficient() * BigRational::from_integer((-2).into()))
}

/// Taylor series of `z cot z` through `z^(2 n_terms)`.
pub fn zcot_bernoulli(z: &ApproxReal, n_terms: u32, precision: Precision) -> Result<ApproxReal> {
    let z = z.with_precision(precision);
    check_series_radius(&z)?;
    let work = precision.with_guard(32);
    let z_squared = &z.with_precision(work) * &z.with_precision(work);
    let mut power = ApproxReal::one(work);
    let mut acc = ApproxReal::one(work);
    for n in 1..=n_terms {
        power = &power * &z_squared;
        let c = ApproxReal::from_rational(&zcot_bernoulli_coefficient(n), work);
        acc = &acc + &(&c * &power);
    }
    Ok(acc.with_precision(precision))
}

/// `1 - 2 Σ_{n<=n_terms} ζ(2n) (z/π)^2n` with `ζ(2n)` evaluated from its
/// exact form.
pub fn zcot_zeta_series(z: &ApproxReal, n_terms: u32, precision: Precision) -> Result<ApproxReal> {
    let z = z.with_precision(precision);
    check_series_radius(&z)?;
    let work = precision.with_guard(32);
    let ratio = &z.with_precision(work) / &ApproxReal::pi(work);
    let ratio_squared = &ratio * &ratio;
    let two = ApproxReal::from_u64(2, work);
    let mut power = ApproxReal::one(work);
    let mut acc = ApproxReal::one(work);
    for n in 1..=n_terms {
        power = &power * &ratio_squared;
        let zeta = pi_power_eval(&zeta_even_exact(n)?, work);
        acc = &acc - &(&two * &(&zeta * &power));
    }
    Ok(acc.with_precision(precision))
}

/// Geometric tail bound shared by both power series:
/// `Σ_{n>N} 2 ζ(2n) r^2n <= 2 ζ(2N+2) r^(2N+2) / (1 - r²)` with `r = |z|/π`,
/// since `ζ` decreases along the even integers.
pub fn zcot_series_tail_bound(z: f64, n_terms: u32) -> ErrorBound {
    let r = z.abs() / std::f64::consts::PI;
    if r >= 1.0 {
        return ErrorBound::rigorous(f64::INFINITY);
    }
    let k = 2.0 * f64::from(n_terms) + 2.0;
    // ζ(k) <= 1 + 2^-k + 2^(1-k)/(k-1)
    let zeta_k = 1.0 + 2f64.powf(-k) + 2f64.powf(1.0 - k) / (k - 1.0);
    ErrorBound::rigorous((2.0 * zeta_k * r.powf(k) / (1.0 - r * r)).next_up())
}

/// `1 - 2 Σ_{j<=n_terms} z² / (j²π² - z²)`.
pub fn zcot_partial_fraction(z: &ApproxReal, n_terms: u64, precision: Precision) -> Result<ApproxReal> {
    let work = precision.with_guard(32);
    let z = z.with_precision(work);
    let pi = ApproxReal::pi(work);
    if !z.is_zero() && near_multiple(&z, &pi) {
        return Err(Error::domain(format!(
            "z cot z has a pole at z = {} (a nonzero multiple of pi)",
            z.to_decimal(15)
        )));
    }
    let z_squared = &z * &z;
    let pi_squared = &pi * &pi;
    let mut sum = ApproxReal::zero(work);
    for j in (1..=n_terms).rev() {
        let j_squared = ApproxReal::from_u64(j, work).powi(2);
        sum = &sum + &(&z_squared / &(&(&j_squared * &pi_squared) - &z_squared));
    }
    let two = ApproxReal::from_u64(2, work);
    Ok((&ApproxReal::one(work) - &(&two * &sum)).with_precision(precision))
}

/// `2 Σ_{j>N} r²/(j² - r²) <= 2 r² / ((1 - (r/(N+1))²) N)` for `N+1 > r`,
/// `r = |z|/π`, from `Σ_{j>N} 1/j² <= 1/N`.
pub fn partial_fraction_tail_bound(z: f64, n_terms: u64) -> ErrorBound {
    let r = z.abs() / std::f64::consts::PI;
    let n = n_terms as f64;
    if n + 1.0 <= r || n_terms == 0 {
        return ErrorBound::rigorous(f64::INFINITY);
    }
    let q = r / (n + 1.0);
    ErrorBound::rigorous((2.0 * r * r / ((1.0 - q * q) * n)).next_up())
}

fn cot_checked(x: &ApproxReal, pi: &ApproxReal, label: &str) -> Result<ApproxReal> {
    if near_multiple(x, pi) {
        return Err(Error::domain(format!("pole in {label}")));
    }
    Ok(x.cot())
}

/// Compares `cot z` with the level-`n` halving formula
/// `cot z = 2^-n [cot(z/2^n) - tan(z/2^n) + Σ_{j=1}^{2^(n-1)-1} (cot((z+jπ)/2^n) + cot((z-jπ)/2^n))]`.
///
/// The formula is iterated from `2 cot 2z = cot z + cot(z + π/2)`; `z` must
/// keep every term of that relation finite too, which rules out all
/// multiples of `π/2`.
pub fn cot_halving_check(z: &ApproxReal, n: u32, precision: Precision) -> Result<ResidualReport> {
    if n == 0 || n > 20 {
        return Err(Error::domain("halving level must be in 1..=20"));
    }
    let work = precision.with_guard(32);
    let z = z.with_precision(work);
    let pi = ApproxReal::pi(work);
    let half_pi = &pi / &ApproxReal::from_u64(2, work);
    if near_multiple(&z, &pi) {
        return Err(Error::domain(format!("cot(z) has a pole at z = {}", z.to_decimal(15))));
    }
    if near_multiple(&z, &half_pi) {
        return Err(Error::domain(format!(
            "cot(2z) and cot(z + pi/2) in the doubling relation have poles at z = {}",
            z.to_decimal(15)
        )));
    }
    let scale = ApproxReal::from_u64(1u64 << n, work);
    let base = &z / &scale;
    let tan_base = base.tan();
    let mut sum = &cot_checked(&base, &pi, "cot(z/2^n)")? - &tan_base;
    for j in 1..(1u64 << (n - 1)) {
        let shift = &ApproxReal::from_u64(j, work) * &pi;
        sum = &sum + &cot_checked(&(&(&z + &shift) / &scale), &pi, "cot((z + j pi)/2^n)")?;
        sum = &sum + &cot_checked(&(&(&z - &shift) / &scale), &pi, "cot((z - j pi)/2^n)")?;
    }
    let rhs = &sum / &scale;
    let lhs = z.cot();
    let terms = 2 * (1u64 << n);
    let rounding = ErrorBound::rigorous(max_abs(&lhs, &rhs) * terms as f64 * work.epsilon() * 8.0);
    let params = BTreeMap::from([("levels".to_string(), u64::from(n))]);
    Ok(ResidualReport::evaluated(
        Identity::CotHalving,
        z.to_decimal(20),
        lhs.with_precision(precision),
        rhs.with_precision(precision),
        params,
        rounding,
    ))
}

/// `π s ∏_{n<=n_terms} (1 - s²/n²)`.
pub fn sine_product(s: &ApproxReal, n_terms: u64, precision: Precision) -> ApproxReal {
    let work = precision.with_guard(32);
    let s = s.with_precision(work);
    let mut acc = &ApproxReal::pi(work) * &s;
    for n in 1..=n_terms {
        if acc.is_zero() {
            break;
        }
        let n_real = ApproxReal::from_u64(n, work);
        let factor = &(&(&n_real - &s) * &(&n_real + &s)) / &(&n_real * &n_real);
        acc = &acc * &factor;
    }
    acc.with_precision(precision)
}

/// `|sin πs - P_N| <= |P_N| A`, `A = (s²/N) / (1 - s²/(N+1)²)`, valid for
/// `N + 1 > |s|`: the omitted factors multiply to `e^(-a)` with `0 <= a <= A`.
pub fn sine_product_tail_bound(s: f64, n_terms: u64, truncated: f64) -> ErrorBound {
    let n = n_terms as f64;
    if n_terms == 0 || n + 1.0 <= s.abs() {
        return ErrorBound::rigorous(f64::INFINITY);
    }
    let s2 = s * s;
    let a = (s2 / n) / (1.0 - s2 / ((n + 1.0) * (n + 1.0)));
    ErrorBound::rigorous((truncated.abs() * a).next_up())
}

fn gamma_pair_product(
    a: &GammaArgument,
    b: &GammaArgument,
    precision: Precision,
) -> Result<(ApproxReal, ErrorBound)> {
    let ga = gamma(a, precision)?;
    let gb = gamma(b, precision)?;
    let lhs = (&ga.value * &gb.value).recip();
    let relative = ga.error.bound / ga.value.to_f64().abs() + gb.error.bound / gb.value.to_f64().abs();
    let error = ErrorBound::new(lhs.to_f64().abs() * relative, ga.error.plus(gb.error).kind);
    Ok((lhs, error))
}

fn shifted(s: &GammaArgument, offset: i64, negate: bool) -> Result<GammaArgument> {
    match s {
        GammaArgument::Exact(r) => {
            let base = if negate { -r.clone() } else { r.clone() };
            GammaArgument::exact(base + BigRational::from_integer(offset.into()))
        }
        GammaArgument::Real(x) => {
            let base = if negate { -x } else { x.clone() };
            GammaArgument::real(&base + &ApproxReal::from_i64(offset, x.precision()))
        }
    }
}

fn reject_integer(s: &GammaArgument, precision: Precision, what: &str) -> Result<ApproxReal> {
    let x = s.to_approx(precision);
    let is_integer = match s {
        GammaArgument::Exact(r) => is_integer(r),
        GammaArgument::Real(_) => x.distance_to_integer().is_zero(),
    };
    if is_integer {
        return Err(Error::domain(format!("{what} is undefined at integer s = {}", x.to_decimal(15))));
    }
    Ok(x)
}

/// `1/(Γ(s) Γ(1-s))` against `sin(πs)/π`.
pub fn reflection_check(s: &GammaArgument, precision: Precision) -> Result<ResidualReport> {
    let x = reject_integer(s, precision, "the reflection formula")?;
    let (lhs, budget) = gamma_pair_product(s, &shifted(s, 1, true)?, precision)?;
    let pi = ApproxReal::pi(precision);
    let rhs = &(&pi * &x).sin() / &pi;
    let budget = budget.plus(ErrorBound::rigorous(rhs.rounding_slack(16)));
    let params = BTreeMap::from([("weierstrass_terms".to_string(), crate::gamma::DISPATCH_WEIERSTRASS_TERMS)]);
    Ok(ResidualReport::evaluated(Identity::Reflection, x.to_decimal(20), lhs, rhs, params, budget))
}

/// `1/(Γ(s) Γ(-s))` against `-s sin(πs)/π`.
pub fn reflection_neg_check(s: &GammaArgument, precision: Precision) -> Result<ResidualReport> {
    let x = reject_integer(s, precision, "the negative reflection formula")?;
    let (lhs, budget) = gamma_pair_product(s, &shifted(s, 0, true)?, precision)?;
    let pi = ApproxReal::pi(precision);
    let rhs = -(&(&x * &(&pi * &x).sin()) / &pi);
    let budget = budget.plus(ErrorBound::rigorous(rhs.rounding_slack(16)));
    let params = BTreeMap::from([("weierstrass_terms".to_string(), crate::gamma::DISPATCH_WEIERSTRASS_TERMS)]);
    Ok(ResidualReport::evaluated(Identity::ReflectionNeg, x.to_decimal(20), lhs, rhs, params, budget))
}

fn max_abs(a: &ApproxReal, b: &ApproxReal) -> f64 {
    a.to_f64().abs().max(b.to_f64().abs())
}

#[cfg(test)]
mod tests;
