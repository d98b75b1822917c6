//! The Gamma function by three routes.
//!
//! `Γ(s) = ∫_0^∞ t^(s-1) e^(-t) dt` for `s > 0` is the classical
//! definition; integrating by parts gives `Γ(s+1) = s Γ(s)`, which drives
//! the exact values and the argument shifting below. The integral itself is
//! not evaluated. The numerical routes are Gauss's limit
//! `Γ_h(s) = h^s / (s (1+s)(1+s/2)...(1+s/h))` and the Weierstrass product
//! `1/Γ(s) = s e^(γs) ∏ (1+s/n) e^(-s/n)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive};

use crate::bernoulli::bernoulli;
use crate::error::{Error, Result};
use crate::numcore::{
    double_factorial, is_half_integer, is_integer, make_rational, pi_power_eval, ApproxReal, BigRational, BoundedValue,
    ErrorBound, PiPowerExact, Precision,
};

/// Product length the [`gamma`] dispatcher hands to the Weierstrass route.
pub const DISPATCH_WEIERSTRASS_TERMS: u64 = 100_000;

/// What kind of closed form, if any, an argument admits.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GammaClass {
    PositiveInteger,
    /// `k + 1/2` for an integer `k` (of either sign).
    HalfInteger,
    GenericReal,
}

/// A Gamma argument that is not a pole (zero or a negative integer).
#[derive(Clone, Debug)]
pub enum GammaArgument {
    Exact(BigRational),
    Real(ApproxReal),
}

impl GammaArgument {
    pub fn exact(s: BigRational) -> Result<Self> {
        if s.denom().is_one() && !s.is_positive() {
            return Err(pole_error(&s.to_string()));
        }
        Ok(GammaArgument::Exact(s))
    }

    /// Wraps a real; integers and half-integers are recognised and kept
    /// exact.
    pub fn real(s: ApproxReal) -> Result<Self> {
        let doubled = &s + &s;
        if doubled.distance_to_integer().is_zero() && doubled.to_f64().abs() < 1e15 {
            let twice = doubled.to_f64() as i64;
            return Self::exact(make_rational(twice, 2)?);
        }
        if !s.is_finite() {
            return Err(Error::domain("Gamma argument is not finite"));
        }
        Ok(GammaArgument::Real(s))
    }

    pub fn class(&self) -> GammaClass {
        match self {
            GammaArgument::Exact(r) if is_integer(r) => GammaClass::PositiveInteger,
            GammaArgument::Exact(r) if is_half_integer(r) => GammaClass::HalfInteger,
            _ => GammaClass::GenericReal,
        }
    }

    pub fn to_approx(&self, precision: Precision) -> ApproxReal {
        match self {
            GammaArgument::Exact(r) => ApproxReal::from_rational(r, precision),
            GammaArgument::Real(x) => x.with_precision(precision),
        }
    }
}

fn pole_error(at: &str) -> Error {
    Error::domain(format!("Gamma has a pole at s = {at}"))
}

/// Rejects zero and negative integers.
fn check_not_pole(s: &ApproxReal) -> Result<()> {
    if s.signum() <= 0 && s.distance_to_integer().is_zero() {
        return Err(pole_error(&s.to_decimal(15)));
    }
    Ok(())
}

/// Closed forms: `Γ(n) = (n-1)!`, `Γ(k + 1/2) = (2k-1)!! √π / 2^k` for
/// `k >= 0`, and `Γ(-1/2) = -2√π`.
pub fn gamma_exact(s: &GammaArgument) -> Result<PiPowerExact> {
    let GammaArgument::Exact(r) = s else {
        return Err(Error::domain("no closed form for a generic real argument"));
    };
    match s.class() {
        GammaClass::PositiveInteger => {
            let n = r.to_integer().to_u64().ok_or_else(|| Error::domain("argument too large"))?;
            let factorial: BigInt = (1..n).map(BigInt::from).product();
            Ok(PiPowerExact::rational(BigRational::from_integer(factorial)))
        }
        GammaClass::HalfInteger => {
            // s = k + 1/2, k = floor(s)
            let k = r.floor().to_integer().to_i64().ok_or_else(|| Error::domain("argument too large"))?;
            match k {
                -1 => Ok(PiPowerExact::new(make_rational(-2, 1)?, 0, true)),
                k if k >= 0 => {
                    let num = BigInt::from(double_factorial(2 * k - 1)?);
                    let den = BigInt::one() << k as usize;
                    Ok(PiPowerExact::new(BigRational::new(num, den), 0, true))
                }
                _ => Err(Error::domain(format!(
                    "exact Gamma values are only provided down to s = -1/2, got {r}"
                ))),
            }
        }
        GammaClass::GenericReal => Err(Error::domain("no closed form for a generic real argument")),
    }
}

fn guard(precision: Precision, terms: u64) -> Precision {
    precision.with_guard((64 - terms.leading_zeros()) as usize + 16)
}

/// Heuristic truncation error from values at `h`, `2h` and `4h`.
///
/// With `E(h) = C/h + D/h² + ...`, the first difference `d1 = G_h - G_2h`
/// carries `C/(2h)` and `d1 - 2 d2` isolates the `D` term, so
/// `2|d1| + 2|d1 - 2 d2|` covers both orders.
fn differencing_error(at_h: &ApproxReal, at_2h: &ApproxReal, at_4h: &ApproxReal) -> ErrorBound {
    let d1 = at_h - at_2h;
    let d2 = at_2h - at_4h;
    let curvature = (&d1 - &(&d2 + &d2)).abs().to_f64();
    ErrorBound::heuristic(2.0 * d1.abs().to_f64() + 2.0 * curvature)
}

/// Gauss's finite product `Γ_h(s)` for `s > 0`.
///
/// The error estimate comes from continuing the product to `2h` and `4h`;
/// see [`differencing_error`].
pub fn gamma_gauss(s: &ApproxReal, h: u64, precision: Precision) -> Result<BoundedValue> {
    if s.signum() <= 0 {
        return Err(Error::domain("Gauss product needs s > 0"));
    }
    if h == 0 {
        return Err(Error::domain("Gauss product needs h >= 1"));
    }
    let work = guard(precision, 4 * h);
    let s = s.with_precision(work);
    let one = ApproxReal::one(work);
    let gauss_at = |h: u64, denominator: &ApproxReal| {
        let h_pow_s = (&s * &ApproxReal::from_u64(h, work).ln()).exp();
        &h_pow_s / denominator
    };
    let mut denominator = s.clone();
    let mut checkpoints = Vec::with_capacity(3);
    for k in 1..=4 * h {
        let factor = &one + &(&s / &ApproxReal::from_u64(k, work));
        denominator = &denominator * &factor;
        if k == h || k == 2 * h || k == 4 * h {
            checkpoints.push(gauss_at(k, &denominator));
        }
    }
    let error = differencing_error(&checkpoints[0], &checkpoints[1], &checkpoints[2]);
    Ok(BoundedValue::new(checkpoints[0].with_precision(precision), error))
}

/// Which form of the limit `γ = lim (H_m - ln m)` to evaluate.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum EulerConstantMethod {
    /// `H_m - ln m` exactly as in the limit.
    #[default]
    Literal,
    /// `H_m - ln m - 1/(2m)`; the error drops from `O(1/m)` to `O(1/m²)`.
    Midpoint,
    /// Midpoint plus the Euler–Maclaurin terms `Σ B_2k / (2k m^2k)`,
    /// added until they fall below the working precision.
    EulerMaclaurin,
}

/// Euler's constant at a given truncation index.
#[derive(Clone, Debug)]
pub struct EulerGamma {
    pub value: ApproxReal,
    pub m_used: u64,
    pub method: EulerConstantMethod,
    /// `|value(m) - value(2m)|`, always heuristic.
    pub error: ErrorBound,
}

fn harmonic(m: u64, precision: Precision) -> ApproxReal {
    (1..=m)
        .rev()
        .fold(ApproxReal::zero(precision), |acc, k| &acc + &ApproxReal::from_u64(k, precision).recip())
}

fn euler_constant_value(m: u64, method: EulerConstantMethod, work: Precision) -> ApproxReal {
    let m_real = ApproxReal::from_u64(m, work);
    let mut value = &harmonic(m, work) - &m_real.ln();
    if method == EulerConstantMethod::Literal {
        return value;
    }
    value = &value - &(&m_real + &m_real).recip();
    if method == EulerConstantMethod::Midpoint {
        return value;
    }
    let cutoff = work.epsilon() / 4.0;
    let m_squared = &m_real * &m_real;
    let mut m_power = m_squared.clone();
    let mut previous = f64::INFINITY;
    for k in 1..=500u64 {
        let coefficient = bernoulli(2 * k as usize) / BigInt::from(2 * k);
        let term = &ApproxReal::from_rational(&coefficient, work) / &m_power;
        let size = term.to_f64().abs();
        // Asymptotic series: stop once terms are negligible or start growing.
        if size > previous {
            break;
        }
        value = &value + &term;
        if size < cutoff {
            break;
        }
        previous = size;
        m_power = &m_power * &m_squared;
    }
    value
}

/// `γ` from the harmonic-sum limit at index `m`.
pub fn euler_constant(
    m: u64,
    method: EulerConstantMethod,
    precision: Precision,
) -> Result<EulerGamma> {
    if m == 0 {
        return Err(Error::domain("euler_constant needs m >= 1"));
    }
    let work = guard(precision, 2 * m);
    let at_m = euler_constant_value(m, method, work);
    let at_2m = euler_constant_value(2 * m, method, work);
    let error = ErrorBound::heuristic((&at_m - &at_2m).abs().to_f64());
    Ok(EulerGamma { value: at_m.with_precision(precision), m_used: m, method, error })
}

/// γ accurate to the working precision, for the Weierstrass product.
fn euler_constant_full(precision: Precision) -> ApproxReal {
    let m = precision.bits().max(64) as u64;
    euler_constant_value(m, EulerConstantMethod::EulerMaclaurin, precision.with_guard(32))
        .with_precision(precision)
}

/// `Γ(s)` as the reciprocal of the truncated Weierstrass product
/// `s e^(γs) ∏_{n<=N} (1 + s/n) e^(-s/n)`.
///
/// The exponential factors are folded into one: `∏ e^(-s/n) = e^(-s H_N)`.
/// `γ` comes from the Euler–Maclaurin form of [`euler_constant`], so the
/// only truncation is in the product. The error estimate continues the
/// product to `2N` and `4N`, as for [`gamma_gauss`].
pub fn gamma_weierstrass(s: &ApproxReal, n_terms: u64, precision: Precision) -> Result<BoundedValue> {
    check_not_pole(s)?;
    if n_terms == 0 {
        return Err(Error::domain("Weierstrass product needs at least one factor"));
    }
    let work = guard(precision, 4 * n_terms);
    let s = s.with_precision(work);
    let gamma = euler_constant_full(work);
    let one = ApproxReal::one(work);
    let gamma_at = |product: &ApproxReal, harmonic: &ApproxReal| {
        let exponent = &s * &(&gamma - harmonic);
        (&(&s * &exponent.exp()) * product).recip()
    };
    let mut product = one.clone();
    let mut harmonic = ApproxReal::zero(work);
    let mut checkpoints = Vec::with_capacity(3);
    for n in 1..=4 * n_terms {
        let n_real = ApproxReal::from_u64(n, work);
        product = &product * &(&one + &(&s / &n_real));
        harmonic = &harmonic + &n_real.recip();
        if n == n_terms || n == 2 * n_terms || n == 4 * n_terms {
            checkpoints.push(gamma_at(&product, &harmonic));
        }
    }
    let error = differencing_error(&checkpoints[0], &checkpoints[1], &checkpoints[2]);
    Ok(BoundedValue::new(checkpoints[0].with_precision(precision), error))
}

/// `Γ(s)` by the best available route.
///
/// Positive integers and half-integers use closed forms (the error is then
/// the rounding budget of the conversion); half-integers below `-1/2` are
/// reached from `Γ(1/2)` with an exact rational recursion factor. Anything else is
/// shifted with `Γ(s+1) = s Γ(s)` into `[1/2, 3/2)`, evaluated with the
/// Weierstrass product, and shifted back; the shift factor is exact when
/// the argument is rational.
pub fn gamma(s: &GammaArgument, precision: Precision) -> Result<BoundedValue> {
    if let Some(exact) = gamma_closed_form(s) {
        let value = pi_power_eval(&exact, precision);
        let error = ErrorBound::rigorous(value.rounding_slack(4));
        return Ok(BoundedValue::new(value, error));
    }
    let work = precision.with_guard(32);
    let x = s.to_approx(work);
    check_not_pole(&x)?;
    let half = ApproxReal::from_f64(0.5, work);
    let three_halves = ApproxReal::from_f64(1.5, work);
    // Γ(s) = multiplier · Γ(base); multiplier is either ∏(s-i) or 1/∏(s+i).
    let shift = if x < half {
        ((&half - &x).to_f64().ceil()) as i64
    } else if x >= three_halves {
        -(((&x - &half).to_f64().floor()) as i64)
    } else {
        0
    };
    let (base, multiplier) = match s {
        GammaArgument::Exact(r) => {
            let factor = shift_factor_exact(r, shift);
            let base = ApproxReal::from_rational(&(r + BigRational::from_integer(shift.into())), work);
            (base, ApproxReal::from_rational(&factor, work))
        }
        GammaArgument::Real(_) => {
            let base = &x + &ApproxReal::from_i64(shift, work);
            (base, shift_factor_approx(&x, shift))
        }
    };
    let at_base = gamma_weierstrass(&base, DISPATCH_WEIERSTRASS_TERMS, work)?;
    let value = &at_base.value * &multiplier;
    let factor = multiplier.to_f64().abs();
    let error = at_base.error.scaled(factor).plus(ErrorBound::heuristic(value.rounding_slack(2 * shift.unsigned_abs() + 8)));
    Ok(BoundedValue::new(value.with_precision(precision), error))
}

/// The closed form of `Γ(s)` when there is one: [`gamma_exact`] extended to
/// every half-integer by the recursion.
pub fn gamma_closed_form(s: &GammaArgument) -> Option<PiPowerExact> {
    if let Ok(exact) = gamma_exact(s) {
        return Some(exact);
    }
    let GammaArgument::Exact(r) = s else { return None };
    if !is_half_integer(r) || !r.is_negative() {
        return None;
    }
    let half = BigRational::new(1.into(), 2.into());
    let shift = (&half - r).to_integer();
    let shift = i64::try_from(shift).ok()?;
    let base = gamma_exact(&GammaArgument::Exact(half)).ok()?;
    Some(base.scale(&shift_factor_exact(r, shift)))
}

/// Multiplier `M` with `Γ(s) = M · Γ(s + shift)`.
fn shift_factor_exact(s: &BigRational, shift: i64) -> BigRational {
    let mut factor = BigRational::one();
    if shift > 0 {
        for i in 0..shift {
            factor *= s + BigRational::from_integer(i.into());
        }
        factor = factor.recip();
    } else {
        for i in 1..=-shift {
            factor *= s - BigRational::from_integer(i.into());
        }
    }
    factor
}

fn shift_factor_approx(s: &ApproxReal, shift: i64) -> ApproxReal {
    let precision = s.precision();
    let mut factor = ApproxReal::one(precision);
    if shift > 0 {
        for i in 0..shift {
            factor = &factor * &(s + &ApproxReal::from_i64(i, precision));
        }
        factor.recip()
    } else {
        for i in 1..=-shift {
            factor = &factor * &(s - &ApproxReal::from_i64(i, precision));
        }
        factor
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numcore::parse_rational;

    fn p() -> Precision {
        Precision::new(128).unwrap()
    }

    fn exact(text: &str) -> GammaArgument {
        GammaArgument::exact(parse_rational(text).unwrap()).unwrap()
    }

    #[test]
    fn closed_forms() {
        assert_eq!(gamma_exact(&exact("5/2")).unwrap().to_string(), "3/4 * sqrt(pi)");
        assert_eq!(gamma_exact(&exact("7/2")).unwrap().to_string(), "15/8 * sqrt(pi)");
        assert_eq!(gamma_exact(&exact("3/2")).unwrap().to_string(), "1/2 * sqrt(pi)");
        assert_eq!(gamma_exact(&exact("1/2")).unwrap().to_string(), "1 * sqrt(pi)");
        assert_eq!(gamma_exact(&exact("5")).unwrap().to_string(), "24");
        assert_eq!(gamma_exact(&exact("1")).unwrap().to_string(), "1");
        assert_eq!(gamma_exact(&exact("-1/2")).unwrap().to_string(), "-2 * sqrt(pi)");
        assert!(gamma_exact(&exact("-3/2")).is_err());
        assert_eq!(gamma_closed_form(&exact("-3/2")).unwrap().to_string(), "4/3 * sqrt(pi)");
        assert_eq!(gamma_closed_form(&exact("-5/2")).unwrap().to_string(), "-8/15 * sqrt(pi)");
        assert!(gamma_exact(&exact("1/3")).is_err());
    }

    #[test]
    fn minus_half_agrees_with_the_recursion() {
        // Γ(1/2) = (-1/2) Γ(-1/2)
        let lhs = gamma_exact(&exact("1/2")).unwrap();
        let rhs = gamma_exact(&exact("-1/2")).unwrap().scale(&parse_rational("-1/2").unwrap());
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn poles_are_rejected() {
        for s in ["0", "-1", "-7"] {
            assert!(matches!(GammaArgument::exact(parse_rational(s).unwrap()), Err(Error::Domain(_))));
        }
        let zero = ApproxReal::zero(p());
        assert!(GammaArgument::real(zero.clone()).is_err());
        assert!(gamma_weierstrass(&zero, 10, p()).is_err());
        assert!(gamma_weierstrass(&ApproxReal::from_i64(-3, p()), 10, p()).is_err());
        assert!(gamma_gauss(&ApproxReal::from_f64(-0.5, p()), 10, p()).is_err());
    }

    #[test]
    fn real_arguments_are_classified() {
        let s = GammaArgument::real(ApproxReal::from_f64(2.5, p())).unwrap();
        assert_eq!(s.class(), GammaClass::HalfInteger);
        let s = GammaArgument::real(ApproxReal::from_f64(4.0, p())).unwrap();
        assert_eq!(s.class(), GammaClass::PositiveInteger);
        let s = GammaArgument::real(ApproxReal::pi(p())).unwrap();
        assert_eq!(s.class(), GammaClass::GenericReal);
    }

    #[test]
    fn gauss_finite_value() {
        // Γ_4(1) = 4! · 4 / (1·2·3·4·5) = 4/5
        let g = gamma_gauss(&ApproxReal::one(p()), 4, p()).unwrap();
        assert!((g.value.to_f64() - 0.8).abs() < 1e-30);
    }

    #[test]
    fn euler_constant_small_m() {
        let g1 = euler_constant(1, EulerConstantMethod::Literal, p()).unwrap();
        assert_eq!(g1.value.to_f64(), 1.0);
        let g2 = euler_constant(2, EulerConstantMethod::Literal, p()).unwrap();
        assert!((g2.value.to_f64() - (1.5 - 2f64.ln())).abs() < 1e-15);
        assert!(euler_constant(0, EulerConstantMethod::Literal, p()).is_err());
    }

    #[test]
    fn euler_maclaurin_reaches_working_precision() {
        // 0.57721566490153286060651209008240243104215933593992...
        let g = euler_constant_full(Precision::new(192).unwrap());
        assert_eq!(g.to_decimal(50), "0.57721566490153286060651209008240243104215933593992");
    }

    #[test]
    fn dispatcher_examples() {
        let four = gamma(&exact("4"), p()).unwrap();
        assert_eq!(four.value.to_f64(), 6.0);
        let three_halves = gamma(&exact("3/2"), p()).unwrap();
        assert_eq!(three_halves.value.to_decimal(9), "0.886226925");
        assert!(GammaArgument::exact(parse_rational("0").unwrap()).is_err());
    }
}
