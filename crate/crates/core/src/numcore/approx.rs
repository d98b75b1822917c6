use std::cell::RefCell;
use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use astro_float::{BigFloat, Consts, Radix, RoundingMode, Sign, Word};
use num_bigint::{BigInt, Sign as IntSign};

use super::rational::BigRational;
use crate::error::{Error, Result};

/// Smallest accepted working precision, in bits.
pub const MIN_PRECISION: usize = 32;
/// Working precision used when the caller does not choose one, in bits.
pub const DEFAULT_PRECISION: usize = 128;

const RM: RoundingMode = RoundingMode::ToEven;
const WORD_BITS: usize = Word::BITS as usize;

thread_local! {
    static CONSTS: RefCell<Consts> =
        RefCell::new(Consts::new().expect("constant cache allocation"));
}

fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|cc| f(&mut cc.borrow_mut()))
}

/// Working precision: number of binary significand digits.
///
/// The backend stores significands in whole 64-bit words, so the
/// precision actually carried is the requested one rounded up to a
/// multiple of 64. All error statements use the requested value, which is
/// the weaker claim.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Precision(usize);

impl Precision {
    pub fn new(bits: usize) -> Result<Self> {
        if bits < MIN_PRECISION {
            return Err(Error::Precision { requested: bits, minimum: MIN_PRECISION });
        }
        Ok(Precision(bits))
    }

    pub fn bits(self) -> usize {
        self.0
    }

    /// Decimal digits fully determined by this many bits.
    pub fn decimal_digits(self) -> usize {
        (self.0 as f64 * std::f64::consts::LOG10_2).floor() as usize
    }

    /// `2^(1-p)`, the relative spacing of representable values.
    pub fn epsilon(self) -> f64 {
        2f64.powi(1 - self.0 as i32)
    }

    /// The same precision widened by `bits` guard bits.
    pub fn with_guard(self, bits: usize) -> Precision {
        Precision(self.0 + bits)
    }
}

impl Default for Precision {
    fn default() -> Self {
        Precision(DEFAULT_PRECISION)
    }
}

impl fmt::Display for Precision {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} bits", self.0)
    }
}

/// Arbitrary-precision binary floating-point real tagged with the
/// precision it was computed at.
///
/// Rounding contract: every arithmetic operation and elementary function
/// rounds to nearest at the working precision, contributing at most one
/// unit in the last place. Binary operations run at the larger of the two
/// operand precisions.
#[derive(Clone, Debug)]
pub struct ApproxReal {
    value: BigFloat,
    precision: Precision,
}

impl ApproxReal {
    fn wrap(value: BigFloat, precision: Precision) -> Self {
        ApproxReal { value, precision }
    }

    fn p(&self) -> usize {
        self.precision.0
    }

    pub fn zero(precision: Precision) -> Self {
        Self::wrap(BigFloat::new(precision.0), precision)
    }

    pub fn one(precision: Precision) -> Self {
        Self::from_u64(1, precision)
    }

    pub fn from_u64(v: u64, precision: Precision) -> Self {
        Self::wrap(BigFloat::from_u64(v, precision.0), precision)
    }

    pub fn from_i64(v: i64, precision: Precision) -> Self {
        Self::wrap(BigFloat::from_i64(v, precision.0), precision)
    }

    /// Exact conversion of an `f64`; rounding only if `precision < 53`.
    pub fn from_f64(v: f64, precision: Precision) -> Self {
        let mut value = BigFloat::from_f64(v, 64);
        let _ = value.set_precision(precision.0, RM);
        Self::wrap(value, precision)
    }

    /// Integer rounded once to the working precision.
    pub fn from_bigint(v: &BigInt, precision: Precision) -> Self {
        let (sign, words) = v.to_u64_digits();
        if words.is_empty() {
            return Self::zero(precision);
        }
        let sign = if sign == IntSign::Minus { Sign::Neg } else { Sign::Pos };
        let bits = words.len() * WORD_BITS;
        let mut value = BigFloat::from_words(&words, sign, bits as i32);
        let _ = value.set_precision(precision.0.max(WORD_BITS), RM);
        Self::wrap(value, precision)
    }

    /// `num / den` with one rounding per conversion and one for the
    /// quotient.
    pub fn from_rational(v: &BigRational, precision: Precision) -> Self {
        let guarded = precision.with_guard(WORD_BITS);
        let num = Self::from_bigint(v.numer(), guarded);
        let den = Self::from_bigint(v.denom(), guarded);
        (&num / &den).with_precision(precision)
    }

    /// π at the working precision.
    pub fn pi(precision: Precision) -> Self {
        let value = with_consts(|cc| cc.pi(precision.0, RM));
        Self::wrap(value, precision)
    }

    /// √π at the working precision.
    pub fn sqrt_pi(precision: Precision) -> Self {
        Self::pi(precision.with_guard(WORD_BITS)).sqrt().with_precision(precision)
    }

    pub fn precision(&self) -> Precision {
        self.precision
    }

    /// Rounds (or widens) to another working precision.
    pub fn with_precision(&self, precision: Precision) -> Self {
        let mut value = self.value.clone();
        let _ = value.set_precision(precision.0, RM);
        Self::wrap(value, precision)
    }

    pub fn is_zero(&self) -> bool {
        self.value.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.value.is_negative()
    }

    pub fn is_finite(&self) -> bool {
        !self.value.is_nan() && !self.value.is_inf()
    }

    /// -1, 0 or 1.
    pub fn signum(&self) -> i32 {
        if self.is_zero() {
            0
        } else if self.value.is_negative() {
            -1
        } else {
            1
        }
    }

    pub fn abs(&self) -> Self {
        Self::wrap(self.value.abs(), self.precision)
    }

    pub fn recip(&self) -> Self {
        Self::wrap(self.value.reciprocal(self.p(), RM), self.precision)
    }

    pub fn sqrt(&self) -> Self {
        Self::wrap(self.value.sqrt(self.p(), RM), self.precision)
    }

    pub fn exp(&self) -> Self {
        let v = with_consts(|cc| self.value.exp(self.p(), RM, cc));
        Self::wrap(v, self.precision)
    }

    /// Natural logarithm; NaN for negative input, -inf at zero.
    pub fn ln(&self) -> Self {
        let v = with_consts(|cc| self.value.ln(self.p(), RM, cc));
        Self::wrap(v, self.precision)
    }

    pub fn sin(&self) -> Self {
        let v = with_consts(|cc| self.value.sin(self.p(), RM, cc));
        Self::wrap(v, self.precision)
    }

    pub fn cos(&self) -> Self {
        let v = with_consts(|cc| self.value.cos(self.p(), RM, cc));
        Self::wrap(v, self.precision)
    }

    pub fn tan(&self) -> Self {
        let v = with_consts(|cc| self.value.tan(self.p(), RM, cc));
        Self::wrap(v, self.precision)
    }

    /// `cos(x) / sin(x)`.
    pub fn cot(&self) -> Self {
        &self.cos() / &self.sin()
    }

    /// Integer power by repeated squaring.
    pub fn powi(&self, n: u64) -> Self {
        Self::wrap(self.value.powi(n as usize, self.p(), RM), self.precision)
    }

    /// `self^exponent` for positive `self`.
    pub fn pow(&self, exponent: &ApproxReal) -> Self {
        let p = self.p().max(exponent.p());
        let v = with_consts(|cc| self.value.pow(&exponent.value, p, RM, cc));
        Self::wrap(v, self.precision.max(exponent.precision))
    }

    pub fn floor(&self) -> Self {
        Self::wrap(self.value.floor(), self.precision)
    }

    /// Distance to the nearest integer.
    pub fn distance_to_integer(&self) -> Self {
        let below = self.floor();
        let up = &below + &Self::one(self.precision);
        let d_low = (self - &below).abs();
        let d_up = (&up - self).abs();
        if d_low <= d_up {
            d_low
        } else {
            d_up
        }
    }

    /// Nearest `f64`, truncating beyond 64 significant bits.
    pub fn to_f64(&self) -> f64 {
        if self.value.is_nan() {
            return f64::NAN;
        }
        if self.value.is_inf() {
            return if self.value.is_inf_pos() { f64::INFINITY } else { f64::NEG_INFINITY };
        }
        if self.is_zero() {
            return 0.0;
        }
        let Some((words, _, sign, exponent, _)) = self.value.as_raw_parts() else {
            return f64::NAN;
        };
        let top = words.last().copied().unwrap_or(0) as f64;
        let next = if words.len() > 1 { words[words.len() - 2] as f64 } else { 0.0 };
        let mantissa = (top + next / 2f64.powi(WORD_BITS as i32)) / 2f64.powi(WORD_BITS as i32);
        let magnitude = scale_by_pow2(mantissa, exponent);
        if sign == Sign::Neg {
            -magnitude
        } else {
            magnitude
        }
    }

    /// `count · 2^(1-p) · |self|`: the rounding budget of `count`
    /// operations whose results are of the size of `self`.
    pub fn rounding_slack(&self, count: u64) -> f64 {
        count as f64 * self.precision.epsilon() * self.to_f64().abs()
    }

    /// Decimal rendering with at most `digits` significant digits.
    ///
    /// Values whose leading digit sits between `10^-5` and `10^21` are
    /// written positionally, others in `d.ddde±x` form. Trailing zeros are
    /// dropped. Output is a pure function of the stored value.
    pub fn to_decimal(&self, digits: usize) -> String {
        if self.value.is_nan() {
            return "NaN".into();
        }
        if self.value.is_inf() {
            return if self.value.is_inf_pos() { "inf".into() } else { "-inf".into() };
        }
        if self.is_zero() {
            return "0".into();
        }
        let raw = with_consts(|cc| self.value.format(Radix::Dec, RM, cc))
            .unwrap_or_else(|_| "NaN".into());
        render_decimal(&raw, digits.max(1))
    }
}

fn scale_by_pow2(mut x: f64, mut exponent: i32) -> f64 {
    while exponent > 1000 {
        x *= 2f64.powi(1000);
        exponent -= 1000;
    }
    while exponent < -1000 {
        x *= 2f64.powi(-1000);
        exponent += 1000;
    }
    x * 2f64.powi(exponent)
}

/// Rounds a backend scientific string such as `-3.14159e+0` to `digits`
/// significant digits and lays it out.
fn render_decimal(raw: &str, digits: usize) -> String {
    let (negative, body) = match raw.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, raw),
    };
    let (mantissa, exp) = body.split_once(['e', 'E']).unwrap_or((body, "0"));
    let exp: i64 = exp.parse().unwrap_or(0);
    let (int_part, frac_part) = mantissa.split_once('.').unwrap_or((mantissa, ""));
    let mut ds: Vec<u8> = int_part.bytes().chain(frac_part.bytes()).map(|b| b - b'0').collect();
    // value = 0.ds × 10^point
    let mut point = int_part.len() as i64 + exp;
    while ds.first() == Some(&0) {
        ds.remove(0);
        point -= 1;
    }
    if ds.is_empty() {
        return "0".into();
    }
    if ds.len() > digits {
        let round_up = ds[digits] >= 5;
        ds.truncate(digits);
        if round_up {
            let mut i = digits;
            loop {
                if i == 0 {
                    ds.insert(0, 1);
                    ds.truncate(digits);
                    point += 1;
                    break;
                }
                i -= 1;
                if ds[i] == 9 {
                    ds[i] = 0;
                } else {
                    ds[i] += 1;
                    break;
                }
            }
        }
    }
    while ds.len() > 1 && ds.last() == Some(&0) {
        ds.pop();
    }
    let text: String = ds.iter().map(|d| char::from(b'0' + d)).collect();
    let lead = point - 1;
    let body = if (-5..21).contains(&lead) {
        if point <= 0 {
            format!("0.{}{}", "0".repeat((-point) as usize), text)
        } else if point as usize >= text.len() {
            format!("{}{}", text, "0".repeat(point as usize - text.len()))
        } else {
            let (a, b) = text.split_at(point as usize);
            format!("{a}.{b}")
        }
    } else {
        let (a, b) = text.split_at(1);
        let sign = if lead < 0 { '-' } else { '+' };
        if b.is_empty() {
            format!("{a}e{sign}{}", lead.abs())
        } else {
            format!("{a}.{b}e{sign}{}", lead.abs())
        }
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

impl fmt::Display for ApproxReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal(self.precision.decimal_digits()))
    }
}

impl PartialEq for ApproxReal {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd for ApproxReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value.cmp(&other.value).map(|c| c.cmp(&0))
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait<&ApproxReal> for &ApproxReal {
            type Output = ApproxReal;
            fn $method(self, rhs: &ApproxReal) -> ApproxReal {
                let precision = self.precision.max(rhs.precision);
                ApproxReal::wrap(self.value.$method(&rhs.value, precision.0, RM), precision)
            }
        }
        impl $trait<ApproxReal> for ApproxReal {
            type Output = ApproxReal;
            fn $method(self, rhs: ApproxReal) -> ApproxReal {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&ApproxReal> for ApproxReal {
            type Output = ApproxReal;
            fn $method(self, rhs: &ApproxReal) -> ApproxReal {
                (&self).$method(rhs)
            }
        }
        impl $trait<ApproxReal> for &ApproxReal {
            type Output = ApproxReal;
            fn $method(self, rhs: ApproxReal) -> ApproxReal {
                self.$method(&rhs)
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for &ApproxReal {
    type Output = ApproxReal;
    fn neg(self) -> ApproxReal {
        ApproxReal::wrap(BigFloat::neg(&self.value), self.precision)
    }
}

impl Neg for ApproxReal {
    type Output = ApproxReal;
    fn neg(self) -> ApproxReal {
        -&self
    }
}

/// Complex number with [`ApproxReal`] parts.
#[derive(Clone, Debug)]
pub struct Complex {
    pub re: ApproxReal,
    pub im: ApproxReal,
}

impl Complex {
    pub fn new(re: ApproxReal, im: ApproxReal) -> Self {
        Complex { re, im }
    }

    pub fn from_real(re: ApproxReal) -> Self {
        let im = ApproxReal::zero(re.precision());
        Complex { re, im }
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn precision(&self) -> Precision {
        self.re.precision().max(self.im.precision())
    }

    pub fn add(&self, other: &Complex) -> Complex {
        Complex::new(&self.re + &other.re, &self.im + &other.im)
    }

    pub fn sub(&self, other: &Complex) -> Complex {
        Complex::new(&self.re - &other.re, &self.im - &other.im)
    }

    pub fn mul(&self, other: &Complex) -> Complex {
        if self.is_real() && other.is_real() {
            return Complex::from_real(&self.re * &other.re);
        }
        let re = &(&self.re * &other.re) - &(&self.im * &other.im);
        let im = &(&self.re * &other.im) + &(&self.im * &other.re);
        Complex::new(re, im)
    }

    pub fn recip(&self) -> Complex {
        if self.is_real() {
            return Complex::from_real(self.re.recip());
        }
        let norm = &(&self.re * &self.re) + &(&self.im * &self.im);
        Complex::new(&self.re / &norm, -(&self.im / &norm))
    }

    pub fn abs(&self) -> ApproxReal {
        (&(&self.re * &self.re) + &(&self.im * &self.im)).sqrt()
    }

    /// `n^(-s)` for a positive integer `n`, computed as `exp(-s ln n)`.
    pub fn integer_pow_neg(n: u64, s: &Complex) -> Complex {
        let precision = s.precision();
        if s.is_real() {
            if let Some(k) = small_nonnegative_integer(&s.re) {
                let base = ApproxReal::from_u64(n, precision);
                return Complex::from_real(base.powi(k).recip());
            }
        }
        let ln_n = ApproxReal::from_u64(n, precision).ln();
        let modulus = (-(&s.re * &ln_n)).exp();
        if s.is_real() {
            return Complex::from_real(modulus);
        }
        let phase = &s.im * &ln_n;
        Complex::new(&modulus * &phase.cos(), -(&modulus * &phase.sin()))
    }
}

/// `Some(k)` when `x` is exactly a small nonnegative integer.
pub(crate) fn small_nonnegative_integer(x: &ApproxReal) -> Option<u64> {
    if x.is_negative() || !x.distance_to_integer().is_zero() {
        return None;
    }
    let f = x.to_f64();
    (f <= 4096.0).then_some(f as u64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn p128() -> Precision {
        Precision::new(128).unwrap()
    }

    #[test]
    fn precision_floor() {
        assert!(Precision::new(31).is_err());
        assert!(Precision::new(32).is_ok());
        assert_eq!(Precision::default().bits(), DEFAULT_PRECISION);
        assert_eq!(p128().decimal_digits(), 38);
    }

    #[test]
    fn pi_and_conversions() {
        let pi = ApproxReal::pi(p128());
        assert_eq!(pi.to_f64(), std::f64::consts::PI);
        assert_eq!(pi.to_decimal(20), "3.1415926535897932385");
        let neg = ApproxReal::from_i64(-12345, p128());
        assert_eq!(neg.to_f64(), -12345.0);
        assert_eq!(neg.to_decimal(15), "-12345");
        let big = BigInt::from(10u32).pow(40) + 7;
        let x = ApproxReal::from_bigint(&big, Precision::new(256).unwrap());
        assert_eq!(x.to_decimal(41), "1.0000000000000000000000000000000000000007e+40");
        let third = ApproxReal::from_rational(&BigRational::new(1.into(), 3.into()), p128());
        assert_eq!(third.to_decimal(10), "0.3333333333");
    }

    #[test]
    fn decimal_layout() {
        assert_eq!(render_decimal("9.9996e+0", 4), "10");
        assert_eq!(render_decimal("1.25e-7", 15), "1.25e-7");
        assert_eq!(render_decimal("-6.4209e-1", 3), "-0.642");
        assert_eq!(render_decimal("1.0e+25", 5), "1e+25");
        assert_eq!(render_decimal("1.5e+2", 15), "150");
        assert_eq!(render_decimal("1.2345e-5", 3), "0.0000123");
    }

    #[test]
    fn ordering_and_sign() {
        let a = ApproxReal::from_f64(0.5, p128());
        let b = ApproxReal::from_f64(-2.0, p128());
        assert!(b < a);
        assert_eq!(b.signum(), -1);
        assert_eq!(ApproxReal::zero(p128()).signum(), 0);
        assert_eq!((&a * &b).to_f64(), -1.0);
        assert_eq!(ApproxReal::from_f64(2.5, p128()).distance_to_integer().to_f64(), 0.5);
    }

    #[test]
    fn complex_power_matches_f64() {
        let s = Complex::new(
            ApproxReal::from_f64(2.0, p128()),
            ApproxReal::from_f64(1.0, p128()),
        );
        let z = Complex::integer_pow_neg(3, &s);
        // 3^-(2+i) = 3^-2 (cos(ln 3) - i sin(ln 3))
        let l = 3f64.ln();
        assert!((z.re.to_f64() - l.cos() / 9.0).abs() < 1e-15);
        assert!((z.im.to_f64() + l.sin() / 9.0).abs() < 1e-15);
    }
}
