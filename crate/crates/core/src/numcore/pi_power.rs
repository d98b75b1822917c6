use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::approx::{ApproxReal, Precision};
use super::rational::{parse_rational, BigRational};
use crate::error::{Error, Result};

/// Exact value `coefficient · π^pi_exponent · (√π)^[sqrt_pi]`.
///
/// Text form: `c`, `c * pi^k`, `c * sqrt(pi)` or `c * sqrt(pi) * pi^k`,
/// with `c` a reduced rational and π factors omitted when absent. Zero is
/// always `0` with no π factors.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PiPowerExact {
    coefficient: BigRational,
    pi_exponent: u32,
    sqrt_pi: bool,
}

impl PiPowerExact {
    pub fn new(coefficient: BigRational, pi_exponent: u32, sqrt_pi: bool) -> Self {
        if coefficient.is_zero() {
            return Self::zero();
        }
        PiPowerExact { coefficient, pi_exponent, sqrt_pi }
    }

    pub fn zero() -> Self {
        PiPowerExact { coefficient: BigRational::zero(), pi_exponent: 0, sqrt_pi: false }
    }

    pub fn rational(coefficient: BigRational) -> Self {
        Self::new(coefficient, 0, false)
    }

    pub fn coefficient(&self) -> &BigRational {
        &self.coefficient
    }

    pub fn pi_exponent(&self) -> u32 {
        self.pi_exponent
    }

    pub fn has_sqrt_pi(&self) -> bool {
        self.sqrt_pi
    }

    pub fn is_zero(&self) -> bool {
        self.coefficient.is_zero()
    }

    /// Product of two exact values; `√π · √π` folds into `π`.
    pub fn mul(&self, other: &PiPowerExact) -> PiPowerExact {
        let both = self.sqrt_pi && other.sqrt_pi;
        PiPowerExact::new(
            &self.coefficient * &other.coefficient,
            self.pi_exponent + other.pi_exponent + u32::from(both),
            self.sqrt_pi ^ other.sqrt_pi,
        )
    }

    pub fn scale(&self, factor: &BigRational) -> PiPowerExact {
        PiPowerExact::new(&self.coefficient * factor, self.pi_exponent, self.sqrt_pi)
    }

    /// Divides by `π^k`; fails if that would leave a negative exponent.
    pub fn div_pi_power(&self, k: u32) -> Result<PiPowerExact> {
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let pi_exponent = self
            .pi_exponent
            .checked_sub(k)
            .ok_or_else(|| Error::domain(format!("{self} is not divisible by pi^{k}")))?;
        Ok(PiPowerExact::new(self.coefficient.clone(), pi_exponent, self.sqrt_pi))
    }

    pub fn eval(&self, precision: Precision) -> ApproxReal {
        pi_power_eval(self, precision)
    }
}

/// Decimal value of an exact π-power form.
///
/// π is taken at 64 guard bits above `precision`, the power and square
/// root are formed there, and the product is rounded once at the end, so
/// the result is within a few ulps at `precision`.
pub fn pi_power_eval(x: &PiPowerExact, precision: Precision) -> ApproxReal {
    if x.is_zero() {
        return ApproxReal::zero(precision);
    }
    let guarded = precision.with_guard(64);
    let mut acc = ApproxReal::from_rational(&x.coefficient, guarded);
    if x.pi_exponent > 0 || x.sqrt_pi {
        let pi = ApproxReal::pi(guarded);
        if x.pi_exponent > 0 {
            acc = &acc * &pi.powi(u64::from(x.pi_exponent));
        }
        if x.sqrt_pi {
            acc = &acc * &pi.sqrt();
        }
    }
    acc.with_precision(precision)
}

impl fmt::Display for PiPowerExact {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.coefficient)?;
        if self.sqrt_pi {
            f.write_str(" * sqrt(pi)")?;
        }
        if self.pi_exponent > 0 {
            write!(f, " * pi^{}", self.pi_exponent)?;
        }
        Ok(())
    }
}

impl FromStr for PiPowerExact {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut parts = s.split('*').map(str::trim);
        let coefficient = match parts.next() {
            Some(c) if !c.is_empty() => parse_rational(c)?,
            _ => return Err(Error::parse(format!("missing coefficient in {s:?}"))),
        };
        let mut pi_exponent = 0u32;
        let mut sqrt_pi = false;
        for factor in parts {
            if factor == "sqrt(pi)" && !sqrt_pi {
                sqrt_pi = true;
            } else if factor == "pi" {
                pi_exponent += 1;
            } else if let Some(k) = factor.strip_prefix("pi^") {
                let k: u32 = k
                    .parse()
                    .map_err(|_| Error::parse(format!("bad pi exponent in {s:?}")))?;
                pi_exponent += k;
            } else {
                return Err(Error::parse(format!("unexpected factor {factor:?} in {s:?}")));
            }
        }
        Ok(PiPowerExact::new(coefficient, pi_exponent, sqrt_pi))
    }
}

impl From<BigRational> for PiPowerExact {
    fn from(value: BigRational) -> Self {
        PiPowerExact::rational(value)
    }
}

impl Serialize for PiPowerExact {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for PiPowerExact {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(serde::de::Error::custom)
    }
}

impl PiPowerExact {
    /// True when the value is exactly the rational `1`.
    pub fn is_one(&self) -> bool {
        self.pi_exponent == 0 && !self.sqrt_pi && self.coefficient.is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numcore::make_rational;

    fn p(bits: usize) -> Precision {
        Precision::new(bits).unwrap()
    }

    #[test]
    fn text_form() {
        let z4 = PiPowerExact::new(make_rational(1, 90).unwrap(), 4, false);
        assert_eq!(z4.to_string(), "1/90 * pi^4");
        let g = PiPowerExact::new(make_rational(3, 4).unwrap(), 0, true);
        assert_eq!(g.to_string(), "3/4 * sqrt(pi)");
        let both = PiPowerExact::new(make_rational(-2, 1).unwrap(), 3, true);
        assert_eq!(both.to_string(), "-2 * sqrt(pi) * pi^3");
        assert_eq!(PiPowerExact::rational(make_rational(24, 1).unwrap()).to_string(), "24");
        for v in [z4, g, both] {
            assert_eq!(v.to_string().parse::<PiPowerExact>().unwrap(), v);
        }
        assert_eq!("1/2 * pi".parse::<PiPowerExact>().unwrap().pi_exponent(), 1);
        assert!("1/2 * e".parse::<PiPowerExact>().is_err());
        assert!("".parse::<PiPowerExact>().is_err());
    }

    #[test]
    fn canonical_zero() {
        let z = PiPowerExact::new(make_rational(0, 5).unwrap(), 6, true);
        assert_eq!(z, PiPowerExact::zero());
        assert_eq!(z.to_string(), "0");
        assert!(pi_power_eval(&z, p(64)).is_zero());
    }

    #[test]
    fn sqrt_pi_squares_to_pi() {
        let half = PiPowerExact::new(make_rational(1, 2).unwrap(), 0, true);
        let sq = half.mul(&half);
        assert_eq!(sq, PiPowerExact::new(make_rational(1, 4).unwrap(), 1, false));
        assert!(sq.div_pi_power(2).is_err());
        assert_eq!(sq.div_pi_power(1).unwrap().to_string(), "1/4");
    }

    #[test]
    fn evaluates_half_sqrt_pi() {
        let half = PiPowerExact::new(make_rational(1, 2).unwrap(), 0, true);
        let v = pi_power_eval(&half, p(64)).to_f64();
        assert!((v - 0.886_226_925_452_758).abs() < 1e-15);
    }
}
