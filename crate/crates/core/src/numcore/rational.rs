use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational in lowest terms with a positive denominator.
///
/// Every constructor and arithmetic operator of [`num_rational::Ratio`]
/// reduces its result, so the lowest-terms invariant holds as long as
/// `Ratio::new_raw` is never used. Zero is always `0/1`.
pub type BigRational = num_rational::BigRational;

/// Builds `num/den` in lowest terms with a positive denominator.
pub fn make_rational(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<BigRational> {
    let den = den.into();
    if den.is_zero() {
        return Err(Error::domain("rational with zero denominator"));
    }
    Ok(BigRational::new(num.into(), den))
}

/// Parses an exact rational literal.
///
/// Accepted forms: integers (`42`, `-7`), fractions (`-691/2730`), and
/// finite decimals with an optional exponent (`2.5`, `-0.25`, `1e-3`).
/// Decimals are converted exactly, so `0.1` is `1/10`.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let text = text.trim();
    if text.is_empty() {
        return Err(Error::parse("empty number"));
    }
    if let Some((num, den)) = text.split_once('/') {
        let num: BigInt = num
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad numerator in {text:?}")))?;
        let den: BigInt = den
            .trim()
            .parse()
            .map_err(|_| Error::parse(format!("bad denominator in {text:?}")))?;
        return make_rational(num, den);
    }
    parse_decimal(text)
}

fn parse_decimal(text: &str) -> Result<BigRational> {
    let bad = || Error::parse(format!("not a number: {text:?}"));
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(i) => {
            let exp: i64 = text[i + 1..].parse().map_err(|_| bad())?;
            (&text[..i], exp)
        }
        None => (text, 0),
    };
    let (negative, digits) = match mantissa.as_bytes().first() {
        Some(b'-') => (true, &mantissa[1..]),
        Some(b'+') => (false, &mantissa[1..]),
        _ => (false, mantissa),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(bad());
    }
    if !int_part.bytes().chain(frac_part.bytes()).all(|b| b.is_ascii_digit()) {
        return Err(bad());
    }
    if exponent.unsigned_abs() > 10_000 {
        return Err(Error::parse(format!("exponent out of range in {text:?}")));
    }
    let all_digits = format!("{int_part}{frac_part}");
    let mut num: BigInt = all_digits.parse().map_err(|_| bad())?;
    if negative {
        num = -num;
    }
    let scale = exponent - frac_part.len() as i64;
    let ten = BigInt::from(10u32);
    let value = if scale >= 0 {
        BigRational::from_integer(num * num_traits::pow(ten, scale as usize))
    } else {
        BigRational::new(num, num_traits::pow(ten, (-scale) as usize))
    };
    Ok(value)
}

/// `n!! = n (n-2) (n-4) ...`, stopping at 1 or 2.
///
/// The empty products `0!!` and `(-1)!!` are both 1, which is what makes
/// the half-integer Gamma formula give `Γ(1/2) = √π` at its first index.
pub fn double_factorial(n: i64) -> Result<BigUint> {
    if n < -1 {
        return Err(Error::domain(format!("double factorial of {n}")));
    }
    let mut acc = BigUint::one();
    let mut k = n;
    while k > 1 {
        acc *= k as u64;
        k -= 2;
    }
    Ok(acc)
}

pub(crate) fn is_integer(r: &BigRational) -> bool {
    r.denom().is_one()
}

/// True for `k + 1/2` with integer `k`.
pub(crate) fn is_half_integer(r: &BigRational) -> bool {
    *r.denom() == BigInt::from(2)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> BigRational {
        make_rational(n, d).unwrap()
    }

    #[test]
    fn reduces_and_normalizes_sign() {
        assert_eq!(r(2, 4).to_string(), "1/2");
        assert_eq!(r(6, -4).to_string(), "-3/2");
        let zero = r(0, 7);
        assert_eq!(zero.numer(), &BigInt::zero());
        assert_eq!(zero.denom(), &BigInt::one());
        assert_eq!(zero.to_string(), "0");
        assert_eq!(r(84, 2).to_string(), "42");
    }

    #[test]
    fn zero_denominator_is_a_domain_error() {
        assert!(matches!(make_rational(1, 0), Err(Error::Domain(_))));
        assert!(matches!(parse_rational("3/0"), Err(Error::Domain(_))));
    }

    #[test]
    fn parses_literals() {
        assert_eq!(parse_rational("-691/2730").unwrap(), r(-691, 2730));
        assert_eq!(parse_rational("2.5").unwrap(), r(5, 2));
        assert_eq!(parse_rational("-0.25").unwrap(), r(-1, 4));
        assert_eq!(parse_rational(".5").unwrap(), r(1, 2));
        assert_eq!(parse_rational("1e-3").unwrap(), r(1, 1000));
        assert_eq!(parse_rational("12E2").unwrap(), r(1200, 1));
        assert_eq!(parse_rational("10/4").unwrap(), r(5, 2));
        for bad in ["", "abc", "1.2.3", "1/", "/2", "-", "1e", "0x10"] {
            assert!(parse_rational(bad).is_err(), "{bad:?} should not parse");
        }
    }

    #[test]
    fn double_factorials() {
        assert_eq!(double_factorial(5).unwrap(), BigUint::from(15u32));
        assert_eq!(double_factorial(6).unwrap(), BigUint::from(48u32));
        assert_eq!(double_factorial(0).unwrap(), BigUint::one());
        assert_eq!(double_factorial(-1).unwrap(), BigUint::one());
        assert!(double_factorial(-3).is_err());
    }

    #[test]
    fn half_integer_classification() {
        assert!(is_half_integer(&r(-1, 2)));
        assert!(is_half_integer(&r(7, 2)));
        assert!(!is_half_integer(&r(1, 4)));
        assert!(is_integer(&r(4, 2)));
    }
}
