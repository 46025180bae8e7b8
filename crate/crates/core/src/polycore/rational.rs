//! Rational scalar helpers.
//!
//! The scalar type is `num_rational::BigRational`, which is always stored in
//! lowest terms with a positive denominator. This module adds exact parsing,
//! dyadic rounding and decimal rendering on top of it.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `1 / 10^digits`.
pub fn ten_pow_neg(digits: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::from(10u32).pow(digits))
}

pub fn two_pow(exp: i64) -> Rational {
    let p = BigInt::one() << exp.unsigned_abs();
    if exp >= 0 {
        Rational::from_integer(p)
    } else {
        Rational::new(BigInt::one(), p)
    }
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn sign(r: &Rational) -> i8 {
    match r.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

/// Parses `p/q`, integers and finite decimals with an optional exponent
/// (`-0.125`, `1e-20`). Values are never routed through binary floats.
pub fn parse_rational(input: &str) -> Result<Rational> {
    let s = input.trim();
    let fail = |reason: &str| Error::ParseRational {
        input: input.to_string(),
        reason: reason.to_string(),
    };
    if s.is_empty() {
        return Err(fail("empty string"));
    }
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().map_err(|_| fail("bad numerator"))?;
        let q: BigInt = q.trim().parse().map_err(|_| fail("bad denominator"))?;
        if q.is_zero() {
            return Err(fail("zero denominator"));
        }
        return Ok(Rational::new(p, q));
    }

    let (mantissa, exponent) = match s.find(['e', 'E']) {
        Some(pos) => {
            let e: i64 = s[pos + 1..].parse().map_err(|_| fail("bad exponent"))?;
            (&s[..pos], e)
        }
        None => (s, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (int_part, frac_part) = digits.split_once('.').unwrap_or((digits, ""));
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(fail("no digits"));
    }
    if !int_part.chars().chain(frac_part.chars()).all(|c| c.is_ascii_digit()) {
        return Err(fail("not a rational literal"));
    }
    let all_digits = format!("{int_part}{frac_part}");
    let numer: BigInt = if all_digits.is_empty() {
        BigInt::zero()
    } else {
        all_digits.parse().map_err(|_| fail("bad digits"))?
    };
    let scale = exponent - frac_part.len() as i64;
    let ten = BigInt::from(10u32);
    let mut value = if scale >= 0 {
        Rational::from_integer(numer * ten.pow(scale as u32))
    } else {
        Rational::new(numer, ten.pow((-scale) as u32))
    };
    if negative {
        value = -value;
    }
    Ok(value)
}

/// Rounds to the nearest multiple of `2^-bits` (ties away from zero).
pub fn round_dyadic(r: &Rational, bits: u32) -> Rational {
    let scale = BigInt::one() << bits;
    let scaled = r * Rational::from_integer(scale.clone());
    let rounded = scaled.round();
    Rational::new(rounded.to_integer(), scale)
}

pub fn to_f64(r: &Rational) -> f64 {
    if let Some(v) = r.to_f64() {
        return v;
    }
    // Fallback for extreme exponents: go through a short decimal.
    to_decimal(r, 30).parse().unwrap_or(f64::NAN)
}

/// Decimal rendering with `digits` fractional digits, rounded half away from zero.
pub fn to_decimal(r: &Rational, digits: u32) -> String {
    let scale = BigInt::from(10u32).pow(digits);
    let scaled = (r.abs() * Rational::from_integer(scale.clone())).round().to_integer();
    let (int_part, frac_part) = scaled.div_rem(&scale);
    let mut out = String::new();
    if r.is_negative() && !scaled.is_zero() {
        out.push('-');
    }
    out.push_str(&int_part.to_string());
    if digits > 0 {
        let frac = frac_part.to_string();
        out.push('.');
        for _ in frac.len()..digits as usize {
            out.push('0');
        }
        out.push_str(&frac);
    }
    out
}

/// Short scientific rendering, used for widths and error bounds.
pub fn to_sci(r: &Rational) -> String {
    format!("{:.3e}", to_f64(r))
}

/// Exact `p/q` rendering (`3`, `-1/2`).
pub fn to_exact(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Serde helper: serialize a rational as its exact `p/q` string.
pub fn serialize_exact<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&to_exact(r))
}

pub fn is_dyadic(r: &Rational) -> bool {
    let d = r.denom();
    (d & (d - BigInt::one())).is_zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_and_decimals() {
        assert_eq!(parse_rational("3/6").unwrap(), frac(1, 2));
        assert_eq!(parse_rational("-1/8").unwrap(), frac(-1, 8));
        assert_eq!(parse_rational("-0.125").unwrap(), frac(-1, 8));
        assert_eq!(parse_rational("2").unwrap(), int(2));
        assert_eq!(parse_rational("1e-3").unwrap(), frac(1, 1000));
        assert_eq!(parse_rational("2.5E2").unwrap(), int(250));
        assert_eq!(parse_rational(".5").unwrap(), frac(1, 2));
        assert_eq!(parse_rational("1e-20").unwrap(), ten_pow_neg(20));
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rational("").is_err());
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("abc").is_err());
        assert!(parse_rational("0x10").is_err());
        assert!(parse_rational("nan").is_err());
        assert!(parse_rational("-").is_err());
    }

    #[test]
    fn canonical_zero() {
        let z = parse_rational("0/7").unwrap();
        assert_eq!(z.numer(), &BigInt::zero());
        assert_eq!(z.denom(), &BigInt::one());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(to_decimal(&frac(1, 3), 5), "0.33333");
        assert_eq!(to_decimal(&frac(-2, 3), 3), "-0.667");
        assert_eq!(to_decimal(&int(7), 0), "7");
        assert_eq!(to_decimal(&frac(-1, 1000), 2), "0.00");
        assert_eq!(to_exact(&frac(-3, 6)), "-1/2");
    }

    #[test]
    fn dyadic_rounding() {
        let r = round_dyadic(&frac(1, 3), 8);
        assert!(is_dyadic(&r));
        assert!((r - frac(1, 3)).abs() <= two_pow(-9));
        assert!(is_dyadic(&frac(-7, 8)));
        assert!(!is_dyadic(&frac(1, 3)));
    }
}
