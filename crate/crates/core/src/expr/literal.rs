//! Exact values of numeric literals.
//!
//! Decimal (`0.1`, `6.02e23`) and hexadecimal-significand (`0x1.8p+1`)
//! literals convert to exact rationals. Exponents far outside the native
//! range are clamped to a value that is still far outside it, which keeps
//! directed rounding unchanged while bounding the size of the rational.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::oracle::ExtRational;

/// Decimal literals with magnitude beyond `10^±LIMIT` are clamped to it.
const DECIMAL_LIMIT: i64 = 400;
/// Same for hexadecimal literals, in powers of two.
const BINARY_LIMIT: i64 = 1200;

fn pow(base: u32, exp: i64) -> BigRational {
    let p = BigInt::from(base).pow(exp.unsigned_abs() as u32);
    if exp >= 0 {
        BigRational::from_integer(p)
    } else {
        BigRational::new(BigInt::one(), p)
    }
}

fn parse_exponent(digits: &str) -> Option<i64> {
    let (negative, body) = match digits.as_bytes().first()? {
        b'+' => (false, &digits[1..]),
        b'-' => (true, &digits[1..]),
        _ => (false, digits),
    };
    if body.is_empty() || !body.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    // anything this large is clamped anyway
    let value = body.parse::<i64>().unwrap_or(i64::MAX / 4).min(i64::MAX / 4);
    Some(if negative { -value } else { value })
}

/// `mantissa * base^exp`, where `mantissa` has `width` digits in `base`,
/// clamped to `base^±limit` when its magnitude lies beyond that.
fn scaled(mantissa: BigInt, width: i64, base: u32, exp: i64, limit: i64) -> BigRational {
    if mantissa.is_zero() {
        return BigRational::zero();
    }
    if exp + width - 1 > limit {
        return pow(base, limit);
    }
    if exp + width < -limit {
        return pow(base, -limit);
    }
    BigRational::from_integer(mantissa) * pow(base, exp)
}

fn parse_decimal(text: &str) -> Option<BigRational> {
    let (body, exp) = match text.find(['e', 'E']) {
        Some(i) => (&text[..i], parse_exponent(&text[i + 1..])?),
        None => (text, 0),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    let digits = format!("{int}{frac}");
    if !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let trimmed = digits.trim_start_matches('0');
    let mantissa: BigInt = if trimmed.is_empty() { BigInt::zero() } else { trimmed.parse().ok()? };
    Some(scaled(mantissa, trimmed.len() as i64, 10, exp - frac.len() as i64, DECIMAL_LIMIT))
}

fn parse_hex(text: &str) -> Option<BigRational> {
    let (body, exp) = match text.find(['p', 'P']) {
        Some(i) => (&text[..i], parse_exponent(&text[i + 1..])?),
        None => (text, 0),
    };
    let (int, frac) = body.split_once('.').unwrap_or((body, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    let digits = format!("{int}{frac}");
    if !digits.bytes().all(|b| b.is_ascii_hexdigit()) {
        return None;
    }
    let trimmed = digits.trim_start_matches('0');
    let mantissa = if trimmed.is_empty() {
        BigInt::zero()
    } else {
        BigInt::parse_bytes(trimmed.as_bytes(), 16)?
    };
    let width = mantissa.bits() as i64;
    Some(scaled(mantissa, width, 2, exp - 4 * frac.len() as i64, BINARY_LIMIT))
}

/// Exact value of an optionally signed literal: a decimal, a hexadecimal
/// significand literal, or `inf`.
pub fn parse_real(text: &str) -> Option<ExtRational> {
    let (negative, body) = match text.as_bytes().first()? {
        b'-' => (true, &text[1..]),
        b'+' => (false, &text[1..]),
        _ => (false, text),
    };
    let value = if body.eq_ignore_ascii_case("inf") {
        ExtRational::PosInf
    } else if let Some(hex) = body.strip_prefix("0x").or_else(|| body.strip_prefix("0X")) {
        ExtRational::Finite(parse_hex(hex)?)
    } else {
        ExtRational::Finite(parse_decimal(body)?)
    };
    Some(if negative { value.neg() } else { value })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn finite(text: &str) -> BigRational {
        match parse_real(text) {
            Some(ExtRational::Finite(q)) => q,
            other => panic!("{text}: {other:?}"),
        }
    }

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn decimals() {
        assert_eq!(finite("0.1"), q(1, 10));
        assert_eq!(finite("-2.50"), q(-5, 2));
        assert_eq!(finite("3."), q(3, 1));
        assert_eq!(finite(".5e1"), q(5, 1));
        assert_eq!(finite("1E-2"), q(1, 100));
        assert_eq!(finite("000"), q(0, 1));
        assert_eq!(finite("-0"), q(0, 1));
    }

    #[test]
    fn hex_significands() {
        assert_eq!(finite("0x1.8p+1"), q(3, 1));
        assert_eq!(finite("-0x1p-2"), q(-1, 4));
        assert_eq!(finite("0x10"), q(16, 1));
        assert_eq!(finite("0x0p+0"), q(0, 1));
        use crate::kernel::BinaryFormat;
        assert_eq!(finite("0x1.999999999999ap-4"), 0.1f64.to_rational().unwrap());
    }

    #[test]
    fn infinities_and_garbage() {
        assert_eq!(parse_real("inf"), Some(ExtRational::PosInf));
        assert_eq!(parse_real("-inf"), Some(ExtRational::NegInf));
        for bad in ["", "-", ".", "1e", "1e+", "0x", "0xg", "1.2.3", "--1", "nan", "1e5x"] {
            assert_eq!(parse_real(bad), None, "{bad}");
        }
    }

    #[test]
    fn huge_exponents_are_clamped() {
        assert_eq!(finite("1e99999999999999999999"), pow(10, DECIMAL_LIMIT));
        assert_eq!(finite("-12e-99999999"), -pow(10, -DECIMAL_LIMIT));
        assert_eq!(finite("0x1p99999"), pow(2, BINARY_LIMIT));
        assert_eq!(finite("0e99999999"), q(0, 1));
        // values inside the limits stay exact
        assert_eq!(finite("1e300"), pow(10, 300));
        assert_eq!(finite("0x1p-1074"), pow(2, -1074));
    }
}
