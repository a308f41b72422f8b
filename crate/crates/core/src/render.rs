//! Text rendering of intervals and division results.
//!
//! `[lo,hi]`, with `-inf`/`inf` for the unbounded sides and `Empty` for the
//! empty set. Zero bounds print with their normalized sign (`0` below, `-0`
//! above). Hex mode prints bounds as hexadecimal significands (`0x1.8p+1`),
//! which parse back to the identical value.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Signed, Zero};

use crate::interval::Interval;
use crate::kernel::BinaryFormat;
use crate::ops::DivResult;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Style {
    pub hex: bool,
    /// Use `U` instead of `∪` between split parts.
    pub ascii: bool,
}

/// Exact hexadecimal-significand rendering of a bound.
pub fn hex_bound<F: BinaryFormat>(x: F) -> String {
    if x.is_nan() {
        return "nan".into();
    }
    let sign = if x.is_sign_negative() { "-" } else { "" };
    if x.is_infinite() {
        return format!("{sign}inf");
    }
    if x.is_zero() {
        return format!("{sign}0x0p+0");
    }
    let q = x.to_rational().expect("finite");
    let den = q.denom().magnitude();
    debug_assert!((den & (den - BigUint::one())).is_zero(), "binary formats are dyadic");
    let mut m = q.numer().abs().magnitude().clone();
    let mut exp = -((den.bits() - 1) as i64);
    let tz = m.trailing_zeros().unwrap_or(0);
    m >>= tz;
    exp += tz as i64;

    let frac_bits = m.bits() - 1;
    exp += frac_bits as i64;
    let fraction = &m - (BigUint::one() << frac_bits);
    let pad = (4 - frac_bits % 4) % 4;
    let digits = ((frac_bits + pad) / 4) as usize;
    if digits == 0 {
        format!("{sign}0x1p{exp:+}")
    } else {
        let hex = format!("{:0width$x}", fraction << pad, width = digits);
        format!("{sign}0x1.{}p{exp:+}", hex.trim_end_matches('0'))
    }
}

fn bound<F: BinaryFormat>(x: F, style: Style) -> String {
    if style.hex {
        hex_bound(x)
    } else {
        x.to_decimal_string()
    }
}

pub fn render_interval<F: BinaryFormat>(x: &Interval<F>, style: Style) -> String {
    match x.bounds() {
        None => "Empty".into(),
        Some((lo, hi)) => format!("[{},{}]", bound(lo, style), bound(hi, style)),
    }
}

pub fn render_div<F: BinaryFormat>(r: &DivResult<F>, style: Style) -> String {
    match r {
        DivResult::Empty => "Empty".into(),
        DivResult::Single(x) => render_interval(x, style),
        DivResult::Split(a, b) => format!(
            "{} {} {}",
            render_interval(a, style),
            if style.ascii { "U" } else { "∪" },
            render_interval(b, style)
        ),
    }
}

impl<F: BinaryFormat> fmt::Display for Interval<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_interval(self, Style::default()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: f64, hi: f64) -> Interval<f64> {
        Interval::new(lo, hi).unwrap()
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(iv(3.0, 8.0).to_string(), "[3,8]");
        assert_eq!(Interval::<f64>::zero().to_string(), "[0,-0]");
        assert_eq!(Interval::<f64>::entire().to_string(), "[-inf,inf]");
        assert_eq!(Interval::<f64>::empty().to_string(), "Empty");
        assert_eq!(iv(0.25, 1e300).to_string(), "[0.25,1e300]");
    }

    #[test]
    fn hex_rendering() {
        assert_eq!(hex_bound(3.0f64), "0x1.8p+1");
        assert_eq!(hex_bound(1.0f64), "0x1p+0");
        assert_eq!(hex_bound(-0.1f64), "-0x1.999999999999ap-4");
        assert_eq!(hex_bound(f64::from_bits(1)), "0x1p-1074");
        assert_eq!(hex_bound(f64::MAX), "0x1.fffffffffffffp+1023");
        assert_eq!(hex_bound(-0.0f64), "-0x0p+0");
        assert_eq!(hex_bound(f64::NEG_INFINITY), "-inf");
        let style = Style { hex: true, ascii: false };
        assert_eq!(render_interval(&Interval::<f64>::zero(), style), "[0x0p+0,-0x0p+0]");
    }

    #[test]
    fn union_rendering() {
        let r = crate::ops::div(iv(1.0, 2.0), iv(-1.0, 1.0));
        assert_eq!(r.to_string(), "[-inf,-1] ∪ [1,inf]");
        assert_eq!(render_div(&r, Style { hex: false, ascii: true }), "[-inf,-1] U [1,inf]");
        assert_eq!(DivResult::<f64>::Empty.to_string(), "Empty");
    }
}
