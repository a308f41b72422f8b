//! A small, fully enumerable binary floating-point format.
//!
//! `precision` significand bits (hidden bit included), normal exponents in
//! `[emin, emax]`, gradual underflow, signed zeros and infinities. The
//! default (3 bits, exponents -2..=2) has 47 distinct finite reals, from
//! -7 to 7 in steps no finer than 1/16.
//!
//! Finite values are stored as a signed count of `units`, the spacing of the
//! subnormals: `value = units * 2^(emin - precision + 1)`. Kernels compute
//! the exact result as a ratio of integers and round it on the unit grid.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::kernel::rounding::{self, Layout, Rounded};
use crate::kernel::{is_undefined_form, special_case, zero_sum, BinaryFormat, KernelOp, RoundingDirection};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct MiniParams {
    precision: u32,
    emin: i32,
    emax: i32,
}

impl MiniParams {
    /// 3 significand bits, exponents -2..=2.
    pub const TINY: MiniParams = MiniParams { precision: 3, emin: -2, emax: 2 };

    pub fn new(precision: u32, emin: i32, emax: i32) -> Result<Self> {
        if !(1..=24).contains(&precision) {
            return Err(Error::InvalidFormat(format!("precision {precision} outside 1..=24")));
        }
        if emin > 0 || emax < 0 {
            return Err(Error::InvalidFormat(format!("need emin <= 0 <= emax, got {emin}..={emax}")));
        }
        if precision as i64 + emax as i64 - emin as i64 > 56 {
            return Err(Error::InvalidFormat("format too wide for exhaustive work".into()));
        }
        Ok(MiniParams { precision, emin, emax })
    }

    pub fn precision(self) -> u32 {
        self.precision
    }

    pub fn emin(self) -> i32 {
        self.emin
    }

    pub fn emax(self) -> i32 {
        self.emax
    }

    /// Exponent of one unit.
    fn unit_exponent(self) -> i32 {
        self.emin - (self.precision as i32 - 1)
    }

    fn layout(self) -> Layout {
        Layout {
            precision: self.precision,
            emin: self.emin,
            emax: self.emax,
        }
    }

    /// Largest finite value, in units.
    pub fn max_units(self) -> i64 {
        ((1i64 << self.precision) - 1) << (self.emax - self.emin)
    }

    pub fn is_representable(self, units: i64) -> bool {
        let m = units.unsigned_abs();
        if m > self.max_units() as u64 {
            return false;
        }
        m == 0 || 64 - m.leading_zeros() - m.trailing_zeros() <= self.precision
    }

    /// Positive finite values in increasing order, in units.
    fn positive_units(self) -> Vec<i64> {
        let p = self.precision;
        let mut out: Vec<i64> = (1..(1i64 << p)).collect();
        for shift in 1..=(self.emax - self.emin) {
            out.extend(((1i64 << (p - 1))..(1i64 << p)).map(|m| m << shift));
        }
        out
    }

    /// Every finite value in increasing order; zero appears once, as `+0`.
    pub fn finite_values(self) -> Vec<MiniFloat> {
        let pos = self.positive_units();
        let neg = pos.iter().rev().map(|&u| -u);
        neg.chain(std::iter::once(0))
            .chain(pos.iter().copied())
            .map(|u| MiniFloat { params: self, value: Value::Finite(u) })
            .collect()
    }

    /// Number of distinct finite reals.
    pub fn finite_count(self) -> usize {
        let p = self.precision as usize;
        let positive = ((1usize << p) - 1) + (1usize << (p - 1)) * (self.emax - self.emin) as usize;
        2 * positive + 1
    }

    /// Directed rounding of `num / den` units onto the representable grid.
    fn round_units(self, num: i128, den: i128, dir: RoundingDirection) -> MiniFloat {
        debug_assert!(den > 0 && num != 0);
        let negative = num < 0;
        let away = (dir == RoundingDirection::Up) != negative;
        let mag = num.unsigned_abs();
        let den = den as u128;
        let (whole, rem) = (mag / den, mag % den);
        let bits = 128 - whole.leading_zeros();
        let spacing = if bits <= self.precision {
            1
        } else {
            1u128 << (bits - self.precision)
        };
        let below = whole - whole % spacing;
        let exact = rem == 0 && whole % spacing == 0;
        let max = self.max_units() as u128;
        let units = if below > max {
            if away {
                return MiniFloat::infinity(self, negative);
            }
            max
        } else if exact || !away {
            below
        } else if below + spacing > max {
            return MiniFloat::infinity(self, negative);
        } else {
            below + spacing
        };
        if units == 0 {
            return MiniFloat::zero(self, negative);
        }
        let units = units as i64;
        MiniFloat {
            params: self,
            value: Value::Finite(if negative { -units } else { units }),
        }
    }
}

impl Default for MiniParams {
    fn default() -> Self {
        Self::TINY
    }
}

impl fmt::Display for MiniParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} emin={} emax={}", self.precision, self.emin, self.emax)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Value {
    /// Units; `Finite(0)` is `+0`.
    Finite(i64),
    NegZero,
    PosInf,
    NegInf,
    Nan,
}

#[derive(Clone, Copy, Debug)]
pub struct MiniFloat {
    params: MiniParams,
    value: Value,
}

impl MiniFloat {
    /// The finite value `units * 2^(emin - precision + 1)`, if representable.
    pub fn from_units(params: MiniParams, units: i64) -> Option<Self> {
        params.is_representable(units).then_some(MiniFloat {
            params,
            value: Value::Finite(units),
        })
    }

    /// Units of a finite value (both zeros give 0).
    pub fn units(self) -> Option<i64> {
        match self.value {
            Value::Finite(u) => Some(u),
            Value::NegZero => Some(0),
            _ => None,
        }
    }

    fn order_key(self) -> Option<(i8, i64)> {
        match self.value {
            Value::NegInf => Some((-1, 0)),
            Value::Finite(u) => Some((0, u)),
            Value::NegZero => Some((0, 0)),
            Value::PosInf => Some((1, 0)),
            Value::Nan => None,
        }
    }

    fn kernel(self, op: KernelOp, rhs: Self, dir: RoundingDirection) -> Self {
        debug_assert!(!is_undefined_form(op, self, rhs), "undefined form {self} {op:?} {rhs}");
        debug_assert_eq!(self.params, rhs.params);
        if let Some(r) = special_case(op, self, rhs) {
            return r;
        }
        let params = self.params;
        let (u, v) = (
            self.units().expect("finite") as i128,
            rhs.units().expect("finite") as i128,
        );
        let shift = -params.unit_exponent();
        let (num, den) = match op {
            KernelOp::Add => (u + v, 1),
            KernelOp::Sub => (u - v, 1),
            KernelOp::Mul => (u * v, 1i128 << shift),
            KernelOp::Div => {
                let n = u << shift;
                if v < 0 {
                    (-n, -v)
                } else {
                    (n, v)
                }
            }
        };
        if num == 0 {
            let rhs = if op == KernelOp::Sub { rhs.neg() } else { rhs };
            return zero_sum(self, rhs, dir);
        }
        params.round_units(num, den, dir)
    }
}

impl PartialEq for MiniFloat {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd for MiniFloat {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.order_key()?.cmp(&other.order_key()?))
    }
}

impl fmt::Display for MiniFloat {
    /// Exact decimal expansion.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let units = match self.value {
            Value::Nan => return f.write_str("NaN"),
            Value::PosInf => return f.write_str("inf"),
            Value::NegInf => return f.write_str("-inf"),
            Value::NegZero => return f.write_str("-0"),
            Value::Finite(u) => u,
        };
        // units * 2^-k == units * 5^k / 10^k
        let k = (-self.params.unit_exponent()) as usize;
        let digits = (BigInt::from(units.unsigned_abs()) * BigInt::from(5).pow(k as u32)).to_string();
        let digits = format!("{digits:0>width$}", width = k + 1);
        let (int, frac) = digits.split_at(digits.len() - k);
        let frac = frac.trim_end_matches('0');
        let sign = if units < 0 { "-" } else { "" };
        if frac.is_empty() {
            write!(f, "{sign}{int}")
        } else {
            write!(f, "{sign}{int}.{frac}")
        }
    }
}

impl BinaryFormat for MiniFloat {
    type Params = MiniParams;

    fn params(self) -> MiniParams {
        self.params
    }

    fn infinity(params: MiniParams, negative: bool) -> Self {
        let value = if negative { Value::NegInf } else { Value::PosInf };
        MiniFloat { params, value }
    }

    fn zero(params: MiniParams, negative: bool) -> Self {
        let value = if negative { Value::NegZero } else { Value::Finite(0) };
        MiniFloat { params, value }
    }

    fn nan(params: MiniParams) -> Self {
        MiniFloat { params, value: Value::Nan }
    }

    fn is_nan(self) -> bool {
        self.value == Value::Nan
    }

    fn is_infinite(self) -> bool {
        matches!(self.value, Value::PosInf | Value::NegInf)
    }

    fn is_zero(self) -> bool {
        matches!(self.value, Value::Finite(0) | Value::NegZero)
    }

    fn is_sign_negative(self) -> bool {
        match self.value {
            Value::Finite(u) => u < 0,
            Value::NegZero | Value::NegInf => true,
            Value::PosInf | Value::Nan => false,
        }
    }

    fn identical(self, other: Self) -> bool {
        self.params == other.params && self.value == other.value
    }

    fn neg(self) -> Self {
        let value = match self.value {
            Value::Finite(0) => Value::NegZero,
            Value::NegZero => Value::Finite(0),
            Value::Finite(u) => Value::Finite(-u),
            Value::PosInf => Value::NegInf,
            Value::NegInf => Value::PosInf,
            Value::Nan => Value::Nan,
        };
        MiniFloat { params: self.params, value }
    }

    fn add_dir(self, rhs: Self, dir: RoundingDirection) -> Self {
        self.kernel(KernelOp::Add, rhs, dir)
    }

    fn sub_dir(self, rhs: Self, dir: RoundingDirection) -> Self {
        self.kernel(KernelOp::Sub, rhs, dir)
    }

    fn mul_dir(self, rhs: Self, dir: RoundingDirection) -> Self {
        self.kernel(KernelOp::Mul, rhs, dir)
    }

    fn div_dir(self, rhs: Self, dir: RoundingDirection) -> Self {
        self.kernel(KernelOp::Div, rhs, dir)
    }

    fn to_rational(self) -> Option<BigRational> {
        let units = self.units()?;
        Some(rounding::dyadic(
            units < 0,
            units.unsigned_abs(),
            self.params.unit_exponent(),
        ))
    }

    fn from_rational(value: &BigRational, dir: RoundingDirection, params: MiniParams) -> Self {
        match rounding::round_rational(value, params.layout(), dir) {
            Rounded::Zero { negative } => MiniFloat::zero(params, negative),
            Rounded::Infinite { negative } => MiniFloat::infinity(params, negative),
            Rounded::Finite { negative, significand, exponent } => {
                let units = (significand as i64) << (exponent - params.unit_exponent());
                MiniFloat {
                    params,
                    value: Value::Finite(if negative { -units } else { units }),
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;
    use RoundingDirection::*;

    fn tiny(units: i64) -> MiniFloat {
        MiniFloat::from_units(MiniParams::TINY, units).unwrap()
    }

    #[test]
    fn default_format_shape() {
        let p = MiniParams::TINY;
        let values = p.finite_values();
        assert_eq!(values.len(), 47);
        assert_eq!(p.finite_count(), 47);
        assert_eq!(p.max_units(), 112);
        assert_eq!(values.last().unwrap().to_string(), "7");
        assert_eq!(values[24].to_string(), "0.0625");
        assert!(values.windows(2).all(|w| w[0] < w[1]));
        let representable = (-200..=200).filter(|&u| p.is_representable(u)).count();
        assert_eq!(representable, 47);
    }

    #[test]
    fn invalid_formats() {
        assert!(MiniParams::new(0, -2, 2).is_err());
        assert!(MiniParams::new(3, 1, 2).is_err());
        assert!(MiniParams::new(20, -30, 30).is_err());
        assert!(MiniParams::new(4, -3, 3).is_ok());
    }

    #[test]
    fn largest_finite_overflow() {
        let max = tiny(112);
        assert!(max.add_dir(max, Up).is_infinite());
        assert!(max.add_dir(max, Down).identical(max));
    }

    #[test]
    fn one_third_neighbors() {
        let lo = tiny(16).div_dir(tiny(48), Down);
        let hi = tiny(16).div_dir(tiny(48), Up);
        assert_eq!((lo.units(), hi.units()), (Some(5), Some(6)));
    }

    #[test]
    fn signed_zero_rules() {
        let one = tiny(16);
        assert!(one.div_dir(MiniFloat::zero(MiniParams::TINY, true), Up).identical(MiniFloat::infinity(MiniParams::TINY, true)));
        assert!(one.sub_dir(one, Down).identical(MiniFloat::zero(MiniParams::TINY, true)));
        assert!(one.sub_dir(one, Up).identical(MiniFloat::zero(MiniParams::TINY, false)));
        assert_eq!(MiniFloat::zero(MiniParams::TINY, true).to_string(), "-0");
    }

    #[test]
    fn kernels_agree_with_rational_rounding() {
        // integer-grid kernels against the shared rational rounding path
        let values = MiniParams::TINY.finite_values();
        for &a in &values {
            for &b in &values {
                for dir in [Down, Up] {
                    let (x, y) = (a.to_rational().unwrap(), b.to_rational().unwrap());
                    let round = |q: BigRational| MiniFloat::from_rational(&q, dir, MiniParams::TINY);
                    let check = |got: MiniFloat, want: MiniFloat| {
                        assert!(got == want && (got.is_zero() || got.identical(want)), "{a} {b} {dir:?}: {got} vs {want}");
                    };
                    check(a.add_dir(b, dir), round(&x + &y));
                    check(a.sub_dir(b, dir), round(&x - &y));
                    check(a.mul_dir(b, dir), round(&x * &y));
                    if !y.is_zero() {
                        check(a.div_dir(b, dir), round(&x / &y));
                    }
                }
            }
        }
    }
}
