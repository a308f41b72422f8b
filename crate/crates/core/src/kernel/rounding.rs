//! Directed rounding of exact rationals onto a binary floating-point layout.

use num_bigint::BigUint;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::RoundingDirection;

/// Shape of a binary format: `precision` significand bits (hidden bit
/// included) and the exponent range of the normal numbers.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Layout {
    pub precision: u32,
    pub emin: i32,
    pub emax: i32,
}

/// A rounded value: `significand * 2^exponent`, with `significand < 2^precision`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Rounded {
    Zero { negative: bool },
    Finite { negative: bool, significand: u64, exponent: i32 },
    Infinite { negative: bool },
}

impl Layout {
    fn max_finite(self, negative: bool) -> Rounded {
        Rounded::Finite {
            negative,
            significand: (1u64 << self.precision) - 1,
            exponent: self.emax - (self.precision as i32 - 1),
        }
    }
}

/// `num >= den * 2^k`
fn at_least_pow2(num: &BigUint, den: &BigUint, k: i64) -> bool {
    if k >= 0 {
        *num >= den << (k as u64)
    } else {
        (num << ((-k) as u64)) >= *den
    }
}

/// Greatest representable value `<= value` (Down) or least `>= value` (Up).
pub(crate) fn round_rational(value: &BigRational, layout: Layout, dir: RoundingDirection) -> Rounded {
    if value.is_zero() {
        return Rounded::Zero { negative: false };
    }
    let negative = value.is_negative();
    // Rounding the magnitude away from zero.
    let away = (dir == RoundingDirection::Up) != negative;
    let num = value.numer().magnitude();
    let den = value.denom().magnitude();
    let p = layout.precision as i64;

    // k = floor(log2 |value|)
    let mut k = num.bits() as i64 - den.bits() as i64;
    if !at_least_pow2(num, den, k) {
        k -= 1;
    }
    if k > layout.emax as i64 {
        return if away {
            Rounded::Infinite { negative }
        } else {
            layout.max_finite(negative)
        };
    }

    let mut exponent = k.max(layout.emin as i64) - (p - 1);
    let (quot, rem) = if exponent <= 0 {
        (num << ((-exponent) as u64)).div_rem(den)
    } else {
        num.div_rem(&(den << (exponent as u64)))
    };
    let mut significand = quot.to_u64().expect("significand fits the layout precision");
    if away && !rem.is_zero() {
        significand += 1;
    }
    if significand == 1u64 << p {
        significand = 1u64 << (p - 1);
        exponent += 1;
        if exponent + (p - 1) > layout.emax as i64 {
            return Rounded::Infinite { negative };
        }
    }
    if significand == 0 {
        Rounded::Zero { negative }
    } else {
        Rounded::Finite {
            negative,
            significand,
            exponent: exponent as i32,
        }
    }
}

/// Exact rational value of `significand * 2^exponent`.
pub(crate) fn dyadic(negative: bool, significand: u64, exponent: i32) -> BigRational {
    let mut numer = num_bigint::BigInt::from(significand);
    if negative {
        numer = -numer;
    }
    if exponent >= 0 {
        BigRational::from_integer(numer << (exponent as u32))
    } else {
        let den = num_bigint::BigInt::one() << ((-exponent) as u32);
        BigRational::new(numer, den)
    }
}
