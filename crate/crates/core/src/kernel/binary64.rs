//! `f64` kernels.
//!
//! Round-to-nearest result plus an exact error term (Fast2Sum for sums, FMA
//! residuals for products and quotients), then one step toward the requested
//! direction when the error points that way. Where the error term is no
//! longer exactly representable (deep underflow) the exact rational kernel
//! takes over.

use num_rational::BigRational;

use super::rounding::{self, Layout, Rounded};
use super::{exact_kernel, is_undefined_form, special_case, zero_sum, BinaryFormat, KernelOp, RoundingDirection};

const LAYOUT: Layout = Layout { precision: 53, emin: -1022, emax: 1023 };

/// Below this magnitude (2^-968) the FMA residual of a product may underflow.
const MUL_EXACT_THRESHOLD: f64 = f64::from_bits(55 << 52);
/// Smallest quotient (2^-1000) whose FMA remainder is still exact.
const DIV_QUOTIENT_THRESHOLD: f64 = f64::from_bits(23 << 52);

fn overflowed(rn: f64, dir: RoundingDirection) -> f64 {
    match (rn > 0.0, dir) {
        (true, RoundingDirection::Up) => f64::INFINITY,
        (true, RoundingDirection::Down) => f64::MAX,
        (false, RoundingDirection::Up) => -f64::MAX,
        (false, RoundingDirection::Down) => f64::NEG_INFINITY,
    }
}

/// `rn` is the nearest result, `err` has the sign of `exact - rn`.
#[inline]
fn nudge(rn: f64, err: f64, dir: RoundingDirection) -> f64 {
    match dir {
        RoundingDirection::Up if err > 0.0 => rn.next_up(),
        RoundingDirection::Down if err < 0.0 => rn.next_down(),
        _ => rn,
    }
}

fn add64(a: f64, b: f64, dir: RoundingDirection) -> f64 {
    if let Some(r) = special_case(KernelOp::Add, a, b) {
        return r;
    }
    let (big, small) = if a.abs() >= b.abs() { (a, b) } else { (b, a) };
    let s = big + small;
    if s.is_infinite() {
        return overflowed(s, dir);
    }
    if s == 0.0 {
        return zero_sum(a, b, dir);
    }
    let err = small - (s - big);
    nudge(s, err, dir)
}

impl BinaryFormat for f64 {
    type Params = ();

    fn params(self) {}

    fn infinity(_: (), negative: bool) -> f64 {
        if negative {
            f64::NEG_INFINITY
        } else {
            f64::INFINITY
        }
    }

    fn zero(_: (), negative: bool) -> f64 {
        if negative {
            -0.0
        } else {
            0.0
        }
    }

    fn nan(_: ()) -> f64 {
        f64::NAN
    }

    fn is_nan(self) -> bool {
        f64::is_nan(self)
    }

    fn is_infinite(self) -> bool {
        f64::is_infinite(self)
    }

    fn is_zero(self) -> bool {
        self == 0.0
    }

    fn is_sign_negative(self) -> bool {
        f64::is_sign_negative(self)
    }

    fn identical(self, other: f64) -> bool {
        self.to_bits() == other.to_bits()
    }

    fn neg(self) -> f64 {
        -self
    }

    fn add_dir(self, rhs: f64, dir: RoundingDirection) -> f64 {
        debug_assert!(!is_undefined_form(KernelOp::Add, self, rhs), "undefined form {self} + {rhs}");
        add64(self, rhs, dir)
    }

    fn sub_dir(self, rhs: f64, dir: RoundingDirection) -> f64 {
        debug_assert!(!is_undefined_form(KernelOp::Sub, self, rhs), "undefined form {self} - {rhs}");
        add64(self, -rhs, dir)
    }

    fn mul_dir(self, rhs: f64, dir: RoundingDirection) -> f64 {
        debug_assert!(!is_undefined_form(KernelOp::Mul, self, rhs), "undefined form {self} * {rhs}");
        if let Some(r) = special_case(KernelOp::Mul, self, rhs) {
            return r;
        }
        let p = self * rhs;
        if p.is_infinite() {
            return overflowed(p, dir);
        }
        if p.abs() < MUL_EXACT_THRESHOLD {
            return exact_kernel(KernelOp::Mul, self, rhs, dir);
        }
        let err = self.mul_add(rhs, -p);
        nudge(p, err, dir)
    }

    fn div_dir(self, rhs: f64, dir: RoundingDirection) -> f64 {
        debug_assert!(!is_undefined_form(KernelOp::Div, self, rhs), "undefined form {self} / {rhs}");
        if let Some(r) = special_case(KernelOp::Div, self, rhs) {
            return r;
        }
        let q = self / rhs;
        if q.is_infinite() {
            return overflowed(q, dir);
        }
        if q.abs() < DIV_QUOTIENT_THRESHOLD || self.abs() < MUL_EXACT_THRESHOLD {
            return exact_kernel(KernelOp::Div, self, rhs, dir);
        }
        // exact/rhs - q = r/rhs
        let r = (-q).mul_add(rhs, self);
        let err = if rhs > 0.0 { r } else { -r };
        nudge(q, err, dir)
    }

    fn to_decimal_string(self) -> String {
        let mag = self.abs();
        if self.is_finite() && mag != 0.0 && !(1e-5..1e16).contains(&mag) {
            format!("{self:e}")
        } else {
            format!("{self}")
        }
    }

    fn to_rational(self) -> Option<BigRational> {
        if !self.is_finite() {
            return None;
        }
        let bits = self.to_bits();
        let biased = ((bits >> 52) & 0x7ff) as i32;
        let fraction = bits & ((1u64 << 52) - 1);
        let (significand, exponent) = if biased == 0 {
            (fraction, -1074)
        } else {
            (fraction | (1u64 << 52), biased - 1075)
        };
        Some(rounding::dyadic(self.is_sign_negative(), significand, exponent))
    }

    fn from_rational(value: &BigRational, dir: RoundingDirection, _: ()) -> f64 {
        match rounding::round_rational(value, LAYOUT, dir) {
            Rounded::Zero { negative } => f64::zero((), negative),
            Rounded::Infinite { negative } => f64::infinity((), negative),
            Rounded::Finite { negative, significand, exponent } => {
                let bits = if significand >= 1u64 << 52 {
                    (((exponent + 1075) as u64) << 52) | (significand - (1u64 << 52))
                } else {
                    debug_assert_eq!(exponent, -1074);
                    significand
                };
                let v = f64::from_bits(bits);
                if negative {
                    -v
                } else {
                    v
                }
            }
        }
    }
}
