//! Directed-rounding scalar kernels.
//!
//! Everything that depends on raw floating-point semantics lives here. The
//! interval layer only ever calls the four `*_dir` kernels, the sign and class
//! predicates of [`BinaryFormat`], and [`normalize_zero_bound`].
//!
//! Every kernel returns the *correctly rounded* directed result: the greatest
//! representable value not above the exact extended-real result (`Down`) or
//! the least one not below it (`Up`). The undefined extended-real forms
//! `inf - inf`, `inf / inf`, `0 * inf` and `0 / 0` are contract violations; debug
//! builds trap on them.

use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

mod binary64;
pub mod instrument;
pub(crate) mod rounding;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RoundingDirection {
    /// Toward negative infinity.
    Down,
    /// Toward positive infinity.
    Up,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BoundSide {
    Lower,
    Upper,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum KernelOp {
    Add,
    Sub,
    Mul,
    Div,
}

/// A binary floating-point format usable as an interval endpoint.
///
/// Values include both signed zeros and both infinities. NaN exists in every
/// format but is never a legal bound. `PartialEq`/`PartialOrd` are numeric,
/// so `-0 == +0`; use [`BinaryFormat::identical`] to tell them apart.
pub trait BinaryFormat:
    Copy + PartialEq + PartialOrd + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    /// Runtime format parameters; `()` for the native formats.
    type Params: Copy + Default + PartialEq + fmt::Debug + Send + Sync + 'static;

    fn params(self) -> Self::Params;
    fn infinity(params: Self::Params, negative: bool) -> Self;
    fn zero(params: Self::Params, negative: bool) -> Self;
    fn nan(params: Self::Params) -> Self;

    fn is_nan(self) -> bool;
    fn is_infinite(self) -> bool;
    fn is_zero(self) -> bool;
    fn is_sign_negative(self) -> bool;

    /// Bitwise identity: distinguishes `-0` from `+0`.
    fn identical(self, other: Self) -> bool;

    /// Exact negation (sign flip).
    fn neg(self) -> Self;

    fn add_dir(self, rhs: Self, dir: RoundingDirection) -> Self;
    fn sub_dir(self, rhs: Self, dir: RoundingDirection) -> Self {
        self.add_dir(rhs.neg(), dir)
    }
    fn mul_dir(self, rhs: Self, dir: RoundingDirection) -> Self;
    fn div_dir(self, rhs: Self, dir: RoundingDirection) -> Self;

    /// Exact value, or `None` for infinities and NaN.
    fn to_rational(self) -> Option<BigRational>;

    /// Directed rounding of an exact rational into this format.
    fn from_rational(value: &BigRational, dir: RoundingDirection, params: Self::Params) -> Self;

    fn is_finite(self) -> bool {
        !self.is_nan() && !self.is_infinite()
    }

    /// Compact decimal text for display. Need not be exact.
    fn to_decimal_string(self) -> String {
        self.to_string()
    }
}

pub fn add_dir<F: BinaryFormat>(a: F, b: F, dir: RoundingDirection) -> F {
    a.add_dir(b, dir)
}

pub fn sub_dir<F: BinaryFormat>(a: F, b: F, dir: RoundingDirection) -> F {
    a.sub_dir(b, dir)
}

pub fn mul_dir<F: BinaryFormat>(a: F, b: F, dir: RoundingDirection) -> F {
    a.mul_dir(b, dir)
}

pub fn div_dir<F: BinaryFormat>(a: F, b: F, dir: RoundingDirection) -> F {
    a.div_dir(b, dir)
}

/// Greatest representable value `<= x`, in the default parameters of `F`.
pub fn round_real_down<F: BinaryFormat>(x: &BigRational) -> F {
    F::from_rational(x, RoundingDirection::Down, F::Params::default())
}

/// Least representable value `>= x`, in the default parameters of `F`.
pub fn round_real_up<F: BinaryFormat>(x: &BigRational) -> F {
    F::from_rational(x, RoundingDirection::Up, F::Params::default())
}

/// A zero lower bound is `+0`, a zero upper bound is `-0`; anything else
/// passes through unchanged.
pub fn normalize_zero_bound<F: BinaryFormat>(v: F, side: BoundSide) -> F {
    debug_assert!(!v.is_nan(), "NaN bound");
    if v.is_zero() {
        F::zero(v.params(), side == BoundSide::Upper)
    } else {
        v
    }
}

/// True when `a op b` is one of the undefined extended-real forms, or an
/// operand is NaN.
pub fn is_undefined_form<F: BinaryFormat>(op: KernelOp, a: F, b: F) -> bool {
    if a.is_nan() || b.is_nan() {
        return true;
    }
    let opposite = a.is_sign_negative() != b.is_sign_negative();
    match op {
        KernelOp::Add => a.is_infinite() && b.is_infinite() && opposite,
        KernelOp::Sub => a.is_infinite() && b.is_infinite() && !opposite,
        KernelOp::Mul => (a.is_zero() && b.is_infinite()) || (a.is_infinite() && b.is_zero()),
        KernelOp::Div => (a.is_zero() && b.is_zero()) || (a.is_infinite() && b.is_infinite()),
    }
}

/// Results that need no rounding: anything with an infinite operand, and zero
/// operands of `*` and `/`. Returns `None` when both operands are finite and
/// the exact result must be computed.
pub(crate) fn special_case<F: BinaryFormat>(op: KernelOp, a: F, b: F) -> Option<F> {
    let params = a.params();
    if is_undefined_form(op, a, b) {
        return Some(F::nan(params));
    }
    let xor = a.is_sign_negative() != b.is_sign_negative();
    match op {
        KernelOp::Add => {
            if a.is_infinite() {
                Some(a)
            } else if b.is_infinite() {
                Some(b)
            } else {
                None
            }
        }
        KernelOp::Sub => {
            if a.is_infinite() {
                Some(a)
            } else if b.is_infinite() {
                Some(b.neg())
            } else {
                None
            }
        }
        KernelOp::Mul => {
            if a.is_infinite() || b.is_infinite() {
                Some(F::infinity(params, xor))
            } else if a.is_zero() || b.is_zero() {
                Some(F::zero(params, xor))
            } else {
                None
            }
        }
        KernelOp::Div => {
            if a.is_infinite() || b.is_zero() {
                Some(F::infinity(params, xor))
            } else if b.is_infinite() || a.is_zero() {
                Some(F::zero(params, xor))
            } else {
                None
            }
        }
    }
}

/// Sign of an exact zero sum `a + b`: two zeros of the same sign keep it;
/// any other exact cancellation is `-0` when rounding down and `+0` when
/// rounding up.
pub(crate) fn zero_sum<F: BinaryFormat>(a: F, b: F, dir: RoundingDirection) -> F {
    let negative = if a.is_zero() && b.is_zero() && a.is_sign_negative() == b.is_sign_negative() {
        a.is_sign_negative()
    } else {
        dir == RoundingDirection::Down
    };
    F::zero(a.params(), negative)
}

/// Reference kernel: exact rational evaluation followed by one directed
/// rounding. Every format can use it; `f64` falls back to it where its
/// error-free transformations stop being exact.
pub(crate) fn exact_kernel<F: BinaryFormat>(op: KernelOp, a: F, b: F, dir: RoundingDirection) -> F {
    if let Some(r) = special_case(op, a, b) {
        return r;
    }
    let (x, y) = (
        a.to_rational().expect("finite operand"),
        b.to_rational().expect("finite operand"),
    );
    let exact = match op {
        KernelOp::Add => x + y,
        KernelOp::Sub => x - y,
        KernelOp::Mul => x * y,
        KernelOp::Div => x / y,
    };
    if exact.is_zero() {
        // only reachable for sums and differences
        let b = if op == KernelOp::Sub { b.neg() } else { b };
        return zero_sum(a, b, dir);
    }
    F::from_rational(&exact, dir, a.params())
}
