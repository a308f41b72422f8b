//! Counting wrapper around a format's kernels.
//!
//! `Counted<F>` behaves exactly like `F` but records every kernel call in
//! per-thread counters. Undefined forms are recorded and answered with NaN
//! instead of being forwarded, so a fuzzing harness can report them rather
//! than trap on them.

use std::cell::Cell;
use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;

use super::{is_undefined_form, BinaryFormat, KernelOp, RoundingDirection};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct KernelCounts {
    pub add: u64,
    pub sub: u64,
    pub mul: u64,
    pub div: u64,
    /// Calls that hit `inf - inf`, `inf / inf`, `0 * inf`, `0 / 0` or a NaN operand.
    pub undefined: u64,
    /// Kernel results that came out NaN.
    pub nan_results: u64,
}

impl KernelCounts {
    pub fn total_calls(&self) -> u64 {
        self.add + self.sub + self.mul + self.div
    }
}

thread_local! {
    static COUNTS: Cell<KernelCounts> = const { Cell::new(KernelCounts {
        add: 0, sub: 0, mul: 0, div: 0, undefined: 0, nan_results: 0,
    }) };
}

/// Zero this thread's counters.
pub fn reset() {
    COUNTS.with(|c| c.set(KernelCounts::default()));
}

/// This thread's counters.
pub fn counts() -> KernelCounts {
    COUNTS.with(Cell::get)
}

fn record<F: BinaryFormat>(op: KernelOp, a: F, b: F, run: impl FnOnce() -> F) -> F {
    let undefined = is_undefined_form(op, a, b);
    let result = if undefined { F::nan(a.params()) } else { run() };
    COUNTS.with(|c| {
        let mut k = c.get();
        match op {
            KernelOp::Add => k.add += 1,
            KernelOp::Sub => k.sub += 1,
            KernelOp::Mul => k.mul += 1,
            KernelOp::Div => k.div += 1,
        }
        k.undefined += undefined as u64;
        k.nan_results += result.is_nan() as u64;
        c.set(k);
    });
    result
}

#[derive(Clone, Copy, Debug)]
pub struct Counted<F>(pub F);

impl<F: PartialEq> PartialEq for Counted<F> {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0
    }
}

impl<F: PartialOrd> PartialOrd for Counted<F> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.0.partial_cmp(&other.0)
    }
}

impl<F: fmt::Display> fmt::Display for Counted<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl<F: BinaryFormat> BinaryFormat for Counted<F> {
    type Params = F::Params;

    fn params(self) -> F::Params {
        self.0.params()
    }
    fn infinity(params: F::Params, negative: bool) -> Self {
        Counted(F::infinity(params, negative))
    }
    fn zero(params: F::Params, negative: bool) -> Self {
        Counted(F::zero(params, negative))
    }
    fn nan(params: F::Params) -> Self {
        Counted(F::nan(params))
    }
    fn is_nan(self) -> bool {
        self.0.is_nan()
    }
    fn is_infinite(self) -> bool {
        self.0.is_infinite()
    }
    fn is_zero(self) -> bool {
        self.0.is_zero()
    }
    fn is_sign_negative(self) -> bool {
        self.0.is_sign_negative()
    }
    fn identical(self, other: Self) -> bool {
        self.0.identical(other.0)
    }
    fn neg(self) -> Self {
        Counted(self.0.neg())
    }
    fn add_dir(self, rhs: Self, dir: RoundingDirection) -> Self {
        record(KernelOp::Add, self, rhs, || Counted(self.0.add_dir(rhs.0, dir)))
    }
    fn sub_dir(self, rhs: Self, dir: RoundingDirection) -> Self {
        record(KernelOp::Sub, self, rhs, || Counted(self.0.sub_dir(rhs.0, dir)))
    }
    fn mul_dir(self, rhs: Self, dir: RoundingDirection) -> Self {
        record(KernelOp::Mul, self, rhs, || Counted(self.0.mul_dir(rhs.0, dir)))
    }
    fn div_dir(self, rhs: Self, dir: RoundingDirection) -> Self {
        record(KernelOp::Div, self, rhs, || Counted(self.0.div_dir(rhs.0, dir)))
    }
    fn to_decimal_string(self) -> String {
        self.0.to_decimal_string()
    }
    fn to_rational(self) -> Option<BigRational> {
        self.0.to_rational()
    }
    fn from_rational(value: &BigRational, dir: RoundingDirection, params: F::Params) -> Self {
        Counted(F::from_rational(value, dir, params))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use RoundingDirection::*;

    #[test]
    fn counts_calls_and_undefined_forms() {
        reset();
        let one = Counted(1.0f64);
        let inf = Counted(f64::INFINITY);
        let _ = one.mul_dir(one, Down);
        let _ = one.add_dir(one, Up);
        let r = Counted(0.0f64).mul_dir(inf, Up);
        assert!(r.is_nan());
        let k = counts();
        assert_eq!((k.add, k.mul, k.undefined, k.nan_results), (1, 2, 1, 1));
        reset();
        assert_eq!(counts().total_calls(), 0);
    }
}
