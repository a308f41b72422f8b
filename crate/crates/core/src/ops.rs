//! The four interval operations.
//!
//! Sums and differences use the endpoint formulas directly. Products and
//! quotients dispatch on the sign classes of both operands; each row of the
//! dispatch computes each bound with a single directed kernel call (the
//! `M × M` product needs two per bound), and the classification alone keeps
//! every kernel call away from `0 * inf`, `inf / inf` and `0 / 0`.
//!
//! Division is relational: `X ⊘ Y` is the least interval (or pair of
//! intervals) containing `{z | z*y = x for some x in X, y in Y}`. For a
//! zero-free dividend, divisors with a zero endpoint need no special casing:
//! the normalized `+0`/`-0` bound makes the generic formula produce the
//! infinity of the right sign.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::interval::{class_of, Interval, IntervalClass};
use crate::kernel::{BinaryFormat, RoundingDirection::{Down, Up}};

/// Result of relational division before any hulling.
#[derive(Clone, Copy, Debug)]
pub enum DivResult<F> {
    Empty,
    Single(Interval<F>),
    /// `(negative part, positive part)`; only for a zero-free dividend over
    /// a divisor of class `M`.
    Split(Interval<F>, Interval<F>),
}

impl<F: BinaryFormat> DivResult<F> {
    /// Least single interval containing the result.
    pub fn hull(&self) -> Interval<F> {
        match self {
            DivResult::Empty => Interval::empty(),
            DivResult::Single(x) => *x,
            DivResult::Split(neg, pos) => neg.hull(pos),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, DivResult::Empty)
    }

    /// The parts in order (none, one, or negative-then-positive).
    pub fn parts(&self) -> Vec<Interval<F>> {
        match self {
            DivResult::Empty => vec![],
            DivResult::Single(x) => vec![*x],
            DivResult::Split(a, b) => vec![*a, *b],
        }
    }

    /// Negate every part, keeping the negative part first.
    pub fn negate(&self) -> Self {
        match self {
            DivResult::Empty => DivResult::Empty,
            DivResult::Single(x) => DivResult::Single(negate(*x)),
            DivResult::Split(neg, pos) => DivResult::Split(negate(*pos), negate(*neg)),
        }
    }
}

impl<F: BinaryFormat> PartialEq for DivResult<F> {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (DivResult::Empty, DivResult::Empty) => true,
            (DivResult::Single(a), DivResult::Single(b)) => a == b,
            (DivResult::Split(a, b), DivResult::Split(c, d)) => a == c && b == d,
            _ => false,
        }
    }
}

impl<F: BinaryFormat> Eq for DivResult<F> {}

impl<F: BinaryFormat> From<Interval<F>> for DivResult<F> {
    fn from(x: Interval<F>) -> Self {
        if x.is_empty() {
            DivResult::Empty
        } else {
            DivResult::Single(x)
        }
    }
}

/// Sign class with `P0/P1` and `N0/N1` merged; all multiplication needs.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Sign {
    P,
    M,
    N,
    Z,
}

fn sign_of(class: IntervalClass) -> Sign {
    match class {
        IntervalClass::P0 | IntervalClass::P1 => Sign::P,
        IntervalClass::N0 | IntervalClass::N1 => Sign::N,
        IntervalClass::M => Sign::M,
        IntervalClass::Z => Sign::Z,
    }
}

fn min<F: BinaryFormat>(a: F, b: F) -> F {
    if a <= b {
        a
    } else {
        b
    }
}

fn max<F: BinaryFormat>(a: F, b: F) -> F {
    if a >= b {
        a
    } else {
        b
    }
}

pub fn add<F: BinaryFormat>(x: Interval<F>, y: Interval<F>) -> Interval<F> {
    match (x.bounds(), y.bounds()) {
        (Some((a, b)), Some((c, d))) => Interval::from_bounds(a.add_dir(c, Down), b.add_dir(d, Up)),
        _ => Interval::empty(),
    }
}

pub fn sub<F: BinaryFormat>(x: Interval<F>, y: Interval<F>) -> Interval<F> {
    match (x.bounds(), y.bounds()) {
        (Some((a, b)), Some((c, d))) => Interval::from_bounds(a.sub_dir(d, Down), b.sub_dir(c, Up)),
        _ => Interval::empty(),
    }
}

pub fn negate<F: BinaryFormat>(x: Interval<F>) -> Interval<F> {
    match x.bounds() {
        Some((a, b)) => Interval::from_bounds(b.neg(), a.neg()),
        None => Interval::empty(),
    }
}

pub fn mul<F: BinaryFormat>(x: Interval<F>, y: Interval<F>) -> Interval<F> {
    let (Some((a, b)), Some((c, d))) = (x.bounds(), y.bounds()) else {
        return Interval::empty();
    };
    let (lo, hi) = match (sign_of(class_of(a, b)), sign_of(class_of(c, d))) {
        (Sign::Z, _) | (_, Sign::Z) => return Interval::zero_in(a.params()),
        (Sign::P, Sign::P) => (a.mul_dir(c, Down), b.mul_dir(d, Up)),
        (Sign::P, Sign::M) => (b.mul_dir(c, Down), b.mul_dir(d, Up)),
        (Sign::P, Sign::N) => (b.mul_dir(c, Down), a.mul_dir(d, Up)),
        (Sign::M, Sign::P) => (a.mul_dir(d, Down), b.mul_dir(d, Up)),
        (Sign::M, Sign::M) => (
            min(a.mul_dir(d, Down), b.mul_dir(c, Down)),
            max(a.mul_dir(c, Up), b.mul_dir(d, Up)),
        ),
        (Sign::M, Sign::N) => (b.mul_dir(c, Down), a.mul_dir(c, Up)),
        (Sign::N, Sign::P) => (a.mul_dir(d, Down), b.mul_dir(c, Up)),
        (Sign::N, Sign::M) => (a.mul_dir(d, Down), a.mul_dir(c, Up)),
        (Sign::N, Sign::N) => (b.mul_dir(d, Down), a.mul_dir(c, Up)),
    };
    Interval::from_bounds(lo, hi)
}

/// Relational division `X ⊘ Y`.
pub fn div<F: BinaryFormat>(x: Interval<F>, y: Interval<F>) -> DivResult<F> {
    use IntervalClass::*;

    let (Some((a, b)), Some((c, d))) = (x.bounds(), y.bounds()) else {
        return DivResult::Empty;
    };
    let params = a.params();
    let entire = DivResult::Single(Interval::entire_in(params));
    let zero = F::zero(params, false);
    let neg_zero = F::zero(params, true);
    let neg_inf = F::infinity(params, true);
    let pos_inf = F::infinity(params, false);
    let single = |lo: F, hi: F| DivResult::Single(Interval::from_bounds(lo, hi));

    match (class_of(a, b), class_of(c, d)) {
        // z * 0 = x has a solution only for x = 0, and then every z solves it.
        (P1 | N1, Z) => DivResult::Empty,
        (_, Z) => entire,
        (Z, P1 | N1) => DivResult::Single(Interval::zero_in(params)),
        (Z, _) => entire,
        // 0 in both operands: z * 0 = 0 holds for every z
        (P0 | N0, P0 | N0) => entire,

        (P1, P0 | P1) => single(a.div_dir(d, Down), b.div_dir(c, Up)),
        (P0, P1) => single(zero, b.div_dir(c, Up)),
        (M, P0 | P1) => single(a.div_dir(c, Down), b.div_dir(c, Up)),
        (N0, P1) => single(a.div_dir(c, Down), neg_zero),
        (N1, P0 | P1) => single(a.div_dir(c, Down), b.div_dir(d, Up)),

        (P1, M) => DivResult::Split(
            Interval::from_bounds(neg_inf, a.div_dir(c, Up)),
            Interval::from_bounds(a.div_dir(d, Down), pos_inf),
        ),
        (P0 | M | N0, M) => entire,
        (N1, M) => DivResult::Split(
            Interval::from_bounds(neg_inf, b.div_dir(d, Up)),
            Interval::from_bounds(b.div_dir(c, Down), pos_inf),
        ),

        (P1, N0 | N1) => single(b.div_dir(d, Down), a.div_dir(c, Up)),
        (P0, N1) => single(b.div_dir(d, Down), neg_zero),
        (M, N0 | N1) => single(b.div_dir(d, Down), a.div_dir(d, Up)),
        (N0, N1) => single(zero, a.div_dir(d, Up)),
        (N1, N0 | N1) => single(b.div_dir(c, Down), a.div_dir(d, Up)),
    }
}

/// [`div`] collapsed to a single interval.
pub fn div_hull<F: BinaryFormat>(x: Interval<F>, y: Interval<F>) -> Interval<F> {
    div(x, y).hull()
}

impl<F: BinaryFormat> Add for Interval<F> {
    type Output = Interval<F>;
    fn add(self, rhs: Self) -> Self {
        add(self, rhs)
    }
}

impl<F: BinaryFormat> Sub for Interval<F> {
    type Output = Interval<F>;
    fn sub(self, rhs: Self) -> Self {
        sub(self, rhs)
    }
}

impl<F: BinaryFormat> Mul for Interval<F> {
    type Output = Interval<F>;
    fn mul(self, rhs: Self) -> Self {
        mul(self, rhs)
    }
}

impl<F: BinaryFormat> Neg for Interval<F> {
    type Output = Interval<F>;
    fn neg(self) -> Self {
        negate(self)
    }
}

impl<F: BinaryFormat> fmt::Display for DivResult<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::render::render_div(self, crate::render::Style::default()))
    }
}
