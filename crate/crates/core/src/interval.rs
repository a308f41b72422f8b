//! Floating-point intervals.
//!
//! An [`Interval`] is either empty or a pair `⟨lo, hi⟩` denoting the closed set
//! of reals between its bounds. Infinite bounds only mark unbounded sides; they
//! are never members. Bounds are kept normalized:
//!
//! * `lo <= hi`, `lo != +inf`, `hi != -inf`,
//! * a zero lower bound is `+0` and a zero upper bound is `-0`,
//!
//! so `{0}` is `⟨+0,-0⟩` and every set has exactly one representation.
//! Equality is bitwise on the normalized bounds.

use std::cmp::Ordering;

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::kernel::{normalize_zero_bound, BinaryFormat, BoundSide, RoundingDirection};

/// Sign classification of a nonempty interval `⟨u,v⟩`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum IntervalClass {
    /// `u < 0 < v`
    M,
    /// `u = v = 0`
    Z,
    /// `u = 0 < v`
    P0,
    /// `0 < u`
    P1,
    /// `u < 0 = v`
    N0,
    /// `v < 0`
    N1,
}

impl IntervalClass {
    pub const ALL: [IntervalClass; 6] = [Self::M, Self::Z, Self::P0, Self::P1, Self::N0, Self::N1];

    /// `P = P0 ∪ P1`
    pub fn is_positive(self) -> bool {
        matches!(self, Self::P0 | Self::P1)
    }

    /// `N = N0 ∪ N1`
    pub fn is_negative(self) -> bool {
        matches!(self, Self::N0 | Self::N1)
    }

    pub fn name(self) -> &'static str {
        match self {
            Self::M => "M",
            Self::Z => "Z",
            Self::P0 => "P0",
            Self::P1 => "P1",
            Self::N0 => "N0",
            Self::N1 => "N1",
        }
    }
}

pub(crate) fn class_of<F: BinaryFormat>(lo: F, hi: F) -> IntervalClass {
    let zero = F::zero(lo.params(), false);
    match (lo.partial_cmp(&zero), hi.partial_cmp(&zero)) {
        (Some(Ordering::Greater), _) => IntervalClass::P1,
        (_, Some(Ordering::Less)) => IntervalClass::N1,
        (Some(Ordering::Equal), Some(Ordering::Equal)) => IntervalClass::Z,
        (Some(Ordering::Equal), _) => IntervalClass::P0,
        (_, Some(Ordering::Equal)) => IntervalClass::N0,
        _ => IntervalClass::M,
    }
}

#[derive(Clone, Copy, Debug)]
pub struct Interval<F> {
    bounds: Option<(F, F)>,
}

impl<F: BinaryFormat> PartialEq for Interval<F> {
    fn eq(&self, other: &Self) -> bool {
        match (self.bounds, other.bounds) {
            (None, None) => true,
            (Some((a, b)), Some((c, d))) => a.identical(c) && b.identical(d),
            _ => false,
        }
    }
}

impl<F: BinaryFormat> Eq for Interval<F> {}

impl<F: BinaryFormat> Interval<F> {
    /// Total constructor: normalizes zero signs and returns `Empty` when the
    /// bounds describe no reals. Only NaN is rejected.
    pub fn new(lo: F, hi: F) -> Result<Self> {
        if lo.is_nan() || hi.is_nan() {
            return Err(Error::NanBound);
        }
        Ok(Self::from_bounds(lo, hi))
    }

    /// [`Interval::new`] for bounds already known not to be NaN (kernel outputs).
    pub(crate) fn from_bounds(lo: F, hi: F) -> Self {
        let lo = normalize_zero_bound(lo, BoundSide::Lower);
        let hi = normalize_zero_bound(hi, BoundSide::Upper);
        let empty = lo > hi
            || (lo.is_infinite() && !lo.is_sign_negative())
            || (hi.is_infinite() && hi.is_sign_negative());
        if empty {
            Self::empty()
        } else {
            Interval { bounds: Some((lo, hi)) }
        }
    }

    pub fn empty() -> Self {
        Interval { bounds: None }
    }

    /// `⟨-inf,+inf⟩`, the whole real line.
    pub fn entire() -> Self {
        Self::entire_in(F::Params::default())
    }

    pub fn entire_in(params: F::Params) -> Self {
        Interval {
            bounds: Some((F::infinity(params, true), F::infinity(params, false))),
        }
    }

    /// `⟨+0,-0⟩`, the singleton `{0}`.
    pub fn zero() -> Self {
        Self::zero_in(F::Params::default())
    }

    pub fn zero_in(params: F::Params) -> Self {
        Interval {
            bounds: Some((F::zero(params, false), F::zero(params, true))),
        }
    }

    /// Degenerate interval `⟨x,x⟩` (or `Empty` for an infinite `x`).
    pub fn point(x: F) -> Result<Self> {
        Self::new(x, x)
    }

    pub fn is_empty(&self) -> bool {
        self.bounds.is_none()
    }

    pub fn bounds(&self) -> Option<(F, F)> {
        self.bounds
    }

    pub fn lo(&self) -> Option<F> {
        self.bounds.map(|(lo, _)| lo)
    }

    pub fn hi(&self) -> Option<F> {
        self.bounds.map(|(_, hi)| hi)
    }

    pub fn classify(&self) -> Result<IntervalClass> {
        self.bounds
            .map(|(lo, hi)| class_of(lo, hi))
            .ok_or(Error::ClassifyEmpty)
    }

    /// Is the real number `x` in the set? Zero signs play no role.
    pub fn contains_rational(&self, x: &BigRational) -> bool {
        let Some((lo, hi)) = self.bounds else {
            return false;
        };
        let above_lo = match lo.to_rational() {
            Some(l) => l <= *x,
            None => true,
        };
        let below_hi = match hi.to_rational() {
            Some(h) => *x <= h,
            None => true,
        };
        above_lo && below_hi
    }

    /// Is the finite value `x` in the set?
    pub fn contains(&self, x: F) -> bool {
        match self.bounds {
            Some((lo, hi)) => x.is_finite() && lo <= x && x <= hi,
            None => false,
        }
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        match (self.bounds, other.bounds) {
            (None, _) => true,
            (Some(_), None) => false,
            (Some((a, b)), Some((c, d))) => c <= a && b <= d,
        }
    }

    pub fn intersect(&self, other: &Self) -> Self {
        match (self.bounds, other.bounds) {
            (Some((a, b)), Some((c, d))) => {
                let lo = if a >= c { a } else { c };
                let hi = if b <= d { b } else { d };
                Self::from_bounds(lo, hi)
            }
            _ => Self::empty(),
        }
    }

    /// Least interval containing both operands.
    pub fn hull(&self, other: &Self) -> Self {
        match (self.bounds, other.bounds) {
            (None, _) => *other,
            (_, None) => *self,
            (Some((a, b)), Some((c, d))) => {
                let lo = if a <= c { a } else { c };
                let hi = if b >= d { b } else { d };
                Self::from_bounds(lo, hi)
            }
        }
    }

    /// Least interval containing the real `x`.
    pub fn phi_point(x: &BigRational) -> Self {
        Self::phi_point_in(x, F::Params::default())
    }

    pub fn phi_point_in(x: &BigRational, params: F::Params) -> Self {
        Self::from_bounds(
            F::from_rational(x, RoundingDirection::Down, params),
            F::from_rational(x, RoundingDirection::Up, params),
        )
    }

    /// Re-express the bounds in another format with the same values.
    pub fn map<G: BinaryFormat>(&self, f: impl Fn(F) -> G) -> Interval<G> {
        match self.bounds {
            Some((lo, hi)) => Interval::from_bounds(f(lo), f(hi)),
            None => Interval::empty(),
        }
    }
}
