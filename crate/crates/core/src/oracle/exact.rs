//! Exact extended reals and sets of reals.

use std::cmp::Ordering;
use std::fmt;

use num_rational::BigRational;

use crate::kernel::BinaryFormat;

/// A rational number or one of the two infinities.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ExtRational {
    NegInf,
    Finite(BigRational),
    PosInf,
}

impl ExtRational {
    pub fn from_format<F: BinaryFormat>(x: F) -> Self {
        match x.to_rational() {
            Some(q) => ExtRational::Finite(q),
            None if x.is_sign_negative() => ExtRational::NegInf,
            None => ExtRational::PosInf,
        }
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, ExtRational::Finite(_))
    }

    pub fn neg(&self) -> Self {
        match self {
            ExtRational::NegInf => ExtRational::PosInf,
            ExtRational::Finite(q) => ExtRational::Finite(-q),
            ExtRational::PosInf => ExtRational::NegInf,
        }
    }
}

impl fmt::Display for ExtRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtRational::NegInf => f.write_str("-inf"),
            ExtRational::Finite(q) => write!(f, "{q}"),
            ExtRational::PosInf => f.write_str("inf"),
        }
    }
}

/// A connected set of reals with explicit endpoint closure. Infinite
/// endpoints are always open.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealInterval {
    pub lo: ExtRational,
    pub lo_closed: bool,
    pub hi: ExtRational,
    pub hi_closed: bool,
}

impl RealInterval {
    /// `[lo, hi]`, with infinite ends open.
    pub fn closed(lo: ExtRational, hi: ExtRational) -> Self {
        RealInterval {
            lo_closed: lo.is_finite(),
            hi_closed: hi.is_finite(),
            lo,
            hi,
        }
    }

    pub fn point(x: BigRational) -> Self {
        Self::closed(ExtRational::Finite(x.clone()), ExtRational::Finite(x))
    }

    pub fn entire() -> Self {
        Self::closed(ExtRational::NegInf, ExtRational::PosInf)
    }

    pub fn is_empty(&self) -> bool {
        match self.lo.cmp(&self.hi) {
            Ordering::Less => false,
            Ordering::Equal => !(self.lo_closed && self.hi_closed),
            Ordering::Greater => true,
        }
    }

    pub fn contains(&self, x: &ExtRational) -> bool {
        let above = match self.lo.cmp(x) {
            Ordering::Less => true,
            Ordering::Equal => self.lo_closed,
            Ordering::Greater => false,
        };
        let below = match x.cmp(&self.hi) {
            Ordering::Less => true,
            Ordering::Equal => self.hi_closed,
            Ordering::Greater => false,
        };
        above && below
    }
}

impl fmt::Display for RealInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}{},{}{}",
            if self.lo_closed { '[' } else { '(' },
            self.lo,
            self.hi,
            if self.hi_closed { ']' } else { ')' }
        )
    }
}

/// An interval whose endpoints are positions in some totally ordered table.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Span {
    pub lo: u32,
    pub lo_closed: bool,
    pub hi: u32,
    pub hi_closed: bool,
}

impl Span {
    pub fn is_empty(&self) -> bool {
        self.lo > self.hi || (self.lo == self.hi && !(self.lo_closed && self.hi_closed))
    }

    pub fn covers(&self, other: &Span) -> bool {
        let lo_ok = self.lo < other.lo || (self.lo == other.lo && (self.lo_closed || !other.lo_closed));
        let hi_ok = other.hi < self.hi || (other.hi == self.hi && (self.hi_closed || !other.hi_closed));
        lo_ok && hi_ok
    }
}

/// A finite union of disjoint, non-touching spans in increasing order.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RealSet {
    pub(crate) spans: Vec<Span>,
}

impl RealSet {
    pub(crate) fn from_spans(mut pieces: Vec<Span>) -> Self {
        pieces.retain(|s| !s.is_empty());
        pieces.sort_by_key(|s| (s.lo, !s.lo_closed));
        let mut spans: Vec<Span> = Vec::with_capacity(pieces.len());
        for s in pieces {
            match spans.last_mut() {
                Some(c) if s.lo < c.hi || (s.lo == c.hi && (c.hi_closed || s.lo_closed)) => {
                    if s.hi > c.hi || (s.hi == c.hi && s.hi_closed) {
                        c.hi = s.hi;
                        c.hi_closed = s.hi_closed;
                    }
                }
                _ => spans.push(s),
            }
        }
        RealSet { spans }
    }

    pub fn is_empty(&self) -> bool {
        self.spans.is_empty()
    }

    /// Number of connected components.
    pub fn components(&self) -> usize {
        self.spans.len()
    }

    pub fn is_superset(&self, other: &RealSet) -> bool {
        other.spans.iter().all(|s| self.spans.iter().any(|c| c.covers(s)))
    }
}
