//! Exact reference semantics over a [`MiniFloat`] format.
//!
//! The oracle computes the exact solution set of each operation by splitting
//! both operands into their nonnegative and nonpositive pieces and combining
//! magnitudes piece by piece. It shares nothing with the case tables in
//! [`crate::ops`], so a wrong table row cannot confirm itself. Division by a
//! divisor that contains zero is handled by the algebraic condition
//! `z * 0 = x  <=>  x = 0`, never by dividing.
//!
//! All exact endpoint sums, products and quotients of a format are computed
//! once, with arbitrary-precision rationals, and sorted. Sets are then kept as
//! spans over positions in that table, so a full sweep does no big-number
//! arithmetic at all.

use std::collections::{BTreeSet, HashMap};

use num_rational::BigRational;

use crate::interval::Interval;
use crate::kernel::BinaryFormat;

pub mod exact;
pub mod minifloat;
pub mod properties;
pub mod sweep;

pub use exact::{ExtRational, RealInterval, RealSet};
use exact::Span;
use minifloat::{MiniFloat, MiniParams};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OracleOp {
    Add,
    Sub,
    Mul,
    /// `{z | z*y = x for some x in X, y in Y}`
    DivRel,
    /// `{x/y | x in X, y in Y, y != 0}`
    DivFun,
}

impl OracleOp {
    pub fn name(self) -> &'static str {
        match self {
            OracleOp::Add => "add",
            OracleOp::Sub => "sub",
            OracleOp::Mul => "mul",
            OracleOp::DivRel => "div_rel",
            OracleOp::DivFun => "div_fun",
        }
    }
}

/// Every normalized nonempty interval of the format, then `Empty`.
pub fn enumerate_intervals(params: MiniParams) -> Vec<Interval<MiniFloat>> {
    let values = params.finite_values();
    let neg_inf = MiniFloat::infinity(params, true);
    let pos_inf = MiniFloat::infinity(params, false);
    let lows = std::iter::once(neg_inf).chain(values.iter().copied());
    let mut out = Vec::new();
    for (i, lo) in lows.enumerate() {
        // lows[i] pairs with values[i-1..] and +inf
        let start = i.saturating_sub(1);
        for &hi in values[start..].iter().chain(std::iter::once(&pos_inf)) {
            out.push(Interval::new(lo, hi).expect("no NaN"));
        }
    }
    out.push(Interval::empty());
    out
}

/// Closed-form size of [`enumerate_intervals`] for `n` finite values,
/// counting `Empty`.
pub fn interval_count(n: usize) -> usize {
    n * (n + 1) / 2 + 2 * n + 1 + 1
}

pub struct Oracle {
    params: MiniParams,
    values: Vec<MiniFloat>,
    units: Vec<i64>,
    rationals: Vec<BigRational>,
    /// Number of positive finite values.
    half: usize,
    /// Every exact endpoint result, increasing, bracketed by the infinities.
    universe: Vec<ExtRational>,
    neg: Vec<u32>,
    phi_lo: Vec<MiniFloat>,
    phi_hi: Vec<MiniFloat>,
    /// Rank of the value with signed index `k`, stored at `k + half + 1`.
    index_rank: Vec<u32>,
    sums: Vec<u32>,
    products: Vec<u32>,
    quotients: Vec<u32>,
}

impl Oracle {
    pub fn new(params: MiniParams) -> Self {
        let values = params.finite_values();
        let units: Vec<i64> = values.iter().map(|v| v.units().expect("finite")).collect();
        let rationals: Vec<BigRational> = values.iter().map(|v| v.to_rational().expect("finite")).collect();
        let n = values.len();
        let half = n / 2;
        let mags = &rationals[half + 1..];

        let mut all = BTreeSet::new();
        for a in &rationals {
            for b in &rationals {
                all.insert(a + b);
            }
        }
        for a in mags {
            for b in mags {
                for q in [a * b, a / b] {
                    all.insert(-&q);
                    all.insert(q);
                }
            }
        }
        let universe: Vec<ExtRational> = std::iter::once(ExtRational::NegInf)
            .chain(all.into_iter().map(ExtRational::Finite))
            .chain(std::iter::once(ExtRational::PosInf))
            .collect();
        let rank: HashMap<&ExtRational, u32> = universe.iter().enumerate().map(|(i, q)| (q, i as u32)).collect();
        let rank_of = |q: BigRational| rank[&ExtRational::Finite(q)];

        let mut oracle = Oracle {
            params,
            neg: universe.iter().map(|q| rank[&q.neg()]).collect(),
            index_rank: Vec::with_capacity(n + 2),
            sums: Vec::with_capacity(n * n),
            products: Vec::with_capacity(half * half),
            quotients: Vec::with_capacity(half * half),
            phi_lo: Vec::new(),
            phi_hi: Vec::new(),
            values,
            units,
            half,
            universe: Vec::new(),
            rationals: Vec::new(),
        };
        oracle.index_rank.push(0);
        oracle.index_rank.extend(rationals.iter().map(|q| rank_of(q.clone())));
        oracle.index_rank.push(universe.len() as u32 - 1);
        for a in &rationals {
            for b in &rationals {
                oracle.sums.push(rank_of(a + b));
            }
        }
        for a in mags {
            for b in mags {
                oracle.products.push(rank_of(a * b));
                oracle.quotients.push(rank_of(a / b));
            }
        }
        drop(rank);
        oracle.rationals = rationals;
        oracle.phi_lo = universe.iter().map(|q| oracle.round_down(q)).collect();
        oracle.phi_hi = universe.iter().map(|q| oracle.round_up(q)).collect();
        oracle.universe = universe;
        oracle
    }

    pub fn params(&self) -> MiniParams {
        self.params
    }

    /// Finite values, increasing.
    pub fn values(&self) -> &[MiniFloat] {
        &self.values
    }

    pub fn intervals(&self) -> Vec<Interval<MiniFloat>> {
        enumerate_intervals(self.params)
    }

    /// Greatest bound `<= x`.
    fn round_down(&self, x: &ExtRational) -> MiniFloat {
        match x {
            ExtRational::NegInf => MiniFloat::infinity(self.params, true),
            ExtRational::PosInf => MiniFloat::infinity(self.params, false),
            ExtRational::Finite(q) => match self.rationals.partition_point(|v| v <= q) {
                0 => MiniFloat::infinity(self.params, true),
                i => self.values[i - 1],
            },
        }
    }

    /// Least bound `>= x`.
    fn round_up(&self, x: &ExtRational) -> MiniFloat {
        match x {
            ExtRational::NegInf => MiniFloat::infinity(self.params, true),
            ExtRational::PosInf => MiniFloat::infinity(self.params, false),
            ExtRational::Finite(q) => {
                let i = self.rationals.partition_point(|v| v < q);
                self.values.get(i).copied().unwrap_or(MiniFloat::infinity(self.params, false))
            }
        }
    }

    /// Least format interval containing the set `s`.
    pub fn phi(&self, s: &RealInterval) -> Interval<MiniFloat> {
        if s.is_empty() {
            return Interval::empty();
        }
        Interval::new(self.round_down(&s.lo), self.round_up(&s.hi)).expect("no NaN")
    }

    /// [`Oracle::phi`] of each connected component.
    pub fn phi_parts(&self, set: &RealSet) -> Vec<Interval<MiniFloat>> {
        set.spans
            .iter()
            .map(|s| Interval::new(self.phi_lo[s.lo as usize], self.phi_hi[s.hi as usize]).expect("no NaN"))
            .collect()
    }

    /// The components of `set` with exact endpoints.
    pub fn describe(&self, set: &RealSet) -> Vec<RealInterval> {
        set.spans
            .iter()
            .map(|s| RealInterval {
                lo: self.universe[s.lo as usize].clone(),
                lo_closed: s.lo_closed,
                hi: self.universe[s.hi as usize].clone(),
                hi_closed: s.hi_closed,
            })
            .collect()
    }

    /// Signed position of a bound: 0 for zero, `±(half + 1)` for the infinities.
    fn signed_index(&self, x: MiniFloat) -> i32 {
        let inf = self.half as i32 + 1;
        match x.units() {
            Some(u) => {
                let i = self.units.binary_search(&u).expect("bound belongs to the format");
                i as i32 - self.half as i32
            }
            None if x.is_sign_negative() => -inf,
            None => inf,
        }
    }

    fn rank(&self, k: i32) -> u32 {
        self.index_rank[(k + self.half as i32 + 1) as usize]
    }

    fn top(&self) -> u32 {
        self.universe.len() as u32 - 1
    }

    fn inf(&self) -> i32 {
        self.half as i32 + 1
    }

    fn sum(&self, a: i32, b: i32) -> u32 {
        let n = 2 * self.half + 1;
        let (i, j) = ((a + self.half as i32) as usize, (b + self.half as i32) as usize);
        self.sums[i * n + j]
    }

    fn table(&self, table: &[u32], m1: i32, m2: i32) -> u32 {
        table[(m1 as usize - 1) * self.half + (m2 as usize - 1)]
    }

    fn sum_span(&self, a: i32, b: i32, c: i32, d: i32) -> Span {
        let inf = self.inf();
        let (lo, lo_closed) = if a == -inf || c == -inf { (0, false) } else { (self.sum(a, c), true) };
        let (hi, hi_closed) = if b == inf || d == inf { (self.top(), false) } else { (self.sum(b, d), true) };
        Span { lo, lo_closed, hi, hi_closed }
    }

    /// `{u*v | u in [p,q], v in [r,s]}` for magnitudes.
    fn product_span(&self, (p, q): (i32, i32), (r, s): (i32, i32)) -> Span {
        let (zero, inf) = (self.rank(0), self.inf());
        let lo = if p == 0 || r == 0 { zero } else { self.table(&self.products, p, r) };
        let (hi, hi_closed) = if q == 0 || s == 0 {
            (zero, true)
        } else if q == inf || s == inf {
            (self.top(), false)
        } else {
            (self.table(&self.products, q, s), true)
        };
        Span { lo, lo_closed: true, hi, hi_closed }
    }

    /// `{u/v | u in [p,q], v in [r,s], v != 0}` for magnitudes.
    fn quotient_span(&self, (p, q): (i32, i32), (r, s): (i32, i32)) -> Span {
        let (zero, inf) = (self.rank(0), self.inf());
        let (lo, lo_closed) = if p == 0 {
            (zero, true)
        } else if s == inf {
            (zero, false)
        } else {
            (self.table(&self.quotients, p, s), true)
        };
        let (hi, hi_closed) = if q == 0 {
            (zero, true)
        } else if r == 0 || q == inf {
            (self.top(), false)
        } else {
            (self.table(&self.quotients, q, r), true)
        };
        Span { lo, lo_closed, hi, hi_closed }
    }

    fn negated(&self, s: Span) -> Span {
        Span {
            lo: self.neg[s.hi as usize],
            lo_closed: s.hi_closed,
            hi: self.neg[s.lo as usize],
            hi_closed: s.lo_closed,
        }
    }

    /// Nonnegative and nonpositive pieces of `[a,b]` as `(negative, magnitudes)`.
    fn pieces(a: i32, b: i32) -> impl Iterator<Item = (bool, (i32, i32))> {
        let pos = (b >= 0).then(|| (false, (a.max(0), b)));
        let neg = (a <= 0).then(|| (true, ((-b).max(0), -a)));
        pos.into_iter().chain(neg)
    }

    /// The exact set `X op Y`. Empty operands give the empty set.
    pub fn op(&self, op: OracleOp, x: &Interval<MiniFloat>, y: &Interval<MiniFloat>) -> RealSet {
        let (Some((a, b)), Some((c, d))) = (x.bounds(), y.bounds()) else {
            return RealSet::default();
        };
        let (a, b, c, d) = (
            self.signed_index(a),
            self.signed_index(b),
            self.signed_index(c),
            self.signed_index(d),
        );
        let mut spans = Vec::with_capacity(5);
        match op {
            OracleOp::Add => spans.push(self.sum_span(a, b, c, d)),
            OracleOp::Sub => spans.push(self.sum_span(a, b, -d, -c)),
            OracleOp::Mul => {
                for (nx, mx) in Self::pieces(a, b) {
                    for (ny, my) in Self::pieces(c, d) {
                        let s = self.product_span(mx, my);
                        spans.push(if nx != ny { self.negated(s) } else { s });
                    }
                }
            }
            OracleOp::DivRel | OracleOp::DivFun => {
                // y = 0 has a solution z only when x = 0, and then every z works
                if op == OracleOp::DivRel && a <= 0 && 0 <= b && c <= 0 && 0 <= d {
                    spans.push(Span { lo: 0, lo_closed: false, hi: self.top(), hi_closed: false });
                }
                // nonzero divisors: the pieces exclude y = 0 (magnitude 0 is open)
                for (nx, mx) in Self::pieces(a, b) {
                    for (ny, my) in Self::pieces(c, d) {
                        if my.1 == 0 {
                            continue;
                        }
                        let s = self.quotient_span(mx, my);
                        spans.push(if nx != ny { self.negated(s) } else { s });
                    }
                }
            }
        }
        RealSet::from_spans(spans)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn iv(oracle: &Oracle, lo: i64, hi: i64) -> Interval<MiniFloat> {
        // bounds in units of 1/16
        let p = oracle.params();
        Interval::new(MiniFloat::from_units(p, lo).unwrap(), MiniFloat::from_units(p, hi).unwrap()).unwrap()
    }

    #[test]
    fn enumeration_count_and_shape() {
        let intervals = enumerate_intervals(MiniParams::TINY);
        assert_eq!(intervals.len(), 1224);
        assert_eq!(intervals.len(), interval_count(47));
        let entire = Interval::entire_in(MiniParams::TINY);
        assert_eq!(intervals.iter().filter(|x| **x == entire).count(), 1);
        assert_eq!(intervals.iter().filter(|x| x.is_empty()).count(), 1);
        assert!(intervals.contains(&Interval::zero_in(MiniParams::TINY)));
        assert!(intervals
            .iter()
            .filter_map(|x| x.lo())
            .all(|lo| !(lo.is_zero() && lo.is_sign_negative())));
        for i in 0..intervals.len() {
            for j in 0..i {
                assert_ne!(intervals[i], intervals[j]);
            }
        }
        let wider = MiniParams::new(4, -3, 3).unwrap();
        assert_eq!(enumerate_intervals(wider).len(), interval_count(wider.finite_count()));
    }

    #[test]
    fn phi_examples() {
        let oracle = Oracle::new(MiniParams::TINY);
        let third = oracle.phi(&RealInterval::point(q(1, 3)));
        assert_eq!(third, iv(&oracle, 5, 6));
        assert_eq!(oracle.phi(&RealInterval::entire()), Interval::entire_in(MiniParams::TINY));
        assert_eq!(oracle.phi(&RealInterval::point(q(0, 1))), Interval::zero_in(MiniParams::TINY));
        let beyond = oracle.phi(&RealInterval::point(q(8, 1)));
        assert_eq!(beyond.to_string(), "[7,inf]");
    }

    #[test]
    fn op_examples() {
        let oracle = Oracle::new(MiniParams::TINY);
        let zero = Interval::zero_in(MiniParams::TINY);
        let sum = oracle.op(OracleOp::Add, &iv(&oracle, 16, 32), &iv(&oracle, 48, 64));
        assert_eq!(oracle.describe(&sum), vec![RealInterval::closed(ExtRational::Finite(q(4, 1)), ExtRational::Finite(q(6, 1)))]);
        let rel = oracle.op(OracleOp::DivRel, &zero, &zero);
        assert_eq!(oracle.describe(&rel), vec![RealInterval::entire()]);
        assert!(oracle.op(OracleOp::DivRel, &iv(&oracle, 16, 32), &zero).is_empty());
        assert!(oracle.op(OracleOp::DivFun, &zero, &zero).is_empty());
        let split = oracle.op(OracleOp::DivRel, &iv(&oracle, 16, 32), &iv(&oracle, -16, 16));
        let parts = oracle.describe(&split);
        assert_eq!(parts.len(), 2);
        assert_eq!(parts[0].to_string(), "(-inf,-1]");
        assert_eq!(parts[1].to_string(), "[1,inf)");
        let open = oracle.op(OracleOp::DivRel, &iv(&oracle, 16, 32), &Interval::entire_in(MiniParams::TINY));
        assert_eq!(oracle.describe(&open).iter().map(|r| r.to_string()).collect::<Vec<_>>(), ["(-inf,0)", "(0,inf)"]);
    }

    #[test]
    fn products_by_pieces() {
        let oracle = Oracle::new(MiniParams::TINY);
        let m = oracle.op(OracleOp::Mul, &iv(&oracle, -32, 48), &iv(&oracle, -16, 64));
        assert_eq!(oracle.describe(&m)[0].to_string(), "[-8,12]");
        let inf = Interval::new(MiniFloat::from_units(MiniParams::TINY, 0).unwrap(), MiniFloat::infinity(MiniParams::TINY, false)).unwrap();
        let z = oracle.op(OracleOp::Mul, &Interval::zero_in(MiniParams::TINY), &inf);
        assert_eq!(oracle.describe(&z)[0].to_string(), "[0,0]");
    }
}
