//! Algebraic properties of the interval operations, checked pair by pair.
//!
//! The per-pair checks are generic so they can run on sampled `f64`
//! intervals; the exhaustive drivers enumerate a [`MiniFloat`] format.
//!
//! Isotonicity is checked on one-step widenings: moving one bound of one
//! operand to the adjacent representable value. Every `X ⊆ X'` is reached from
//! `X` by a chain of such steps, so by transitivity this covers all pairs
//! `X ⊆ X'`, `Y ⊆ Y'`. Empty operands are covered by Empty propagation.

use super::minifloat::{MiniFloat, MiniParams};
use super::enumerate_intervals;
use crate::interval::{Interval, IntervalClass};
use crate::kernel::BinaryFormat;
use crate::ops::{self, DivResult};

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct PropertyReport {
    pub checked: u64,
    pub failures: u64,
    pub first_failure: Option<String>,
}

impl PropertyReport {
    fn record<F: BinaryFormat>(&mut self, failures: &[&str], x: &Interval<F>, y: &Interval<F>) {
        self.checked += 1;
        if !failures.is_empty() {
            self.failures += 1;
            self.first_failure
                .get_or_insert_with(|| format!("{} for X={x}, Y={y}", failures.join(", ")));
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

fn split_is_well_formed<F: BinaryFormat>(r: &DivResult<F>, y: &Interval<F>) -> bool {
    match r {
        DivResult::Split(neg, pos) => {
            let zero = F::zero(Default::default(), false);
            y.classify() == Ok(IntervalClass::M)
                && neg.hi().is_some_and(|h| h <= zero)
                && pos.lo().is_some_and(|l| l >= zero)
        }
        _ => true,
    }
}

/// Names of the symmetry properties that fail for `(x, y)`.
pub fn symmetry_failures<F: BinaryFormat>(x: Interval<F>, y: Interval<F>) -> Vec<&'static str> {
    let mut failed = Vec::new();
    let (nx, ny) = (ops::negate(x), ops::negate(y));
    let q = ops::div(x, y);
    let checks = [
        (ops::negate(nx) == x, "negate involution"),
        (ops::sub(x, y) == ops::add(x, ny), "sub = add negate"),
        (ops::add(x, y) == ops::add(y, x), "add commutes"),
        (ops::mul(x, y) == ops::mul(y, x), "mul commutes"),
        (ops::mul(nx, y) == ops::negate(ops::mul(x, y)), "mul sign symmetry"),
        (ops::div(x, ny) == q.negate(), "div divisor sign symmetry"),
        (ops::div(nx, y) == q.negate(), "div dividend sign symmetry"),
        (
            !matches!(q, DivResult::Single(s) if s != ops::div_hull(x, y)),
            "div_hull agrees with single",
        ),
        (split_is_well_formed(&q, &y), "split shape"),
        (!matches!(q, DivResult::Single(s) if s.is_empty()), "single is nonempty"),
    ];
    for (ok, name) in checks {
        if !ok {
            failed.push(name);
        }
    }
    failed
}

/// Names of the operations that fail `X ⊆ X', Y ⊆ Y' => op(X,Y) ⊆ op(X',Y')`.
pub fn isotonicity_failures<F: BinaryFormat>(
    x: Interval<F>,
    wider_x: Interval<F>,
    y: Interval<F>,
    wider_y: Interval<F>,
) -> Vec<&'static str> {
    debug_assert!(x.is_subset(&wider_x) && y.is_subset(&wider_y));
    let ops: [(fn(Interval<F>, Interval<F>) -> Interval<F>, &str); 4] = [
        (ops::add, "add"),
        (ops::sub, "sub"),
        (ops::mul, "mul"),
        (ops::div_hull, "div_hull"),
    ];
    ops.into_iter()
        .filter(|(op, _)| !op(x, y).is_subset(&op(wider_x, wider_y)))
        .map(|(_, name)| name)
        .collect()
}

/// Intervals obtained by moving one bound of `x` one step outward.
pub fn one_step_widenings(params: MiniParams, x: &Interval<MiniFloat>) -> Vec<Interval<MiniFloat>> {
    let Some((lo, hi)) = x.bounds() else {
        return Vec::new();
    };
    let values = params.finite_values();
    let mut out = Vec::with_capacity(2);
    if !lo.is_infinite() {
        let below = values
            .iter()
            .rev()
            .find(|v| **v < lo)
            .copied()
            .unwrap_or(MiniFloat::infinity(params, true));
        out.push(Interval::new(below, hi).expect("no NaN"));
    }
    if !hi.is_infinite() {
        let above = values
            .iter()
            .find(|v| **v > hi)
            .copied()
            .unwrap_or(MiniFloat::infinity(params, false));
        out.push(Interval::new(lo, above).expect("no NaN"));
    }
    out
}

/// Symmetries on every ordered pair of enumerated intervals.
pub fn exhaustive_symmetries(params: MiniParams) -> PropertyReport {
    let intervals = enumerate_intervals(params);
    let mut report = PropertyReport::default();
    for x in &intervals {
        for y in &intervals {
            report.record(&symmetry_failures(*x, *y), x, y);
        }
    }
    report
}

/// Isotonicity on every ordered pair and every one-step widening of either
/// operand.
pub fn exhaustive_isotonicity(params: MiniParams) -> PropertyReport {
    let intervals = enumerate_intervals(params);
    let widenings: Vec<Vec<Interval<MiniFloat>>> = intervals.iter().map(|x| one_step_widenings(params, x)).collect();
    let mut report = PropertyReport::default();
    for (i, x) in intervals.iter().enumerate() {
        for (j, y) in intervals.iter().enumerate() {
            let mut failed = Vec::new();
            for wx in &widenings[i] {
                failed.extend(isotonicity_failures(*x, *wx, *y, *y));
            }
            for wy in &widenings[j] {
                failed.extend(isotonicity_failures(*x, *x, *y, *wy));
            }
            failed.dedup();
            report.record(&failed, x, y);
        }
    }
    report
}
