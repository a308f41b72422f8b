//! Exhaustive tightness sweep: every pair of enumerated intervals, checked
//! against the oracle.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use super::minifloat::MiniFloat;
use super::{Oracle, OracleOp};
use crate::interval::{Interval, IntervalClass};
use crate::ops::{self, DivResult};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum SweepOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl SweepOp {
    pub const ALL: [SweepOp; 4] = [SweepOp::Add, SweepOp::Sub, SweepOp::Mul, SweepOp::Div];

    pub fn name(self) -> &'static str {
        match self {
            SweepOp::Add => "add",
            SweepOp::Sub => "sub",
            SweepOp::Mul => "mul",
            SweepOp::Div => "div",
        }
    }

    fn oracle_op(self) -> OracleOp {
        match self {
            SweepOp::Add => OracleOp::Add,
            SweepOp::Sub => OracleOp::Sub,
            SweepOp::Mul => OracleOp::Mul,
            SweepOp::Div => OracleOp::DivRel,
        }
    }

    fn apply(self, x: Interval<MiniFloat>, y: Interval<MiniFloat>) -> DivResult<MiniFloat> {
        match self {
            SweepOp::Add => ops::add(x, y).into(),
            SweepOp::Sub => ops::sub(x, y).into(),
            SweepOp::Mul => ops::mul(x, y).into(),
            SweepOp::Div => ops::div(x, y),
        }
    }
}

impl fmt::Display for SweepOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SweepOp {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        SweepOp::ALL
            .into_iter()
            .find(|op| op.name() == s)
            .ok_or_else(|| format!("unknown operation {s:?}"))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    pub x: String,
    pub y: String,
    pub got: String,
    pub expected: String,
}

/// One line of the machine-readable report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SweepReport {
    pub op: &'static str,
    pub precision: u32,
    pub emin: i32,
    pub emax: i32,
    pub checked: u64,
    pub counterexamples: u64,
    pub first_counterexample: Option<Counterexample>,
    /// Division only: pairs where the relational and functional sets differ.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rel_fun_differences: Option<u64>,
    /// Division only: of those, pairs with no `[0,0]` operand.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub rel_fun_differences_without_zero_operand: Option<u64>,
    /// Division only: pairs where the functional set is not contained in the
    /// relational one. Always expected to be 0.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub fun_not_in_rel: Option<u64>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.counterexamples == 0 && self.fun_not_in_rel.unwrap_or(0) == 0
    }

    pub fn to_json_line(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }
}

fn render_parts(parts: &[Interval<MiniFloat>]) -> String {
    match parts {
        [] => "Empty".into(),
        _ => parts.iter().map(|p| p.to_string()).collect::<Vec<_>>().join(" U "),
    }
}

/// Compare `op` on every ordered pair of enumerated intervals (including
/// `Empty`) with the least enumerated interval, or pair of intervals, holding
/// the oracle's exact set.
pub fn sweep(oracle: &Oracle, op: SweepOp) -> SweepReport {
    sweep_with(oracle, op, |x, y| op.apply(x, y))
}

/// [`sweep`] against an arbitrary implementation of `op`.
pub fn sweep_with(
    oracle: &Oracle,
    op: SweepOp,
    implementation: impl Fn(Interval<MiniFloat>, Interval<MiniFloat>) -> DivResult<MiniFloat>,
) -> SweepReport {
    let intervals = oracle.intervals();
    let params = oracle.params();
    let is_zero = |x: &Interval<MiniFloat>| x.classify().ok() == Some(IntervalClass::Z);
    let mut report = SweepReport {
        op: op.name(),
        precision: params.precision(),
        emin: params.emin(),
        emax: params.emax(),
        checked: 0,
        counterexamples: 0,
        first_counterexample: None,
        rel_fun_differences: None,
        rel_fun_differences_without_zero_operand: None,
        fun_not_in_rel: None,
    };
    let (mut differ, mut differ_nonzero, mut not_in) = (0u64, 0u64, 0u64);

    for x in &intervals {
        for y in &intervals {
            let exact = oracle.op(op.oracle_op(), x, y);
            let expected = oracle.phi_parts(&exact);
            let got = implementation(*x, *y).parts();
            report.checked += 1;
            if got != expected {
                report.counterexamples += 1;
                report.first_counterexample.get_or_insert_with(|| Counterexample {
                    x: x.to_string(),
                    y: y.to_string(),
                    got: render_parts(&got),
                    expected: render_parts(&expected),
                });
            }
            if op == SweepOp::Div {
                let functional = oracle.op(OracleOp::DivFun, x, y);
                if !exact.is_superset(&functional) {
                    not_in += 1;
                }
                if exact != functional {
                    differ += 1;
                    if !is_zero(x) && !is_zero(y) {
                        differ_nonzero += 1;
                    }
                }
            }
        }
    }
    if op == SweepOp::Div {
        report.rel_fun_differences = Some(differ);
        report.rel_fun_differences_without_zero_operand = Some(differ_nonzero);
        report.fun_not_in_rel = Some(not_in);
    }
    report
}
