use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use ival_core::oracle::properties::{exhaustive_isotonicity, exhaustive_symmetries};
use ival_core::oracle::{enumerate_intervals, ExtRational, Oracle, RealInterval};
use ival_core::render::{hex_bound, render_interval, Style};
use ival_core::expr::{evaluate, DivMode};
use ival_core::{ops, BinaryFormat, Interval, IntervalClass, MiniFloat, MiniParams};

#[test]
fn symmetries_hold_exhaustively() {
    let report = exhaustive_symmetries(MiniParams::TINY);
    assert_eq!(report.checked, 1224 * 1224);
    assert!(report.passed(), "{:?}", report.first_failure);
}

#[test]
fn isotonicity_holds_exhaustively() {
    let report = exhaustive_isotonicity(MiniParams::TINY);
    assert!(report.passed(), "{:?}", report.first_failure);
}

#[test]
fn classification_partitions_enumerated_intervals() {
    for x in enumerate_intervals(MiniParams::TINY) {
        let Some((lo, hi)) = x.bounds() else {
            assert!(x.classify().is_err());
            continue;
        };
        let zero = MiniFloat::zero(MiniParams::TINY, false);
        let holds = [
            (IntervalClass::M, lo < zero && hi > zero),
            (IntervalClass::Z, lo == zero && hi == zero),
            (IntervalClass::P0, lo == zero && hi > zero),
            (IntervalClass::P1, lo > zero),
            (IntervalClass::N0, lo < zero && hi == zero),
            (IntervalClass::N1, hi < zero),
        ];
        assert_eq!(holds.iter().filter(|(_, h)| *h).count(), 1, "{x}");
        let class = x.classify().unwrap();
        assert!(holds.iter().any(|(c, h)| *c == class && *h), "{x}");
    }
}

type Bounded = (Interval<MiniFloat>, ExtRational, ExtRational);

/// The least enumerated interval containing `s`, by brute force: scan for
/// every containing interval, then prove the narrowest one is a subset of
/// all the others.
fn phi_by_scan(intervals: &[Bounded], s: &RealInterval) -> Interval<MiniFloat> {
    let contains_s = |(_, lo, hi): &&Bounded| {
        let lo_ok = *lo < s.lo || (*lo == s.lo && (s.lo.is_finite() || !s.lo_closed));
        let hi_ok = s.hi < *hi || (s.hi == *hi && (s.hi.is_finite() || !s.hi_closed));
        lo_ok && hi_ok
    };
    let containing: Vec<&Bounded> = intervals.iter().filter(contains_s).collect();
    let narrowest = containing
        .iter()
        .min_by(|a, b| (&b.1, &a.2).cmp(&(&a.1, &b.2)))
        .expect("the entire line contains everything");
    assert!(containing.iter().all(|c| narrowest.0.is_subset(&c.0)), "{s}");
    narrowest.0
}

#[test]
fn phi_is_minimal() {
    let oracle = Oracle::new(MiniParams::TINY);
    let intervals: Vec<Bounded> = enumerate_intervals(MiniParams::TINY)
        .into_iter()
        .filter_map(|x| {
            let (lo, hi) = x.bounds()?;
            Some((x, ExtRational::from_format(lo), ExtRational::from_format(hi)))
        })
        .collect();
    let mut ends: Vec<ExtRational> = (-130..=130)
        .step_by(3)
        .map(|k| ExtRational::Finite(BigRational::new(BigInt::from(k), BigInt::from(16))))
        .collect();
    ends.push(ExtRational::NegInf);
    ends.push(ExtRational::PosInf);
    let mut checked = 0;
    for lo in &ends {
        for hi in &ends {
            for (lo_closed, hi_closed) in [(true, true), (false, true), (true, false)] {
                let s = RealInterval {
                    lo: lo.clone(),
                    lo_closed: lo_closed && lo.is_finite(),
                    hi: hi.clone(),
                    hi_closed: hi_closed && hi.is_finite(),
                };
                if s.is_empty() {
                    assert!(oracle.phi(&s).is_empty());
                    continue;
                }
                assert_eq!(oracle.phi(&s), phi_by_scan(&intervals, &s), "{s}");
                checked += 1;
            }
        }
    }
    assert!(checked > 5000);
}

fn finite_f64() -> impl Strategy<Value = f64> {
    prop_oneof![
        any::<f64>().prop_filter("finite", |x| x.is_finite()),
        -1e6..1e6f64,
        Just(0.0),
        Just(-0.0),
    ]
}

fn bound() -> impl Strategy<Value = f64> {
    prop_oneof![4 => finite_f64(), 1 => Just(f64::INFINITY), 1 => Just(f64::NEG_INFINITY)]
}

fn interval() -> impl Strategy<Value = Interval<f64>> {
    (bound(), bound()).prop_map(|(a, b)| {
        let (lo, hi) = if a <= b { (a, b) } else { (b, a) };
        Interval::new(lo, hi).unwrap()
    })
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 2000, failure_persistence: None, ..ProptestConfig::default() })]

    #[test]
    fn no_bound_is_nan(x in interval(), y in interval()) {
        for r in [ops::add(x, y), ops::sub(x, y), ops::mul(x, y), ops::div_hull(x, y)] {
            if let Some((lo, hi)) = r.bounds() {
                prop_assert!(!lo.is_nan() && !hi.is_nan());
            }
        }
    }

    #[test]
    fn finite_members_stay_inside(x in interval(), y in interval(), s in 0.0..1.0f64, t in 0.0..1.0f64) {
        let pick = |i: &Interval<f64>, u: f64| -> Option<BigRational> {
            let (lo, hi) = i.bounds()?;
            let v = match (lo.is_finite(), hi.is_finite()) {
                (true, true) => lo * (1.0 - u) + hi * u,
                (true, false) => lo + u * 1e300,
                (false, true) => hi - u * 1e300,
                (false, false) => (u - 0.5) * 1e300,
            };
            i.contains(v).then(|| v.to_rational().unwrap())
        };
        if let (Some(a), Some(b)) = (pick(&x, s), pick(&y, t)) {
            prop_assert!(ops::add(x, y).contains_rational(&(&a + &b)));
            prop_assert!(ops::sub(x, y).contains_rational(&(&a - &b)));
            prop_assert!(ops::mul(x, y).contains_rational(&(&a * &b)));
            if b != BigRational::from_integer(0.into()) {
                let z = &a / &b;
                prop_assert!(ops::div(x, y).parts().iter().any(|p| p.contains_rational(&z)));
            }
        }
    }

    #[test]
    fn hex_rendering_round_trips(x in interval()) {
        prop_assume!(!x.is_empty());
        let text = render_interval(&x, Style { hex: true, ascii: false });
        let back = evaluate(&text, DivMode::Hull).unwrap().value.hull();
        prop_assert_eq!(back, x);
        if let Some((lo, _)) = x.bounds() {
            prop_assert!(!hex_bound(lo).is_empty());
        }
    }
}
