use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ival_core::kernel::is_undefined_form;
use ival_core::kernel::KernelOp::{self, *};
use ival_core::{BinaryFormat, MiniFloat, MiniParams, RoundingDirection};
use RoundingDirection::*;

const OPS: [KernelOp; 4] = [Add, Sub, Mul, Div];

fn apply<F: BinaryFormat>(op: KernelOp, a: F, b: F, dir: RoundingDirection) -> F {
    match op {
        Add => a.add_dir(b, dir),
        Sub => a.sub_dir(b, dir),
        Mul => a.mul_dir(b, dir),
        Div => a.div_dir(b, dir),
    }
}

fn exact(op: KernelOp, x: &BigRational, y: &BigRational) -> BigRational {
    match op {
        Add => x + y,
        Sub => x - y,
        Mul => x * y,
        Div => x / y,
    }
}

/// Sign of an exactly-zero result under IEEE rules.
fn zero_sign<F: BinaryFormat>(op: KernelOp, a: F, b: F, dir: RoundingDirection) -> bool {
    let (sa, sb) = (a.is_sign_negative(), b.is_sign_negative());
    match op {
        Mul | Div => sa != sb,
        Add | Sub => {
            let sb = if op == Sub { !sb } else { sb };
            if a.is_zero() && b.is_zero() && sa == sb {
                sa
            } else {
                dir == Down
            }
        }
    }
}

fn all_tiny_operands(params: MiniParams) -> Vec<MiniFloat> {
    let mut v = params.finite_values();
    v.push(MiniFloat::zero(params, true));
    v.push(MiniFloat::infinity(params, false));
    v.push(MiniFloat::infinity(params, true));
    v
}

/// Directed rounding by scanning the sorted finite values.
fn scan_round(values: &[(MiniFloat, BigRational)], q: &BigRational, dir: RoundingDirection) -> Option<MiniFloat> {
    let found = match dir {
        Down => values.iter().rev().find(|(_, v)| v <= q),
        Up => values.iter().find(|(_, v)| v >= q),
    };
    found.map(|(v, _)| *v)
}

fn check_sandwich(params: MiniParams) -> usize {
    let values: Vec<(MiniFloat, BigRational)> =
        params.finite_values().into_iter().map(|v| (v, v.to_rational().unwrap())).collect();
    let operands = all_tiny_operands(params);
    let mut checked = 0;
    for &a in &operands {
        for &b in &operands {
            for op in OPS {
                if is_undefined_form(op, a, b) {
                    continue;
                }
                for dir in [Down, Up] {
                    let got = apply(op, a, b, dir);
                    assert!(!got.is_nan(), "{a} {op:?} {b}");
                    checked += 1;
                    let (Some(x), Some(y)) = (a.to_rational(), b.to_rational()) else {
                        // infinite operand: the result is exact, no rounding
                        let r = apply(op, a, b, if dir == Down { Up } else { Down });
                        assert!(got.identical(r), "{a} {op:?} {b}");
                        continue;
                    };
                    if op == Div && y.is_zero() {
                        let negative = a.is_sign_negative() != b.is_sign_negative();
                        assert!(got.identical(MiniFloat::infinity(params, negative)), "{a}/{b}");
                        continue;
                    }
                    let q = exact(op, &x, &y);
                    if q.is_zero() {
                        assert!(got.is_zero() && got.is_sign_negative() == zero_sign(op, a, b, dir), "{a} {op:?} {b} {dir:?} -> {got}");
                        continue;
                    }
                    match scan_round(&values, &q, dir) {
                        Some(want) => {
                            assert!(got == want, "{a} {op:?} {b} {dir:?}: {got} vs {want}");
                            if got.is_zero() {
                                assert_eq!(got.is_sign_negative(), q.is_negative(), "underflow keeps the sign");
                            }
                        }
                        None => assert!(got.is_infinite() && got.is_sign_negative() == q.is_negative()),
                    }
                    // equality on both sides iff representable
                    let representable = values.iter().any(|(_, v)| *v == q);
                    let other = apply(op, a, b, if dir == Down { Up } else { Down });
                    assert_eq!(representable, got == other, "{a} {op:?} {b}");
                }
            }
        }
    }
    checked
}

#[test]
fn minifloat_kernels_are_correctly_rounded() {
    assert!(check_sandwich(MiniParams::TINY) > 19_000);
    check_sandwich(MiniParams::new(2, -3, 1).unwrap());
    check_sandwich(MiniParams::new(5, -1, 2).unwrap());
}

#[test]
fn largest_finite_examples() {
    let max = *MiniParams::TINY.finite_values().last().unwrap();
    assert!(max.add_dir(max, Up).is_infinite());
    assert!(max.add_dir(max, Down).identical(max));
}

/// Doubles that stress the fast paths: random bit patterns, subnormals,
/// values near overflow, near the fallback thresholds, and small integers.
fn interesting(rng: &mut ChaCha8Rng) -> f64 {
    let x = match rng.random_range(0..8) {
        0 | 1 => f64::from_bits(rng.random::<u64>()),
        2 => f64::from_bits(rng.random_range(1..1u64 << 53)),
        3 => f64::MAX / rng.random_range(1.0..4.0),
        4 => 2f64.powi(rng.random_range(-1074..-900)) * rng.random_range(1.0..2.0),
        5 => rng.random_range(-8i32..8) as f64,
        6 => 2f64.powi(rng.random_range(-40..40)) * rng.random_range(1.0..2.0),
        _ => 1.0 + rng.random::<f64>() * f64::EPSILON * 8.0,
    };
    let x = if rng.random() { -x } else { x };
    if x.is_nan() {
        1.5
    } else {
        x
    }
}

#[test]
fn f64_kernels_match_exact_rounding() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    for op in OPS {
        for _ in 0..40_000 {
            let (a, b) = (interesting(&mut rng), interesting(&mut rng));
            if !a.is_finite() || !b.is_finite() || (op == Div && b == 0.0) {
                continue;
            }
            let (x, y) = (a.to_rational().unwrap(), b.to_rational().unwrap());
            let q = exact(op, &x, &y);
            for dir in [Down, Up] {
                let got = apply(op, a, b, dir);
                if q.is_zero() {
                    assert!(got.identical(<f64 as BinaryFormat>::zero((), zero_sign(op, a, b, dir))), "{a:e} {op:?} {b:e}");
                } else {
                    let want = f64::from_rational(&q, dir, ());
                    assert!(got.identical(want), "{a:e} {op:?} {b:e} {dir:?}: {got:e} vs {want:e}");
                }
            }
        }
    }
}

#[test]
fn f64_exact_results_are_not_widened() {
    let big = BigRational::from_integer(BigInt::from(3));
    assert_eq!(f64::from_rational(&big, Up, ()), 3.0);
    for (a, b) in [(1.5, 2.0), (0.1, 0.0), (1e300, 1e-300), (-0.75, 4.0)] {
        for op in [Add, Sub, Mul] {
            let (lo, hi) = (apply(op, a, b, Down), apply(op, a, b, Up));
            let q = exact(op, &a.to_rational().unwrap(), &b.to_rational().unwrap());
            let representable = f64::from_rational(&q, Down, ()).to_rational() == Some(q.clone());
            assert_eq!(lo == hi, representable, "{a} {op:?} {b}");
        }
    }
}
