mod common;

use common::int;
use hyperalg::invertibles::{
    element_norm, expanded_norm, find_invertible_threshold, Criterion, CriterionSign, SplitParams, Threshold,
};
use hyperalg::recurrence::{binet_coeffs, binet_eval, cubic_roots, RecurrenceSpec};
use hyperalg::{OctParams, QuatParams, RootError};
use num_bigint::BigInt;
use num_traits::{Pow, ToPrimitive};

fn binet_worst_error(spec: &RecurrenceSpec, n_max: usize) -> f64 {
    let roots = cubic_roots(spec).unwrap();
    let coeffs = binet_coeffs(spec, &roots).unwrap();
    spec.sequence(n_max)
        .iter()
        .enumerate()
        .map(|(n, x)| {
            let x = x.to_f64().unwrap();
            (binet_eval(&coeffs, &roots, n as u32) - x).abs() / x.abs().max(1.0)
        })
        .fold(0.0, f64::max)
}

#[test]
fn closed_form_tracks_the_sequence() {
    assert!(binet_worst_error(&RecurrenceSpec::tribonacci(), 30) < 1e-9);
    assert!(binet_worst_error(&RecurrenceSpec::new([6, -11, 6], [3, 6, 14]), 30) < 1e-9);
    assert!(binet_worst_error(&RecurrenceSpec::new([2, 1, -2], [1, 0, 4]), 30) < 1e-9);
}

#[test]
fn shifted_powers_sequence_is_exact() {
    let seq = RecurrenceSpec::new([6, -11, 6], [3, 6, 14]).sequence(60);
    for (n, x) in seq.iter().enumerate() {
        let expected = BigInt::from(3).pow(n as u32) + BigInt::from(2).pow(n as u32) + 1;
        assert_eq!(*x, expected, "n = {n}");
    }
}

#[test]
fn cubic_root_cases() {
    let r = cubic_roots(&RecurrenceSpec::new([6, -11, 6], [0, 0, 1])).unwrap();
    let re: Vec<f64> = r.as_array().iter().map(|z| z.re).collect();
    for (got, want) in re.iter().zip([3.0, 2.0, 1.0]) {
        assert!((got - want).abs() < 1e-10);
    }
    let t = RecurrenceSpec::tribonacci();
    let r = cubic_roots(&t).unwrap();
    assert!((r.sigma1 - 1.839_286_755_214_161).abs() < 1e-12);
    assert!(t.characteristic(r.sigma1).abs() < 1e-12);
    assert!(!r.all_real());
    assert!(matches!(
        cubic_roots(&RecurrenceSpec::new([0, 0, 1], [0, 0, 1])),
        Err(RootError::NotThreeDistinctRealRoots { .. })
    ));
    assert!(matches!(
        cubic_roots(&RecurrenceSpec::new([3, -3, 1], [0, 0, 1])),
        Err(RootError::NotThreeDistinctRealRoots { .. })
    ));
}

#[test]
fn both_norm_routes_agree() {
    let seq = RecurrenceSpec::tribonacci().sequence(60);
    let params = [
        SplitParams::Quaternion(QuatParams::from_ints(1, -1)),
        SplitParams::Quaternion(QuatParams::from_ints(2, -3)),
        SplitParams::Octonion(OctParams::from_ints(1, 1, -1)),
        SplitParams::Octonion(OctParams::from_ints(-1, 2, 3)),
    ];
    for p in &params {
        for n in 0..=60 - p.width() {
            assert_eq!(element_norm(&seq, p, n), expanded_norm(&seq, p, n));
        }
    }
}

#[test]
fn tribonacci_quaternions_are_invertible() {
    let report = find_invertible_threshold(&RecurrenceSpec::tribonacci(), &SplitParams::Quaternion(QuatParams::from_ints(1, -1)), 200);
    assert_eq!(report.norms.len(), 201);
    assert!(report.norms.iter().all(|x| *x != int(0)));
    assert!(report.zero_norm_indices.is_empty());
    assert_eq!(report.n0, Threshold::Index(0));
    assert_eq!(report.criterion.sign(), Some(CriterionSign::Negative));
    assert_eq!(report.sign_consistent, Some(true));
}

#[test]
fn tribonacci_octonions_report_is_complete() {
    let report = find_invertible_threshold(&RecurrenceSpec::tribonacci(), &SplitParams::Octonion(OctParams::from_ints(1, 1, -1)), 200);
    assert_eq!(report.n0, Threshold::Index(0));
    assert!(matches!(report.criterion, Criterion::Available { name: "g", .. }));
    assert_eq!(report.sign_consistent, Some(true));
}

#[test]
fn constant_sequence_never_becomes_invertible() {
    let spec = RecurrenceSpec::new([1, 0, 0], [1, 1, 1]);
    let report = find_invertible_threshold(&spec, &SplitParams::Quaternion(QuatParams::from_ints(1, -1)), 50);
    assert_eq!(report.zero_norm_indices, (0..=50).collect::<Vec<_>>());
    assert_eq!(report.n0, Threshold::NoneWithinBound);
    assert!(matches!(report.criterion, Criterion::Unavailable { .. }));
    let json = serde_json::to_value(&report).unwrap();
    assert_eq!(json["n0"], "none within bound");
}
