//! Elements of split algebras built from consecutive recurrence terms,
//!
//! ```text
//! Wₙ = Xₙ + Xₙ₊₁e₁ + Xₙ₊₂e₂ + Xₙ₊₃e₃          in H(β₁, β₂)
//! Zₙ = Xₙ + Xₙ₊₁e₁ + … + Xₙ₊₇e₇               in O(α, β, γ)
//! ```
//!
//! and an exact scan for the indices at which they are invertible.
//!
//! The scan is the certificate. The dominant-root criteria `f` and `g` only
//! predict the eventual sign of the norm.

use num_bigint::BigInt;
use num_rational::BigRational;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::octonion::Octonion;
use crate::params::{OctParams, QuatParams};
use crate::quaternion::Quaternion;
use crate::recurrence::{binet_coeffs, cubic_roots, CubicRoots, RecurrenceSpec};
use crate::scalar::{format_rational, Rational, Scalar};

/// Number of trailing indices inspected by the sign-consistency check.
pub const SIGN_WINDOW: usize = 10;

/// Parameters of the algebra an element sequence lives in.
#[derive(Debug, Clone, PartialEq)]
pub enum SplitParams {
    Quaternion(QuatParams),
    Octonion(OctParams),
}

impl SplitParams {
    /// Number of consecutive sequence terms per element.
    pub fn width(&self) -> usize {
        match self {
            SplitParams::Quaternion(_) => 4,
            SplitParams::Octonion(_) => 8,
        }
    }

    fn weights(&self) -> Vec<Rational> {
        match self {
            SplitParams::Quaternion(p) => p.weights().to_vec(),
            SplitParams::Octonion(p) => p.weights().to_vec(),
        }
    }
}

fn window(seq: &[BigInt], n: usize, width: usize) -> Vec<Rational> {
    seq[n..n + width].iter().map(|x| BigRational::from_integer(x.clone())).collect()
}

/// `Wₙ` from a sequence holding at least `n + 4` terms.
pub fn build_wn(seq: &[BigInt], params: &QuatParams, n: usize) -> Quaternion {
    Quaternion::new(window(seq, n, 4).try_into().unwrap(), params.clone())
}

/// `Zₙ` from a sequence holding at least `n + 8` terms.
pub fn build_zn(seq: &[BigInt], params: &OctParams, n: usize) -> Octonion {
    Octonion::new(window(seq, n, 8).try_into().unwrap(), params.clone())
}

/// Norm of the `n`-th element through the algebra's norm.
pub fn element_norm(seq: &[BigInt], params: &SplitParams, n: usize) -> Rational {
    match params {
        SplitParams::Quaternion(p) => build_wn(seq, p, n).norm(),
        SplitParams::Octonion(p) => build_zn(seq, p, n).norm(),
    }
}

/// Norm of the `n`-th element as the weighted sum `Σₘ wₘ Xₙ₊ₘ²`, without
/// building the element.
pub fn expanded_norm(seq: &[BigInt], params: &SplitParams, n: usize) -> Rational {
    params
        .weights()
        .into_iter()
        .zip(&seq[n..])
        .map(|(w, x)| w * BigRational::from_integer(x * x))
        .fold(Rational::zero(), |acc, t| acc + t)
}

fn power_sum(a: f64, sigma1: f64, weights: &[f64]) -> f64 {
    let s2 = sigma1 * sigma1;
    a * a * weights.iter().enumerate().map(|(k, w)| w * s2.powi(k as i32)).sum::<f64>()
}

/// `f = A²(1 + β₁σ₁² + β₂σ₁⁴ + β₁β₂σ₁⁶)`.
pub fn f_criterion(a: f64, params: &QuatParams, sigma1: f64) -> f64 {
    power_sum(a, sigma1, &params.weights().map(|w| w.to_f64()))
}

/// `g = A²(1 + ασ₁² + βσ₁⁴ + αβσ₁⁶ + γσ₁⁸ + αγσ₁¹⁰ + βγσ₁¹² + αβγσ₁¹⁴)`.
pub fn g_criterion(a: f64, params: &OctParams, sigma1: f64) -> f64 {
    power_sum(a, sigma1, &params.weights().map(|w| w.to_f64()))
}

/// `n₀`, or its absence within the scanned range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Threshold {
    Index(usize),
    NoneWithinBound,
}

impl Serialize for Threshold {
    fn serialize<Ser: Serializer>(&self, s: Ser) -> Result<Ser::Ok, Ser::Error> {
        match self {
            Threshold::Index(n) => s.serialize_u64(*n as u64),
            Threshold::NoneWithinBound => s.serialize_str("none within bound"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CriterionSign {
    Positive,
    Negative,
    Inconclusive,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Criterion {
    Available {
        name: &'static str,
        value: f64,
        sign: CriterionSign,
        roots: CubicRoots,
        #[serde(rename = "A")]
        dominant_coefficient: f64,
    },
    Unavailable {
        name: &'static str,
        reason: String,
    },
}

impl Criterion {
    pub fn sign(&self) -> Option<CriterionSign> {
        match self {
            Criterion::Available { sign, .. } => Some(*sign),
            Criterion::Unavailable { .. } => None,
        }
    }
}

fn serialize_rationals<Ser: Serializer>(v: &[Rational], s: Ser) -> Result<Ser::Ok, Ser::Error> {
    s.collect_seq(v.iter().map(format_rational))
}

fn serialize_params<Ser: Serializer>(p: &SplitParams, s: Ser) -> Result<Ser::Ok, Ser::Error> {
    use serde::ser::SerializeMap;
    let entries: Vec<(&str, &Rational)> = match p {
        SplitParams::Quaternion(q) => vec![("beta1", &q.beta1), ("beta2", &q.beta2)],
        SplitParams::Octonion(o) => vec![("alpha", &o.alpha), ("beta", &o.beta), ("gamma", &o.gamma)],
    };
    let mut map = s.serialize_map(Some(entries.len()))?;
    for (k, v) in entries {
        map.serialize_entry(k, &format_rational(v))?;
    }
    map.end()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InvertibleReport {
    pub spec: RecurrenceSpec,
    pub algebra: &'static str,
    #[serde(serialize_with = "serialize_params")]
    pub params: SplitParams,
    pub bound: usize,
    pub zero_norm_indices: Vec<usize>,
    pub n0: Threshold,
    pub criterion: Criterion,
    /// Whether the last scanned norm has the criterion's sign, when the
    /// criterion is conclusive and |norm| grows over the last
    /// [`SIGN_WINDOW`] indices.
    pub sign_consistent: Option<bool>,
    #[serde(serialize_with = "serialize_rationals")]
    pub norms: Vec<Rational>,
}

fn criterion(spec: &RecurrenceSpec, params: &SplitParams) -> Criterion {
    let name = match params {
        SplitParams::Quaternion(_) => "f",
        SplitParams::Octonion(_) => "g",
    };
    let fit = cubic_roots(spec).and_then(|r| binet_coeffs(spec, &r).map(|c| (r, c)));
    match fit {
        Err(e) => Criterion::Unavailable { name, reason: e.to_string() },
        Ok((roots, coeffs)) => {
            let value = match params {
                SplitParams::Quaternion(p) => f_criterion(coeffs.a, p, roots.sigma1),
                SplitParams::Octonion(p) => g_criterion(coeffs.a, p, roots.sigma1),
            };
            let sign = if value > 0.0 {
                CriterionSign::Positive
            } else if value < 0.0 {
                CriterionSign::Negative
            } else {
                CriterionSign::Inconclusive
            };
            Criterion::Available { name, value, sign, roots, dominant_coefficient: coeffs.a }
        }
    }
}

fn sign_consistency(norms: &[Rational], criterion: &Criterion) -> Option<bool> {
    let expected = match criterion.sign()? {
        CriterionSign::Positive => std::cmp::Ordering::Greater,
        CriterionSign::Negative => std::cmp::Ordering::Less,
        CriterionSign::Inconclusive => return None,
    };
    if norms.len() < SIGN_WINDOW {
        return None;
    }
    let tail: Vec<Rational> = norms[norms.len() - SIGN_WINDOW..].iter().map(num_traits::Signed::abs).collect();
    if !tail.windows(2).all(|w| w[0] < w[1]) {
        return None;
    }
    Some(norms.last()?.sign() == expected)
}

/// Smallest `n₀` such that every norm in `[n₀, len)` is nonzero.
pub fn threshold(norms: &[Rational]) -> Threshold {
    match norms.iter().rposition(num_traits::Zero::is_zero) {
        None => Threshold::Index(0),
        Some(last) if last + 1 < norms.len() => Threshold::Index(last + 1),
        Some(_) => Threshold::NoneWithinBound,
    }
}

/// Scans the norms of the elements `0..=bound` exactly.
pub fn find_invertible_threshold(spec: &RecurrenceSpec, params: &SplitParams, bound: usize) -> InvertibleReport {
    let seq = spec.sequence(bound + params.width());
    let norms: Vec<Rational> = (0..=bound).into_par_iter().map(|n| element_norm(&seq, params, n)).collect();
    let zero_norm_indices = norms.iter().enumerate().filter(|(_, x)| num_traits::Zero::is_zero(*x)).map(|(n, _)| n).collect();
    let criterion = criterion(spec, params);
    InvertibleReport {
        spec: *spec,
        algebra: match params {
            SplitParams::Quaternion(_) => "quat",
            SplitParams::Octonion(_) => "oct",
        },
        params: params.clone(),
        bound,
        zero_norm_indices,
        n0: threshold(&norms),
        sign_consistent: sign_consistency(&norms, &criterion),
        criterion,
        norms,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::int;

    fn quat(b1: i64, b2: i64) -> SplitParams {
        SplitParams::Quaternion(QuatParams::from_ints(b1, b2))
    }

    #[test]
    fn tribonacci_elements() {
        let seq = RecurrenceSpec::tribonacci().sequence(12);
        let w = build_wn(&seq, &QuatParams::from_ints(1, 1), 0);
        assert_eq!(w.coeffs, [0, 1, 1, 2].map(int));
        assert_eq!(w.norm(), int(6));
        assert_eq!(build_wn(&seq, &QuatParams::from_ints(1, -1), 0).norm(), int(-4));
        let z = build_zn(&seq, &OctParams::from_ints(1, 1, 1), 0);
        assert_eq!(z.coeffs, [0, 1, 1, 2, 4, 7, 13, 24].map(int));
        assert_eq!(z.norm(), int(816));
        assert_eq!(build_zn(&seq, &OctParams::from_ints(1, 1, -1), 0).norm(), int(-804));
    }

    #[test]
    fn criteria_by_hand() {
        let h = QuatParams::from_ints(1, 1);
        assert_eq!(f_criterion(1.0, &h, 3.0), 820.0);
        assert_eq!(f_criterion(0.0, &h, 3.0), 0.0);
        assert_eq!(f_criterion(1.0, &QuatParams::from_ints(1, -1), 3.0), -800.0);
        let g = g_criterion(1.0, &OctParams::from_ints(1, 1, 1), 2.0);
        assert_eq!(g, (0..8).map(|k| 4f64.powi(k)).sum::<f64>());
    }

    #[test]
    fn threshold_semantics() {
        assert_eq!(threshold(&[int(1), int(2)]), Threshold::Index(0));
        assert_eq!(threshold(&[int(0), int(0), int(3)]), Threshold::Index(2));
        assert_eq!(threshold(&[int(2), int(0)]), Threshold::NoneWithinBound);
        assert_eq!(threshold(&[]), Threshold::Index(0));
    }

    #[test]
    fn constant_sequence_has_no_threshold() {
        let spec = RecurrenceSpec::new([1, 0, 0], [1, 1, 1]);
        let r = find_invertible_threshold(&spec, &quat(1, -1), 50);
        assert_eq!(r.norms.len(), 51);
        assert_eq!(r.zero_norm_indices.len(), 51);
        assert_eq!(r.n0, Threshold::NoneWithinBound);
        assert!(matches!(r.criterion, Criterion::Unavailable { .. }));
    }

    #[test]
    fn report_json_shape() {
        let r = find_invertible_threshold(&RecurrenceSpec::tribonacci(), &quat(1, -1), 12);
        let v = serde_json::to_value(&r).unwrap();
        assert_eq!(v["n0"], 0);
        assert_eq!(v["params"]["beta2"], "-1");
        assert_eq!(v["norms"][0], "-4");
        assert_eq!(v["criterion"]["status"], "available");
        let none = find_invertible_threshold(&RecurrenceSpec::new([1, 0, 0], [1, 1, 1]), &quat(1, -1), 3);
        assert_eq!(serde_json::to_value(&none).unwrap()["n0"], "none within bound");
    }
}
