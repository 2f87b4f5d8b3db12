//! Generalized octonions in O(α, β, γ) and the sign-pattern involutions
//! built from the decomposition `a = q₁ + q₂e₄`.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::AlgebraError;
use crate::params::OctParams;
use crate::quaternion::Quaternion;
use crate::scalar::{Rational, Scalar};
use crate::table::{table_product, OCT_TABLE};

/// `a₀ + a₁e₁ + … + a₇e₇` in O(α, β, γ).
#[derive(Clone, Debug, PartialEq)]
pub struct Octonion<S = Rational> {
    pub coeffs: [S; 8],
    pub params: OctParams<S>,
}

// Sign patterns, `true` = negate.
const CONJ: [bool; 8] = [false, true, true, true, true, true, true, true];
const STAR: [bool; 8] = [false, false, true, true, true, true, true, true];
const TILDE: [bool; 8] = [false, false, false, false, true, true, true, true];
const PLUS_SUB: [bool; 8] = [false, false, true, true, false, false, true, true];
const PLUS_SUP: [bool; 8] = [false, true, true, true, false, false, false, false];

impl<S: Scalar> Octonion<S> {
    pub fn new(coeffs: [S; 8], params: OctParams<S>) -> Self {
        Self { coeffs, params }
    }

    pub fn from_ints(coeffs: [i64; 8], params: OctParams<S>) -> Self {
        Self::new(coeffs.map(S::from_i64), params)
    }

    pub fn zero(params: OctParams<S>) -> Self {
        Self::new(std::array::from_fn(|_| S::zero()), params)
    }

    pub fn scalar(value: S, params: OctParams<S>) -> Self {
        let mut a = Self::zero(params);
        a.coeffs[0] = value;
        a
    }

    pub fn one(params: OctParams<S>) -> Self {
        Self::scalar(S::one(), params)
    }

    pub fn basis(k: usize, params: OctParams<S>) -> Self {
        assert!(k < 8, "octonion basis index {k} out of range");
        let mut a = Self::zero(params);
        a.coeffs[k] = S::one();
        a
    }

    fn check_params(&self, other: &Self) -> Result<(), AlgebraError> {
        if self.params.same_as(&other.params) {
            Ok(())
        } else {
            Err(AlgebraError::ParamsMismatch {
                left: self.params.to_string(),
                right: other.params.to_string(),
            })
        }
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_params(other)?;
        let coeffs = table_product(&OCT_TABLE, &self.params.weights(), &self.coeffs, &other.coeffs);
        Ok(Self::new(coeffs, self.params.clone()))
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_params(other)?;
        Ok(self.zip(other, |a, b| a.clone() + b.clone()))
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_params(other)?;
        Ok(self.zip(other, |a, b| a.clone() - b.clone()))
    }

    fn zip(&self, other: &Self, f: impl Fn(&S, &S) -> S) -> Self {
        Self::new(std::array::from_fn(|k| f(&self.coeffs[k], &other.coeffs[k])), self.params.clone())
    }

    fn with_signs(&self, signs: [bool; 8]) -> Self {
        let coeffs = std::array::from_fn(|k| {
            if signs[k] {
                -self.coeffs[k].clone()
            } else {
                self.coeffs[k].clone()
            }
        });
        Self::new(coeffs, self.params.clone())
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::new(self.coeffs.clone().map(|c| c * s.clone()), self.params.clone())
    }

    pub fn conj(&self) -> Self {
        self.with_signs(CONJ)
    }

    pub fn trace(&self) -> S {
        self.coeffs[0].clone() + self.coeffs[0].clone()
    }

    /// `a₀² + αa₁² + βa₂² + αβa₃² + γa₄² + αγa₅² + βγa₆² + αβγa₇²`.
    pub fn norm(&self) -> S {
        self.params
            .weights()
            .iter()
            .zip(self.coeffs.iter())
            .fold(S::zero(), |acc, (w, c)| acc + w.clone() * c.clone() * c.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Scalar::is_zero)
    }

    pub fn is_zero_divisor(&self) -> bool {
        !self.is_zero() && self.norm().is_zero()
    }

    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(AlgebraError::NotInvertible);
        }
        let c = self.conj();
        Ok(Self::new(c.coeffs.map(|x| x / n.clone()), self.params.clone()))
    }

    /// `a* = a₀ + a₁e₁ − a₂e₂ − … − a₇e₇`. Linear, involutive, not multiplicative.
    pub fn star(&self) -> Self {
        self.with_signs(STAR)
    }

    /// `ã = q₁ − q₂e₄`.
    pub fn tilde(&self) -> Self {
        self.with_signs(TILDE)
    }

    /// `a₊ = q₁* + q₂*e₄`.
    pub fn plus_sub(&self) -> Self {
        self.with_signs(PLUS_SUB)
    }

    /// `a⁺ = q̄₁ + q₂e₄`.
    pub fn plus_sup(&self) -> Self {
        self.with_signs(PLUS_SUP)
    }

    /// Coefficient halves `(a₀..a₃)` and `(a₄..a₇)` as quaternions of the
    /// subalgebra H(α, β), with no restriction on the parameters.
    pub fn halves(&self) -> (Quaternion<S>, Quaternion<S>) {
        let qp = self.params.quaternion_part();
        let q1 = std::array::from_fn(|k| self.coeffs[k].clone());
        let q2 = std::array::from_fn(|k| self.coeffs[k + 4].clone());
        (Quaternion::new(q1, qp.clone()), Quaternion::new(q2, qp))
    }

    /// `a = q₁ + q₂k` with `q₁, q₂ ∈ ℍ`; defined on O(1, 1, 1) only.
    pub fn split(&self) -> Result<(Quaternion<S>, Quaternion<S>), AlgebraError> {
        if !self.params.is_cayley() {
            return Err(AlgebraError::DomainMismatch {
                operation: "octonion split",
                expected: "O(1,1,1)",
                actual: self.params.to_string(),
            });
        }
        Ok(self.halves())
    }

    /// Embeds `q₁ + q₂e₄` coefficientwise; inverse of [`Octonion::halves`].
    pub fn from_halves(q1: &Quaternion<S>, q2: &Quaternion<S>, gamma: S) -> Self {
        let params = OctParams::new(q1.params.beta1.clone(), q1.params.beta2.clone(), gamma);
        let coeffs = std::array::from_fn(|k| if k < 4 { q1.coeffs[k].clone() } else { q2.coeffs[k - 4].clone() });
        Self::new(coeffs, params)
    }

    /// Embeds a quaternion of H(α, β) into the span of 1, e₁, e₂, e₃.
    pub fn embed(q: &Quaternion<S>, gamma: S) -> Self {
        Self::from_halves(q, &Quaternion::zero(q.params.clone()), gamma)
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.params.same_as(&other.params)
            && self.coeffs.iter().zip(other.coeffs.iter()).all(|(a, b)| a.approx_eq(b))
    }
}

/// Doubling product built from quaternion multiplication alone:
/// `(p₁ + p₂e₄)(q₁ + q₂e₄) = (p₁q₁ − γ q̄₂p₂) + (q₂p₁ + p₂q̄₁)e₄`.
///
/// Independent of the octonion table; used to cross-check it.
pub fn doubling_product<S: Scalar>(lhs: &Octonion<S>, rhs: &Octonion<S>) -> Result<Octonion<S>, AlgebraError> {
    lhs.check_params(rhs)?;
    let gamma = lhs.params.gamma.clone();
    let (p1, p2) = lhs.halves();
    let (q1, q2) = rhs.halves();
    let first = &(&p1 * &q1) - &(&q2.conj() * &p2).scale(&gamma);
    let second = &(&q2 * &p1) + &(&p2 * &q1.conj());
    Ok(Octonion::from_halves(&first, &second, gamma))
}

impl<S: Scalar> Mul for &Octonion<S> {
    type Output = Octonion<S>;
    fn mul(self, rhs: &Octonion<S>) -> Octonion<S> {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<S: Scalar> Mul for Octonion<S> {
    type Output = Octonion<S>;
    fn mul(self, rhs: Octonion<S>) -> Octonion<S> {
        &self * &rhs
    }
}

impl<S: Scalar> Add for &Octonion<S> {
    type Output = Octonion<S>;
    fn add(self, rhs: &Octonion<S>) -> Octonion<S> {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<S: Scalar> Add for Octonion<S> {
    type Output = Octonion<S>;
    fn add(self, rhs: Octonion<S>) -> Octonion<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for &Octonion<S> {
    type Output = Octonion<S>;
    fn sub(self, rhs: &Octonion<S>) -> Octonion<S> {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<S: Scalar> Sub for Octonion<S> {
    type Output = Octonion<S>;
    fn sub(self, rhs: Octonion<S>) -> Octonion<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Neg for &Octonion<S> {
    type Output = Octonion<S>;
    fn neg(self) -> Octonion<S> {
        self.with_signs([true; 8])
    }
}

impl<S: Scalar> Neg for Octonion<S> {
    type Output = Octonion<S>;
    fn neg(self) -> Octonion<S> {
        -&self
    }
}

/// Shorthand for `e_k` in O(1, 1, 1).
pub fn unit(k: usize) -> Octonion {
    Octonion::basis(k, OctParams::cayley())
}
