//! Generalized quaternions in H(β₁, β₂).

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::AlgebraError;
use crate::params::QuatParams;
use crate::scalar::{Rational, Scalar};
use crate::table::{table_product, QUAT_TABLE};

/// `a₀ + a₁e₁ + a₂e₂ + a₃e₃` in H(β₁, β₂).
#[derive(Clone, Debug, PartialEq)]
pub struct Quaternion<S = Rational> {
    pub coeffs: [S; 4],
    pub params: QuatParams<S>,
}

impl<S: Scalar> Quaternion<S> {
    pub fn new(coeffs: [S; 4], params: QuatParams<S>) -> Self {
        Self { coeffs, params }
    }

    pub fn from_ints(coeffs: [i64; 4], params: QuatParams<S>) -> Self {
        Self::new(coeffs.map(S::from_i64), params)
    }

    pub fn zero(params: QuatParams<S>) -> Self {
        Self::new(std::array::from_fn(|_| S::zero()), params)
    }

    pub fn scalar(value: S, params: QuatParams<S>) -> Self {
        let mut q = Self::zero(params);
        q.coeffs[0] = value;
        q
    }

    pub fn one(params: QuatParams<S>) -> Self {
        Self::scalar(S::one(), params)
    }

    /// Basis element `e_k` (`k = 0` is the unit).
    pub fn basis(k: usize, params: QuatParams<S>) -> Self {
        assert!(k < 4, "quaternion basis index {k} out of range");
        let mut q = Self::zero(params);
        q.coeffs[k] = S::one();
        q
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

    /// Product through the structure table; errors on mixed parameters.
    pub fn try_mul(&self, other: &Self) -> Result<Self, AlgebraError> {
        self.check_params(other)?;
        let coeffs = table_product(&QUAT_TABLE, &self.params.weights(), &self.coeffs, &other.coeffs);
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

    fn with_signs(&self, signs: [bool; 4]) -> Self {
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
        self.with_signs([false, true, true, true])
    }

    /// `q* = q₀ + q₁e₁ − q₂e₂ − q₃e₃`.
    pub fn star(&self) -> Self {
        self.with_signs([false, false, true, true])
    }

    pub fn trace(&self) -> S {
        self.coeffs[0].clone() + self.coeffs[0].clone()
    }

    /// `a₀² + β₁a₁² + β₂a₂² + β₁β₂a₃²`.
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

    /// Nonzero with vanishing norm.
    pub fn is_zero_divisor(&self) -> bool {
        !self.is_zero() && self.norm().is_zero()
    }

    /// `conj(q) / n(q)`.
    pub fn inverse(&self) -> Result<Self, AlgebraError> {
        let n = self.norm();
        if n.is_zero() {
            return Err(AlgebraError::NotInvertible);
        }
        let c = self.conj();
        Ok(Self::new(c.coeffs.map(|x| x / n.clone()), self.params.clone()))
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.params.same_as(&other.params)
            && self.coeffs.iter().zip(other.coeffs.iter()).all(|(a, b)| a.approx_eq(b))
    }
}

impl<S: Scalar> Mul for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn mul(self, rhs: &Quaternion<S>) -> Quaternion<S> {
        self.try_mul(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<S: Scalar> Mul for Quaternion<S> {
    type Output = Quaternion<S>;
    fn mul(self, rhs: Quaternion<S>) -> Quaternion<S> {
        &self * &rhs
    }
}

impl<S: Scalar> Add for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn add(self, rhs: &Quaternion<S>) -> Quaternion<S> {
        self.try_add(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<S: Scalar> Add for Quaternion<S> {
    type Output = Quaternion<S>;
    fn add(self, rhs: Quaternion<S>) -> Quaternion<S> {
        &self + &rhs
    }
}

impl<S: Scalar> Sub for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn sub(self, rhs: &Quaternion<S>) -> Quaternion<S> {
        self.try_sub(rhs).unwrap_or_else(|e| panic!("{e}"))
    }
}

impl<S: Scalar> Sub for Quaternion<S> {
    type Output = Quaternion<S>;
    fn sub(self, rhs: Quaternion<S>) -> Quaternion<S> {
        &self - &rhs
    }
}

impl<S: Scalar> Neg for &Quaternion<S> {
    type Output = Quaternion<S>;
    fn neg(self) -> Quaternion<S> {
        self.with_signs([true; 4])
    }
}

impl<S: Scalar> Neg for Quaternion<S> {
    type Output = Quaternion<S>;
    fn neg(self) -> Quaternion<S> {
        -&self
    }
}
