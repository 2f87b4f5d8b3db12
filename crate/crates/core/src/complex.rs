//! Complex quaternions `a + ib` and complex octonions `x + iy`.
//!
//! The `i` pairing the two real components is the formal complex unit. It is
//! unrelated to the octonion unit e₁, which the literature also writes `i`.

use crate::error::AlgebraError;
use crate::octonion::Octonion;
use crate::params::{OctParams, QuatParams};
use crate::quaternion::Quaternion;
use crate::scalar::{Rational, Scalar};

/// `a + ib` with `a, b ∈ ℍ`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexQuaternion<S = Rational> {
    pub re: Quaternion<S>,
    pub im: Quaternion<S>,
}

impl<S: Scalar> ComplexQuaternion<S> {
    pub fn new(re: Quaternion<S>, im: Quaternion<S>) -> Result<Self, AlgebraError> {
        for part in [&re, &im] {
            if !part.params.is_hamilton() {
                return Err(AlgebraError::DomainMismatch {
                    operation: "complex quaternion",
                    expected: "H(1,1)",
                    actual: part.params.to_string(),
                });
            }
        }
        Ok(Self { re, im })
    }

    pub fn from_ints(re: [i64; 4], im: [i64; 4]) -> Self {
        let h = QuatParams::hamilton();
        Self { re: Quaternion::from_ints(re, h.clone()), im: Quaternion::from_ints(im, h) }
    }
}

/// `x + iy` with `x, y ∈ 𝕆`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexOctonion<S = Rational> {
    pub re: Octonion<S>,
    pub im: Octonion<S>,
}

/// Which product of complex octonions to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ProductKind {
    /// `(xv − (yw*)*) + i(x*w + (y*v*)*)`: the expansion in which the
    /// complex unit interacts with octonions through e₁.
    Paper,
    /// `(xv − yw) + i(xw + yv)`: the complex unit is central.
    Central,
}

impl ProductKind {
    pub const ALL: [ProductKind; 2] = [ProductKind::Paper, ProductKind::Central];

    pub fn name(self) -> &'static str {
        match self {
            ProductKind::Paper => "paper",
            ProductKind::Central => "central",
        }
    }
}

impl<S: Scalar> ComplexOctonion<S> {
    pub fn new(re: Octonion<S>, im: Octonion<S>) -> Result<Self, AlgebraError> {
        for part in [&re, &im] {
            if !part.params.is_cayley() {
                return Err(AlgebraError::DomainMismatch {
                    operation: "complex octonion",
                    expected: "O(1,1,1)",
                    actual: part.params.to_string(),
                });
            }
        }
        Ok(Self { re, im })
    }

    pub fn from_ints(re: [i64; 8], im: [i64; 8]) -> Self {
        let o = OctParams::cayley();
        Self { re: Octonion::from_ints(re, o.clone()), im: Octonion::from_ints(im, o) }
    }

    pub fn real(x: Octonion<S>) -> Result<Self, AlgebraError> {
        let zero = Octonion::zero(x.params.clone());
        Self::new(x, zero)
    }

    pub fn imaginary(y: Octonion<S>) -> Result<Self, AlgebraError> {
        let zero = Octonion::zero(y.params.clone());
        Self::new(zero, y)
    }

    pub fn zero() -> Self {
        let z = Octonion::zero(OctParams::cayley());
        Self { re: z.clone(), im: z }
    }

    pub fn one() -> Self {
        Self { re: Octonion::one(OctParams::cayley()), im: Octonion::zero(OctParams::cayley()) }
    }

    /// `Ā = x̄ + iȳ`.
    pub fn conj(&self) -> Self {
        Self { re: self.re.conj(), im: self.im.conj() }
    }

    /// `A⁺ = x⁺ + iy⁺`.
    pub fn plus_sup(&self) -> Self {
        Self { re: self.re.plus_sup(), im: self.im.plus_sup() }
    }

    pub fn mul_paper(&self, other: &Self) -> Self {
        let (x, y) = (&self.re, &self.im);
        let (v, w) = (&other.re, &other.im);
        let re = &(x * v) - &(y * &w.star()).star();
        let im = &(&x.star() * w) + &(&y.star() * &v.star()).star();
        Self { re, im }
    }

    pub fn mul_central(&self, other: &Self) -> Self {
        let (x, y) = (&self.re, &self.im);
        let (v, w) = (&other.re, &other.im);
        Self { re: &(x * v) - &(y * w), im: &(x * w) + &(y * v) }
    }

    pub fn mul(&self, other: &Self, kind: ProductKind) -> Self {
        match kind {
            ProductKind::Paper => self.mul_paper(other),
            ProductKind::Central => self.mul_central(other),
        }
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.re.approx_eq(&other.re) && self.im.approx_eq(&other.im)
    }
}

impl<S: Scalar> std::ops::Add for &ComplexOctonion<S> {
    type Output = ComplexOctonion<S>;
    fn add(self, rhs: &ComplexOctonion<S>) -> ComplexOctonion<S> {
        ComplexOctonion { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::octonion::unit;

    fn c(re: Octonion, im: Octonion) -> ComplexOctonion {
        ComplexOctonion::new(re, im).unwrap()
    }

    fn zero() -> Octonion {
        Octonion::zero(OctParams::cayley())
    }

    #[test]
    fn conj_examples() {
        assert_eq!(ComplexOctonion::<Rational>::one().conj(), ComplexOctonion::one());
        let a = c(unit(2), unit(4));
        assert_eq!(a.conj(), c(-unit(2), -unit(4)));
        assert_eq!(a.conj().conj(), a);
    }

    #[test]
    fn e1_rule_product_examples() {
        let x = c(unit(3), unit(6));
        assert_eq!(ComplexOctonion::one().mul_paper(&x), x);
        let i1 = c(zero(), unit(0));
        assert_eq!(i1.mul_paper(&i1), c(-unit(0), zero()));
        let a = c(zero(), unit(2));
        let e2 = c(unit(2), zero());
        assert_eq!(a.mul_paper(&e2), c(zero(), -unit(0)));
    }

    #[test]
    fn central_product_examples() {
        let i1 = c(zero(), unit(0));
        assert_eq!(i1.mul_central(&i1), c(-unit(0), zero()));
        let a = c(zero(), unit(2));
        let e2 = c(unit(2), zero());
        assert_eq!(a.mul_central(&e2), c(zero(), -unit(0)));
        let a = c(unit(1), unit(0));
        let x = c(unit(1), zero());
        assert_eq!(a.mul_central(&x), c(-unit(0), unit(1)));
    }

    #[test]
    fn rejects_non_division_components() {
        let bad: Octonion = Octonion::basis(1, OctParams::from_ints(1, 1, -1));
        assert!(ComplexOctonion::new(bad.clone(), bad).is_err());
        let badq: Quaternion = Quaternion::basis(1, QuatParams::from_ints(2, 1));
        assert!(ComplexQuaternion::new(badq.clone(), badq).is_err());
    }
}
