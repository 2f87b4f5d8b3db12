//! Parameter tuples selecting a generalized quaternion or octonion algebra.

use std::cmp::Ordering;
use std::fmt;

use crate::scalar::{Rational, Scalar};

/// How an algebra's norm form behaves over the reals.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
#[serde(rename_all = "snake_case")]
pub enum AlgebraKind {
    /// Every nonzero element has nonzero norm.
    Division,
    /// Nonzero elements of zero norm exist.
    Split,
    /// Some parameter is zero, so the norm form is degenerate. Arithmetic
    /// still works but this is not a composition algebra candidate.
    Degenerate,
}

fn classify_signs(signs: &[Ordering]) -> AlgebraKind {
    if signs.contains(&Ordering::Equal) {
        AlgebraKind::Degenerate
    } else if signs.iter().all(|s| *s == Ordering::Greater) {
        AlgebraKind::Division
    } else {
        AlgebraKind::Split
    }
}

/// Parameters (β₁, β₂) of H(β₁, β₂).
#[derive(Clone, Debug, PartialEq)]
pub struct QuatParams<S = Rational> {
    pub beta1: S,
    pub beta2: S,
}

impl<S: Scalar> QuatParams<S> {
    pub fn new(beta1: S, beta2: S) -> Self {
        Self { beta1, beta2 }
    }

    /// The real division algebra ℍ, i.e. H(1, 1).
    pub fn hamilton() -> Self {
        Self::new(S::one(), S::one())
    }

    pub fn from_ints(beta1: i64, beta2: i64) -> Self {
        Self::new(S::from_i64(beta1), S::from_i64(beta2))
    }

    /// Products of parameters indexed by a bitmask (bit 0 = β₁, bit 1 = β₂).
    /// Entry `k` is also the norm weight of basis element `e_k`.
    pub fn weights(&self) -> [S; 4] {
        [
            S::one(),
            self.beta1.clone(),
            self.beta2.clone(),
            self.beta1.clone() * self.beta2.clone(),
        ]
    }

    pub fn same_as(&self, other: &Self) -> bool {
        self.beta1.approx_eq(&other.beta1) && self.beta2.approx_eq(&other.beta2)
    }

    pub fn is_hamilton(&self) -> bool {
        self.same_as(&Self::hamilton())
    }

    pub fn classify(&self) -> AlgebraKind {
        classify_signs(&[self.beta1.sign(), self.beta2.sign()])
    }
}

/// Parameters (α, β, γ) of O(α, β, γ).
#[derive(Clone, Debug, PartialEq)]
pub struct OctParams<S = Rational> {
    pub alpha: S,
    pub beta: S,
    pub gamma: S,
}

impl<S: Scalar> OctParams<S> {
    pub fn new(alpha: S, beta: S, gamma: S) -> Self {
        Self { alpha, beta, gamma }
    }

    /// The real division octonions 𝕆, i.e. O(1, 1, 1).
    pub fn cayley() -> Self {
        Self::new(S::one(), S::one(), S::one())
    }

    pub fn from_ints(alpha: i64, beta: i64, gamma: i64) -> Self {
        Self::new(S::from_i64(alpha), S::from_i64(beta), S::from_i64(gamma))
    }

    /// Products of parameters indexed by a bitmask (bit 0 = α, bit 1 = β,
    /// bit 2 = γ). Entry `k` is the norm weight of `e_k`.
    pub fn weights(&self) -> [S; 8] {
        let (a, b, g) = (&self.alpha, &self.beta, &self.gamma);
        let ab = a.clone() * b.clone();
        [
            S::one(),
            a.clone(),
            b.clone(),
            ab.clone(),
            g.clone(),
            a.clone() * g.clone(),
            b.clone() * g.clone(),
            ab * g.clone(),
        ]
    }

    /// The parameters of the quaternion subalgebra spanned by 1, e₁, e₂, e₃.
    pub fn quaternion_part(&self) -> QuatParams<S> {
        QuatParams::new(self.alpha.clone(), self.beta.clone())
    }

    pub fn same_as(&self, other: &Self) -> bool {
        self.alpha.approx_eq(&other.alpha)
            && self.beta.approx_eq(&other.beta)
            && self.gamma.approx_eq(&other.gamma)
    }

    pub fn is_cayley(&self) -> bool {
        self.same_as(&Self::cayley())
    }

    pub fn classify(&self) -> AlgebraKind {
        classify_signs(&[self.alpha.sign(), self.beta.sign(), self.gamma.sign()])
    }
}

impl<S: fmt::Display> fmt::Display for QuatParams<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H({}, {})", self.beta1, self.beta2)
    }
}

impl<S: fmt::Display> fmt::Display for OctParams<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "O({}, {}, {})", self.alpha, self.beta, self.gamma)
    }
}
