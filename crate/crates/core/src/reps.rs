//! Real matrix representations.
//!
//! | map | symbol | acts as |
//! |-----|--------|---------|
//! | [`quat_left`]  | λ(q) | `λ(q)x⃗ = (qx)⃗` on ℍ |
//! | [`quat_right`] | ρ(q) | `ρ(q)x⃗ = (xq)⃗` on ℍ |
//! | [`oct_left`]   | Λ(a) | `Λ(a)x⃗ = (ax)⃗` on 𝕆 |
//! | [`oct_right`]  | Δ(a) | `Δ(a)x⃗ = (xa)⃗` on 𝕆 |
//! | [`cquat_left`], [`cquat_right`] | Γ(Q), Θ(Q) | complex quaternions |
//! | [`coct_left`], [`coct_right`]   | Φ(A), Ψ(A) | complex octonions |
//!
//! The 4×4 maps are transcribed entry by entry; everything larger is
//! assembled from blocks.

use std::str::FromStr;

use crate::complex::{ComplexOctonion, ComplexQuaternion};
use crate::error::AlgebraError;
use crate::matrix::RepMatrix;
use crate::octonion::Octonion;
use crate::params::OctParams;
use crate::quaternion::Quaternion;
use crate::scalar::{Rational, Scalar};

/// Entry `(negate, coefficient index)`.
type Pattern = [[(bool, usize); 4]; 4];

const P: bool = false;
const N: bool = true;

const LAMBDA: Pattern = [
    [(P, 0), (N, 1), (N, 2), (N, 3)],
    [(P, 1), (P, 0), (N, 3), (P, 2)],
    [(P, 2), (P, 3), (P, 0), (N, 1)],
    [(P, 3), (N, 2), (P, 1), (P, 0)],
];

const RHO: Pattern = [
    [(P, 0), (N, 1), (N, 2), (N, 3)],
    [(P, 1), (P, 0), (P, 3), (N, 2)],
    [(P, 2), (N, 3), (P, 0), (P, 1)],
    [(P, 3), (P, 2), (N, 1), (P, 0)],
];

fn from_pattern<S: Scalar>(pattern: &Pattern, c: &[S; 4]) -> RepMatrix<S> {
    RepMatrix::from_rows(
        pattern
            .iter()
            .map(|row| row.iter().map(|&(neg, k)| if neg { -c[k].clone() } else { c[k].clone() }).collect())
            .collect(),
    )
}

fn require_hamilton<S: Scalar>(q: &Quaternion<S>, operation: &'static str) -> Result<(), AlgebraError> {
    if q.params.is_hamilton() {
        Ok(())
    } else {
        Err(AlgebraError::DomainMismatch { operation, expected: "H(1,1)", actual: q.params.to_string() })
    }
}

fn require_cayley<S: Scalar>(a: &Octonion<S>, operation: &'static str) -> Result<(), AlgebraError> {
    if a.params.is_cayley() {
        Ok(())
    } else {
        Err(AlgebraError::DomainMismatch { operation, expected: "O(1,1,1)", actual: a.params.to_string() })
    }
}

/// λ(q), the left representation of a real quaternion.
pub fn quat_left<S: Scalar>(q: &Quaternion<S>) -> Result<RepMatrix<S>, AlgebraError> {
    require_hamilton(q, "lambda")?;
    Ok(from_pattern(&LAMBDA, &q.coeffs))
}

/// ρ(q), the right representation of a real quaternion.
pub fn quat_right<S: Scalar>(q: &Quaternion<S>) -> Result<RepMatrix<S>, AlgebraError> {
    require_hamilton(q, "rho")?;
    Ok(from_pattern(&RHO, &q.coeffs))
}

/// Λ(a) = (λ(q₁), −ρ(q₂)M₁; λ(q₂)M₁, ρ(q₁)) for `a = q₁ + q₂k`.
pub fn oct_left<S: Scalar>(a: &Octonion<S>) -> Result<RepMatrix<S>, AlgebraError> {
    require_cayley(a, "Lambda")?;
    let (q1, q2) = a.split()?;
    let m1 = ConstMatrix::M1.matrix();
    Ok(RepMatrix::blocks(
        &quat_left(&q1)?,
        &-&(&quat_right(&q2)? * &m1),
        &(&quat_left(&q2)? * &m1),
        &quat_right(&q1)?,
    ))
}

/// Δ(a) = (ρ(q₁), −λ(q̄₂); λ(q₂), ρ(q̄₁)).
pub fn oct_right<S: Scalar>(a: &Octonion<S>) -> Result<RepMatrix<S>, AlgebraError> {
    require_cayley(a, "Delta")?;
    let (q1, q2) = a.split()?;
    Ok(RepMatrix::blocks(
        &quat_right(&q1)?,
        &-&quat_left(&q2.conj())?,
        &quat_left(&q2)?,
        &quat_right(&q1.conj())?,
    ))
}

/// Γ(Q) = (λ(a), −λ(b*); λ(b), λ(a*)) for `Q = a + ib`.
pub fn cquat_left<S: Scalar>(q: &ComplexQuaternion<S>) -> Result<RepMatrix<S>, AlgebraError> {
    let (a, b) = (&q.re, &q.im);
    Ok(RepMatrix::blocks(&quat_left(a)?, &-&quat_left(&b.star())?, &quat_left(b)?, &quat_left(&a.star())?))
}

/// Θ(Q) = (ρ(a), −ρ(b); ρ(b*), ρ(a*)).
pub fn cquat_right<S: Scalar>(q: &ComplexQuaternion<S>) -> Result<RepMatrix<S>, AlgebraError> {
    let (a, b) = (&q.re, &q.im);
    Ok(RepMatrix::blocks(&quat_right(a)?, &-&quat_right(b)?, &quat_right(&b.star())?, &quat_right(&a.star())?))
}

/// Φ(A) = (Λ(x), −Λ(y); Λ(y*), Λ(x*)) for `A = x + iy`.
pub fn coct_left<S: Scalar>(a: &ComplexOctonion<S>) -> Result<RepMatrix<S>, AlgebraError> {
    let (x, y) = (&a.re, &a.im);
    Ok(RepMatrix::blocks(&oct_left(x)?, &-&oct_left(y)?, &oct_left(&y.star())?, &oct_left(&x.star())?))
}

/// Ψ(A) = (Δ(x), −Δ(y); Δ(y*), Δ(x*)).
pub fn coct_right<S: Scalar>(a: &ComplexOctonion<S>) -> Result<RepMatrix<S>, AlgebraError> {
    let (x, y) = (&a.re, &a.im);
    Ok(RepMatrix::blocks(&oct_right(x)?, &-&oct_right(y)?, &oct_right(&y.star())?, &oct_right(&x.star())?))
}

/// Named constant matrices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ConstMatrix {
    /// diag(1, −1, −1, −1)
    M1,
    /// λ(i)
    L1,
    /// ρ(i)
    R1,
    /// ε = diag(1, 1, 1, 1, −1, −1, −1, −1)
    Epsilon,
    /// τ = diag(1, 1, −1, −1, 1, 1, −1, −1)
    Tau,
    /// σ = diag(1, 1, −1, −1)
    Sigma,
    /// θ, which coincides with Λ(e₁)
    Theta,
    /// T = (M₁, O₄; O₄, I₄)
    T,
    /// S = (T, O₈; O₈, T)
    S,
}

impl ConstMatrix {
    pub const ALL: [ConstMatrix; 9] = [
        ConstMatrix::M1,
        ConstMatrix::L1,
        ConstMatrix::R1,
        ConstMatrix::Epsilon,
        ConstMatrix::Tau,
        ConstMatrix::Sigma,
        ConstMatrix::Theta,
        ConstMatrix::T,
        ConstMatrix::S,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConstMatrix::M1 => "M1",
            ConstMatrix::L1 => "L1",
            ConstMatrix::R1 => "R1",
            ConstMatrix::Epsilon => "eps",
            ConstMatrix::Tau => "tau",
            ConstMatrix::Sigma => "sigma",
            ConstMatrix::Theta => "theta",
            ConstMatrix::T => "T",
            ConstMatrix::S => "S",
        }
    }

    pub fn matrix<S: Scalar>(self) -> RepMatrix<S> {
        match self {
            ConstMatrix::M1 => RepMatrix::diagonal(&[1, -1, -1, -1]),
            ConstMatrix::L1 => RepMatrix::from_int_rows([
                [0, -1, 0, 0],
                [1, 0, 0, 0],
                [0, 0, 0, -1],
                [0, 0, 1, 0],
            ]),
            ConstMatrix::R1 => RepMatrix::from_int_rows([
                [0, -1, 0, 0],
                [1, 0, 0, 0],
                [0, 0, 0, 1],
                [0, 0, -1, 0],
            ]),
            ConstMatrix::Epsilon => RepMatrix::diagonal(&[1, 1, 1, 1, -1, -1, -1, -1]),
            ConstMatrix::Tau => RepMatrix::diagonal(&[1, 1, -1, -1, 1, 1, -1, -1]),
            ConstMatrix::Sigma => RepMatrix::diagonal(&[1, 1, -1, -1]),
            ConstMatrix::Theta => RepMatrix::from_int_rows([
                [0, -1, 0, 0, 0, 0, 0, 0],
                [1, 0, 0, 0, 0, 0, 0, 0],
                [0, 0, 0, -1, 0, 0, 0, 0],
                [0, 0, 1, 0, 0, 0, 0, 0],
                [0, 0, 0, 0, 0, -1, 0, 0],
                [0, 0, 0, 0, 1, 0, 0, 0],
                [0, 0, 0, 0, 0, 0, 0, 1],
                [0, 0, 0, 0, 0, 0, -1, 0],
            ]),
            ConstMatrix::T => RepMatrix::diagonal(&[1, -1, -1, -1, 1, 1, 1, 1]),
            ConstMatrix::S => {
                let t = ConstMatrix::T.matrix();
                let o = RepMatrix::zeros(8);
                RepMatrix::blocks(&t, &o, &o, &t)
            }
        }
    }
}

impl FromStr for ConstMatrix {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let key = s.trim();
        let found = match key {
            "epsilon" | "ε" => Some(ConstMatrix::Epsilon),
            "τ" => Some(ConstMatrix::Tau),
            "σ" => Some(ConstMatrix::Sigma),
            "θ" => Some(ConstMatrix::Theta),
            _ => ConstMatrix::ALL.iter().copied().find(|c| c.name() == key),
        };
        found.ok_or_else(|| format!("unknown constant matrix `{key}`"))
    }
}

/// Column of eight octonions, e.g. `N = (1, e₁, …, e₇)ᵗ`.
#[derive(Clone, Debug, PartialEq)]
pub struct OctColumn<S = Rational> {
    pub entries: Vec<Octonion<S>>,
}

impl<S: Scalar> OctColumn<S> {
    /// `N = (1, e₁, …, e₇)ᵗ`.
    pub fn basis_column() -> Self {
        Self { entries: (0..8).map(|k| Octonion::basis(k, OctParams::cayley())).collect() }
    }

    /// `M = (1, −e₁, …, −e₇)ᵗ`.
    pub fn conjugate_basis_column() -> Self {
        Self { entries: (0..8).map(|k| Octonion::basis(k, OctParams::cayley()).conj()).collect() }
    }

    /// Row-wise scalar combinations `Σⱼ Rₖⱼ Cⱼ`.
    pub fn apply(&self, r: &RepMatrix<S>) -> Self {
        assert_eq!(r.dim(), self.entries.len(), "matrix/column size mismatch");
        let entries = r
            .rows()
            .map(|row| {
                row.iter()
                    .zip(self.entries.iter())
                    .fold(Octonion::zero(OctParams::cayley()), |acc, (s, c)| &acc + &c.scale(s))
            })
            .collect();
        Self { entries }
    }

    /// Entrywise `Cₖ · a`.
    pub fn scale_right(&self, a: &Octonion<S>) -> Self {
        Self { entries: self.entries.iter().map(|c| c * a).collect() }
    }

    /// Entrywise `a · Cₖ`.
    pub fn scale_left(&self, a: &Octonion<S>) -> Self {
        Self { entries: self.entries.iter().map(|c| a * c).collect() }
    }

    /// `Σₖ selfₖ · otherₖ`, i.e. `selfᵗ other`.
    pub fn contract(&self, other: &Self) -> Octonion<S> {
        self.entries
            .iter()
            .zip(other.entries.iter())
            .fold(Octonion::zero(OctParams::cayley()), |acc, (a, b)| &acc + &(a * b))
    }

    /// Coefficients of every entry, concatenated.
    pub fn flatten(&self) -> Vec<S> {
        self.entries.iter().flat_map(|o| o.coeffs.iter().cloned()).collect()
    }
}

/// Convenience for representation maps over exact rationals.
pub type RationalMatrix = RepMatrix<Rational>;
