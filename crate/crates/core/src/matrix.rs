//! Small dense square matrices and coefficient columns over a [`Scalar`].

use std::fmt;
use std::ops::{Mul, Neg};

use crate::complex::ComplexOctonion;
use crate::octonion::Octonion;
use crate::scalar::{format_rational, Rational, Scalar};

/// Row-major `dim × dim` matrix.
#[derive(Clone, Debug, PartialEq)]
pub struct RepMatrix<S = Rational> {
    dim: usize,
    entries: Vec<S>,
}

impl<S: Scalar> RepMatrix<S> {
    pub fn zeros(dim: usize) -> Self {
        Self { dim, entries: vec![S::zero(); dim * dim] }
    }

    pub fn identity(dim: usize) -> Self {
        Self::diagonal(&vec![1; dim])
    }

    pub fn diagonal(d: &[i64]) -> Self {
        let mut m = Self::zeros(d.len());
        for (k, v) in d.iter().enumerate() {
            m.set(k, k, S::from_i64(*v));
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Self {
        let dim = rows.len();
        assert!(rows.iter().all(|r| r.len() == dim), "matrix rows must form a square");
        Self { dim, entries: rows.into_iter().flatten().collect() }
    }

    pub fn from_int_rows<const D: usize>(rows: [[i64; D]; D]) -> Self {
        Self::from_rows(rows.iter().map(|r| r.iter().map(|v| S::from_i64(*v)).collect()).collect())
    }

    /// Assembles `(tl tr; bl br)` from four equal-sized blocks.
    pub fn blocks(tl: &Self, tr: &Self, bl: &Self, br: &Self) -> Self {
        let h = tl.dim;
        assert!([tr.dim, bl.dim, br.dim].iter().all(|d| *d == h), "block sizes differ");
        let mut m = Self::zeros(2 * h);
        for r in 0..h {
            for c in 0..h {
                m.set(r, c, tl.get(r, c).clone());
                m.set(r, c + h, tr.get(r, c).clone());
                m.set(r + h, c, bl.get(r, c).clone());
                m.set(r + h, c + h, br.get(r, c).clone());
            }
        }
        m
    }

    /// Block `(br, bc)` of size `size`.
    pub fn block(&self, br: usize, bc: usize, size: usize) -> Self {
        let mut m = Self::zeros(size);
        for r in 0..size {
            for c in 0..size {
                m.set(r, c, self.get(br * size + r, bc * size + c).clone());
            }
        }
        m
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.entries[r * self.dim + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.entries[r * self.dim + c] = v;
    }

    pub fn entries(&self) -> &[S] {
        &self.entries
    }

    pub fn rows(&self) -> impl Iterator<Item = &[S]> {
        self.entries.chunks(self.dim)
    }

    pub fn transpose(&self) -> Self {
        let mut m = Self::zeros(self.dim);
        for r in 0..self.dim {
            for c in 0..self.dim {
                m.set(c, r, self.get(r, c).clone());
            }
        }
        m
    }

    pub fn apply(&self, v: &VecRep<S>) -> VecRep<S> {
        assert_eq!(self.dim, v.len(), "matrix/vector size mismatch");
        let entries = self
            .rows()
            .map(|row| row.iter().zip(v.entries.iter()).fold(S::zero(), |acc, (a, b)| acc + a.clone() * b.clone()))
            .collect();
        VecRep { entries }
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.dim == other.dim && self.entries.iter().zip(other.entries.iter()).all(|(a, b)| a.approx_eq(b))
    }
}

impl<S: Scalar> Mul for &RepMatrix<S> {
    type Output = RepMatrix<S>;
    fn mul(self, rhs: &RepMatrix<S>) -> RepMatrix<S> {
        assert_eq!(self.dim, rhs.dim, "matrix size mismatch");
        let n = self.dim;
        let mut out = RepMatrix::<S>::zeros(n);
        for r in 0..n {
            for k in 0..n {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.get(r, c).clone();
                    out.set(r, c, cur + a.clone() * b.clone());
                }
            }
        }
        out
    }
}

impl<S: Scalar> Neg for &RepMatrix<S> {
    type Output = RepMatrix<S>;
    fn neg(self) -> RepMatrix<S> {
        RepMatrix { dim: self.dim, entries: self.entries.iter().map(|e| -e.clone()).collect() }
    }
}

impl fmt::Display for RepMatrix<Rational> {
    /// CSV, one row per line.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(format_rational).collect();
            writeln!(f, "{}", cells.join(","))?;
        }
        Ok(())
    }
}

/// Coefficient column of an element in the canonical basis.
#[derive(Clone, Debug, PartialEq)]
pub struct VecRep<S = Rational> {
    pub entries: Vec<S>,
}

impl<S: Scalar> VecRep<S> {
    /// Length 8 column of a real octonion.
    pub fn of_octonion(x: &Octonion<S>) -> Self {
        Self { entries: x.coeffs.to_vec() }
    }

    /// Length 16 column `(x⃗ᵗ, y⃗ᵗ)ᵗ` of `x + iy`.
    pub fn of_complex(a: &ComplexOctonion<S>) -> Self {
        Self { entries: a.re.coeffs.iter().chain(a.im.coeffs.iter()).cloned().collect() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.len() == other.len() && self.entries.iter().zip(other.entries.iter()).all(|(a, b)| a.approx_eq(b))
    }
}
