//! Degree-three integer recurrences `Xₙ = aXₙ₋₁ + bXₙ₋₂ + cXₙ₋₃`, their
//! characteristic cubic `x³ − ax² − bx − c` and the closed form
//! `Xₙ = Aσ₁ⁿ + Bσ₂ⁿ + Cσ₃ⁿ`.

use std::f64::consts::PI;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{Signed, Zero};
use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::error::RootError;

/// Largest admissible |p(σ)| for a reported root.
pub const EPS_ROOT: f64 = 1e-10;
/// Smallest admissible gap between roots, and margin above one for σ₁.
pub const EPS_SEP: f64 = 1e-8;
/// Relative residual allowed when solving for the closed-form coefficients.
pub const EPS_SOLVE: f64 = 1e-9;

const NEWTON_STEPS: usize = 8;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RecurrenceSpec {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub x0: i64,
    pub x1: i64,
    pub x2: i64,
}

impl RecurrenceSpec {
    pub fn new(coeffs: [i64; 3], seeds: [i64; 3]) -> Self {
        let [a, b, c] = coeffs;
        let [x0, x1, x2] = seeds;
        Self { a, b, c, x0, x1, x2 }
    }

    /// `Xₙ = Xₙ₋₁ + Xₙ₋₂ + Xₙ₋₃` from `0, 1, 1`.
    pub fn tribonacci() -> Self {
        Self::new([1, 1, 1], [0, 1, 1])
    }

    /// `X₀ … X_{n_max}`, exact.
    pub fn sequence(&self, n_max: usize) -> Vec<BigInt> {
        let (a, b, c) = (BigInt::from(self.a), BigInt::from(self.b), BigInt::from(self.c));
        let mut xs: Vec<BigInt> = [self.x0, self.x1, self.x2].into_iter().map(BigInt::from).collect();
        while xs.len() <= n_max {
            let n = xs.len();
            let next = &a * &xs[n - 1] + &b * &xs[n - 2] + &c * &xs[n - 3];
            xs.push(next);
        }
        xs.truncate(n_max + 1);
        xs
    }

    /// `p(x) = x³ − ax² − bx − c`.
    pub fn characteristic(&self, x: f64) -> f64 {
        ((x - self.a as f64) * x - self.b as f64) * x - self.c as f64
    }

    fn characteristic_slope(&self, x: f64) -> f64 {
        (3.0 * x - 2.0 * self.a as f64) * x - self.b as f64
    }

    /// Discriminant of the characteristic cubic; positive iff it has three
    /// distinct real roots.
    pub fn discriminant(&self) -> BigInt {
        let (b, c, d) = (BigInt::from(-self.a), BigInt::from(-self.b), BigInt::from(-self.c));
        let b2 = &b * &b;
        let c2 = &c * &c;
        BigInt::from(18) * &b * &c * &d - BigInt::from(4) * &b2 * &b * &d + &b2 * &c2
            - BigInt::from(4) * &c2 * &c
            - BigInt::from(27) * &d * &d
    }
}

/// Roots of the characteristic cubic.
///
/// Either three distinct reals `σ₁ > σ₂ > σ₃`, or a real `σ₁` with a complex
/// conjugate pair `σ₂ = σ̄₃` (positive imaginary part first) of modulus
/// strictly below `σ₁`. In both cases `σ₁` is real and `σ₁ > 1`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CubicRoots {
    pub sigma1: f64,
    pub sigma2: Complex64,
    pub sigma3: Complex64,
}

impl CubicRoots {
    pub fn all_real(&self) -> bool {
        self.sigma2.im == 0.0 && self.sigma3.im == 0.0
    }

    pub fn as_array(&self) -> [Complex64; 3] {
        [Complex64::from(self.sigma1), self.sigma2, self.sigma3]
    }
}

fn serialize_root<Ser: Serializer>(z: &Complex64, s: Ser) -> Result<Ser::Ok, Ser::Error> {
    if z.im == 0.0 {
        s.serialize_f64(z.re)
    } else {
        let mut m = s.serialize_map(Some(2))?;
        m.serialize_entry("re", &z.re)?;
        m.serialize_entry("im", &z.im)?;
        m.end()
    }
}

impl Serialize for CubicRoots {
    fn serialize<Ser: Serializer>(&self, s: Ser) -> Result<Ser::Ok, Ser::Error> {
        struct Root<'a>(&'a Complex64);
        impl Serialize for Root<'_> {
            fn serialize<Ser: Serializer>(&self, s: Ser) -> Result<Ser::Ok, Ser::Error> {
                serialize_root(self.0, s)
            }
        }
        let mut m = s.serialize_map(Some(3))?;
        m.serialize_entry("sigma1", &self.sigma1)?;
        m.serialize_entry("sigma2", &Root(&self.sigma2))?;
        m.serialize_entry("sigma3", &Root(&self.sigma3))?;
        m.end()
    }
}

fn polish(spec: &RecurrenceSpec, mut x: f64) -> f64 {
    for _ in 0..NEWTON_STEPS {
        let slope = spec.characteristic_slope(x);
        if slope == 0.0 {
            break;
        }
        x -= spec.characteristic(x) / slope;
    }
    x
}

fn residual(spec: &RecurrenceSpec, z: Complex64) -> f64 {
    let (a, b, c) = (spec.a as f64, spec.b as f64, spec.c as f64);
    (((z - a) * z - b) * z - c).norm()
}

/// Roots of the characteristic cubic; see [`CubicRoots`] for the accepted
/// shapes.
///
/// Repeated roots, and a complex pair at least as large in modulus as the
/// real root, give [`RootError::NotThreeDistinctRealRoots`].
pub fn cubic_roots(spec: &RecurrenceSpec) -> Result<CubicRoots, RootError> {
    let disc = spec.discriminant();
    let reject = || RootError::NotThreeDistinctRealRoots { discriminant: disc.to_string() };
    if disc.is_zero() {
        return Err(reject());
    }
    // Depressed form t³ + pt + q with x = t + a/3.
    let (a, b, c) = (spec.a as f64, spec.b as f64, spec.c as f64);
    let shift = a / 3.0;
    let p = -b - a * a / 3.0;
    let q = -2.0 * a * a * a / 27.0 - a * b / 3.0 - c;
    let roots = if disc.is_positive() {
        let m = 2.0 * (-p / 3.0).sqrt();
        let phi = ((3.0 * q / (2.0 * p)) * (-3.0 / p).sqrt()).clamp(-1.0, 1.0).acos() / 3.0;
        let mut r: Vec<f64> = (0..3).map(|k| polish(spec, m * (phi - 2.0 * PI * k as f64 / 3.0).cos() + shift)).collect();
        r.sort_by(|l, r| r.total_cmp(l));
        if r[0] - r[1] < EPS_SEP || r[1] - r[2] < EPS_SEP {
            return Err(reject());
        }
        CubicRoots { sigma1: r[0], sigma2: r[1].into(), sigma3: r[2].into() }
    } else {
        let d = (q * q / 4.0 + p * p * p / 27.0).sqrt();
        let s1 = polish(spec, (-q / 2.0 + d).cbrt() + (-q / 2.0 - d).cbrt() + shift);
        // x³ − ax² − bx − c = (x − σ₁)(x² + ux + v)
        let u = s1 - a;
        let v = s1 * u - b;
        let pair = Complex64::new(-u / 2.0, (4.0 * v - u * u).max(0.0).sqrt() / 2.0);
        if pair.im < EPS_SEP || pair.norm() >= s1 - EPS_SEP {
            return Err(reject());
        }
        CubicRoots { sigma1: s1, sigma2: pair, sigma3: pair.conj() }
    };
    let worst = roots.as_array().iter().map(|z| residual(spec, *z)).fold(0.0, f64::max);
    if worst > EPS_ROOT || !worst.is_finite() {
        return Err(RootError::ResidualTooLarge { residual: worst });
    }
    if roots.sigma1 <= 1.0 + EPS_SEP {
        return Err(RootError::DominantRootNotGreaterThanOne { sigma1: roots.sigma1 });
    }
    Ok(roots)
}

/// Closed-form coefficients. `A` pairs with the real root `σ₁` and is real;
/// `B` and `C` are conjugate when `σ₂, σ₃` are.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BinetCoeffs {
    pub a: f64,
    pub b: Complex64,
    pub c: Complex64,
}

impl Serialize for BinetCoeffs {
    fn serialize<Ser: Serializer>(&self, s: Ser) -> Result<Ser::Ok, Ser::Error> {
        struct Coeff<'a>(&'a Complex64);
        impl Serialize for Coeff<'_> {
            fn serialize<Ser: Serializer>(&self, s: Ser) -> Result<Ser::Ok, Ser::Error> {
                serialize_root(self.0, s)
            }
        }
        let mut m = s.serialize_map(Some(3))?;
        m.serialize_entry("A", &self.a)?;
        m.serialize_entry("B", &Coeff(&self.b))?;
        m.serialize_entry("C", &Coeff(&self.c))?;
        m.end()
    }
}

/// Solves the Vandermonde system `Σ coeffᵢ σᵢᵏ = xₖ`, k = 0, 1, 2, in closed form.
pub fn binet_coeffs(spec: &RecurrenceSpec, roots: &CubicRoots) -> Result<BinetCoeffs, RootError> {
    let [s1, s2, s3] = roots.as_array();
    let x = [spec.x0 as f64, spec.x1 as f64, spec.x2 as f64];
    let lagrange =
        |r: Complex64, o1: Complex64, o2: Complex64| (x[2] - (o1 + o2) * x[1] + o1 * o2 * x[0]) / ((r - o1) * (r - o2));
    let (ca, cb, cc) = (lagrange(s1, s2, s3), lagrange(s2, s1, s3), lagrange(s3, s1, s2));
    let worst = (0..3)
        .map(|k| {
            let lhs = ca * s1.powi(k) + cb * s2.powi(k) + cc * s3.powi(k);
            (lhs - x[k as usize]).norm() / x[k as usize].abs().max(1.0)
        })
        .fold(0.0, f64::max);
    if worst > EPS_SOLVE || !worst.is_finite() {
        return Err(RootError::ResidualTooLarge { residual: worst });
    }
    Ok(BinetCoeffs { a: ca.re, b: cb, c: cc })
}

/// `Aσ₁ⁿ + Bσ₂ⁿ + Cσ₃ⁿ`, real part.
pub fn binet_eval(coeffs: &BinetCoeffs, roots: &CubicRoots, n: u32) -> f64 {
    let n = n as i32;
    coeffs.a * roots.sigma1.powi(n) + (coeffs.b * roots.sigma2.powi(n) + coeffs.c * roots.sigma3.powi(n)).re
}
