//! Coefficient fields.
//!
//! Every algebra in this crate is generic over a [`Scalar`]. Two realizations
//! ship: [`Rational`] (arbitrary-precision fractions, exact equality) and
//! [`Approx`] (binary64 carrying an absolute tolerance used by every equality
//! check).

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact rational coefficients.
pub type Rational = BigRational;

/// A field of coefficients.
///
/// `PartialEq` is structural; algebra code compares through
/// [`Scalar::approx_eq`], which is exact for [`Rational`] and
/// tolerance-based for [`Approx`].
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + PartialEq
    + Send
    + Sync
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn approx_eq(&self, other: &Self) -> bool;

    fn is_zero(&self) -> bool {
        self.approx_eq(&Self::zero())
    }

    /// Sign relative to zero, honouring the field's notion of equality.
    fn sign(&self) -> Ordering;

    fn to_f64(&self) -> f64;
}

impl Scalar for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_i64(v: i64) -> Self {
        BigRational::from_integer(BigInt::from(v))
    }
    fn approx_eq(&self, other: &Self) -> bool {
        self == other
    }
    fn sign(&self) -> Ordering {
        if Zero::is_zero(self) {
            Ordering::Equal
        } else if self.is_positive() {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }
}

/// Default absolute tolerance for [`Approx`] values built from integers.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

/// Binary64 value with an absolute equality tolerance.
///
/// Arithmetic keeps the larger of the two operand tolerances.
#[derive(Clone, Copy, Debug)]
pub struct Approx {
    pub value: f64,
    pub tol: f64,
}

impl Approx {
    pub fn new(value: f64) -> Self {
        Self { value, tol: DEFAULT_TOLERANCE }
    }

    pub fn with_tolerance(value: f64, tol: f64) -> Self {
        Self { value, tol }
    }
}

impl PartialEq for Approx {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl fmt::Display for Approx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

macro_rules! approx_binop {
    ($tr:ident, $method:ident, $op:tt) => {
        impl $tr for Approx {
            type Output = Approx;
            fn $method(self, rhs: Approx) -> Approx {
                Approx { value: self.value $op rhs.value, tol: self.tol.max(rhs.tol) }
            }
        }
    };
}

approx_binop!(Add, add, +);
approx_binop!(Sub, sub, -);
approx_binop!(Mul, mul, *);
approx_binop!(Div, div, /);

impl Neg for Approx {
    type Output = Approx;
    fn neg(self) -> Approx {
        Approx { value: -self.value, tol: self.tol }
    }
}

impl Scalar for Approx {
    fn zero() -> Self {
        Approx::new(0.0)
    }
    fn one() -> Self {
        Approx::new(1.0)
    }
    fn from_i64(v: i64) -> Self {
        Approx::new(v as f64)
    }
    fn approx_eq(&self, other: &Self) -> bool {
        (self.value - other.value).abs() <= self.tol.max(other.tol)
    }
    fn sign(&self) -> Ordering {
        if self.value.abs() <= self.tol {
            Ordering::Equal
        } else if self.value > 0.0 {
            Ordering::Greater
        } else {
            Ordering::Less
        }
    }
    fn to_f64(&self) -> f64 {
        self.value
    }
}

/// Shorthand for an integer-valued rational.
pub fn int(v: i64) -> Rational {
    Rational::from_i64(v)
}

/// Formats a rational as an integer when possible, otherwise `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parses `7`, `-3/4` or a finite decimal such as `0.125` into an exact rational.
///
/// Decimals are read exactly (`0.1` is one tenth, not the nearest binary64).
pub fn parse_rational(text: &str) -> Option<Rational> {
    let t = text.trim();
    if t.is_empty() {
        return None;
    }
    if let Some((n, d)) = t.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    if let Some((whole, frac)) = t.split_once('.') {
        let negative = whole.starts_with('-');
        let digits_ok = |s: &str| s.chars().all(|c| c.is_ascii_digit());
        let whole_digits = whole.trim_start_matches(['-', '+']);
        if !digits_ok(whole_digits) || !digits_ok(frac) || (whole_digits.is_empty() && frac.is_empty()) {
            return None;
        }
        let mut numer: BigInt = format!("{}{}", if whole_digits.is_empty() { "0" } else { whole_digits }, frac)
            .parse()
            .ok()?;
        if negative {
            numer = -numer;
        }
        let denom = num_traits::pow(BigInt::from(10), frac.len());
        return Some(BigRational::new(numer, denom));
    }
    let n: BigInt = t.parse().ok()?;
    Some(BigRational::from_integer(n))
}

/// Converts a finite float to the exact rational it denotes.
pub fn rational_from_f64(v: f64) -> Option<Rational> {
    BigRational::from_float(v)
}
