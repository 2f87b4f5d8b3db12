//! Zorn's vector-matrix algebra: 2×2 "matrices" with scalar diagonal and
//! 3-vector off-diagonal entries,
//!
//! ```text
//! (a u)(c z)   (ac + ⟨u,w⟩      az + du − v×w)
//! (v b)(w d) = (cv + bw + u×z   bd + ⟨v,z⟩   )
//! ```
//!
//! Unital, alternative, not associative; a model of the split octonions.

use std::ops::{Add, Mul, Neg, Sub};

use crate::scalar::{Rational, Scalar};

#[derive(Clone, Debug, PartialEq)]
pub struct ZornElement<S = Rational> {
    pub a: S,
    pub b: S,
    pub u: [S; 3],
    pub v: [S; 3],
}

fn dot<S: Scalar>(x: &[S; 3], y: &[S; 3]) -> S {
    x.iter().zip(y.iter()).fold(S::zero(), |acc, (p, q)| acc + p.clone() * q.clone())
}

fn cross<S: Scalar>(x: &[S; 3], y: &[S; 3]) -> [S; 3] {
    let c = |i: usize, j: usize| x[i].clone() * y[j].clone() - x[j].clone() * y[i].clone();
    [c(1, 2), c(2, 0), c(0, 1)]
}

fn lin<S: Scalar>(s: &S, x: &[S; 3], t: &S, y: &[S; 3]) -> [S; 3] {
    std::array::from_fn(|k| s.clone() * x[k].clone() + t.clone() * y[k].clone())
}

fn vzip<S: Scalar>(x: &[S; 3], y: &[S; 3], f: impl Fn(S, S) -> S) -> [S; 3] {
    std::array::from_fn(|k| f(x[k].clone(), y[k].clone()))
}

impl<S: Scalar> ZornElement<S> {
    pub fn new(a: S, b: S, u: [S; 3], v: [S; 3]) -> Self {
        Self { a, b, u, v }
    }

    pub fn from_ints(a: i64, b: i64, u: [i64; 3], v: [i64; 3]) -> Self {
        Self::new(S::from_i64(a), S::from_i64(b), u.map(S::from_i64), v.map(S::from_i64))
    }

    pub fn zero() -> Self {
        Self::from_ints(0, 0, [0; 3], [0; 3])
    }

    pub fn one() -> Self {
        Self::from_ints(1, 1, [0; 3], [0; 3])
    }

    /// The eight canonical basis elements, ordered `a, b, u₁..u₃, v₁..v₃`.
    pub fn basis(k: usize) -> Self {
        let mut c = [0i64; 8];
        c[k] = 1;
        Self::from_flat(c.map(S::from_i64))
    }

    /// Flat layout `[a, b, u₁, u₂, u₃, v₁, v₂, v₃]`.
    pub fn to_flat(&self) -> [S; 8] {
        let (a, b, u, v) = (&self.a, &self.b, &self.u, &self.v);
        [a, b, &u[0], &u[1], &u[2], &v[0], &v[1], &v[2]].map(Clone::clone)
    }

    pub fn from_flat(c: [S; 8]) -> Self {
        let [a, b, u1, u2, u3, v1, v2, v3] = c;
        Self::new(a, b, [u1, u2, u3], [v1, v2, v3])
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::from_flat(self.to_flat().map(|x| x * s.clone()))
    }

    /// `ab − ⟨u,v⟩`, the multiplicative quadratic form of the algebra.
    pub fn norm(&self) -> S {
        self.a.clone() * self.b.clone() - dot(&self.u, &self.v)
    }

    pub fn approx_eq(&self, other: &Self) -> bool {
        self.to_flat().iter().zip(other.to_flat().iter()).all(|(x, y)| x.approx_eq(y))
    }
}

impl<S: Scalar> Mul for &ZornElement<S> {
    type Output = ZornElement<S>;
    fn mul(self, q: &ZornElement<S>) -> ZornElement<S> {
        let (a, u, v, b) = (&self.a, &self.u, &self.v, &self.b);
        let (c, z, w, d) = (&q.a, &q.u, &q.v, &q.b);
        let top_left = a.clone() * c.clone() + dot(u, w);
        let top_right = vzip(&lin(a, z, d, u), &cross(v, w), |x, y| x - y);
        let bottom_left = vzip(&lin(c, v, b, w), &cross(u, z), |x, y| x + y);
        let bottom_right = b.clone() * d.clone() + dot(v, z);
        ZornElement::new(top_left, bottom_right, top_right, bottom_left)
    }
}

impl<S: Scalar> Mul for ZornElement<S> {
    type Output = ZornElement<S>;
    fn mul(self, rhs: ZornElement<S>) -> ZornElement<S> {
        &self * &rhs
    }
}

impl<S: Scalar> Add for &ZornElement<S> {
    type Output = ZornElement<S>;
    fn add(self, rhs: &ZornElement<S>) -> ZornElement<S> {
        let (l, r) = (self.to_flat(), rhs.to_flat());
        ZornElement::from_flat(std::array::from_fn(|k| l[k].clone() + r[k].clone()))
    }
}

impl<S: Scalar> Sub for &ZornElement<S> {
    type Output = ZornElement<S>;
    fn sub(self, rhs: &ZornElement<S>) -> ZornElement<S> {
        let (l, r) = (self.to_flat(), rhs.to_flat());
        ZornElement::from_flat(std::array::from_fn(|k| l[k].clone() - r[k].clone()))
    }
}

impl<S: Scalar> Neg for &ZornElement<S> {
    type Output = ZornElement<S>;
    fn neg(self) -> ZornElement<S> {
        ZornElement::from_flat(self.to_flat().map(|x| -x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    type Z = ZornElement<Rational>;

    #[test]
    fn identity_is_two_sided() {
        let q = Z::from_ints(2, -3, [1, 4, -1], [5, 0, 2]);
        assert_eq!(&Z::one() * &q, q);
        assert_eq!(&q * &Z::one(), q);
    }

    #[test]
    fn dot_product_lands_top_left() {
        let p = Z::from_ints(0, 0, [1, 0, 0], [0, 0, 0]);
        let q = Z::from_ints(0, 0, [0, 0, 0], [1, 0, 0]);
        assert_eq!(&p * &q, Z::from_ints(1, 0, [0; 3], [0; 3]));
    }

    #[test]
    fn some_basis_triple_is_not_associative() {
        let mut found = None;
        'search: for i in 0..8 {
            for j in 0..8 {
                for k in 0..8 {
                    let (x, y, z) = (Z::basis(i), Z::basis(j), Z::basis(k));
                    if &(&x * &y) * &z != &x * &(&y * &z) {
                        found = Some((i, j, k));
                        break 'search;
                    }
                }
            }
        }
        assert!(found.is_some());
    }

    #[test]
    fn alternative_on_basis() {
        for i in 0..8 {
            for j in 0..8 {
                let (x, y) = (Z::basis(i), Z::basis(j));
                assert_eq!(&(&x * &x) * &y, &x * &(&x * &y));
                assert_eq!(&y * &(&x * &x), &(&y * &x) * &x);
                assert_eq!(&x * &(&y * &x), &(&x * &y) * &x);
            }
        }
    }

    #[test]
    fn norm_is_multiplicative() {
        let p = Z::from_ints(2, -3, [1, 4, -1], [5, 0, 2]);
        let q = Z::from_ints(-1, 7, [0, 2, 3], [1, -1, 6]);
        assert_eq!((&p * &q).norm(), p.norm() * q.norm());
    }
}
