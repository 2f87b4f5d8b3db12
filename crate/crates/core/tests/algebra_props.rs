mod common;

use common::int;
use hyperalg::{OctParams, Octonion, QuatParams, Quaternion, Rational, ZornElement};
use num_bigint::BigInt;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Rational> {
    (-20i64..=20, 1i64..=6).prop_map(|(n, d)| Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn quat_params() -> impl Strategy<Value = QuatParams> {
    prop_oneof![Just((1, 1)), Just((1, -1)), Just((2, 3)), Just((-1, -1)), Just((3, -5))]
        .prop_map(|(a, b)| QuatParams::from_ints(a, b))
}

fn oct_params() -> impl Strategy<Value = OctParams> {
    prop_oneof![Just((1, 1, 1)), Just((1, 1, -1)), Just((1, -1, 2)), Just((2, 3, 5)), Just((-1, -2, -3))]
        .prop_map(|(a, b, c)| OctParams::from_ints(a, b, c))
}

fn quats(k: usize) -> impl Strategy<Value = Vec<Quaternion>> {
    (quat_params(), prop::collection::vec(prop::array::uniform4(rational()), k))
        .prop_map(|(p, cs)| cs.into_iter().map(|c| Quaternion::new(c, p.clone())).collect())
}

fn octs(k: usize) -> impl Strategy<Value = Vec<Octonion>> {
    (oct_params(), prop::collection::vec(prop::array::uniform8(rational()), k))
        .prop_map(|(p, cs)| cs.into_iter().map(|c| Octonion::new(c, p.clone())).collect())
}

fn zorn() -> impl Strategy<Value = ZornElement> {
    prop::array::uniform8(rational()).prop_map(ZornElement::from_flat)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn quaternion_norm_is_multiplicative(v in quats(2)) {
        prop_assert_eq!((&v[0] * &v[1]).norm(), v[0].norm() * v[1].norm());
    }

    #[test]
    fn quaternion_quadratic_identity(v in quats(1)) {
        let a = &v[0];
        let p = a.params.clone();
        let lhs = &(a * a) - &a.scale(&a.trace()) + Quaternion::scalar(a.norm(), p);
        prop_assert!(lhs.is_zero());
    }

    #[test]
    fn quaternion_product_is_associative(v in quats(3)) {
        prop_assert_eq!(&(&v[0] * &v[1]) * &v[2], &v[0] * &(&v[1] * &v[2]));
    }

    #[test]
    fn quaternion_conjugate_reverses_products(v in quats(2)) {
        prop_assert_eq!((&v[0] * &v[1]).conj(), &v[1].conj() * &v[0].conj());
    }

    #[test]
    fn octonion_norm_is_multiplicative(v in octs(2)) {
        prop_assert_eq!((&v[0] * &v[1]).norm(), v[0].norm() * v[1].norm());
    }

    #[test]
    fn octonion_quadratic_identity(v in octs(1)) {
        let a = &v[0];
        let lhs = &(a * a) - &a.scale(&a.trace()) + Octonion::scalar(a.norm(), a.params.clone());
        prop_assert!(lhs.is_zero());
    }

    #[test]
    fn octonion_is_alternative_and_flexible(v in octs(2)) {
        let (x, y) = (&v[0], &v[1]);
        prop_assert_eq!(&(x * x) * y, x * &(x * y));
        prop_assert_eq!(&(y * x) * x, y * &(x * x));
        prop_assert_eq!(&(x * y) * x, x * &(y * x));
    }

    #[test]
    fn octonion_moufang(v in octs(3)) {
        let (x, y, z) = (&v[0], &v[1], &v[2]);
        prop_assert_eq!(&(&(z * x) * y) * x, z * &(x * &(y * x)));
        prop_assert_eq!(x * &(y * &(x * z)), &(&(x * y) * x) * z);
        prop_assert_eq!(&(x * y) * &(z * x), &(x * &(y * z)) * x);
    }

    #[test]
    fn octonion_inverse_when_norm_nonzero(v in octs(1)) {
        let a = &v[0];
        prop_assume!(a.norm() != int(0));
        prop_assert_eq!(&a.inverse().unwrap() * a, Octonion::one(a.params.clone()));
    }

    #[test]
    fn octonion_matches_doubling(v in octs(2)) {
        prop_assert_eq!(hyperalg::octonion::doubling_product(&v[0], &v[1]).unwrap(), &v[0] * &v[1]);
    }

    #[test]
    fn zorn_norm_is_multiplicative(x in zorn(), y in zorn()) {
        prop_assert_eq!((&x * &y).norm(), x.norm() * y.norm());
    }

    #[test]
    fn zorn_quadratic_identity(x in zorn()) {
        let t = x.a.clone() + x.b.clone();
        let lhs = &(&(&x * &x) - &x.scale(&t)) + &ZornElement::one().scale(&x.norm());
        prop_assert_eq!(lhs, ZornElement::zero());
    }

    #[test]
    fn zorn_is_alternative(x in zorn(), y in zorn()) {
        prop_assert_eq!(&(&x * &x) * &y, &x * &(&x * &y));
        prop_assert_eq!(&(&y * &x) * &x, &y * &(&x * &x));
    }
}

#[test]
fn split_algebras_have_zero_divisors() {
    let p: OctParams = OctParams::from_ints(1, 1, -1);
    let a = Octonion::from_ints([1, 0, 0, 0, 1, 0, 0, 0], p.clone());
    assert_eq!(a.norm(), int(0));
    assert!(a.is_zero_divisor());
    assert!(a.inverse().is_err());
    let q: Quaternion = Quaternion::from_ints([1, 0, 1, 0], QuatParams::from_ints(1, -1));
    assert!(q.is_zero_divisor());
}

#[test]
fn mixed_parameters_are_rejected() {
    let a = Quaternion::<Rational>::basis(1, QuatParams::from_ints(1, 1));
    let b = Quaternion::<Rational>::basis(1, QuatParams::from_ints(1, -1));
    assert!(a.try_mul(&b).is_err());
    let x = Octonion::<Rational>::basis(1, OctParams::cayley());
    let y = Octonion::<Rational>::basis(1, OctParams::from_ints(1, 1, -1));
    assert!(x.try_add(&y).is_err());
}

#[test]
fn involutions_on_units() {
    let p = OctParams::cayley();
    let signs = |f: fn(&Octonion) -> Octonion| -> Vec<i64> {
        (0..8).map(|k| {
            let e = Octonion::<Rational>::basis(k, p.clone());
            if f(&e) == e { 1 } else { -1 }
        }).collect()
    };
    assert_eq!(signs(Octonion::conj), [1, -1, -1, -1, -1, -1, -1, -1]);
    assert_eq!(signs(Octonion::star), [1, 1, -1, -1, -1, -1, -1, -1]);
    assert_eq!(signs(Octonion::tilde), [1, 1, 1, 1, -1, -1, -1, -1]);
    assert_eq!(signs(Octonion::plus_sub), [1, 1, -1, -1, 1, 1, -1, -1]);
    assert_eq!(signs(Octonion::plus_sup), [1, -1, -1, -1, 1, 1, 1, 1]);
}
