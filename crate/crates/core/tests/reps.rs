mod common;

use common::{random_octonion, random_quaternion};
use hyperalg::reps::{self, ConstMatrix, OctColumn};
use hyperalg::{Approx, ComplexOctonion, OctParams, Octonion, QuatParams, Quaternion, Rational, RepMatrix, VecRep};
use num_traits::ToPrimitive;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn rng() -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(11)
}

#[test]
fn quaternion_left_and_right_are_hom_and_antihom() {
    let mut r = rng();
    let p = QuatParams::hamilton();
    for _ in 0..100 {
        let (a, b) = (random_quaternion(&mut r, &p), random_quaternion(&mut r, &p));
        let ab = &a * &b;
        assert_eq!(reps::quat_left(&ab).unwrap(), &reps::quat_left(&a).unwrap() * &reps::quat_left(&b).unwrap());
        assert_eq!(reps::quat_right(&ab).unwrap(), &reps::quat_right(&b).unwrap() * &reps::quat_right(&a).unwrap());
    }
}

#[test]
fn octonion_reps_act_by_multiplication() {
    let mut r = rng();
    let p = OctParams::cayley();
    for _ in 0..100 {
        let (a, x) = (random_octonion(&mut r, &p), random_octonion(&mut r, &p));
        let vx = VecRep::of_octonion(&x);
        assert_eq!(reps::oct_left(&a).unwrap().apply(&vx), VecRep::of_octonion(&(&a * &x)));
        assert_eq!(reps::oct_right(&a).unwrap().apply(&vx), VecRep::of_octonion(&(&x * &a)));
    }
}

#[test]
fn left_octonion_rep_is_not_multiplicative() {
    let p = OctParams::cayley();
    let (a, b) = (Octonion::<Rational>::basis(1, p.clone()), Octonion::basis(2, p));
    let lhs = reps::oct_left(&(&a * &b)).unwrap();
    assert_ne!(lhs, &reps::oct_left(&a).unwrap() * &reps::oct_left(&b).unwrap());
}

#[test]
fn constants_relate_to_the_maps() {
    let i = Quaternion::<Rational>::basis(1, QuatParams::hamilton());
    assert_eq!(ConstMatrix::L1.matrix::<Rational>(), reps::quat_left(&i).unwrap());
    assert_eq!(ConstMatrix::R1.matrix::<Rational>(), reps::quat_right(&i).unwrap());
    let e1 = Octonion::<Rational>::basis(1, OctParams::cayley());
    assert_eq!(ConstMatrix::Theta.matrix::<Rational>(), reps::oct_left(&e1).unwrap());
    let m1 = ConstMatrix::M1.matrix::<Rational>();
    assert_eq!(&m1 * &m1, RepMatrix::identity(4));
}

#[test]
fn theta_scales_the_conjugate_column_by_e1() {
    let e1 = Octonion::<Rational>::basis(1, OctParams::cayley());
    let m = OctColumn::<Rational>::conjugate_basis_column();
    assert_eq!(m.apply(&ConstMatrix::Theta.matrix()).entries, m.scale_right(&e1).entries);
    assert_eq!(OctColumn::basis_column().contract(&m), Octonion::scalar(common::int(8), OctParams::cayley()));
}

#[test]
fn complex_reps_have_block_shape() {
    let a = ComplexOctonion::<Rational>::from_ints([1, 2, 0, 0, 0, 0, 0, 3], [0, 0, 4, 0, 5, 0, 0, 0]);
    let phi = reps::coct_left(&a).unwrap();
    assert_eq!(phi.dim(), 16);
    assert_eq!(phi.block(0, 0, 8), reps::oct_left(&a.re).unwrap());
    assert_eq!(phi.block(0, 1, 8), -&reps::oct_left(&a.im).unwrap());
    assert_eq!(reps::coct_right(&a).unwrap().dim(), 16);
}

#[test]
fn non_unit_parameters_are_a_domain_error() {
    let q = Quaternion::<Rational>::basis(1, QuatParams::from_ints(1, -1));
    assert!(reps::quat_left(&q).is_err());
    let a = Octonion::<Rational>::basis(1, OctParams::from_ints(1, 1, -1));
    assert!(reps::oct_right(&a).is_err());
}

#[test]
fn float_entries_agree_with_exact_ones() {
    let coeffs = [0.5, -1.25, 2.0, 0.0, 3.5, -0.75, 1.0, 4.0];
    let a = Octonion::new(coeffs.map(Approx::new), OctParams::cayley());
    let exact = Octonion::<Rational>::new(
        coeffs.map(|c| hyperalg::scalar::rational_from_f64(c).unwrap()),
        OctParams::cayley(),
    );
    let (fl, ex) = (reps::oct_left(&a).unwrap(), reps::oct_left(&exact).unwrap());
    for (f, e) in fl.entries().iter().zip(ex.entries()) {
        assert_eq!(*f, Approx::new(e.to_f64().unwrap()));
    }
}
