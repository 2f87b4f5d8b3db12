mod common;

use common::{oct_param_sets, quat_param_sets, random_octonion, random_quaternion, random_zorn};
use hyperalg::literal::*;
use hyperalg::{ComplexOctonion, ComplexQuaternion, OctParams, QuatParams};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const SAMPLES: usize = 500;

#[test]
fn quaternions_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for p in quat_param_sets() {
        for _ in 0..SAMPLES {
            let q = random_quaternion(&mut rng, &p);
            assert_eq!(parse_quaternion(&format_quaternion(&q), &p).unwrap(), q);
            assert_eq!(parse_quaternion(&coeffs_json(&q.coeffs).to_string(), &p).unwrap(), q);
        }
    }
}

#[test]
fn octonions_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(22);
    for p in oct_param_sets() {
        for _ in 0..SAMPLES {
            let x = random_octonion(&mut rng, &p);
            assert_eq!(parse_octonion(&format_octonion(&x), &p).unwrap(), x);
            assert_eq!(parse_octonion(&coeffs_json(&x.coeffs).to_string(), &p).unwrap(), x);
        }
    }
}

#[test]
fn complex_and_zorn_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(23);
    let (op, qp) = (OctParams::cayley(), QuatParams::hamilton());
    for _ in 0..SAMPLES {
        let a = ComplexOctonion::new(random_octonion(&mut rng, &op), random_octonion(&mut rng, &op)).unwrap();
        assert_eq!(parse_complex_octonion(&format_complex_octonion(&a)).unwrap(), a);
        let q = ComplexQuaternion::new(random_quaternion(&mut rng, &qp), random_quaternion(&mut rng, &qp)).unwrap();
        assert_eq!(parse_complex_quaternion(&format_complex_quaternion(&q)).unwrap(), q);
        let z = random_zorn(&mut rng);
        assert_eq!(parse_zorn(&format_zorn(&z)).unwrap(), z);
    }
}

#[test]
fn aliases_and_decimals() {
    let p = OctParams::cayley();
    assert_eq!(parse_octonion("i+j+k", &p).unwrap(), parse_octonion("e1+e2+e4", &p).unwrap());
    assert_eq!(parse_quaternion("k", &QuatParams::hamilton()).unwrap(), parse_quaternion("e3", &QuatParams::hamilton()).unwrap());
    assert_eq!(parse_octonion("0.25e3", &p).unwrap(), parse_octonion("1/4*e3", &p).unwrap());
    assert!(parse_octonion("i*e1", &p).is_err());
}
