#![allow(dead_code, clippy::needless_range_loop)]

use hyperalg::{OctParams, Octonion, QuatParams, Quaternion, Rational, ZornElement};
use num_bigint::BigInt;
use rand::Rng;

/// H(β1,β2) products, row times column, as printed in the source table.
pub const QUAT_TEXT: [[&str; 4]; 4] = [
    ["1", "e1", "e2", "e3"],
    ["e1", "-β1", "e3", "-β1e2"],
    ["e2", "-e3", "-β2", "β2e1"],
    ["e3", "β1e2", "-β2e1", "-β1β2"],
];

/// O(α,β,γ) products, row times column, as printed in the source table.
pub const OCT_TEXT: [[&str; 8]; 8] = [
    ["1", "e1", "e2", "e3", "e4", "e5", "e6", "e7"],
    ["e1", "-α", "e3", "-αe2", "e5", "-αe4", "-e7", "αe6"],
    ["e2", "-e3", "-β", "βe1", "e6", "e7", "-βe4", "-βe5"],
    ["e3", "αe2", "-βe1", "-αβ", "e7", "-αe6", "βe5", "-αβe4"],
    ["e4", "-e5", "-e6", "-e7", "-γ", "γe1", "γe2", "γe3"],
    ["e5", "αe4", "-e7", "αe6", "-γe1", "-αγ", "-γe3", "αγe2"],
    ["e6", "e7", "βe4", "-βe5", "-γe2", "γe3", "-βγ", "-βγe1"],
    ["e7", "-αe6", "βe5", "αβe4", "-γe3", "-αγe2", "βγe1", "-αβγ"],
];

pub const QUAT_NAMES: [&str; 2] = ["β1", "β2"];
pub const OCT_NAMES: [&str; 3] = ["α", "β", "γ"];

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Reads an entry like `-αβe4` as (coefficient, basis index).
pub fn eval_entry(text: &str, names: &[&str], values: &[Rational]) -> (Rational, usize) {
    let (mut coeff, mut rest) = match text.strip_prefix('-') {
        Some(r) => (int(-1), r),
        None => (int(1), text),
    };
    'outer: loop {
        for (name, value) in names.iter().zip(values) {
            if let Some(r) = rest.strip_prefix(name) {
                coeff *= value.clone();
                rest = r;
                continue 'outer;
            }
        }
        break;
    }
    let target = match rest {
        "" | "1" => 0,
        e => e.strip_prefix('e').and_then(|k| k.parse().ok()).unwrap_or_else(|| panic!("bad entry {text}")),
    };
    (coeff, target)
}

pub fn random_rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(BigInt::from(rng.gen_range(-9..=9)), BigInt::from(rng.gen_range(1..=5)))
}

pub fn random_quaternion<R: Rng>(rng: &mut R, params: &QuatParams) -> Quaternion {
    Quaternion::new(std::array::from_fn(|_| random_rational(rng)), params.clone())
}

pub fn random_octonion<R: Rng>(rng: &mut R, params: &OctParams) -> Octonion {
    Octonion::new(std::array::from_fn(|_| random_rational(rng)), params.clone())
}

pub fn random_zorn<R: Rng>(rng: &mut R) -> ZornElement {
    ZornElement::from_flat(std::array::from_fn(|_| random_rational(rng)))
}

pub fn quat_param_sets() -> Vec<QuatParams> {
    vec![QuatParams::from_ints(1, 1), QuatParams::from_ints(1, -1), QuatParams::from_ints(2, 3)]
}

pub fn oct_param_sets() -> Vec<OctParams> {
    vec![OctParams::from_ints(1, 1, 1), OctParams::from_ints(1, 1, -1), OctParams::from_ints(1, -1, 2)]
}

/// Lists basis products that disagree with the transcribed tables.
pub fn table_mismatches() -> Vec<String> {
    let mut bad = Vec::new();
    for p in quat_param_sets() {
        let values = [p.beta1.clone(), p.beta2.clone()];
        for i in 0..4 {
            for j in 0..4 {
                let (c, t) = eval_entry(QUAT_TEXT[i][j], &QUAT_NAMES, &values);
                let mut expected = Quaternion::zero(p.clone());
                expected.coeffs[t] = c;
                if &Quaternion::basis(i, p.clone()) * &Quaternion::basis(j, p.clone()) != expected {
                    bad.push(format!("H{p}: e{i}·e{j}"));
                }
            }
        }
    }
    for p in oct_param_sets() {
        let values = [p.alpha.clone(), p.beta.clone(), p.gamma.clone()];
        for i in 0..8 {
            for j in 0..8 {
                let (c, t) = eval_entry(OCT_TEXT[i][j], &OCT_NAMES, &values);
                let mut expected = Octonion::zero(p.clone());
                expected.coeffs[t] = c;
                if &Octonion::basis(i, p.clone()) * &Octonion::basis(j, p.clone()) != expected {
                    bad.push(format!("O{p}: e{i}·e{j}"));
                }
            }
        }
    }
    bad
}
