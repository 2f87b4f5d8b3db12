//! Identity checker for the representation maps.
//!
//! Every check names an identity `lhs = rhs` over a fixed list of input
//! slots (real quaternions or real octonions in the division algebras). It is
//! evaluated with exact rationals either over every tuple of basis elements or
//! over a seeded random sample. Checks come in three kinds:
//!
//! * `asserted`: expected to hold; a failure is a defect.
//! * `adjudicated`: the verdict is recorded, not expected.
//! * `witness`: expected to fail; the counterexamples are the point.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::complex::{ComplexOctonion, ProductKind};
use crate::error::HarnessError;
use crate::matrix::{RepMatrix, VecRep};
use crate::octonion::{doubling_product, Octonion};
use crate::params::{OctParams, QuatParams};
use crate::quaternion::Quaternion;
use crate::reps::{
    coct_left, coct_right, oct_left, oct_right, quat_left, quat_right, ConstMatrix, OctColumn,
};
use crate::scalar::{format_rational, int, parse_rational, Rational};

/// Coefficient range of random inputs, inclusive.
pub const RANDOM_RANGE: (i64, i64) = (-9, 9);
pub const DEFAULT_RANDOM_COUNT: usize = 500;
pub const DEFAULT_MAX_COUNTEREXAMPLES: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Slot {
    Quaternion,
    Octonion,
}

impl Slot {
    pub fn dim(self) -> usize {
        match self {
            Slot::Quaternion => 4,
            Slot::Octonion => 8,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CheckKind {
    Asserted,
    Adjudicated,
    Witness,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Fails,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exhaustive,
    Random { count: usize, seed: u64 },
}

pub type Inputs = [Vec<Rational>];
pub type Sides = (Vec<Rational>, Vec<Rational>);

/// One identity of the catalog.
pub struct Check {
    pub id: &'static str,
    pub kind: CheckKind,
    pub description: &'static str,
    pub slots: &'static [Slot],
    /// Inputs evaluated before the generated ones, in both modes.
    pub probes: fn() -> Vec<Vec<Vec<Rational>>>,
    pub eval: fn(&Inputs) -> Sides,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Counterexample {
    pub inputs: Vec<Vec<String>>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
}

impl Counterexample {
    pub fn parsed_inputs(&self) -> Result<Vec<Vec<Rational>>, HarnessError> {
        self.inputs
            .iter()
            .map(|slot| {
                slot.iter()
                    .map(|s| parse_rational(s).ok_or_else(|| HarnessError::MalformedInputs(format!("bad scalar `{s}`"))))
                    .collect()
            })
            .collect()
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PropositionReport {
    pub id: String,
    pub kind: CheckKind,
    pub description: String,
    pub mode: &'static str,
    pub seed: Option<u64>,
    pub checked: usize,
    pub verdict: Verdict,
    pub failures: usize,
    pub counterexamples: Vec<Counterexample>,
}

impl PropositionReport {
    /// Whether the report meets its kind's expectation.
    pub fn passed(&self) -> bool {
        match self.kind {
            CheckKind::Asserted => self.verdict == Verdict::Holds,
            CheckKind::Witness => self.verdict == Verdict::Fails,
            CheckKind::Adjudicated => true,
        }
    }
}

fn strings(v: &[Rational]) -> Vec<String> {
    v.iter().map(format_rational).collect()
}

fn oct(v: &[Rational]) -> Octonion {
    Octonion::new(v.to_vec().try_into().expect("octonion slot has 8 entries"), OctParams::cayley())
}

fn quat(v: &[Rational]) -> Quaternion {
    Quaternion::new(v.to_vec().try_into().expect("quaternion slot has 4 entries"), QuatParams::hamilton())
}

fn coct(x: &[Rational], y: &[Rational]) -> ComplexOctonion {
    ComplexOctonion { re: oct(x), im: oct(y) }
}

fn e(k: usize) -> Octonion {
    Octonion::basis(k, OctParams::cayley())
}

fn c(m: ConstMatrix) -> RepMatrix {
    m.matrix()
}

fn flat(m: &RepMatrix) -> Vec<Rational> {
    m.entries().to_vec()
}

fn coeffs(x: &Octonion) -> Vec<Rational> {
    x.coeffs.to_vec()
}

fn cat(parts: impl IntoIterator<Item = Vec<Rational>>) -> Vec<Rational> {
    parts.into_iter().flatten().collect()
}

fn lam(x: &Octonion) -> RepMatrix {
    oct_left(x).expect("division octonion")
}

fn del(x: &Octonion) -> RepMatrix {
    oct_right(x).expect("division octonion")
}

fn conj3(m: &RepMatrix, a: &RepMatrix) -> RepMatrix {
    &(m * a) * m
}

fn no_probes() -> Vec<Vec<Vec<Rational>>> {
    Vec::new()
}

/// `x = 0, y = e₂, v = e₂, w = 0`.
fn complex_probe() -> Vec<Vec<Vec<Rational>>> {
    let z = coeffs(&Octonion::zero(OctParams::cayley()));
    vec![vec![z.clone(), coeffs(&e(2)), coeffs(&e(2)), z]]
}

fn sigma_conjugation(i: &Inputs) -> Sides {
    let q = quat(&i[0]);
    let s = c(ConstMatrix::Sigma);
    let l = cat([flat(&conj3(&s, &quat_left(&q).unwrap())), flat(&conj3(&s, &quat_right(&q).unwrap()))]);
    let r = cat([flat(&quat_left(&q.star()).unwrap()), flat(&quat_right(&q.star()).unwrap())]);
    (l, r)
}

fn e1_left_is_star_right(i: &Inputs) -> Sides {
    let y = oct(&i[0]);
    (coeffs(&(&e(1) * &y)), coeffs(&(&y.star() * &e(1))))
}

fn e1_product_left_factor(i: &Inputs) -> Sides {
    let (x, y) = (oct(&i[0]), oct(&i[1]));
    (coeffs(&(&(&e(1) * &y) * &x)), coeffs(&(&e(1) * &(&y.star() * &x.star()).star())))
}

fn e1_product_right_factor(i: &Inputs) -> Sides {
    let (x, y) = (oct(&i[0]), oct(&i[1]));
    (coeffs(&(&x * &(&e(1) * &y))), coeffs(&(&e(1) * &(&x.star() * &y))))
}

fn e1_product_both_factors(i: &Inputs) -> Sides {
    let (x, y) = (oct(&i[0]), oct(&i[1]));
    (coeffs(&(&(&e(1) * &y) * &(&e(1) * &x))), coeffs(&-&(&y * &x.star()).star()))
}

fn eps_left(i: &Inputs) -> Sides {
    let a = oct(&i[0]);
    (flat(&conj3(&c(ConstMatrix::Epsilon), &lam(&a))), flat(&lam(&a.tilde())))
}

fn eps_right(i: &Inputs) -> Sides {
    let a = oct(&i[0]);
    (flat(&conj3(&c(ConstMatrix::Epsilon), &del(&a))), flat(&del(&a.tilde())))
}

fn tau_left(i: &Inputs) -> Sides {
    let a = oct(&i[0]);
    (flat(&conj3(&c(ConstMatrix::Tau), &lam(&a))), flat(&lam(&a.plus_sub())))
}

fn tau_right(i: &Inputs) -> Sides {
    let a = oct(&i[0]);
    (flat(&conj3(&c(ConstMatrix::Tau), &del(&a))), flat(&del(&a.plus_sub())))
}

fn phi_represents(kind: ProductKind, i: &Inputs) -> Sides {
    let a = coct(&i[0], &i[1]);
    let x = coct(&i[2], &i[3]);
    let lhs = VecRep::of_complex(&a.mul(&x, kind)).entries;
    let rhs = coct_left(&a).unwrap().apply(&VecRep::of_complex(&x)).entries;
    (lhs, rhs)
}

fn phi_e1_rule(i: &Inputs) -> Sides {
    phi_represents(ProductKind::Paper, i)
}

fn phi_central(i: &Inputs) -> Sides {
    phi_represents(ProductKind::Central, i)
}

fn lambda_on_m(i: &Inputs) -> Sides {
    let a = oct(&i[0]);
    let m = OctColumn::conjugate_basis_column();
    (m.apply(&lam(&a)).flatten(), m.scale_right(&a).flatten())
}

fn theta_on_m(_: &Inputs) -> Sides {
    let m = OctColumn::conjugate_basis_column();
    (m.apply(&c(ConstMatrix::Theta)).flatten(), m.scale_right(&e(1)).flatten())
}

fn lambda_on_n(i: &Inputs) -> Sides {
    let a = oct(&i[0]);
    let n = OctColumn::basis_column();
    (n.apply(&lam(&a)).flatten(), n.scale_left(&a.conj()).flatten())
}

fn n_dot_m(_: &Inputs) -> Sides {
    let n = OctColumn::<Rational>::basis_column();
    let m = OctColumn::conjugate_basis_column();
    (coeffs(&n.contract(&m)), coeffs(&Octonion::scalar(int(8), OctParams::cayley())))
}

fn t_conjugation(i: &Inputs) -> Sides {
    let a = oct(&i[0]);
    (flat(&conj3(&c(ConstMatrix::T), &lam(&a))), flat(&del(&a.plus_sup())))
}

fn s_conjugation(i: &Inputs) -> Sides {
    let a = coct(&i[0], &i[1]);
    (flat(&conj3(&c(ConstMatrix::S), &coct_left(&a).unwrap())), flat(&coct_right(&a.plus_sup()).unwrap()))
}

fn psi_plus(kind: ProductKind, i: &Inputs) -> Sides {
    let a = coct(&i[0], &i[1]);
    let x = coct(&i[2], &i[3]);
    let lhs = coct_right(&a.plus_sup()).unwrap().apply(&VecRep::of_complex(&x)).entries;
    let rhs = c(ConstMatrix::S).apply(&VecRep::of_complex(&a.mul(&x.plus_sup(), kind))).entries;
    (lhs, rhs)
}

fn psi_e1_rule(i: &Inputs) -> Sides {
    psi_plus(ProductKind::Paper, i)
}

fn psi_central(i: &Inputs) -> Sides {
    psi_plus(ProductKind::Central, i)
}

fn eps_vector(i: &Inputs) -> Sides {
    let x = oct(&i[0]);
    (c(ConstMatrix::Epsilon).apply(&VecRep::of_octonion(&x)).entries, coeffs(&x.tilde()))
}

fn tau_vector(i: &Inputs) -> Sides {
    let x = oct(&i[0]);
    (c(ConstMatrix::Tau).apply(&VecRep::of_octonion(&x)).entries, coeffs(&x.plus_sub()))
}

fn left_product_vector(i: &Inputs) -> Sides {
    let (x, y) = (oct(&i[0]), oct(&i[1]));
    (coeffs(&(&x * &y)), lam(&x).apply(&VecRep::of_octonion(&y)).entries)
}

fn right_product_vector(i: &Inputs) -> Sides {
    let (x, y) = (oct(&i[0]), oct(&i[1]));
    (coeffs(&(&y * &x)), del(&x).apply(&VecRep::of_octonion(&y)).entries)
}

fn both_product_vectors(i: &Inputs) -> Sides {
    let (a, x) = (oct(&i[0]), oct(&i[1]));
    let vx = VecRep::of_octonion(&x);
    (
        cat([coeffs(&(&a * &x)), coeffs(&(&x * &a))]),
        cat([lam(&a).apply(&vx).entries, del(&a).apply(&vx).entries]),
    )
}

fn square_maps(i: &Inputs) -> Sides {
    let a = oct(&i[0]);
    let a2 = &a * &a;
    let (l, d) = (lam(&a), del(&a));
    (cat([flat(&lam(&a2)), flat(&del(&a2))]), cat([flat(&(&l * &l)), flat(&(&d * &d))]))
}

fn left_right_commute(i: &Inputs) -> Sides {
    let a = oct(&i[0]);
    let (l, d) = (lam(&a), del(&a));
    (flat(&(&l * &d)), flat(&(&d * &l)))
}

fn lambda_multiplicative(i: &Inputs) -> Sides {
    let (a, b) = (oct(&i[0]), oct(&i[1]));
    (flat(&lam(&(&a * &b))), flat(&(&lam(&a) * &lam(&b))))
}

fn lambda_witness_probe() -> Vec<Vec<Vec<Rational>>> {
    vec![vec![coeffs(&e(1)), coeffs(&e(2))]]
}

fn moufang_left(i: &Inputs) -> Sides {
    let (x, y, z) = (oct(&i[0]), oct(&i[1]), oct(&i[2]));
    let xzx = &(&x * &z) * &x;
    (coeffs(&(&xzx * &y)), coeffs(&(&x * &(&z * &(&x * &y)))))
}

fn moufang_right(i: &Inputs) -> Sides {
    let (x, y, z) = (oct(&i[0]), oct(&i[1]), oct(&i[2]));
    let xzx = &(&x * &z) * &x;
    (coeffs(&(&y * &xzx)), coeffs(&(&(&(&y * &x) * &z) * &x)))
}

fn moufang_middle(i: &Inputs) -> Sides {
    let (x, y, z) = (oct(&i[0]), oct(&i[1]), oct(&i[2]));
    (coeffs(&(&(&x * &y) * &(&z * &x))), coeffs(&(&(&x * &(&y * &z)) * &x)))
}

fn flexible_middle(i: &Inputs) -> Sides {
    let (x, y) = (oct(&i[0]), oct(&i[1]));
    (coeffs(&(&(&x * &y) * &x)), coeffs(&(&x * &(&y * &x))))
}

fn theta_is_lambda_e1(_: &Inputs) -> Sides {
    (flat(&c(ConstMatrix::Theta)), flat(&lam(&e(1))))
}

fn m1_sigma_commute(_: &Inputs) -> Sides {
    let (m, s) = (c(ConstMatrix::M1), c(ConstMatrix::Sigma));
    (flat(&(&m * &s)), flat(&(&s * &m)))
}

fn rho_via_lambda(i: &Inputs) -> Sides {
    let q = quat(&i[0]);
    (flat(&quat_right(&q).unwrap()), flat(&conj3(&c(ConstMatrix::M1), &quat_left(&q.conj()).unwrap())))
}

fn lambda_homomorphism(i: &Inputs) -> Sides {
    let (p, q) = (quat(&i[0]), quat(&i[1]));
    (flat(&quat_left(&(&p * &q)).unwrap()), flat(&(&quat_left(&p).unwrap() * &quat_left(&q).unwrap())))
}

fn rho_antihomomorphism(i: &Inputs) -> Sides {
    let (p, q) = (quat(&i[0]), quat(&i[1]));
    (flat(&quat_right(&(&p * &q)).unwrap()), flat(&(&quat_right(&q).unwrap() * &quat_right(&p).unwrap())))
}

fn star_via_e1(i: &Inputs) -> Sides {
    let a = oct(&i[0]);
    (coeffs(&a.star()), coeffs(&-&(&(&e(1) * &a) * &e(1))))
}

fn involutions_square_to_identity(i: &Inputs) -> Sides {
    let a = oct(&i[0]);
    let (q1, q2) = a.split().unwrap();
    let twice = [a.conj().conj(), a.star().star(), a.tilde().tilde(), a.plus_sub().plus_sub(), a.plus_sup().plus_sup()];
    let l = cat(twice.iter().map(coeffs).chain([coeffs(&a.plus_sub())]));
    let r = cat(std::iter::repeat_n(coeffs(&a), 5).chain([coeffs(&Octonion::from_halves(&q1.star(), &q2.star(), int(1)))]));
    (l, r)
}

fn tilde_star_composite(i: &Inputs) -> Sides {
    let a = oct(&i[0]);
    (cat([coeffs(&a.plus_sub()), coeffs(&a.plus_sub())]), cat([coeffs(&a.star().tilde()), coeffs(&a.tilde().star())]))
}

/// Parameter sets on which the stored table is compared with doubling.
pub fn doubling_param_sets() -> Vec<OctParams> {
    vec![
        OctParams::from_ints(1, 1, 1),
        OctParams::from_ints(1, 1, -1),
        OctParams::from_ints(1, -1, 2),
        OctParams::from_ints(2, 3, 5),
    ]
}

fn table_matches_doubling(i: &Inputs) -> Sides {
    let mut l = Vec::new();
    let mut r = Vec::new();
    for p in doubling_param_sets() {
        let a = Octonion::new(i[0].clone().try_into().unwrap(), p.clone());
        let b = Octonion::new(i[1].clone().try_into().unwrap(), p);
        l.extend(coeffs(&(&a * &b)));
        r.extend(coeffs(&doubling_product(&a, &b).unwrap()));
    }
    (l, r)
}

use CheckKind::{Adjudicated, Asserted, Witness};
const Q: Slot = Slot::Quaternion;
const O: Slot = Slot::Octonion;

/// The full catalog, in report order.
pub const CATALOG: &[Check] = &[
    Check { id: "2.3", kind: Asserted, description: "σλ(q)σ = λ(q*) and σρ(q)σ = ρ(q*)", slots: &[Q], probes: no_probes, eval: sigma_conjugation },
    Check { id: "2.4.1", kind: Asserted, description: "e1·y = y*·e1", slots: &[O], probes: no_probes, eval: e1_left_is_star_right },
    Check { id: "2.4.2", kind: Asserted, description: "(e1·y)x = e1·(y*x*)*", slots: &[O, O], probes: no_probes, eval: e1_product_left_factor },
    Check { id: "2.4.3", kind: Asserted, description: "x(e1·y) = e1·(x*y)", slots: &[O, O], probes: no_probes, eval: e1_product_right_factor },
    Check { id: "2.4.4", kind: Asserted, description: "(e1·y)(e1·x) = -(yx*)*", slots: &[O, O], probes: no_probes, eval: e1_product_both_factors },
    Check { id: "2.5a", kind: Asserted, description: "εΛ(a)ε = Λ(ã)", slots: &[O], probes: no_probes, eval: eps_left },
    Check { id: "2.5b", kind: Asserted, description: "εΔ(a)ε = Δ(ã)", slots: &[O], probes: no_probes, eval: eps_right },
    Check { id: "2.5c", kind: Asserted, description: "τΛ(a)τ = Λ(a₊)", slots: &[O], probes: no_probes, eval: tau_left },
    Check { id: "2.5d", kind: Asserted, description: "τΔ(a)τ = Δ(a₊)", slots: &[O], probes: no_probes, eval: tau_right },
    Check { id: "2.6/paper", kind: Adjudicated, description: "vec(AX) = Φ(A)vec(X), AX by the e1-rule expansion", slots: &[O, O, O, O], probes: complex_probe, eval: phi_e1_rule },
    Check { id: "2.6/central", kind: Adjudicated, description: "vec(AX) = Φ(A)vec(X), AX with a central complex unit", slots: &[O, O, O, O], probes: complex_probe, eval: phi_central },
    Check { id: "2.7i", kind: Asserted, description: "Λ(a)M = M·a", slots: &[O], probes: no_probes, eval: lambda_on_m },
    Check { id: "2.7ii", kind: Asserted, description: "θM = M·e1", slots: &[], probes: no_probes, eval: theta_on_m },
    Check { id: "2.7iii", kind: Asserted, description: "Λ(a)N = ā·N", slots: &[O], probes: no_probes, eval: lambda_on_n },
    Check { id: "2.7nm", kind: Asserted, description: "NᵗM = 8", slots: &[], probes: no_probes, eval: n_dot_m },
    Check { id: "2.8i", kind: Asserted, description: "TΛ(a)T = Δ(a⁺)", slots: &[O], probes: no_probes, eval: t_conjugation },
    Check { id: "2.8ii", kind: Asserted, description: "SΦ(A)S = Ψ(A⁺)", slots: &[O, O], probes: no_probes, eval: s_conjugation },
    Check { id: "2.9/paper", kind: Adjudicated, description: "Ψ(A⁺)vec(X) = S·vec(AX⁺), AX⁺ by the e1-rule expansion", slots: &[O, O, O, O], probes: complex_probe, eval: psi_e1_rule },
    Check { id: "2.9/central", kind: Adjudicated, description: "Ψ(A⁺)vec(X) = S·vec(AX⁺), AX⁺ with a central complex unit", slots: &[O, O, O, O], probes: complex_probe, eval: psi_central },
    Check { id: "R2.2a", kind: Asserted, description: "ε·vec(x) = vec(x̃)", slots: &[O], probes: no_probes, eval: eps_vector },
    Check { id: "R2.2b", kind: Asserted, description: "τ·vec(x) = vec(x₊)", slots: &[O], probes: no_probes, eval: tau_vector },
    Check { id: "E2.20", kind: Asserted, description: "vec(xy) = Λ(x)vec(y)", slots: &[O, O], probes: no_probes, eval: left_product_vector },
    Check { id: "E2.21", kind: Asserted, description: "vec(yx) = Δ(x)vec(y)", slots: &[O, O], probes: no_probes, eval: right_product_vector },
    Check { id: "E2.22", kind: Asserted, description: "vec(ax) = Λ(a)vec(x) and vec(xa) = Δ(a)vec(x)", slots: &[O, O], probes: no_probes, eval: both_product_vectors },
    Check { id: "E2.23", kind: Asserted, description: "Λ(a²) = Λ(a)Λ(a) and Δ(a²) = Δ(a)Δ(a)", slots: &[O], probes: no_probes, eval: square_maps },
    Check { id: "E2.23w", kind: Witness, description: "Λ(ab) = Λ(a)Λ(b), expected to fail", slots: &[O, O], probes: lambda_witness_probe, eval: lambda_multiplicative },
    Check { id: "E2.24", kind: Asserted, description: "Λ(a)Δ(a) = Δ(a)Λ(a)", slots: &[O], probes: no_probes, eval: left_right_commute },
    Check { id: "moufang.left", kind: Asserted, description: "(xzx)y = x(z(xy))", slots: &[O, O, O], probes: no_probes, eval: moufang_left },
    Check { id: "moufang.right", kind: Asserted, description: "y(xzx) = ((yx)z)x", slots: &[O, O, O], probes: no_probes, eval: moufang_right },
    Check { id: "moufang.middle", kind: Asserted, description: "(xy)(zx) = (x(yz))x", slots: &[O, O, O], probes: no_probes, eval: moufang_middle },
    Check { id: "aux.flexible", kind: Asserted, description: "(xy)x = x(yx)", slots: &[O, O], probes: no_probes, eval: flexible_middle },
    Check { id: "aux.theta", kind: Asserted, description: "θ = Λ(e1)", slots: &[], probes: no_probes, eval: theta_is_lambda_e1 },
    Check { id: "aux.m1-sigma", kind: Asserted, description: "M1σ = σM1", slots: &[], probes: no_probes, eval: m1_sigma_commute },
    Check { id: "aux.rho-lambda", kind: Asserted, description: "ρ(q) = M1λ(q̄)M1", slots: &[Q], probes: no_probes, eval: rho_via_lambda },
    Check { id: "aux.lambda-hom", kind: Asserted, description: "λ(pq) = λ(p)λ(q)", slots: &[Q, Q], probes: no_probes, eval: lambda_homomorphism },
    Check { id: "aux.rho-antihom", kind: Asserted, description: "ρ(pq) = ρ(q)ρ(p)", slots: &[Q, Q], probes: no_probes, eval: rho_antihomomorphism },
    Check { id: "aux.star-e1", kind: Asserted, description: "a* = -e1·a·e1", slots: &[O], probes: no_probes, eval: star_via_e1 },
    Check { id: "aux.involutions", kind: Asserted, description: "each involution squares to the identity, and a₊ = q1* + q2*e4", slots: &[O], probes: no_probes, eval: involutions_square_to_identity },
    Check { id: "aux.tilde-star", kind: Adjudicated, description: "a₊ = (a*)~ = (ã)*", slots: &[O], probes: no_probes, eval: tilde_star_composite },
    Check { id: "aux.doubling", kind: Asserted, description: "stored octonion table agrees with quaternion doubling on four parameter sets", slots: &[O, O], probes: no_probes, eval: table_matches_doubling },
];

/// Named groups that expand to several ids.
const GROUPS: &[(&str, &str)] = &[
    ("2.4", "2.4."),
    ("2.5", "2.5"),
    ("2.6", "2.6/"),
    ("2.7", "2.7"),
    ("2.8", "2.8"),
    ("2.9", "2.9/"),
    ("R2.2", "R2.2"),
    ("moufang", "moufang."),
    ("aux", "aux."),
];

pub fn find(id: &str) -> Option<&'static Check> {
    CATALOG.iter().find(|c| c.id == id)
}

/// Expands a single id, a group name or `all` into catalog entries.
pub fn resolve(id: &str) -> Result<Vec<&'static Check>, HarnessError> {
    if id == "all" {
        return Ok(CATALOG.iter().collect());
    }
    if let Some(check) = find(id) {
        return Ok(vec![check]);
    }
    if let Some((_, prefix)) = GROUPS.iter().find(|(g, _)| *g == id) {
        return Ok(CATALOG.iter().filter(|c| c.id.starts_with(prefix)).collect());
    }
    Err(HarnessError::UnknownId(id.to_string()))
}

fn unit_vector(len: usize, k: usize) -> Vec<Rational> {
    (0..len).map(|j| int(i64::from(j == k))).collect()
}

/// Every tuple of basis elements, last slot varying fastest.
pub fn basis_tuples(slots: &[Slot]) -> Vec<Vec<Vec<Rational>>> {
    slots.iter().fold(vec![Vec::new()], |acc, slot| {
        acc.into_iter()
            .flat_map(|prefix| {
                (0..slot.dim()).map(move |k| {
                    let mut t = prefix.clone();
                    t.push(unit_vector(slot.dim(), k));
                    t
                })
            })
            .collect()
    })
}

/// `count` tuples with coefficients uniform in [`RANDOM_RANGE`].
pub fn random_tuples(slots: &[Slot], count: usize, seed: u64) -> Vec<Vec<Vec<Rational>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (lo, hi) = RANDOM_RANGE;
    let count = if slots.is_empty() { 1 } else { count };
    (0..count)
        .map(|_| slots.iter().map(|s| (0..s.dim()).map(|_| int(rng.gen_range(lo..=hi))).collect()).collect())
        .collect()
}

fn check_arity(check: &Check, inputs: &Inputs) -> Result<(), HarnessError> {
    let ok = inputs.len() == check.slots.len() && inputs.iter().zip(check.slots).all(|(v, s)| v.len() == s.dim());
    if ok {
        Ok(())
    } else {
        let want: Vec<usize> = check.slots.iter().map(|s| s.dim()).collect();
        let got: Vec<usize> = inputs.iter().map(Vec::len).collect();
        Err(HarnessError::MalformedInputs(format!("`{}` takes slots of lengths {want:?}, got {got:?}", check.id)))
    }
}

/// Re-evaluates both sides of `id` on `inputs`.
pub fn replay(id: &str, inputs: &Inputs) -> Result<Sides, HarnessError> {
    let check = find(id).ok_or_else(|| HarnessError::UnknownId(id.to_string()))?;
    check_arity(check, inputs)?;
    Ok((check.eval)(inputs))
}

pub fn run(check: &Check, mode: Mode, max_counterexamples: usize) -> PropositionReport {
    let mut inputs = (check.probes)();
    let (mode_name, seed) = match mode {
        Mode::Exhaustive => {
            inputs.extend(basis_tuples(check.slots));
            ("exhaustive", None)
        }
        Mode::Random { count, seed } => {
            inputs.extend(random_tuples(check.slots, count, seed));
            ("random", Some(seed))
        }
    };
    let outcomes: Vec<Option<Sides>> = inputs
        .par_iter()
        .map(|t| {
            let (l, r) = (check.eval)(t);
            (l != r).then_some((l, r))
        })
        .collect();
    let failures: Vec<Counterexample> = outcomes
        .into_iter()
        .zip(inputs.iter())
        .filter_map(|(o, t)| {
            o.map(|(l, r)| Counterexample { inputs: t.iter().map(|v| strings(v)).collect(), lhs: strings(&l), rhs: strings(&r) })
        })
        .collect();
    PropositionReport {
        id: check.id.to_string(),
        kind: check.kind,
        description: check.description.to_string(),
        mode: mode_name,
        seed,
        checked: inputs.len(),
        verdict: if failures.is_empty() { Verdict::Holds } else { Verdict::Fails },
        failures: failures.len(),
        counterexamples: failures.into_iter().take(max_counterexamples).collect(),
    }
}

/// Runs every check named by `id` (see [`resolve`]).
pub fn verify(id: &str, mode: Mode) -> Result<Vec<PropositionReport>, HarnessError> {
    Ok(resolve(id)?.into_iter().map(|c| run(c, mode, DEFAULT_MAX_COUNTEREXAMPLES)).collect())
}
