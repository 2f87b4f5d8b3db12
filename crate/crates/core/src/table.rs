//! Structure constants.
//!
//! Both tables are stored verbatim: entry `[i][j]` gives `e_i · e_j` as
//! `sign · (parameter product) · e_target`, where the parameter product is a
//! bitmask into [`QuatParams::weights`](crate::QuatParams::weights) or
//! [`OctParams::weights`](crate::OctParams::weights). Index 0 is the unit.

use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct TableEntry {
    pub negative: bool,
    pub params: u8,
    pub target: usize,
}

impl TableEntry {
    /// The scalar coefficient `±(parameter product)` given the weight list.
    pub fn coefficient<S: Scalar>(&self, weights: &[S]) -> S {
        let w = weights[self.params as usize].clone();
        if self.negative {
            -w
        } else {
            w
        }
    }

    /// Renders the entry with parameter names, e.g. `-αβe4`.
    pub fn symbolic(&self, names: &[&str]) -> String {
        let mut out = String::new();
        if self.negative {
            out.push('-');
        }
        for (bit, name) in names.iter().enumerate() {
            if self.params & (1 << bit) != 0 {
                out.push_str(name);
            }
        }
        if self.target == 0 {
            if self.params == 0 {
                out.push('1');
            }
        } else {
            out.push_str(&format!("e{}", self.target));
        }
        out
    }
}

const fn p(params: u8, target: usize) -> TableEntry {
    TableEntry { negative: false, params, target }
}

const fn n(params: u8, target: usize) -> TableEntry {
    TableEntry { negative: true, params, target }
}

const B1: u8 = 0b01;
const B2: u8 = 0b10;

/// Multiplication table of H(β₁, β₂) over the basis {1, e₁, e₂, e₃}.
pub const QUAT_TABLE: [[TableEntry; 4]; 4] = [
    [p(0, 0), p(0, 1), p(0, 2), p(0, 3)],
    [p(0, 1), n(B1, 0), p(0, 3), n(B1, 2)],
    [p(0, 2), n(0, 3), n(B2, 0), p(B2, 1)],
    [p(0, 3), p(B1, 2), n(B2, 1), n(B1 | B2, 0)],
];

const A: u8 = 0b001;
const B: u8 = 0b010;
const G: u8 = 0b100;

/// Multiplication table of O(α, β, γ) over the basis {1, e₁, …, e₇}.
pub const OCT_TABLE: [[TableEntry; 8]; 8] = [
    [p(0, 0), p(0, 1), p(0, 2), p(0, 3), p(0, 4), p(0, 5), p(0, 6), p(0, 7)],
    [p(0, 1), n(A, 0), p(0, 3), n(A, 2), p(0, 5), n(A, 4), n(0, 7), p(A, 6)],
    [p(0, 2), n(0, 3), n(B, 0), p(B, 1), p(0, 6), p(0, 7), n(B, 4), n(B, 5)],
    [p(0, 3), p(A, 2), n(B, 1), n(A | B, 0), p(0, 7), n(A, 6), p(B, 5), n(A | B, 4)],
    [p(0, 4), n(0, 5), n(0, 6), n(0, 7), n(G, 0), p(G, 1), p(G, 2), p(G, 3)],
    [p(0, 5), p(A, 4), n(0, 7), p(A, 6), n(G, 1), n(A | G, 0), n(G, 3), p(A | G, 2)],
    [p(0, 6), p(0, 7), p(B, 4), n(B, 5), n(G, 2), p(G, 3), n(B | G, 0), n(B | G, 1)],
    [p(0, 7), n(A, 6), p(B, 5), p(A | B, 4), n(G, 3), n(A | G, 2), p(B | G, 1), n(A | B | G, 0)],
];

pub const QUAT_PARAM_NAMES: [&str; 2] = ["β1", "β2"];
pub const OCT_PARAM_NAMES: [&str; 3] = ["α", "β", "γ"];

/// Bilinear product of two coefficient slices through a structure table.
pub(crate) fn table_product<S: Scalar, const D: usize>(
    table: &[[TableEntry; D]; D],
    weights: &[S],
    lhs: &[S; D],
    rhs: &[S; D],
) -> [S; D] {
    let mut out: [S; D] = std::array::from_fn(|_| S::zero());
    for (i, li) in lhs.iter().enumerate() {
        if li.is_zero() {
            continue;
        }
        for (j, rj) in rhs.iter().enumerate() {
            if rj.is_zero() {
                continue;
            }
            let entry = table[i][j];
            let term = li.clone() * rj.clone() * entry.coefficient(weights);
            out[entry.target] = out[entry.target].clone() + term;
        }
    }
    out
}
