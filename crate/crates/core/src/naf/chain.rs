//! Recoding as a single carry chain.
//!
//! Each position `n` (counted from the right) gets an assistant value `a_n`,
//! the carry arriving from below. `a_n` depends only on the digit pair
//! `(x_n, x_{n-1})` and on `a_{n-1}`. A second table of j-values, indexed by
//! `(x_{n+1}, x_n)` and `a_n`, then tells each position whether to keep or
//! flip its nonzero input, so every output digit is a local function of
//! `(x_n, a_n, j_n)`. Digits outside the field are read as 0.

use std::fmt;

use crate::error::Result;
use crate::naf::NafInteger;
use crate::trit::{render_digits, Trit, TritField};

use Trit::{Neg as T, Pos as P, Zero as O};

/// Rows `(left, right)` in the order `11, 10, 1T, 01, 00, 0T, T1, T0, TT`;
/// columns are the incoming assistant value `1, 0, T`.
pub const A_TABLE: [[Trit; 3]; 9] = [
    [P, P, O],
    [P, O, T],
    [O, T, T],
    [P, O, O],
    [O, O, O],
    [O, O, T],
    [P, P, O],
    [P, O, T],
    [O, T, T],
];

/// Same layout as [`A_TABLE`]; entries are 0 or 1.
pub const J_TABLE: [[u8; 3]; 9] = [
    [0, 1, 0],
    [0, 0, 0],
    [0, 1, 0],
    [0, 0, 0],
    [1, 0, 1],
    [0, 0, 0],
    [0, 1, 0],
    [0, 0, 0],
    [0, 1, 0],
];

#[inline]
fn col(t: Trit) -> usize {
    (1 - t.value()) as usize
}

#[inline]
fn row(left: Trit, right: Trit) -> usize {
    3 * col(left) + col(right)
}

#[inline]
fn a_lookup(left: Trit, right: Trit, a_in: Trit) -> Trit {
    A_TABLE[row(left, right)][col(a_in)]
}

#[inline]
fn j_lookup(left: Trit, right: Trit, a: Trit) -> bool {
    J_TABLE[row(left, right)][col(a)] == 1
}

/// Output digit from the input digit, its assistant value and its j-value.
#[inline]
fn select(x: Trit, a: Trit, j: bool) -> Trit {
    match (x, a) {
        (Trit::Zero, Trit::Zero) => Trit::Zero,
        (x, Trit::Zero) => {
            if j {
                -x
            } else {
                x
            }
        }
        (Trit::Zero, a) => {
            if j {
                a
            } else {
                -a
            }
        }
        // x + a is even: 2, -2 or 0.
        _ => Trit::Zero,
    }
}

/// Assistant values of a field, aligned with it (most significant first).
#[derive(Clone, PartialEq, Eq)]
pub struct AssistantField {
    pub values: Vec<Trit>,
    /// The carry out of the top position.
    pub carry_out: Trit,
}

impl AssistantField {
    pub fn render(&self) -> String {
        render_digits(&self.values)
    }
}

impl fmt::Debug for AssistantField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "AssistantField({}, carry {})",
            self.render(),
            self.carry_out
        )
    }
}

/// Every intermediate of one recoding pass.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChainTrace {
    pub assistant: AssistantField,
    /// j-values aligned with the input, most significant first.
    pub j: Vec<bool>,
    /// The recoded field: input width, or one more when the top carries.
    pub output: TritField,
}

fn lsb_first(x: &TritField) -> Vec<Trit> {
    x.digits().iter().rev().copied().collect()
}

/// `a_0 ..= a_L` least significant first; `a_L` is the carry out.
fn carries(xs: &[Trit]) -> Vec<Trit> {
    let at = |n: usize| xs.get(n).copied().unwrap_or(Trit::Zero);
    let mut a = Vec::with_capacity(xs.len() + 1);
    let mut prev_x = Trit::Zero;
    let mut prev_a = Trit::Zero;
    for n in 0..=xs.len() {
        let cur = a_lookup(at(n), prev_x, prev_a);
        a.push(cur);
        prev_x = at(n);
        prev_a = cur;
    }
    a
}

pub fn assistant_values(x: &TritField) -> AssistantField {
    let a = carries(&lsb_first(x));
    let carry_out = a[a.len() - 1];
    let values = a[..a.len() - 1].iter().rev().copied().collect();
    AssistantField { values, carry_out }
}

/// j-values aligned with the input, most significant first.
pub fn j_values(x: &TritField) -> Vec<bool> {
    let xs = lsb_first(x);
    let a = carries(&xs);
    let at = |n: usize| xs.get(n).copied().unwrap_or(Trit::Zero);
    (0..xs.len())
        .rev()
        .map(|n| j_lookup(at(n + 1), at(n), a[n]))
        .collect()
}

pub fn chain_trace(x: &TritField) -> ChainTrace {
    let xs = lsb_first(x);
    let len = xs.len();
    let a = carries(&xs);
    let at = |n: usize| xs.get(n).copied().unwrap_or(Trit::Zero);
    let j: Vec<bool> = (0..=len)
        .map(|n| j_lookup(at(n + 1), at(n), a[n]))
        .collect();
    let top = if a[len].is_nonzero() { len + 1 } else { len };
    let out: Vec<Trit> = (0..top).rev().map(|n| select(at(n), a[n], j[n])).collect();
    ChainTrace {
        assistant: AssistantField {
            values: a[..len].iter().rev().copied().collect(),
            carry_out: a[len],
        },
        j: j[..len].iter().rev().copied().collect(),
        output: TritField::from_vec_unchecked(out),
    }
}

/// The recoded field, keeping the input's leading zeros.
pub fn recode_chain_field(x: &TritField) -> TritField {
    chain_trace(x).output
}

pub fn recode_chain(x: &TritField) -> Result<NafInteger> {
    NafInteger::from_field(&recode_chain_field(x))
}
