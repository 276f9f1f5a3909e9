//! Integer nonadjacent form: widths, counts and two recoders.

mod chain;
mod counts;

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::error::{Error, Result};
use crate::trit::{digits_value, render_digits, Trit, TritField};

pub use chain::{
    assistant_values, chain_trace, j_values, recode_chain, recode_chain_field, AssistantField,
    ChainTrace, A_TABLE, J_TABLE,
};
pub(crate) use counts::xbar;
pub use counts::{
    ball_for_size, batch_extrema, jacobsthal_count, max_for_size, naf_size, naf_width, size_i64,
    Ball, Width,
};

/// An integer held in canonical nonadjacent form.
///
/// Digits are most significant first with no leading zero; zero has no
/// digits at all.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NafInteger {
    digits: Vec<Trit>,
    value: BigInt,
}

impl NafInteger {
    /// Validates a digit string as a canonical NAF.
    pub fn from_digits(digits: Vec<Trit>) -> Result<Self> {
        if digits.first() == Some(&Trit::Zero) {
            return Err(Error::InvalidArgument(
                "NAF digits may not start with 0".into(),
            ));
        }
        if !is_nonadjacent(&digits) {
            return Err(Error::InvalidArgument("adjacent nonzero digits".into()));
        }
        let value = digits_value(&digits);
        Ok(NafInteger { digits, value })
    }

    /// Strips leading zeros from a field and validates the rest.
    pub fn from_field(field: &TritField) -> Result<Self> {
        let start = field
            .digits()
            .iter()
            .position(|t| t.is_nonzero())
            .unwrap_or(field.width());
        Self::from_digits(field.digits()[start..].to_vec())
    }

    pub fn zero() -> Self {
        NafInteger {
            digits: Vec::new(),
            value: BigInt::zero(),
        }
    }

    pub fn digits(&self) -> &[Trit] {
        &self.digits
    }

    pub fn value(&self) -> &BigInt {
        &self.value
    }

    /// Number of digits; 0 for zero.
    pub fn size(&self) -> usize {
        self.digits.len()
    }

    /// `None` stands for minus infinity, the width of zero.
    pub fn width(&self) -> Option<usize> {
        self.digits.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn negate(&self) -> NafInteger {
        NafInteger {
            digits: self.digits.iter().map(|&t| -t).collect(),
            value: -&self.value,
        }
    }

    /// Nonzero digit count.
    pub fn weight(&self) -> usize {
        self.digits.iter().filter(|t| t.is_nonzero()).count()
    }

    /// Left zero-extends to `width` trits.
    pub fn to_field(&self, width: usize) -> Result<TritField> {
        if width < self.size() || width == 0 {
            return Err(Error::InvalidArgument(format!(
                "NAF of size {} does not fit in {width} trits",
                self.size()
            )));
        }
        let mut d = vec![Trit::Zero; width - self.size()];
        d.extend_from_slice(&self.digits);
        TritField::new(d)
    }

    /// Digit string, or `0` for zero.
    pub fn render(&self) -> String {
        if self.is_zero() {
            "0".into()
        } else {
            render_digits(&self.digits)
        }
    }
}

impl fmt::Display for NafInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for NafInteger {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NafInteger({} = {})", self.render(), self.value)
    }
}

pub fn is_nonadjacent(digits: &[Trit]) -> bool {
    digits.windows(2).all(|w| w[0].is_zero() || w[1].is_zero())
}

/// The reference recoder: peel off the low digit, `2 - (x mod 4)` when odd.
///
/// Negative inputs recode `|x|` and negate the digits.
pub fn recode_oracle(x: &BigInt) -> NafInteger {
    let mut v = x.abs();
    let mut rev = Vec::with_capacity(v.bits() as usize + 1);
    let four = BigInt::from(4);
    while !v.is_zero() {
        if v.is_odd() {
            let r = v.mod_floor(&four);
            let d: i8 = if r == BigInt::from(1) { 1 } else { -1 };
            v -= d;
            rev.push(Trit::from_i8(d).unwrap());
        } else {
            rev.push(Trit::Zero);
        }
        v >>= 1;
    }
    rev.reverse();
    if x.is_negative() {
        rev.iter_mut().for_each(|t| *t = -*t);
    }
    NafInteger {
        digits: rev,
        value: x.clone(),
    }
}

/// `recode_oracle` for machine integers.
pub fn naf_of(x: i64) -> NafInteger {
    recode_oracle(&BigInt::from(x))
}
