//! Trits, trit fields and exact dyadic values.
//!
//! Text format: one character per trit, most significant first, over the
//! alphabet `1`, `0`, `T` where `T` is the digit minus one.

mod dyadic;
mod pack;

use std::fmt;
use std::ops::{Index, Neg};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

pub use dyadic::Dyadic;
pub use pack::{pack_binary, unpack_binary};

/// A signed binary digit.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
#[repr(i8)]
pub enum Trit {
    Neg = -1,
    Zero = 0,
    Pos = 1,
}

impl Trit {
    pub const ALL: [Trit; 3] = [Trit::Neg, Trit::Zero, Trit::Pos];

    #[inline]
    pub const fn value(self) -> i8 {
        self as i8
    }

    #[inline]
    pub const fn is_zero(self) -> bool {
        matches!(self, Trit::Zero)
    }

    #[inline]
    pub const fn is_nonzero(self) -> bool {
        !self.is_zero()
    }

    /// Maps -1, 0, 1 to the matching trit.
    pub const fn from_i8(v: i8) -> Option<Trit> {
        match v {
            -1 => Some(Trit::Neg),
            0 => Some(Trit::Zero),
            1 => Some(Trit::Pos),
            _ => None,
        }
    }

    pub const fn from_char(c: char) -> Option<Trit> {
        match c {
            '1' => Some(Trit::Pos),
            '0' => Some(Trit::Zero),
            'T' => Some(Trit::Neg),
            _ => None,
        }
    }

    pub const fn to_char(self) -> char {
        match self {
            Trit::Pos => '1',
            Trit::Zero => '0',
            Trit::Neg => 'T',
        }
    }
}

impl Neg for Trit {
    type Output = Trit;

    #[inline]
    fn neg(self) -> Trit {
        match self {
            Trit::Neg => Trit::Pos,
            Trit::Zero => Trit::Zero,
            Trit::Pos => Trit::Neg,
        }
    }
}

impl fmt::Display for Trit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_char())
    }
}

/// How [`TritField::render_with`] draws the digit minus one.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Default)]
pub enum RenderStyle {
    /// `T`, the interchange form.
    #[default]
    Ascii,
    /// `1̄` (one with a combining macron). Display only; not parseable.
    Overbar,
}

/// A fixed-width field of trits, most significant first.
///
/// The width is always at least one.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TritField {
    digits: Vec<Trit>,
}

impl TritField {
    pub fn new(digits: Vec<Trit>) -> Result<Self> {
        if digits.is_empty() {
            return Err(Error::EmptyField);
        }
        Ok(TritField { digits })
    }

    /// The all-zero field of the given width.
    ///
    /// # Panics
    /// Panics if `width` is zero.
    pub fn zeros(width: usize) -> Self {
        assert!(width > 0, "trit fields have positive width");
        TritField {
            digits: vec![Trit::Zero; width],
        }
    }

    pub(crate) fn from_vec_unchecked(digits: Vec<Trit>) -> Self {
        debug_assert!(!digits.is_empty());
        TritField { digits }
    }

    #[inline]
    pub fn width(&self) -> usize {
        self.digits.len()
    }

    #[inline]
    pub fn digits(&self) -> &[Trit] {
        &self.digits
    }

    pub fn into_digits(self) -> Vec<Trit> {
        self.digits
    }

    pub fn is_all_zero(&self) -> bool {
        self.digits.iter().all(|t| t.is_zero())
    }

    /// Element-wise negation.
    pub fn negate(&self) -> TritField {
        TritField {
            digits: self.digits.iter().map(|&t| -t).collect(),
        }
    }

    /// Σ digit·2^position with positions counted from zero at the right.
    pub fn int_value(&self) -> BigInt {
        digits_value(&self.digits)
    }

    pub fn render(&self) -> String {
        self.render_with(RenderStyle::Ascii)
    }

    pub fn render_with(&self, style: RenderStyle) -> String {
        let mut out = String::with_capacity(self.width());
        for t in &self.digits {
            match (style, t) {
                (RenderStyle::Overbar, Trit::Neg) => out.push_str("1\u{0304}"),
                _ => out.push(t.to_char()),
            }
        }
        out
    }

    /// Splits into two halves of equal width. `None` for odd widths.
    pub fn halves(&self) -> Option<(TritField, TritField)> {
        let w = self.width();
        if w % 2 != 0 || w < 2 {
            return None;
        }
        let (l, r) = self.digits.split_at(w / 2);
        Some((
            TritField { digits: l.to_vec() },
            TritField { digits: r.to_vec() },
        ))
    }

    /// Concatenation of fields, left to right.
    pub fn concat(parts: &[TritField]) -> TritField {
        let digits: Vec<Trit> = parts
            .iter()
            .flat_map(|p| p.digits.iter().copied())
            .collect();
        TritField::from_vec_unchecked(digits)
    }

    /// Every field of the given width, in lexicographic order with `T < 0 < 1`.
    pub fn all_of_width(width: usize) -> impl Iterator<Item = TritField> {
        assert!(width > 0);
        let total = 3usize.pow(width as u32);
        (0..total).map(move |mut idx| {
            let mut digits = vec![Trit::Zero; width];
            for slot in digits.iter_mut().rev() {
                *slot = Trit::ALL[idx % 3];
                idx /= 3;
            }
            TritField { digits }
        })
    }
}

impl Index<usize> for TritField {
    type Output = Trit;

    fn index(&self, i: usize) -> &Trit {
        &self.digits[i]
    }
}

impl fmt::Display for TritField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for TritField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TritField({})", self.render())
    }
}

impl FromStr for TritField {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_trits(s)
    }
}

/// Parses a trit string over `{1, 0, T}`, most significant first.
pub fn parse_trits(text: &str) -> Result<TritField> {
    if text.is_empty() {
        return Err(Error::EmptyField);
    }
    let digits = text
        .chars()
        .enumerate()
        .map(|(pos, ch)| Trit::from_char(ch).ok_or(Error::InvalidTrit { ch, pos }))
        .collect::<Result<Vec<_>>>()?;
    Ok(TritField { digits })
}

pub fn render_trits(field: &TritField) -> String {
    field.render()
}

pub fn field_int_value(field: &TritField) -> BigInt {
    field.int_value()
}

/// Positional value of an MSB-first digit slice. The empty slice is zero.
pub fn digits_value(digits: &[Trit]) -> BigInt {
    // Horner in i64 while it cannot overflow, then in BigInt.
    if digits.len() < 62 {
        let mut v: i64 = 0;
        for t in digits {
            v = 2 * v + t.value() as i64;
        }
        return BigInt::from(v);
    }
    let mut v = BigInt::zero();
    for t in digits {
        v <<= 1;
        v += t.value() as i32;
    }
    v
}

/// Renders an MSB-first digit slice; the empty slice renders as `""`.
pub fn render_digits(digits: &[Trit]) -> String {
    digits.iter().map(|t| t.to_char()).collect()
}
