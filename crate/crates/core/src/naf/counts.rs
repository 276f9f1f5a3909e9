use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Width of a NAF integer: the index of its leading digit.
#[derive(Copy, Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Width {
    /// The width of zero.
    NegInfinity,
    Finite(u64),
}

impl fmt::Display for Width {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Width::NegInfinity => f.write_str("-inf"),
            Width::Finite(w) => write!(f, "{w}"),
        }
    }
}

/// `⌊log2(3|x|/2)⌋`, evaluated as `bitlen(3|x|) - 2`.
pub fn naf_width(x: &BigInt) -> Width {
    if x.is_zero() {
        return Width::NegInfinity;
    }
    let t = x.abs() * 3u32;
    Width::Finite(t.bits() - 2)
}

/// Width plus one; 0 for zero.
pub fn naf_size(x: &BigInt) -> u64 {
    match naf_width(x) {
        Width::NegInfinity => 0,
        Width::Finite(w) => w + 1,
    }
}

/// [`naf_size`] without allocation.
#[inline]
pub fn size_i64(x: i64) -> u64 {
    if x == 0 {
        return 0;
    }
    let t = 3 * (x as i128).unsigned_abs();
    (128 - t.leading_zeros()) as u64 - 1
}

fn check_n(n: i64) -> Result<()> {
    if n < 1 {
        return Err(Error::InvalidArgument(format!(
            "size must be at least 1, got {n}"
        )));
    }
    Ok(())
}

/// `(2^(n+2) - (-1)^n) / 3` for any `n >= -1`.
pub(crate) fn v(n: i64) -> BigInt {
    debug_assert!(n >= -1);
    let p = BigInt::one() << (n + 2) as usize;
    let s = if n.rem_euclid(2) == 0 { p - 1 } else { p + 1 };
    s / 3
}

/// Largest value of size at most `n`, for any `n >= -1` (0 below 1).
pub(crate) fn xbar(n: i64) -> BigInt {
    if n < 1 {
        return BigInt::zero();
    }
    (v(n) - 1) / 2
}

/// Number of integers whose NAF fits in `n` digits.
pub fn jacobsthal_count(n: i64) -> Result<BigInt> {
    check_n(n)?;
    Ok(v(n))
}

/// Largest integer whose NAF fits in `n` digits. The smallest is its negation.
pub fn max_for_size(n: i64) -> Result<BigInt> {
    check_n(n)?;
    Ok(xbar(n))
}

/// The positive integers of size exactly `n` form the interval
/// `[center - radius, center + radius]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ball {
    pub count: BigInt,
    pub center: BigInt,
    pub radius: BigInt,
}

pub fn ball_for_size(n: i64) -> Result<Ball> {
    check_n(n)?;
    Ok(Ball {
        count: v(n - 2),
        center: BigInt::one() << (n - 1) as usize,
        radius: xbar(n - 2),
    })
}

fn x_last(n: i64) -> BigInt {
    let p = BigInt::one() << n as usize;
    if n % 2 == 0 {
        (p - 1) * 2 / 3
    } else {
        (p * 2 - 1) / 3
    }
}

/// Smallest and largest positive integer of size `n`.
pub fn batch_extrema(n: i64) -> Result<(BigInt, BigInt)> {
    check_n(n)?;
    Ok((x_last(n - 1) + 1, x_last(n)))
}
