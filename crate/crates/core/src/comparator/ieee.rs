use num_bigint::BigInt;

use super::SystemValue;
use crate::error::{Error, Result};
use crate::trit::Dyadic;

/// Exponent field size `s_N = ⌊N^(0.611 − N/3200)⌋`.
///
/// This is a fitted formula, so it is evaluated in `f64`; widths where the
/// power lands too close to an integer to trust the floor are refused.
pub fn ieee_exponent_bits(width: u32) -> Result<u32> {
    if !(4..=64).contains(&width) {
        return Err(Error::InvalidArgument(format!(
            "IEEE width {width} outside 4..=64"
        )));
    }
    let n = width as f64;
    let v = n.powf(0.611 - n / 3200.0);
    let s = v.floor();
    if v - s < 1e-9 || s + 1.0 - v < 1e-9 {
        return Err(Error::Unsupported(format!(
            "exponent field size at width {width} is too close to call"
        )));
    }
    Ok(s as u32)
}

pub fn ieee_bias(s: u32) -> i64 {
    (1i64 << (s - 1)) - 1
}

/// Value of an `N`-bit code with an `s`-bit exponent field.
///
/// Subnormals are `m · 2^(1 − b − f)` with `f = N − s − 1` fraction bits,
/// the same scale as the smallest normal binade.
pub fn ieee_decode(bits: u64, width: u32, s: u32) -> Result<SystemValue> {
    if width < 64 && bits >> width != 0 {
        return Err(Error::InvalidArgument(format!(
            "code {bits:#x} wider than {width} bits"
        )));
    }
    let f = width - s - 1;
    let b = ieee_bias(s);
    let negative = (bits >> (width - 1)) & 1 == 1;
    let e = ((bits >> f) & ((1u64 << s) - 1)) as i64;
    let m = bits & ((1u64 << f) - 1);
    let top = (1i64 << s) - 1;
    let signed = |x: Dyadic| SystemValue::Finite(if negative { -x } else { x });
    Ok(match (e, m) {
        (0, 0) => SystemValue::Zero { negative },
        (0, m) => signed(Dyadic::new(m, 1 - b - f as i64)),
        (e, 0) if e == top => SystemValue::Infinite { negative },
        (e, _) if e == top => SystemValue::NotReal,
        (e, m) => signed(Dyadic::new(
            BigInt::from(m) + (BigInt::from(1) << f),
            e - b - f as i64,
        )),
    })
}

/// PBOM of the IEEE system with exponent field size `s`.
///
/// Full precision `N − s` for normal binades; in the subnormal range each
/// binade lower loses one digit, leaving `N − s + b + n_x − 1`, which is 23
/// in the top subnormal binade of binary32 and 1 at its smallest subnormal.
pub fn ieee_pbom(width: u32, s: u32, n_x: i64) -> u64 {
    let (n, s) = (width as i64, s as i64);
    let b = ieee_bias(s as u32);
    if n_x > b {
        0
    } else if n_x > -b {
        (n - s) as u64
    } else {
        (n - s + b + n_x - 1).max(0) as u64
    }
}
