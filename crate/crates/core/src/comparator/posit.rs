use num_bigint::BigInt;

use super::SystemValue;
use crate::error::{Error, Result};
use crate::trit::Dyadic;

/// `es_N = log₂ N − 3`, for powers of two from 8 up.
pub fn posit_es(width: u32) -> Result<u32> {
    if width < 8 || !width.is_power_of_two() {
        return Err(Error::InvalidArgument(format!(
            "posit es is defined for powers of two >= 8, got {width}"
        )));
    }
    Ok(width.trailing_zeros() - 3)
}

/// Value of an `N`-bit posit. Negative codes are decoded through their
/// two's complement.
pub fn posit_decode(bits: u64, width: u32, es: u32) -> Result<SystemValue> {
    if !(2..=64).contains(&width) {
        return Err(Error::InvalidArgument(format!(
            "posit width {width} outside 2..=64"
        )));
    }
    let mask = if width == 64 {
        u64::MAX
    } else {
        (1u64 << width) - 1
    };
    if bits & !mask != 0 {
        return Err(Error::InvalidArgument(format!(
            "code {bits:#x} wider than {width} bits"
        )));
    }
    let sign = 1u64 << (width - 1);
    if bits == 0 {
        return Ok(SystemValue::Zero { negative: false });
    }
    if bits == sign {
        return Ok(SystemValue::NotReal);
    }
    if bits & sign != 0 {
        let pos = bits.wrapping_neg() & mask;
        return Ok(match posit_decode(pos, width, es)? {
            SystemValue::Finite(x) => SystemValue::Finite(-x),
            other => other,
        });
    }
    let body_len = width - 1;
    let bit = |i: u32| (bits >> (body_len - 1 - i)) & 1;
    let first = bit(0);
    let r = (0..body_len).take_while(|&i| bit(i) == first).count() as u32;
    let rem = body_len - r - u32::from(r < body_len);
    let k: i64 = if first == 1 {
        r as i64 - 1
    } else {
        -(r as i64)
    };
    let rest = if rem == 0 {
        0
    } else {
        bits & ((1u64 << rem) - 1)
    };
    let (n, frac_len, m) = if rem > es {
        let fl = rem - es;
        (rest >> fl, fl, rest & ((1u64 << fl) - 1))
    } else {
        (rest << (es - rem), 0, 0)
    };
    let scale = (k << es) + n as i64 - frac_len as i64;
    Ok(SystemValue::Finite(Dyadic::new(
        BigInt::from(m) + (BigInt::from(1) << frac_len),
        scale,
    )))
}

/// `max(0, N + (−1)^r_s ⌊n_x / 2^es⌋ − r_s − es − 1)` with `r_s = [n_x ≥ 0]`.
pub fn posit_pbom(width: u32, es: u32, n_x: i64) -> u64 {
    let q = n_x.div_euclid(1i64 << es);
    let b = if n_x >= 0 {
        width as i64 - q - 1 - es as i64 - 1
    } else {
        width as i64 + q - es as i64 - 1
    };
    b.max(0) as u64
}
