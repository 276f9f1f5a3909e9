use num_bigint::BigInt;
use num_integer::Integer;

use super::{check_width, encode_parts, first_of_size, omega_exponent, real_width, RealParts};
use crate::error::{Error, Result};
use crate::naf::{size_i64, xbar};
use crate::trit::{digits_value, Dyadic, Trit, TritField};

/// Leading digits of a nonadjacent expansion of `|x|`, most significant
/// first, where digit 0 has weight `2^width(x)`.
///
/// Each step keeps a residual `v` and emits `sign(v)` when `3|v|` exceeds
/// twice the current weight, else 0; a nonzero digit is always followed by
/// a 0.
pub fn naf_digit_stream(x: &Dyadic, count: usize) -> Result<Vec<Trit>> {
    let n = real_width(x)?;
    let mut v = x.abs();
    let mut out = Vec::with_capacity(count);
    let mut after_nonzero = false;
    for k in 0..count as i64 {
        if after_nonzero || v.is_zero() {
            out.push(Trit::Zero);
            after_nonzero = false;
            continue;
        }
        let w = Dyadic::pow2(n - k);
        let three_v = &v.abs() * &Dyadic::from(3);
        if three_v > w.shl(1) {
            let d = if v.is_negative() {
                Trit::Neg
            } else {
                Trit::Pos
            };
            v = if v.is_negative() { &v + &w } else { &v - &w };
            out.push(d);
            after_nonzero = true;
        } else {
            out.push(Trit::Zero);
        }
    }
    Ok(out)
}

fn clamp(x: &Dyadic, n: i64, n_width: usize) -> RealParts {
    let e = omega_exponent(n_width);
    let m = if x.is_negative() { -1 } else { 1 };
    let exp = if n > 0 { e } else { -e };
    // Powers of two sit at precision 1.
    RealParts {
        m: BigInt::from(m),
        n: exp,
        precision: n_width - size_i64(exp) as usize,
        width: n_width,
    }
    .normalised()
}

impl RealParts {
    /// Rescales `m` to the precision its exponent dictates.
    fn normalised(self) -> RealParts {
        let p = self.width - size_i64(self.n) as usize;
        let shift = p - self.precision;
        RealParts {
            m: self.m << shift,
            precision: p,
            ..self
        }
    }
}

fn negate_if(neg: bool, mut parts: RealParts) -> RealParts {
    if neg {
        parts.m = -parts.m;
    }
    parts
}

/// Rounds by truncating the digit stream at the available precision.
///
/// Always returns one of the two representable neighbours of `x`, but not
/// always the nearer one.
pub fn truncate_real(x: &Dyadic, n_width: usize) -> Result<TritField> {
    check_width(n_width)?;
    let n = real_width(x)?;
    let p = n_width as i64 - size_i64(n) as i64;
    if p <= 0 {
        return Ok(encode_parts(&clamp(x, n, n_width)));
    }
    let m = digits_value(&naf_digit_stream(x, p as usize)?);
    let parts = RealParts {
        m,
        n,
        precision: p as usize,
        width: n_width,
    };
    Ok(encode_parts(&negate_if(x.is_negative(), parts)))
}

/// Representable values around a positive `a` inside the dynamic range:
/// the largest one `<= a` and the smallest one `>= a`.
pub(crate) fn bracket(a: &Dyadic, n_width: usize) -> (Option<RealParts>, Option<RealParts>) {
    let n = real_width(a).expect("nonzero");
    let p = n_width as i64 - size_i64(n) as i64;
    debug_assert!(p > 0);
    let e = n - p + 1;
    let fl = a.floor_div_pow2(e);
    let ce = a.ceil_div_pow2(e);
    let here = |m: BigInt| RealParts {
        m,
        n,
        precision: p as usize,
        width: n_width,
    };
    let at = |n: i64, pick: fn(i64) -> BigInt| {
        let p = n_width as i64 - size_i64(n) as i64;
        (p > 0).then(|| RealParts {
            m: pick(p),
            n,
            precision: p as usize,
            width: n_width,
        })
    };
    let lo = if fl >= first_of_size(p) {
        Some(here(fl))
    } else {
        at(n - 1, xbar)
    };
    let hi = if ce <= xbar(p) {
        Some(here(ce))
    } else {
        at(n + 1, first_of_size)
    };
    (lo, hi)
}

fn prefer(a: &RealParts, b: &RealParts) -> bool {
    // Final significand digit 0 first, then the even exponent.
    let (ea, eb) = (a.m.is_even(), b.m.is_even());
    if ea != eb {
        return ea;
    }
    a.n.is_even()
}

/// Nearest representable value; exact ties go to the neighbour whose last
/// significand digit is 0, or failing that to the one with an even exponent.
///
/// Values beyond the dynamic range clamp to `±Ω` or `±1/Ω`. Nonzero input
/// never rounds to zero.
pub fn round_real(x: &Dyadic, n_width: usize) -> Result<TritField> {
    Ok(encode_parts(&round_parts(x, n_width)?))
}

pub fn round_parts(x: &Dyadic, n_width: usize) -> Result<RealParts> {
    check_width(n_width)?;
    if x.is_zero() {
        return Err(Error::ZeroValue);
    }
    let n = real_width(x)?;
    let p = n_width as i64 - size_i64(n) as i64;
    if p <= 0 {
        return Ok(clamp(x, n, n_width));
    }
    let a = x.abs();
    let chosen = match bracket(&a, n_width) {
        (Some(lo), None) => lo,
        (None, Some(hi)) => hi,
        (Some(lo), Some(hi)) => {
            let dl = &a - &lo.value();
            let dh = &hi.value() - &a;
            match dl.cmp(&dh) {
                std::cmp::Ordering::Less => lo,
                std::cmp::Ordering::Greater => hi,
                std::cmp::Ordering::Equal if prefer(&lo, &hi) => lo,
                std::cmp::Ordering::Equal => hi,
            }
        }
        (None, None) => unreachable!("x lies in the dynamic range"),
    };
    Ok(negate_if(x.is_negative(), chosen))
}
