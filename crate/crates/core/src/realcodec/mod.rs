//! The pure-real tapered format.
//!
//! A nonzero value `x` with `n = width(x)` is stored as the NAF of `n`
//! written backwards, immediately followed by the NAF of an integer
//! significand `m` of size `p = N - size(n)`:
//!
//! ```text
//!   x = m * 2^(n - p + 1)        field = rev(NAF(n)) ++ NAF(m)
//! ```
//!
//! The most significant digits of `n` and `m` touch, so the only adjacent
//! nonzero pair in the field marks the boundary. A field with no such pair
//! has exponent 0 and is all significand. Trailing zeros of `m` are part of
//! the significand, so `size(n) + size(m) = N` always holds.
//!
//! Widths are limited to [`MAX_WIDTH`] so every exponent fits in an `i64`.

mod round;

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::naf::{size_i64, xbar};
use crate::trit::{digits_value, Dyadic, Trit, TritField};

pub use round::{naf_digit_stream, round_real, truncate_real};

pub const MAX_WIDTH: usize = 64;

fn check_width(n: usize) -> Result<()> {
    if n == 0 || n > MAX_WIDTH {
        return Err(Error::Unsupported(format!(
            "real forms need 1 <= N <= {MAX_WIDTH}, got {n}"
        )));
    }
    Ok(())
}

/// A nonzero pure-real value split into its stored integers.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RealParts {
    /// Signed significand; its NAF has exactly `precision` digits.
    pub m: BigInt,
    pub n: i64,
    pub precision: usize,
    pub width: usize,
}

impl RealParts {
    pub fn value(&self) -> Dyadic {
        Dyadic::new(self.m.clone(), self.n - self.precision as i64 + 1)
    }

    /// Size of the exponent's NAF.
    pub fn exponent_size(&self) -> usize {
        self.width - self.precision
    }

    pub fn ulp(&self) -> Dyadic {
        Dyadic::pow2(self.n - self.precision as i64 + 1)
    }
}

/// `⌊log2(3|x|/2)⌋`, the stored exponent of `x`.
pub fn real_width(x: &Dyadic) -> Result<i64> {
    if x.is_zero() {
        return Err(Error::ZeroValue);
    }
    let t = x.mantissa().abs() * 3u32;
    Ok(t.bits() as i64 + x.exponent() - 2)
}

/// `N - size(width(x))`. Zero or negative means out of range.
pub fn precision(x: &Dyadic, n_width: usize) -> Result<i64> {
    let n = real_width(x)?;
    Ok(n_width as i64 - size_i64(n) as i64)
}

/// `2^(n + size(n) - N + 1)` for `x` inside the dynamic range.
pub fn ulp(x: &Dyadic, n_width: usize) -> Result<Dyadic> {
    let n = real_width(x)?;
    let p = n_width as i64 - size_i64(n) as i64;
    if p <= 0 {
        return Err(Error::OutOfRange {
            value: x.to_string(),
            width: n_width,
        });
    }
    Ok(Dyadic::pow2(n - p + 1))
}

/// Largest finite value at width `N`: `2^X̄(N-1)`.
pub fn omega(n_width: usize) -> Result<Dyadic> {
    check_width(n_width)?;
    Ok(Dyadic::pow2(omega_exponent(n_width)))
}

pub(crate) fn omega_exponent(n_width: usize) -> i64 {
    xbar(n_width as i64 - 1)
        .to_i64()
        .expect("exponent fits for N <= 64")
}

/// `(1/2)^2 + (1/2)^4 + ... + (1/2)^k` with `k` the largest even number below `N`.
pub fn alpha(n_width: usize) -> Dyadic {
    let mut a = Dyadic::zero();
    let mut k = 2;
    while k < n_width {
        a = &a + &Dyadic::pow2(-(k as i64));
        k += 2;
    }
    a
}

/// Splits `x` into stored integers, or explains why it has no exact form.
pub fn decompose(x: &Dyadic, n_width: usize) -> Result<RealParts> {
    check_width(n_width)?;
    let n = real_width(x)?;
    let p = n_width as i64 - size_i64(n) as i64;
    if p <= 0 {
        return Err(Error::OutOfRange {
            value: x.to_string(),
            width: n_width,
        });
    }
    let m = x
        .exact_div_pow2(n - p + 1)
        .ok_or_else(|| Error::NotRepresentable {
            value: x.to_string(),
            width: n_width,
        })?;
    Ok(RealParts {
        m,
        n,
        precision: p as usize,
        width: n_width,
    })
}

/// True when `x` is zero or has an exact pure-real form at width `N`.
pub fn is_representable(x: &Dyadic, n_width: usize) -> bool {
    x.is_zero() || decompose(x, n_width).is_ok()
}

fn naf_digits_i(x: &BigInt) -> Vec<Trit> {
    crate::naf::recode_oracle(x).digits().to_vec()
}

pub fn encode_parts(parts: &RealParts) -> TritField {
    let mut digits = naf_digits_i(&BigInt::from(parts.n));
    digits.reverse();
    let m = naf_digits_i(&parts.m);
    debug_assert_eq!(m.len(), parts.precision);
    digits.extend(m);
    debug_assert_eq!(digits.len(), parts.width);
    TritField::from_vec_unchecked(digits)
}

/// Exact encoding. Zero and inexact values are errors; round first.
pub fn encode_real(x: &Dyadic, n_width: usize) -> Result<TritField> {
    Ok(encode_parts(&decompose(x, n_width)?))
}

/// Reads the stored integers back out of a field.
pub fn parse_real(field: &TritField) -> Result<RealParts> {
    check_width(field.width())?;
    let d = field.digits();
    if field.is_all_zero() {
        return Err(Error::ZeroValue);
    }
    let split = d
        .windows(2)
        .position(|w| w[0].is_nonzero() && w[1].is_nonzero())
        .map(|i| i + 1);
    let k = split.unwrap_or(0);
    let sig = &d[k..];
    if sig[0].is_zero() {
        return Err(Error::MalformedReal(
            "significand does not start with a nonzero digit",
        ));
    }
    if sig
        .windows(2)
        .any(|w| w[0].is_nonzero() && w[1].is_nonzero())
    {
        return Err(Error::MalformedReal("more than one adjacent nonzero pair"));
    }
    let mut exp: Vec<Trit> = d[..k].to_vec();
    exp.reverse();
    let n = digits_value(&exp).to_i64().expect("bounded by width");
    Ok(RealParts {
        m: digits_value(sig),
        n,
        precision: sig.len(),
        width: field.width(),
    })
}

pub fn decode_real(field: &TritField) -> Result<Dyadic> {
    Ok(parse_real(field)?.value())
}

/// Every nonzero exact value at width `N` with its field, in increasing order.
pub fn enumerate_real(n_width: usize) -> Result<Vec<(TritField, Dyadic)>> {
    check_width(n_width)?;
    if n_width > 20 {
        return Err(Error::Unsupported(
            "enumeration is limited to N <= 20".into(),
        ));
    }
    let mut out = Vec::new();
    for s in 0..n_width as i64 {
        let p = n_width as i64 - s;
        let exps: Vec<i64> = if s == 0 {
            vec![0]
        } else {
            let lo = xbar(s - 1).to_i64().unwrap() + 1;
            let hi = xbar(s).to_i64().unwrap();
            (lo..=hi).flat_map(|e| [e, -e]).collect()
        };
        let m_lo = xbar(p - 1).to_i64().unwrap() + 1;
        let m_hi = xbar(p).to_i64().unwrap();
        for &n in &exps {
            for mag in m_lo..=m_hi {
                for m in [mag, -mag] {
                    let parts = RealParts {
                        m: BigInt::from(m),
                        n,
                        precision: p as usize,
                        width: n_width,
                    };
                    out.push((encode_parts(&parts), parts.value()));
                }
            }
        }
    }
    out.sort_by(|a, b| a.1.cmp(&b.1));
    Ok(out)
}

/// Integer key whose order matches the value order of real forms of one width.
///
/// For `x = m * 2^(n - p + 1)` the key is
/// `sign(x) * (2^(N+1) * (n + X̄(N-1) + 1) + |m| * 2^(N-p))`, and 0 for zero.
/// The first term orders binades, the second orders values inside one.
pub fn comparison_key(field: &TritField) -> Result<BigInt> {
    if field.is_all_zero() {
        return Ok(BigInt::zero());
    }
    let parts = parse_real(field)?;
    let w = field.width();
    let binade = BigInt::from(parts.n + omega_exponent(w) + 1) << (w + 1);
    let inner = parts.m.abs() << (w - parts.precision);
    let key = binade + inner;
    Ok(if parts.m.is_negative() { -key } else { key })
}

pub(crate) fn first_of_size(p: i64) -> BigInt {
    xbar(p - 1) + BigInt::one()
}
