//! Binary interchange: a two-byte little-endian width followed by two bits
//! per trit, most significant trit first.
//!
//! `00` is 0, `01` is +1, `10` is -1 and `11` never appears. The final byte
//! is padded with zero bits on the right.

use super::{Trit, TritField};
use crate::error::{Error, Result};

fn code(t: Trit) -> u8 {
    match t {
        Trit::Zero => 0b00,
        Trit::Pos => 0b01,
        Trit::Neg => 0b10,
    }
}

pub fn pack_binary(field: &TritField) -> Result<Vec<u8>> {
    let width = field.width();
    if width > u16::MAX as usize {
        return Err(Error::WidthOverflow(width));
    }
    let mut out = Vec::with_capacity(2 + width.div_ceil(4));
    out.extend_from_slice(&(width as u16).to_le_bytes());
    for chunk in field.digits().chunks(4) {
        let mut byte = 0u8;
        for (i, &t) in chunk.iter().enumerate() {
            byte |= code(t) << (6 - 2 * i);
        }
        out.push(byte);
    }
    Ok(out)
}

pub fn unpack_binary(bytes: &[u8]) -> Result<TritField> {
    if bytes.len() < 2 {
        return Err(Error::Truncated("missing width prefix"));
    }
    let width = u16::from_le_bytes([bytes[0], bytes[1]]) as usize;
    if width == 0 {
        return Err(Error::MalformedBinary("zero width"));
    }
    let payload = &bytes[2..];
    let needed = width.div_ceil(4);
    if payload.len() < needed {
        return Err(Error::Truncated("payload shorter than width"));
    }
    if payload.len() > needed {
        return Err(Error::MalformedBinary("trailing bytes after payload"));
    }
    let mut digits = Vec::with_capacity(width);
    for i in 0..width {
        let bits = (payload[i / 4] >> (6 - 2 * (i % 4))) & 0b11;
        digits.push(match bits {
            0b00 => Trit::Zero,
            0b01 => Trit::Pos,
            0b10 => Trit::Neg,
            _ => return Err(Error::MalformedBinary("reserved bit pattern 11")),
        });
    }
    let used_in_last = width % 4;
    if used_in_last != 0 {
        let pad_mask = (1u8 << (8 - 2 * used_in_last)) - 1;
        if payload[needed - 1] & pad_mask != 0 {
            return Err(Error::MalformedBinary("nonzero padding bits"));
        }
    }
    Ok(TritField::from_vec_unchecked(digits))
}
