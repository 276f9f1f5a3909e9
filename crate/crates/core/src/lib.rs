//! Nonadjacent-form (NAF) tapered floating point.
//!
//! The crate is organised bottom-up:
//!
//! * [`trit`] holds the digit and field types, the text and binary formats,
//!   and [`Dyadic`], the exact value type every codec works in.
//! * [`naf`] recodes integers into canonical nonadjacent form, both with a
//!   software loop and with a single carry-chain pass driven by the
//!   assistant-value tables.
//! * [`realcodec`] is the pure-real tapered format: a reversed exponent NAF
//!   followed by a significand NAF, with exact rounding.
//! * [`points`] layers integers, booleans, infinities, complex numbers and
//!   small vectors onto the same fields using points and point signatures.
//! * [`comparator`] models IEEE-754, Posit and Morris formats next to the
//!   NAF system and computes precision-by-order-of-magnitude curves and
//!   factors of merit.
//!
//! No value in this crate passes through machine floating point except the
//! fitted IEEE exponent-width formula.

pub mod comparator;
pub mod error;
pub mod naf;
pub mod points;
pub mod realcodec;
pub mod trit;

pub use error::{Error, Result};
pub use naf::{recode_chain, recode_oracle, NafInteger};
pub use points::{classify, encode_entity, point_signature, DecodedEntity, PointSignature};
pub use realcodec::{decode_real, encode_real, round_real};
pub use trit::{Dyadic, Trit, TritField};
