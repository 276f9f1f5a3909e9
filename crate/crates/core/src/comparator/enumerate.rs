//! Exhaustive decoding, and PBOM read straight off the decoded values.
//!
//! These readings do not use any PBOM formula; they exist to check them.

use super::{SystemKind, SystemModel, SystemValue};
use crate::error::{Error, Result};
use crate::realcodec::enumerate_real;
use crate::trit::Dyadic;

/// Widest binary system that is enumerated in full.
pub const MAX_ENUMERATED_BITS: u32 = 20;

/// Positive finite values of a system, ascending and without repeats.
pub fn positive_values(model: &SystemModel) -> Result<Vec<Dyadic>> {
    match model.kind {
        SystemKind::Nonadj => {
            let mut v: Vec<Dyadic> = enumerate_real(model.width as usize)?
                .into_iter()
                .map(|(_, x)| x)
                .filter(|x| x.is_positive())
                .collect();
            v.sort();
            v.dedup();
            Ok(v)
        }
        SystemKind::Ieee | SystemKind::Posit => {
            if model.width > MAX_ENUMERATED_BITS {
                return Err(Error::Unsupported(format!(
                    "enumerating {} codes",
                    model.width
                )));
            }
            let mut v = Vec::new();
            for bits in 0..1u64 << model.width {
                if let SystemValue::Finite(x) = model.decode(bits).expect("binary system")? {
                    if x.is_positive() {
                        v.push(x);
                    }
                }
            }
            v.sort();
            v.dedup();
            Ok(v)
        }
        SystemKind::Morris => Err(Error::Unsupported("Morris is not enumerated".into())),
    }
}

/// What the values inside `[2^n_x, 2^(n_x+1))` say about precision there.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BinadeReading {
    pub count: usize,
    /// `n_x + 1 − log₂ g` when `2^n_x` is a value and the gap `g` to the
    /// next value in the binade is a power of two.
    pub digits: Option<u64>,
}

pub fn read_binade(values: &[Dyadic], n_x: i64) -> BinadeReading {
    let lo = Dyadic::pow2(n_x);
    let hi = Dyadic::pow2(n_x + 1);
    let a = values.partition_point(|v| v < &lo);
    let b = values.partition_point(|v| v < &hi);
    let count = b - a;
    let digits = if count >= 2 && values[a] == lo {
        let gap = &values[a + 1] - &lo;
        let e = gap.exponent();
        (gap.mantissa() == &1.into()).then(|| (n_x + 1 - e) as u64)
    } else {
        None
    };
    BinadeReading { count, digits }
}

impl BinadeReading {
    /// Whether a formula's `b` is consistent with this binade.
    ///
    /// In binary systems the count must also be `2^(b−1)`. A binade with a
    /// single value bounds `b` by 1, or by 2 for NONADJ, where the only
    /// two-digit nonadjacent significand is `10`.
    pub fn agrees_with(&self, b: u64, kind: SystemKind) -> bool {
        let binary = kind != SystemKind::Nonadj;
        match self.count {
            0 => b == 0,
            1 => b <= if binary { 1 } else { 2 },
            c => self.digits == Some(b) && (!binary || (b >= 1 && c == 1usize << (b - 1))),
        }
    }
}

/// Largest finite value that is not a power of two, by exhaustive list.
pub fn largest_non_power_of_two(values: &[Dyadic]) -> Option<&Dyadic> {
    values.iter().rev().find(|x| x.mantissa() != &1.into())
}
