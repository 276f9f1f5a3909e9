//! Analytic models of IEEE-754, Posit, Morris and the nonadjacent system
//! (NONADJ): decoders, precision by order of magnitude (PBOM) and factors
//! of merit.
//!
//! PBOM `B(n_x)` is the number of significant base-2 digits available to
//! values `x` with `⌊log₂ x⌋ = n_x`. The [`enumerate`] module derives the
//! same figure from exhaustive decoding, for checking the formulas.

mod ieee;
mod merit;
mod morris;
mod nonadj;
mod posit;

pub mod enumerate;

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::trit::Dyadic;

pub use ieee::{ieee_bias, ieee_decode, ieee_exponent_bits, ieee_pbom};
pub use merit::{lpi_search, merit, om10, MeritRecord, MERIT_CSV_HEADER};
pub use morris::{morris_max_g, MorrisModel};
pub use nonadj::nonadj_pbom;
pub use posit::{posit_decode, posit_es, posit_pbom};

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SystemKind {
    Ieee,
    Posit,
    Morris,
    Nonadj,
}

impl SystemKind {
    pub fn name(self) -> &'static str {
        match self {
            SystemKind::Ieee => "IEEE",
            SystemKind::Posit => "POSIT",
            SystemKind::Morris => "MORRIS",
            SystemKind::Nonadj => "NONADJ",
        }
    }
}

impl fmt::Display for SystemKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for SystemKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "ieee" => Ok(SystemKind::Ieee),
            "posit" => Ok(SystemKind::Posit),
            "morris" => Ok(SystemKind::Morris),
            "nonadj" => Ok(SystemKind::Nonadj),
            other => Err(Error::InvalidArgument(format!("unknown system {other:?}"))),
        }
    }
}

/// A system at one input size, with its size parameter: `s_N` for IEEE,
/// `es` for Posit, `g` for Morris, unused for NONADJ.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct SystemModel {
    pub kind: SystemKind,
    pub width: u32,
    pub param: u32,
}

impl SystemModel {
    /// The system with its default parameter for `width`.
    pub fn new(kind: SystemKind, width: u32) -> Result<Self> {
        let param = match kind {
            SystemKind::Ieee => ieee_exponent_bits(width)?,
            SystemKind::Posit => posit_es(width)?,
            SystemKind::Morris => morris_max_g(width)?,
            SystemKind::Nonadj => 0,
        };
        Self::with_param(kind, width, param)
    }

    pub fn with_param(kind: SystemKind, width: u32, param: u32) -> Result<Self> {
        let bad = |why: String| Err(Error::InvalidArgument(why));
        match kind {
            SystemKind::Ieee if !(4..=64).contains(&width) => {
                return bad(format!("IEEE width {width} outside 4..=64"))
            }
            SystemKind::Ieee if param < 2 || param + 2 > width => {
                return bad(format!("exponent field {param}"))
            }
            SystemKind::Posit if !(2..=64).contains(&width) => {
                return bad(format!("posit width {width} outside 2..=64"))
            }
            SystemKind::Posit if param > 16 => return bad(format!("posit es {param} too large")),
            SystemKind::Morris => {
                let max = morris_max_g(width)?;
                if param < 1 || param > max {
                    return bad(format!("Morris g must lie in 1..={max} at width {width}"));
                }
            }
            SystemKind::Nonadj if !(2..=crate::realcodec::MAX_WIDTH as u32).contains(&width) => {
                return bad(format!("NONADJ width {width} outside 2..=64"))
            }
            _ => {}
        }
        Ok(SystemModel { kind, width, param })
    }

    /// Parameter as printed in the `es_or_s` CSV column.
    pub fn param_label(&self) -> Option<u32> {
        (self.kind != SystemKind::Nonadj).then_some(self.param)
    }

    /// `None` only for the exceptional exponent 0 of Morris.
    pub fn pbom(&self, n_x: i64) -> Option<u64> {
        let n = self.width;
        match self.kind {
            SystemKind::Ieee => Some(ieee_pbom(n, self.param, n_x)),
            SystemKind::Posit => Some(posit_pbom(n, self.param, n_x)),
            SystemKind::Nonadj => Some(nonadj_pbom(n, n_x)),
            SystemKind::Morris => MorrisModel {
                width: n,
                g: self.param,
            }
            .precision(n_x),
        }
    }

    /// Exact decoder for binary codes; `None` for NONADJ and Morris.
    pub fn decode(&self, bits: u64) -> Option<Result<SystemValue>> {
        match self.kind {
            SystemKind::Ieee => Some(ieee_decode(bits, self.width, self.param)),
            SystemKind::Posit => Some(posit_decode(bits, self.width, self.param)),
            _ => None,
        }
    }

    /// Base-2 orders of magnitude of the smallest and largest positive
    /// finite values.
    pub fn dynamic_range(&self) -> (i64, i64) {
        let r = merit::closed_form_range(self);
        (r.0, r.1)
    }
}

/// What a binary code decodes to.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SystemValue {
    Zero {
        negative: bool,
    },
    Finite(Dyadic),
    Infinite {
        negative: bool,
    },
    /// NaN for IEEE, NaR for Posit.
    NotReal,
}

impl SystemValue {
    pub fn finite(&self) -> Option<&Dyadic> {
        match self {
            SystemValue::Finite(x) => Some(x),
            _ => None,
        }
    }
}

impl fmt::Display for SystemValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SystemValue::Zero { negative: false } => f.write_str("0"),
            SystemValue::Zero { negative: true } => f.write_str("-0"),
            SystemValue::Finite(x) => f.write_str(&x.describe()),
            SystemValue::Infinite { negative: false } => f.write_str("+inf"),
            SystemValue::Infinite { negative: true } => f.write_str("-inf"),
            SystemValue::NotReal => f.write_str("NaN"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PbomSample {
    pub model: SystemModel,
    pub n_x: i64,
    pub b: u64,
}

pub const PBOM_CSV_HEADER: [&str; 5] = ["system", "N", "es_or_s", "n_x", "B"];

impl PbomSample {
    pub fn csv_record(&self) -> [String; 5] {
        [
            self.model.kind.name().to_string(),
            self.model.width.to_string(),
            self.model
                .param_label()
                .map(|p| p.to_string())
                .unwrap_or_default(),
            self.n_x.to_string(),
            self.b.to_string(),
        ]
    }
}

/// PBOM for every model at every `n_x` in `lo..=hi`, model-major and in
/// ascending `n_x`. Morris is rejected because its exponent 0 has no PBOM.
pub fn pbom_sweep(models: &[SystemModel], lo: i64, hi: i64) -> Result<Vec<PbomSample>> {
    if lo > hi {
        return Err(Error::InvalidArgument(format!("empty range {lo}:{hi}")));
    }
    if models.iter().any(|m| m.kind == SystemKind::Morris) {
        return Err(Error::Unsupported(
            "Morris has no PBOM at exponent 0".into(),
        ));
    }
    Ok(models
        .iter()
        .flat_map(|&model| {
            (lo..=hi)
                .into_par_iter()
                .map(move |n_x| PbomSample {
                    model,
                    n_x,
                    b: model.pbom(n_x).expect("not Morris"),
                })
                .collect::<Vec<_>>()
        })
        .collect())
}
