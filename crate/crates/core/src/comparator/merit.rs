use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, ToPrimitive};

use super::{ieee_bias, SystemKind, SystemModel, SystemValue};
use crate::error::{Error, Result};
use crate::naf::xbar;
use crate::realcodec::{decode_real, encode_real};
use crate::trit::Dyadic;

/// First 60 decimals of log₁₀ 2, truncated.
const LOG10_2_DIGITS: &str = "301029995663981195213738894724493026768189881462108541310427";

/// `⌊om · log₁₀ 2⌋` in integer arithmetic, rounding toward −∞.
pub fn om10(om: i64) -> i64 {
    let l: BigInt = LOG10_2_DIGITS.parse().unwrap();
    let scale = BigInt::from(10).pow(LOG10_2_DIGITS.len() as u32);
    (BigInt::from(om) * l).div_floor(&scale).to_i64().unwrap()
}

pub const MERIT_CSV_HEADER: [&str; 11] = [
    "system",
    "N",
    "LVALOM",
    "LVALOM10",
    "SPVALOM",
    "SPVALOM10",
    "LNP2OM",
    "LNP2OM10",
    "LPI",
    "LPIOM",
    "MP",
];

/// Factors of merit; every `*OM` is a base-2 order of magnitude `⌊log₂⌋`
/// and every `*OM10` is [`om10`] of it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MeritRecord {
    pub model: SystemModel,
    pub lvalom: i64,
    pub spvalom: i64,
    /// `None` when every value is a power of two.
    pub lnp2om: Option<i64>,
    pub lpi: BigInt,
    pub lpiom: i64,
    pub mp: u64,
}

impl MeritRecord {
    pub fn csv_record(&self) -> [String; 11] {
        let opt = |v: Option<i64>| v.map(|x| x.to_string()).unwrap_or_default();
        [
            self.model.kind.name().to_string(),
            self.model.width.to_string(),
            self.lvalom.to_string(),
            om10(self.lvalom).to_string(),
            self.spvalom.to_string(),
            om10(self.spvalom).to_string(),
            opt(self.lnp2om),
            opt(self.lnp2om.map(om10)),
            self.lpi.to_string(),
            self.lpiom.to_string(),
            self.mp.to_string(),
        ]
    }
}

fn xbar_i64(n: i64) -> i64 {
    xbar(n).to_i64().expect("fits for widths up to 64")
}

/// `(SPVALOM, LVALOM)` from each system's closed form.
pub(super) fn closed_form_range(m: &SystemModel) -> (i64, i64) {
    let n = m.width as i64;
    match m.kind {
        SystemKind::Ieee => {
            let (s, b) = (m.param as i64, ieee_bias(m.param));
            (2 - b - n + s, b)
        }
        SystemKind::Posit => {
            let top = (n - 2) << m.param;
            (-top, top)
        }
        SystemKind::Nonadj => (-xbar_i64(n - 1), xbar_i64(n - 1)),
        SystemKind::Morris => {
            let e = super::MorrisModel {
                width: m.width,
                g: m.param,
            }
            .max_exponent()
            .min(i64::MAX as u64) as i64;
            (-e, e)
        }
    }
}

fn is_power_of_two(x: &Dyadic) -> bool {
    x.mantissa().is_one()
}

/// Largest positive finite code of a binary system.
fn top_code(m: &SystemModel) -> u64 {
    match m.kind {
        SystemKind::Ieee => {
            let f = m.width - m.param - 1;
            (((1u64 << m.param) - 2) << f) | ((1u64 << f) - 1)
        }
        _ => (1u64 << (m.width - 1)) - 1,
    }
}

fn decode_finite(m: &SystemModel, bits: u64) -> Option<Dyadic> {
    match m.decode(bits)?.ok()? {
        SystemValue::Finite(x) => Some(x),
        _ => None,
    }
}

/// Walks down from the largest code until a value is not a power of two.
fn binary_lnp2om(m: &SystemModel) -> Option<i64> {
    (1..=top_code(m))
        .rev()
        .filter_map(|c| decode_finite(m, c))
        .find(|x| !is_power_of_two(x))
        .and_then(|x| x.floor_log2())
}

/// The largest exponent keeping 3 significand digits is `X̄_{N−3}`; below
/// 3 digits every significand is a power of two.
fn nonadj_lnp2om(width: u32) -> Option<i64> {
    (width >= 3).then(|| xbar_i64(width as i64 - 3))
}

/// Binary search over the positive codes, which decode in value order.
fn binary_represents(m: &SystemModel, x: &Dyadic) -> bool {
    let (mut lo, mut hi) = (1u64, top_code(m));
    while lo <= hi {
        let mid = lo + (hi - lo) / 2;
        let Some(v) = decode_finite(m, mid) else {
            return false;
        };
        match v.cmp(x) {
            std::cmp::Ordering::Equal => return true,
            std::cmp::Ordering::Less => lo = mid + 1,
            std::cmp::Ordering::Greater if mid == 0 => return false,
            std::cmp::Ordering::Greater => hi = mid - 1,
        }
    }
    false
}

fn represents(m: &SystemModel, x: &BigInt) -> bool {
    let x = Dyadic::from_int(x.clone());
    match m.kind {
        SystemKind::Nonadj => {
            encode_real(&x, m.width as usize)
                .and_then(|f| decode_real(&f))
                .ok()
                == Some(x)
        }
        _ => binary_represents(m, &x),
    }
}

/// Largest precise integer: the largest `x` such that every integer in
/// `0..=x` is representable.
///
/// Searches outward from 1, doubling until a pair `x − 1, x` fails and
/// then bisecting. Spacing only grows with magnitude in all of these
/// systems, so once a pair fails no later pair succeeds.
pub fn lpi_search(m: &SystemModel) -> Result<BigInt> {
    if m.kind == SystemKind::Morris {
        return Err(Error::Unsupported("Morris has no decoder".into()));
    }
    let pair = |x: &BigInt| represents(m, x) && represents(m, &(x - 1));
    if !represents(m, &BigInt::one()) {
        return Err(Error::Unsupported(format!(
            "{} at width {} cannot represent 1",
            m.kind, m.width
        )));
    }
    let mut lo = BigInt::one();
    let mut hi = BigInt::from(2);
    while pair(&hi) {
        lo = hi.clone();
        hi <<= 1;
    }
    while &hi - &lo > BigInt::one() {
        let mid: BigInt = (&lo + &hi) >> 1;
        if pair(&mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(lo)
}

pub fn merit(m: &SystemModel) -> Result<MeritRecord> {
    let (spvalom, lvalom) = closed_form_range(m);
    let (lnp2om, mp) = match m.kind {
        SystemKind::Ieee => (binary_lnp2om(m), (m.width - m.param) as u64),
        SystemKind::Posit => (binary_lnp2om(m), super::posit_pbom(m.width, m.param, 0)),
        SystemKind::Nonadj => (nonadj_lnp2om(m.width), m.width as u64),
        SystemKind::Morris => {
            return Err(Error::Unsupported("no factors of merit for Morris".into()))
        }
    };
    let lpi = lpi_search(m)?;
    let lpiom = (lpi.bits() - 1) as i64;
    Ok(MeritRecord {
        model: *m,
        lvalom,
        spvalom,
        lnp2om,
        lpi,
        lpiom,
        mp,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::comparator::enumerate::{largest_non_power_of_two, positive_values};

    fn model(k: SystemKind, n: u32) -> SystemModel {
        SystemModel::new(k, n).unwrap()
    }

    #[test]
    fn om10_examples() {
        assert_eq!(om10(0), 0);
        assert_eq!(om10(127), 38);
        assert_eq!(om10(-149), -45);
        assert_eq!(om10(1023), 307);
        assert_eq!(om10(10), 3);
        assert_eq!(om10(-10), -4);
    }

    #[test]
    fn merit_examples() {
        assert_eq!(merit(&model(SystemKind::Nonadj, 8)).unwrap().lvalom, 85);
        assert_eq!(merit(&model(SystemKind::Posit, 8)).unwrap().lvalom, 6);
        assert_eq!(merit(&model(SystemKind::Ieee, 8)).unwrap().mp, 5);
        let ieee32 = merit(&model(SystemKind::Ieee, 32)).unwrap();
        assert_eq!(
            (ieee32.spvalom, ieee32.lvalom, ieee32.lnp2om),
            (-149, 127, Some(127))
        );
        assert_eq!(ieee32.lpi, BigInt::from(1u64 << 24));
        assert_eq!(
            merit(&model(SystemKind::Posit, 32)).unwrap().lpi,
            BigInt::from(1u64 << 23)
        );
        assert_eq!(
            merit(&model(SystemKind::Nonadj, 32)).unwrap().lpi,
            BigInt::from(44_739_242)
        );
        assert_eq!(
            merit(&model(SystemKind::Ieee, 64)).unwrap().lpi,
            BigInt::from(1u64 << 53)
        );
    }

    /// Closed forms against exhaustive decoding.
    #[test]
    fn closed_forms_match_enumeration() {
        for (k, n) in [
            (SystemKind::Ieee, 8),
            (SystemKind::Ieee, 12),
            (SystemKind::Ieee, 16),
            (SystemKind::Posit, 8),
            (SystemKind::Posit, 16),
            (SystemKind::Nonadj, 4),
            (SystemKind::Nonadj, 6),
            (SystemKind::Nonadj, 8),
            (SystemKind::Nonadj, 10),
        ] {
            let m = model(k, n);
            let v = positive_values(&m).unwrap();
            let r = merit(&m).unwrap();
            let what = format!("{k} {n}");
            assert_eq!(v.last().unwrap().floor_log2(), Some(r.lvalom), "{what}");
            assert_eq!(v.first().unwrap().floor_log2(), Some(r.spvalom), "{what}");
            assert_eq!(
                largest_non_power_of_two(&v).and_then(|x| x.floor_log2()),
                r.lnp2om,
                "{what}"
            );
            // LPI by walking integers one at a time.
            let mut x = 1i64;
            while v.binary_search(&Dyadic::from(x + 1)).is_ok() {
                x += 1;
            }
            assert_eq!(r.lpi, BigInt::from(x), "{what}");
        }
    }

    /// The doubling search agrees with a plain walk where the walk is cheap.
    #[test]
    fn lpi_search_matches_linear_walk() {
        for n in [12, 14, 16, 18, 20] {
            let m = model(SystemKind::Nonadj, n);
            let mut x = BigInt::one();
            while represents(&m, &(&x + 1)) {
                x += 1;
            }
            assert_eq!(lpi_search(&m).unwrap(), x, "NONADJ {n}");
        }
    }

    #[test]
    fn csv_layout() {
        let r = merit(&model(SystemKind::Nonadj, 8)).unwrap();
        assert_eq!(
            r.csv_record(),
            ["NONADJ", "8", "85", "25", "-85", "-26", "21", "6", "22", "4", "8"].map(String::from)
        );
        assert!(merit(&model(SystemKind::Morris, 36)).is_err());
    }
}
