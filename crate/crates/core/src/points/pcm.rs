//! Point correction mappings.
//!
//! Each `apply_pcm` rewrites a pure-real field into one carrying a point of
//! a recognisable class; `invert_pcm` undoes it. Domains are purely
//! syntactic, and every inverse re-applies its forward map to confirm the
//! field really is in the image.
//!
//! | map  | input shape                      | rewrite                          | result |
//! |------|----------------------------------|----------------------------------|--------|
//! | PCM1 | no point, `p 0 t ...`            | `0t` by the table below          | L3, L4 |
//! | PCM2 | one M2 point `0 p1 p2 0`         | trailing 0 becomes a copy of p2  | M3, M4, R3, R4 |
//! | PCM3 | one L2 point `p1 p2 0 x1 x2`     | `0 x1 x2` by [`PCM3_TABLE`]      | L5, L6 |
//! | PCM4 | one R2 point `x1 x2 0 p1 p2`     | mirror image of PCM3             | R5, R6 |
//! | PCM5 | no point, `p 0 x1 .. x5`         | `0 x1..x5` to six nonzero trits  | L7, L8 |
//!
//! PCM1 uses the same table for both signs of the leading digit:
//! `01 -> T1`, `00 -> TT`, `0T -> 1T`. Neither `111` nor `T11` is ever
//! produced, which leaves both prefixes free for the infinities.

use std::sync::OnceLock;

use super::{find_points, Placement};
use crate::error::{Error, Result};
use crate::trit::{Trit, TritField};

use Trit::{Neg as T, Pos as P, Zero as O};

/// `(x1, x2)` after the leading digit, and its replacement.
pub const PCM1_TABLE: [([Trit; 2], [Trit; 2]); 3] =
    [([O, P], [T, P]), ([O, O], [T, T]), ([O, T], [P, T])];

/// `(0, x1, x2)` and the zero-free triple replacing it.
pub const PCM3_TABLE: [([Trit; 3], [Trit; 3]); 5] = [
    ([O, O, O], [P, P, P]),
    ([O, O, P], [P, P, T]),
    ([O, O, T], [P, T, P]),
    ([O, P, O], [P, T, T]),
    ([O, T, O], [T, P, P]),
];

fn shape(pcm: u8, reason: &'static str) -> Error {
    Error::PcmShape { pcm, reason }
}

fn lookup<const K: usize>(table: &[([Trit; K], [Trit; K])], key: &[Trit]) -> Option<[Trit; K]> {
    table
        .iter()
        .find(|(k, _)| k.as_slice() == key)
        .map(|(_, v)| *v)
}

fn rlookup<const K: usize>(table: &[([Trit; K], [Trit; K])], key: &[Trit]) -> Option<[Trit; K]> {
    table
        .iter()
        .find(|(_, v)| v.as_slice() == key)
        .map(|(k, _)| *k)
}

fn with(f: &TritField, at: usize, digits: &[Trit]) -> TritField {
    let mut d = f.digits().to_vec();
    d[at..at + digits.len()].copy_from_slice(digits);
    TritField::from_vec_unchecked(d)
}

/// `p 0 ...` with no point anywhere.
fn exponent_zero_shape(f: &TritField, pcm: u8, min_width: usize) -> Result<()> {
    if f.width() < min_width {
        return Err(shape(pcm, "field too short"));
    }
    if f[0].is_zero() {
        return Err(shape(pcm, "leading digit is zero"));
    }
    if !find_points(f).is_empty() {
        return Err(shape(pcm, "field already has a point"));
    }
    Ok(())
}

/// An anchored point that happens to fill the whole field still counts.
fn placed(actual: Placement, want: Placement) -> bool {
    actual == want
        || (actual == Placement::Full && matches!(want, Placement::Left | Placement::Right))
}

fn single_point(f: &TritField, pcm: u8, placement: Placement, len: usize) -> Result<usize> {
    match find_points(f).as_slice() {
        [p] if placed(p.placement, placement) && p.len == len => Ok(p.start),
        _ => Err(shape(
            pcm,
            "field does not hold exactly one point of the expected class",
        )),
    }
}

fn single_point_in(f: &TritField, pcm: u8, placement: Placement, lens: &[usize]) -> Result<usize> {
    match find_points(f).as_slice() {
        [p] if placed(p.placement, placement) && lens.contains(&p.len) => Ok(p.start),
        _ => Err(shape(
            pcm,
            "field does not hold exactly one point of the expected class",
        )),
    }
}

fn confirm(pcm: u8, original: &TritField, candidate: TritField) -> Result<TritField> {
    if apply_pcm(pcm, &candidate).ok().as_ref() == Some(original) {
        Ok(candidate)
    } else {
        Err(shape(pcm, "field is not in the image of the mapping"))
    }
}

pub fn apply_pcm1(f: &TritField) -> Result<TritField> {
    exponent_zero_shape(f, 1, 3)?;
    let y = lookup(&PCM1_TABLE, &f.digits()[1..3]).expect("second digit is zero");
    Ok(with(f, 1, &y))
}

pub fn invert_pcm1(f: &TritField) -> Result<TritField> {
    single_point_in(f, 1, Placement::Left, &[3, 4])?;
    let x =
        rlookup(&PCM1_TABLE, &f.digits()[1..3]).ok_or(shape(1, "digits not in the table image"))?;
    confirm(1, f, with(f, 1, &x))
}

fn apply_pcm2(f: &TritField) -> Result<TritField> {
    let s = single_point(f, 2, Placement::Middle, 2)?;
    let p2 = f[s + 1];
    Ok(with(f, s + 2, &[p2]))
}

fn invert_pcm2(f: &TritField) -> Result<TritField> {
    let s = match find_points(f).as_slice() {
        [p] if p.len >= 3
            && p.len <= 4
            && matches!(p.placement, Placement::Middle | Placement::Right) =>
        {
            p.start
        }
        _ => {
            return Err(shape(
                2,
                "field does not hold exactly one point of the expected class",
            ))
        }
    };
    if f[s + 2] != f[s + 1] {
        return Err(shape(
            2,
            "inserted digit is not a copy of the point's last digit",
        ));
    }
    confirm(2, f, with(f, s + 2, &[O]))
}

fn apply_pcm3(f: &TritField) -> Result<TritField> {
    if f.width() < 5 {
        return Err(shape(3, "field too short"));
    }
    single_point(f, 3, Placement::Left, 2)?;
    let y = lookup(&PCM3_TABLE, &f.digits()[2..5])
        .ok_or(shape(3, "digits after the point are adjacent"))?;
    Ok(with(f, 2, &y))
}

fn invert_pcm3(f: &TritField) -> Result<TritField> {
    if f.width() < 5 {
        return Err(shape(3, "field too short"));
    }
    single_point_in(f, 3, Placement::Left, &[5, 6])?;
    let x =
        rlookup(&PCM3_TABLE, &f.digits()[2..5]).ok_or(shape(3, "digits not in the table image"))?;
    confirm(3, f, with(f, 2, &x))
}

fn mirrored(f: &TritField) -> TritField {
    TritField::from_vec_unchecked(f.digits().iter().rev().copied().collect())
}

fn apply_pcm4(f: &TritField) -> Result<TritField> {
    if f.width() < 5 {
        return Err(shape(4, "field too short"));
    }
    single_point(f, 4, Placement::Right, 2)?;
    apply_pcm3(&mirrored(f))
        .map(|g| mirrored(&g))
        .map_err(|_| shape(4, "digits before the point are adjacent"))
}

fn invert_pcm4(f: &TritField) -> Result<TritField> {
    if f.width() < 5 {
        return Err(shape(4, "field too short"));
    }
    single_point_in(f, 4, Placement::Right, &[5, 6])?;
    invert_pcm3(&mirrored(f))
        .map(|g| mirrored(&g))
        .map_err(|_| shape(4, "digits not in the table image"))
}

struct Pcm5Tables {
    /// Nonadjacent 5-strings in lexicographic order (`T < 0 < 1`).
    naf5: Vec<[Trit; 5]>,
}

fn pcm5_tables() -> &'static Pcm5Tables {
    static TABLES: OnceLock<Pcm5Tables> = OnceLock::new();
    TABLES.get_or_init(|| {
        let naf5 = TritField::all_of_width(5)
            .filter(|f| find_points(f).is_empty())
            .map(|f| f.digits().try_into().unwrap())
            .collect();
        Pcm5Tables { naf5 }
    })
}

/// The `i`-th zero-free 6-tuple in lexicographic order (`T < 1`).
fn zero_free(i: usize) -> [Trit; 6] {
    std::array::from_fn(|j| if (i >> (5 - j)) & 1 == 1 { P } else { T })
}

fn zero_free_index(y: &[Trit]) -> Option<usize> {
    y.iter().try_fold(0usize, |acc, &t| match t {
        P => Some(2 * acc + 1),
        T => Some(2 * acc),
        O => None,
    })
}

/// Number of nonadjacent 5-strings, the size of the PCM5 domain window.
pub fn pcm5_domain_size() -> usize {
    pcm5_tables().naf5.len()
}

fn apply_pcm5(f: &TritField) -> Result<TritField> {
    exponent_zero_shape(f, 5, 7)?;
    let t = pcm5_tables();
    let i = t
        .naf5
        .iter()
        .position(|x| x.as_slice() == &f.digits()[2..7])
        .expect("no point means nonadjacent");
    Ok(with(f, 1, &zero_free(i)))
}

fn invert_pcm5(f: &TritField) -> Result<TritField> {
    if f.width() < 7 {
        return Err(shape(5, "field too short"));
    }
    single_point_in(f, 5, Placement::Left, &[7, 8])?;
    let i = zero_free_index(&f.digits()[1..7]).expect("inside the point");
    let x = pcm5_tables()
        .naf5
        .get(i)
        .ok_or(shape(5, "digits not in the table image"))?;
    let mut w = vec![O];
    w.extend_from_slice(x);
    confirm(5, f, with(f, 1, &w))
}

/// PCM1 through PCM5.
pub fn apply_pcm(k: u8, f: &TritField) -> Result<TritField> {
    match k {
        1 => apply_pcm1(f),
        2 => apply_pcm2(f),
        3 => apply_pcm3(f),
        4 => apply_pcm4(f),
        5 => apply_pcm5(f),
        _ => Err(Error::InvalidArgument(format!("no mapping PCM{k}"))),
    }
}

pub fn invert_pcm(k: u8, f: &TritField) -> Result<TritField> {
    match k {
        1 => invert_pcm1(f),
        2 => invert_pcm2(f),
        3 => invert_pcm3(f),
        4 => invert_pcm4(f),
        5 => invert_pcm5(f),
        _ => Err(Error::InvalidArgument(format!("no mapping PCM{k}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::points::{class_info, PointType};
    use crate::trit::parse_trits;
    use std::collections::HashSet;

    fn f(s: &str) -> TritField {
        parse_trits(s).unwrap()
    }

    #[test]
    fn pcm1_table_rows() {
        assert_eq!(apply_pcm1(&f("1010000")).unwrap().render(), "1T10000");
        assert_eq!(apply_pcm1(&f("1000000")).unwrap().render(), "1TT0000");
        assert_eq!(apply_pcm1(&f("10T0000")).unwrap().render(), "11T0000");
        assert_eq!(apply_pcm1(&f("T0T0000")).unwrap().render(), "T1T0000");
        assert_eq!(apply_pcm1(&f("T001000")).unwrap().render(), "TTT1000");
        assert!(apply_pcm1(&f("0100000")).is_err());
        assert!(apply_pcm1(&f("1100000")).is_err());
    }

    #[test]
    fn pcm1_never_makes_infinity_prefixes() {
        for x in TritField::all_of_width(6) {
            if let Ok(y) = apply_pcm1(&x) {
                let head = y.render()[..3].to_string();
                assert!(head != "111" && head != "T11", "{x}");
            }
        }
    }

    #[test]
    fn pcm_examples() {
        assert_eq!(
            apply_pcm(2, &f("00110T0000")).unwrap().render(),
            "00111T0000"
        );
        assert_eq!(
            apply_pcm(3, &f("1T00T00001")).unwrap().render(),
            "1T1T100001"
        );
        assert_eq!(
            apply_pcm(4, &f("100000T011")).unwrap().render(),
            "1000011T11"
        );
        assert_eq!(pcm5_domain_size(), 43);
    }

    /// Every mapping round-trips on its whole domain and is injective, and
    /// the inverse accepts nothing outside the image. Anchored points that
    /// fill the whole field are expected only at width 8.
    fn exhaustive(width: usize) {
        for k in 1..=5u8 {
            let mut images = HashSet::new();
            for x in TritField::all_of_width(width) {
                let Ok(y) = apply_pcm(k, &x) else { continue };
                assert_eq!(invert_pcm(k, &y).unwrap(), x, "PCM{k} {x}");
                assert!(images.insert(y.clone()), "PCM{k} collides at {y}");
                let pts = find_points(&y);
                assert_eq!(pts.len(), 1, "PCM{k} {y}");
                if pts[0].placement == Placement::Full {
                    assert_eq!(width, 8);
                    continue;
                }
                let (ty, pcm) = class_info(pts[0].class(), 16).unwrap();
                assert_eq!(pcm, k);
                assert_eq!(ty, if k == 1 { PointType::I } else { PointType::II });
            }
            assert!(!images.is_empty());
            for y in TritField::all_of_width(width) {
                if let Ok(x) = invert_pcm(k, &y) {
                    assert!(images.contains(&y), "PCM{k} inverse accepts {y} -> {x}");
                }
            }
        }
    }

    #[test]
    fn exhaustive_width_8() {
        exhaustive(8);
    }

    #[test]
    fn exhaustive_width_9() {
        exhaustive(9);
    }
}
