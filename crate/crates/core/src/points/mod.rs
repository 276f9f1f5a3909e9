//! Points, point classes and point signatures.
//!
//! A point is a maximal run of two or more nonzero trits. Its placement
//! (touching the left edge, the right edge, both, or neither) and length
//! form its class, and the class decides its type:
//!
//! | classes              | type | mapping |
//! |----------------------|------|---------|
//! | L2, M2, R2           | I    | none    |
//! | L3, L4               | I    | PCM1    |
//! | M3, M4, R3, R4       | II   | PCM2    |
//! | L5, L6               | II   | PCM3    |
//! | R5, R6               | II   | PCM4    |
//! | L7, L8               | II   | PCM5    |
//!
//! Type II classes only count in (sub)fields wider than 8 trits. Any other
//! class is untyped.

mod entity;
mod pcm;

use std::fmt;

use crate::trit::TritField;

pub use entity::{
    classify, decode_typed, encode_entity, encode_typed, is_complex_width, DecodedEntity, EntityTag,
};
pub use pcm::{
    apply_pcm, apply_pcm1, invert_pcm, invert_pcm1, pcm5_domain_size, PCM1_TABLE, PCM3_TABLE,
};

/// Fields at most this wide carry no type II points.
pub const TYPE_II_MIN_EXCLUSIVE: usize = 8;

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum Placement {
    Left,
    Middle,
    Right,
    /// Spans the whole field.
    Full,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub start: usize,
    pub len: usize,
    pub placement: Placement,
}

impl Point {
    pub fn end(&self) -> usize {
        self.start + self.len
    }

    pub fn class(&self) -> PointClass {
        PointClass {
            placement: self.placement,
            len: self.len,
        }
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointClass {
    pub placement: Placement,
    pub len: usize,
}

impl fmt::Display for PointClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = match self.placement {
            Placement::Left => "L",
            Placement::Middle => "M",
            Placement::Right => "R",
            Placement::Full => "F",
        };
        write!(f, "{p}{}", self.len)
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum PointType {
    I,
    II,
}

/// Type and mapping number (0 for none) of a class inside a field of
/// `width` trits, or `None` when the class is untyped there.
pub fn class_info(class: PointClass, width: usize) -> Option<(PointType, u8)> {
    use Placement::*;
    let wide = width > TYPE_II_MIN_EXCLUSIVE;
    match (class.placement, class.len) {
        (Left | Middle | Right, 2) => Some((PointType::I, 0)),
        (Left, 3 | 4) => Some((PointType::I, 1)),
        (Middle | Right, 3 | 4) if wide => Some((PointType::II, 2)),
        (Left, 5 | 6) if wide => Some((PointType::II, 3)),
        (Right, 5 | 6) if wide => Some((PointType::II, 4)),
        (Left, 7 | 8) if wide => Some((PointType::II, 5)),
        _ => None,
    }
}

/// Maximal nonzero runs of length at least 2, left to right.
pub fn find_points(f: &TritField) -> Vec<Point> {
    let d = f.digits();
    let w = d.len();
    let mut out = Vec::new();
    let mut i = 0;
    while i < w {
        if d[i].is_zero() {
            i += 1;
            continue;
        }
        let start = i;
        while i < w && d[i].is_nonzero() {
            i += 1;
        }
        let len = i - start;
        if len >= 2 {
            let placement = match (start == 0, i == w) {
                (true, true) => Placement::Full,
                (true, false) => Placement::Left,
                (false, true) => Placement::Right,
                (false, false) => Placement::Middle,
            };
            out.push(Point {
                start,
                len,
                placement,
            });
        }
    }
    out
}

/// One entry of a point signature.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash)]
pub enum SigEntry {
    /// The field is all zeros (`-1`).
    AllZero,
    /// No point, not all zeros (`0`).
    NoPoint,
    TypeI,
    TypeII,
    /// A point spanning its whole (sub)field (`∞`).
    Full,
    /// A point whose class has no type, or points that do not split evenly.
    Untyped,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PointSignature(pub Vec<SigEntry>);

impl PointSignature {
    pub fn entries(&self) -> &[SigEntry] {
        &self.0
    }
}

impl fmt::Display for PointSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self
            .0
            .iter()
            .map(|e| match e {
                SigEntry::AllZero => "-1",
                SigEntry::NoPoint => "0",
                SigEntry::TypeI => "1",
                SigEntry::TypeII => "2",
                SigEntry::Full => "inf",
                SigEntry::Untyped => "?",
            })
            .collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

fn single_entry(f: &TritField, p: &Point) -> SigEntry {
    if p.placement == Placement::Full {
        return SigEntry::Full;
    }
    match class_info(p.class(), f.width()) {
        Some((PointType::I, _)) => SigEntry::TypeI,
        Some((PointType::II, _)) => SigEntry::TypeII,
        None => SigEntry::Untyped,
    }
}

/// Splits a field holding `k > 1` points into equal halves, recursively.
/// Every entry is untyped unless the width is even, no point crosses the
/// cut, and each half holds exactly `k / 2` points.
fn split_entries(f: &TritField, k: usize) -> Vec<SigEntry> {
    if k == 1 {
        let p = find_points(f);
        return vec![single_entry(f, &p[0])];
    }
    let bad = vec![SigEntry::Untyped; k];
    if k % 2 != 0 {
        return bad;
    }
    let Some((l, r)) = f.halves() else { return bad };
    let (pl, pr) = (find_points(&l), find_points(&r));
    if pl.len() != k / 2 || pr.len() != k / 2 {
        return bad;
    }
    // A run crossing the cut would show up as one point too many.
    let cut = f.width() / 2;
    if find_points(f)
        .iter()
        .any(|p| p.start < cut && p.end() > cut)
    {
        return bad;
    }
    let mut out = split_entries(&l, k / 2);
    out.extend(split_entries(&r, k / 2));
    out
}

pub fn point_signature(f: &TritField) -> PointSignature {
    if f.is_all_zero() {
        return PointSignature(vec![SigEntry::AllZero]);
    }
    let pts = find_points(f);
    match pts.len() {
        0 => PointSignature(vec![SigEntry::NoPoint]),
        k => PointSignature(split_entries(f, k)),
    }
}
