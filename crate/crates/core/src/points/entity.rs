use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use super::pcm::{apply_pcm, apply_pcm1, invert_pcm};
use super::{
    class_info, find_points, point_signature, Placement, PointType, SigEntry, TYPE_II_MIN_EXCLUSIVE,
};
use crate::error::{Error, Result};
use crate::naf::recode_oracle;
use crate::realcodec::{decode_real, encode_real};
use crate::trit::{parse_trits, Dyadic, Trit, TritField};

/// Everything a field can mean.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecodedEntity {
    Zero,
    Real(Dyadic),
    PlusInf,
    MinusInf,
    Integer(BigInt),
    /// One flag per trit, `1` true and `T` false.
    Boolean(Vec<bool>),
    Complex {
        re: Dyadic,
        im: Dyadic,
    },
    ComplexInf,
    Vec2([Dyadic; 2]),
    Vec4([Dyadic; 4]),
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum EntityTag {
    Zero,
    Real,
    PlusInf,
    MinusInf,
    Integer,
    Boolean,
    Complex,
    ComplexInf,
    Vec2,
    Vec4,
}

impl EntityTag {
    pub fn as_str(self) -> &'static str {
        match self {
            EntityTag::Zero => "zero",
            EntityTag::Real => "real",
            EntityTag::PlusInf => "+inf",
            EntityTag::MinusInf => "-inf",
            EntityTag::Integer => "integer",
            EntityTag::Boolean => "boolean",
            EntityTag::Complex => "complex",
            EntityTag::ComplexInf => "complex-inf",
            EntityTag::Vec2 => "vec2",
            EntityTag::Vec4 => "vec4",
        }
    }
}

impl fmt::Display for EntityTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl DecodedEntity {
    pub fn tag(&self) -> EntityTag {
        match self {
            DecodedEntity::Zero => EntityTag::Zero,
            DecodedEntity::Real(_) => EntityTag::Real,
            DecodedEntity::PlusInf => EntityTag::PlusInf,
            DecodedEntity::MinusInf => EntityTag::MinusInf,
            DecodedEntity::Integer(_) => EntityTag::Integer,
            DecodedEntity::Boolean(_) => EntityTag::Boolean,
            DecodedEntity::Complex { .. } => EntityTag::Complex,
            DecodedEntity::ComplexInf => EntityTag::ComplexInf,
            DecodedEntity::Vec2(_) => EntityTag::Vec2,
            DecodedEntity::Vec4(_) => EntityTag::Vec4,
        }
    }

    /// Infinities match a whole family of fields, not one canonical field.
    fn is_escaped(&self) -> bool {
        matches!(
            self,
            DecodedEntity::PlusInf | DecodedEntity::MinusInf | DecodedEntity::ComplexInf
        )
    }

    /// Folds the several spellings of zero and of real numbers together.
    fn normalised(&self) -> DecodedEntity {
        match self {
            DecodedEntity::Integer(v) if v.is_zero() => DecodedEntity::Zero,
            DecodedEntity::Real(x) if x.is_zero() => DecodedEntity::Zero,
            DecodedEntity::Complex { re, im } if im.is_zero() => {
                if re.is_zero() {
                    DecodedEntity::Zero
                } else {
                    DecodedEntity::Real(re.clone())
                }
            }
            e => e.clone(),
        }
    }
}

impl fmt::Display for DecodedEntity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DecodedEntity::Zero => f.write_str("0"),
            DecodedEntity::Real(x) => f.write_str(&x.describe()),
            DecodedEntity::PlusInf => f.write_str("+inf"),
            DecodedEntity::MinusInf => f.write_str("-inf"),
            DecodedEntity::Integer(v) => write!(f, "integer {v}"),
            DecodedEntity::Boolean(b) => {
                let s: String = b.iter().map(|&t| if t { '1' } else { '0' }).collect();
                write!(f, "boolean {s}")
            }
            DecodedEntity::Complex { re, im } => {
                write!(f, "complex {} + {} i", re.describe(), im.describe())
            }
            DecodedEntity::ComplexInf => f.write_str("complex infinity"),
            DecodedEntity::Vec2([a, b]) => write!(f, "vec2 ({}, {})", a.describe(), b.describe()),
            DecodedEntity::Vec4([a, b, c, d]) => write!(
                f,
                "vec4 ({}, {}, {}, {})",
                a.describe(),
                b.describe(),
                c.describe(),
                d.describe()
            ),
        }
    }
}

/// Even widths whose halves can hold type II points.
pub fn is_complex_width(n: usize) -> bool {
    n % 2 == 0 && n / 2 > TYPE_II_MIN_EXCLUSIVE
}

/// Pure-real encoding of nonzero `x`, corrected to carry one point of the
/// requested type.
pub fn encode_typed(x: &Dyadic, width: usize, ty: PointType) -> Result<TritField> {
    let pure = encode_real(x, width)?;
    let pts = find_points(&pure);
    match ty {
        PointType::I if pts.is_empty() => apply_pcm1(&pure),
        PointType::I => Ok(pure),
        PointType::II => {
            if width <= TYPE_II_MIN_EXCLUSIVE {
                return Err(Error::Unsupported(format!(
                    "type II points need width above 8, got {width}"
                )));
            }
            let k = match pts.first().map(|p| p.placement) {
                None => 5,
                Some(Placement::Left) => 3,
                Some(Placement::Middle) => 2,
                Some(Placement::Right) => 4,
                Some(Placement::Full) => unreachable!("pure reals wider than 2 have no full point"),
            };
            apply_pcm(k, &pure)
        }
    }
}

/// Value and point type of a field holding one typed point.
pub fn decode_typed(f: &TritField) -> Result<(Dyadic, PointType)> {
    let pts = find_points(f);
    let [p] = pts.as_slice() else {
        return Err(Error::NoAssignedMeaning);
    };
    let (ty, pcm) = class_info(p.class(), f.width()).ok_or(Error::NoAssignedMeaning)?;
    let pure = if pcm == 0 {
        f.clone()
    } else {
        invert_pcm(pcm, f).map_err(|_| Error::NoAssignedMeaning)?
    };
    let x = decode_real(&pure).map_err(|_| Error::NoAssignedMeaning)?;
    Ok((x, ty))
}

fn decode_as(f: &TritField, want: PointType) -> Result<Dyadic> {
    match decode_typed(f)? {
        (x, ty) if ty == want => Ok(x),
        _ => Err(Error::NoAssignedMeaning),
    }
}

fn starts_with(f: &TritField, prefix: &str) -> bool {
    f.render().starts_with(prefix)
}

fn infinity(f: &TritField) -> Option<DecodedEntity> {
    let pts = find_points(f);
    let [p] = pts.as_slice() else { return None };
    if p.placement != Placement::Left || !(3..=4).contains(&p.len) {
        return None;
    }
    if starts_with(f, "111") {
        Some(DecodedEntity::PlusInf)
    } else if starts_with(f, "T11") {
        Some(DecodedEntity::MinusInf)
    } else {
        None
    }
}

fn classify_raw(f: &TritField) -> Result<DecodedEntity> {
    use SigEntry::*;
    let n = f.width();
    if f.is_all_zero() {
        return Ok(DecodedEntity::Zero);
    }
    let pts = find_points(f);
    if pts.is_empty() {
        return Ok(DecodedEntity::Integer(f.int_value()));
    }
    if pts.len() == 2 && is_complex_width(n) && starts_with(f, "111") {
        return Ok(DecodedEntity::ComplexInf);
    }
    let sig = point_signature(f);
    let quarters = || -> Result<[Dyadic; 4]> {
        let (l, r) = f.halves().unwrap();
        let (a, b) = l.halves().unwrap();
        let (c, d) = r.halves().unwrap();
        Ok([
            decode_as(&a, PointType::I)?,
            decode_as(&b, PointType::I)?,
            decode_as(&c, PointType::I)?,
            decode_as(&d, PointType::I)?,
        ])
    };
    match sig.entries() {
        [Full] => Ok(DecodedEntity::Boolean(
            f.digits().iter().map(|&t| t == Trit::Pos).collect(),
        )),
        [TypeI] => match infinity(f) {
            Some(inf) => Ok(inf),
            None => Ok(DecodedEntity::Real(decode_as(f, PointType::I)?)),
        },
        [TypeII] => Ok(DecodedEntity::Complex {
            re: Dyadic::zero(),
            im: decode_as(f, PointType::II)?,
        }),
        [TypeI, TypeII] => {
            let (l, r) = f.halves().unwrap();
            Ok(DecodedEntity::Complex {
                re: decode_as(&l, PointType::I)?,
                im: decode_as(&r, PointType::II)?,
            })
        }
        [TypeI, TypeI] => {
            let (l, r) = f.halves().unwrap();
            Ok(DecodedEntity::Vec2([
                decode_as(&l, PointType::I)?,
                decode_as(&r, PointType::I)?,
            ]))
        }
        [TypeI, TypeI, TypeI, TypeI] => Ok(DecodedEntity::Vec4(quarters()?)),
        [TypeI, TypeII, TypeI, TypeII] | [TypeI, TypeI, TypeI, TypeII] => {
            Err(Error::ReservedSignature(sig.to_string()))
        }
        _ => Err(Error::NoAssignedMeaning),
    }
}

/// Reads a field under the point-signature rules.
///
/// Apart from the infinities, a field only has a meaning when it is exactly
/// the encoding of what it decodes to; anything else is
/// [`Error::NoAssignedMeaning`].
pub fn classify(f: &TritField) -> Result<DecodedEntity> {
    let e = classify_raw(f)?;
    if e.is_escaped() {
        return Ok(e);
    }
    match build(&e, f.width()) {
        Ok(g) if &g == f => Ok(e),
        _ => Err(Error::NoAssignedMeaning),
    }
}

fn no_form(e: &DecodedEntity, width: usize) -> Error {
    Error::NoPointForm {
        entity: e.to_string(),
        width,
    }
}

fn finite_nonzero(xs: &[Dyadic]) -> Result<()> {
    if xs.iter().any(|x| x.is_zero()) {
        return Err(Error::VectorComponent);
    }
    Ok(())
}

fn escaped(width: usize, prefix: &str) -> Result<TritField> {
    if width < 3 {
        return Err(Error::Unsupported(format!(
            "infinities need width 3 or more, got {width}"
        )));
    }
    parse_trits(&format!("{prefix}{}", "0".repeat(width - 3)))
}

fn build(e: &DecodedEntity, n: usize) -> Result<TritField> {
    match e {
        DecodedEntity::Zero => Ok(TritField::zeros(n)),
        DecodedEntity::Integer(v) => recode_oracle(v).to_field(n).map_err(|_| Error::OutOfRange {
            value: v.to_string(),
            width: n,
        }),
        DecodedEntity::Real(x) if x.is_zero() => Ok(TritField::zeros(n)),
        DecodedEntity::Real(x) => encode_typed(x, n, PointType::I),
        DecodedEntity::PlusInf => escaped(n, "111"),
        DecodedEntity::MinusInf => escaped(n, "T11"),
        DecodedEntity::Boolean(bits) => {
            if bits.len() != n {
                return Err(Error::InvalidArgument(format!(
                    "{} flags for a width-{n} field",
                    bits.len()
                )));
            }
            TritField::new(
                bits.iter()
                    .map(|&b| if b { Trit::Pos } else { Trit::Neg })
                    .collect(),
            )
        }
        DecodedEntity::Complex { re, im } => match (re.is_zero(), im.is_zero()) {
            (true, true) => Ok(TritField::zeros(n)),
            (false, true) => encode_typed(re, n, PointType::I),
            (true, false) => encode_typed(im, n, PointType::II),
            (false, false) => {
                if !is_complex_width(n) {
                    return Err(Error::Unsupported(format!(
                        "complex forms need an even width above 16, got {n}"
                    )));
                }
                let h = n / 2;
                Ok(TritField::concat(&[
                    encode_typed(re, h, PointType::I)?,
                    encode_typed(im, h, PointType::II)?,
                ]))
            }
        },
        DecodedEntity::ComplexInf => {
            if !is_complex_width(n) {
                return Err(Error::Unsupported(format!(
                    "complex forms need an even width above 16, got {n}"
                )));
            }
            let h = n / 2;
            parse_trits(&format!("111{}{}11", "0".repeat(h - 3), "0".repeat(h - 2)))
        }
        DecodedEntity::Vec2(xs) => {
            finite_nonzero(xs)?;
            if n % 2 != 0 {
                return Err(Error::InvalidArgument(format!(
                    "two-vectors need an even width, got {n}"
                )));
            }
            let parts = xs
                .iter()
                .map(|x| encode_typed(x, n / 2, PointType::I))
                .collect::<Result<Vec<_>>>()?;
            Ok(TritField::concat(&parts))
        }
        DecodedEntity::Vec4(xs) => {
            finite_nonzero(xs)?;
            if n % 4 != 0 {
                return Err(Error::InvalidArgument(format!(
                    "four-vectors need a width divisible by 4, got {n}"
                )));
            }
            let parts = xs
                .iter()
                .map(|x| encode_typed(x, n / 4, PointType::I))
                .collect::<Result<Vec<_>>>()?;
            Ok(TritField::concat(&parts))
        }
    }
}

/// Encodes an entity at width `n`.
///
/// The result always classifies back to `e` (with zero and real values
/// folded together as usual); otherwise the entity has no form at this
/// width and [`Error::NoPointForm`] is returned.
pub fn encode_entity(e: &DecodedEntity, n: usize) -> Result<TritField> {
    if n == 0 {
        return Err(Error::EmptyField);
    }
    let f = build(e, n)?;
    match classify(&f) {
        Ok(back) if back.normalised() == e.normalised() => Ok(f),
        _ => Err(no_form(e, n)),
    }
}
