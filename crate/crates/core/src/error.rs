use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
///
/// [`Error::code`] gives a short stable identifier used by the command-line
/// front end in its `error: <code>: <message>` lines.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty trit string")]
    EmptyField,

    #[error("invalid trit character {ch:?} at position {pos}")]
    InvalidTrit { ch: char, pos: usize },

    #[error("binary field is truncated: {0}")]
    Truncated(&'static str),

    #[error("binary field is malformed: {0}")]
    MalformedBinary(&'static str),

    #[error("field width {0} does not fit the binary width prefix")]
    WidthOverflow(usize),

    #[error("invalid number {0:?}")]
    InvalidNumber(String),

    #[error("{0} is not a dyadic rational")]
    NotDyadic(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("zero has no pure-real form")]
    ZeroValue,

    #[error("not a pure-real form: {0}")]
    MalformedReal(&'static str),

    #[error("value {value} is not exactly representable at width {width}")]
    NotRepresentable { value: String, width: usize },

    #[error("value {value} is outside the dynamic range at width {width}")]
    OutOfRange { value: String, width: usize },

    #[error("point correction mapping PCM{pcm} does not apply: {reason}")]
    PcmShape { pcm: u8, reason: &'static str },

    #[error("{entity} has no point-layer form at width {width}")]
    NoPointForm { entity: String, width: usize },

    #[error("field has no assigned meaning")]
    NoAssignedMeaning,

    #[error("point signature {0} is reserved and has no codec")]
    ReservedSignature(String),

    #[error("vector components must be finite and nonzero")]
    VectorComponent,

    #[error("unsupported: {0}")]
    Unsupported(String),
}

impl Error {
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyField | Error::InvalidTrit { .. } => "parse",
            Error::Truncated(_) | Error::MalformedBinary(_) | Error::WidthOverflow(_) => "binary",
            Error::InvalidNumber(_) | Error::NotDyadic(_) => "number",
            Error::InvalidArgument(_) => "argument",
            Error::ZeroValue => "zero",
            Error::MalformedReal(_) => "malformed",
            Error::NotRepresentable { .. } => "not-representable",
            Error::OutOfRange { .. } => "out-of-range",
            Error::PcmShape { .. } => "pcm-shape",
            Error::NoPointForm { .. } => "no-form",
            Error::NoAssignedMeaning => "no-meaning",
            Error::ReservedSignature(_) => "reserved",
            Error::VectorComponent => "vector-component",
            Error::Unsupported(_) => "unsupported",
        }
    }
}
