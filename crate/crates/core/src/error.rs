use thiserror::Error;

use crate::meander::Arc;
use crate::operad::SlotKind;

/// Errors raised anywhere in the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {at}: {msg}")]
    Syntax { at: usize, msg: String },

    #[error("length mismatch: {types} point types but {visit} visit entries")]
    LengthMismatch { types: usize, visit: usize },

    #[error("visit is not a bijection on 1..={len}: {detail}")]
    NotBijective { len: usize, detail: String },

    #[error("not a meander: arcs {first} and {second} cross")]
    InvalidMeander { first: Arc, second: Arc },

    #[error("[{lo},{hi}] is not a nonempty common interval")]
    NotCommonInterval { lo: usize, hi: usize },

    #[error("{kind} label {label} out of range 1..={max}")]
    LabelOutOfRange {
        kind: SlotKind,
        label: usize,
        max: usize,
    },

    #[error("{kind} slot needs a piece with {expected} transverse count, got {transverse}")]
    ColorMismatch {
        kind: SlotKind,
        expected: &'static str,
        transverse: usize,
    },

    #[error("operation needs a meander of total order at least 1")]
    EmptyMeander,

    #[error("truncation mismatch: {0} vs {1}")]
    TruncationMismatch(usize, usize),

    #[error("constant term {0} is not a unit")]
    NonUnitConstant(String),

    #[error("substitution slot {slot} has nonzero constant term {constant}")]
    NonZeroConstant { slot: &'static str, constant: String },

    #[error("coefficient {coeff} of x^{n} t^{k} is not divisible by 2")]
    OddCoefficient { n: usize, k: usize, coeff: String },

    #[error("invalid shard {index}/{count}")]
    InvalidShard { index: usize, count: usize },

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Json(e.to_string())
    }
}
