use thiserror::Error;

use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by a series that is identically zero at order {order}")]
    DivisionByZeroSeries { order: usize },

    #[error(
        "quotient has a pole at t=0 (numerator valuation {num} < denominator valuation {den})"
    )]
    PoleAtOrigin { num: usize, den: usize },

    #[error("cannot differentiate a series of order 0")]
    OrderUnderflow,

    #[error("invalid hypergeometric parameter c={c}: (c)_k vanishes at k={k}")]
    InvalidParameterC { c: Rational, k: usize },

    #[error("unknown Appell family `{0}`")]
    UnknownFamily(String),

    #[error(
        "family `{0}` is not a strict Appell sequence (A_0 = 0); beta coefficients are undefined"
    )]
    NotStrictAppell(String),

    #[error("argument-shift base y must be nonzero")]
    ZeroShiftBase,

    #[error(
        "umbral term needs index {needed} but the projection context holds tables up to {max}"
    )]
    OrderExceeded { needed: usize, max: usize },

    #[error("cannot parse `{0}` as a rational number")]
    ParseRational(String),
}

pub type Result<T> = std::result::Result<T, Error>;
