//! Exact rationals and rational-endpoint interval arithmetic.

mod interval;
pub mod rational;

pub use interval::{sqrt_enclosure, Interval};
pub use rational::{format_rational, parse_rational, pow10, render_decimal, Decimal};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum NumericError {
    #[error("division by an interval containing zero")]
    DivisionByIntervalContainingZero,
    #[error("division by zero")]
    DivisionByZero,
    #[error("square root of a negative quantity")]
    NegativeRadicand,
    #[error("interval endpoints out of order")]
    InvalidInterval,
    #[error("width bound must be positive")]
    NonPositiveWidth,
    #[error("cannot parse rational from {0:?}")]
    Parse(String),
    #[error("operation not supported for this scalar: {0}")]
    Unsupported(&'static str),
}
