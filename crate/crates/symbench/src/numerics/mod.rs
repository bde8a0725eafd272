//! Exact arbitrary-precision base-p arithmetic and digit/bit accounting.
//!
//! Everything downstream (machine oracles, capacity formulas, scoring) runs
//! on these types. No floating point touches a digit: `DigitNumber` is a
//! plain most-significant-first digit vector with schoolbook carry/borrow
//! arithmetic, and `ExactDecimal` is a scaled integer that never rounds.

mod decimal;
mod digit;

pub use decimal::{DecimalOp, ExactDecimal};
pub use digit::{digit_count_of, number_encoding_bits, DigitNumber};

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum NumericsError {
    #[error("base mismatch: {left} vs {right}")]
    BaseMismatch { left: u32, right: u32 },
    #[error("invalid base {0}: must be in 2..=256")]
    InvalidBase(u32),
    #[error("digit {digit} out of range for base {base}")]
    DigitOutOfRange { digit: u32, base: u32 },
    #[error("encoding bits undefined for zero (callers apply the zero convention explicitly)")]
    ZeroUndefined,
    #[error("subtraction would underflow")]
    Underflow,
    #[error("cannot parse number: {0}")]
    Parse(String),
}
