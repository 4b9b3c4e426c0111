//! The Burrows-Wheeler transform family over byte strings.
//!
//! Three transforms share one alphabet convention (see [`text`]):
//!
//! * **BWT**: last symbols of the sorted suffixes of `T$`.
//! * **BBWT**: the bijective BWT; last symbols of the ω-sorted conjugates of
//!   every Lyndon factor of `T`. No sentinel needed.
//! * **BWTC**: last symbols of the sorted cyclic rotations of `T`.
//!
//! Each has three engines:
//!
//! * [`oracle`]: brute-force sorting. Slow, obviously correct, the reference
//!   every other engine is tested against.
//! * [`inplace`]: quadratic-time algorithms that rewrite the input buffer
//!   using a constant number of machine words plus one 257-entry count table.
//! * [`rle`]: run-length compressed strings with dynamic rank/select, used for
//!   the online RLBWT construction and both RLBWT/RLBBWT conversions.

pub mod audit;
pub mod inplace;
pub mod lyndon;
pub mod oracle;
pub mod rle;
pub mod text;

pub use lyndon::LyndonFactorization;
pub use rle::{Run, RunLengthString};
pub use text::{CountTable, Transform, TransformKind, SENTINEL};

/// Errors reported by every engine.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("position {pos} out of range for length {len}")]
    OutOfRange { pos: usize, len: usize },
    #[error("occurrence {nth} of symbol {symbol:#04x} not found")]
    NotFound { symbol: u8, nth: usize },
    #[error("empty input")]
    Empty,
    #[error("sentinel byte 0x00 at offset {offset} of a sentinel-free input")]
    SentinelInText { offset: usize },
    #[error("expected exactly one sentinel, found {found}")]
    SentinelCount { found: usize },
    #[error("input is not primitive")]
    NotPrimitive,
    #[error("corrupt transform: {0}")]
    Corrupt(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
