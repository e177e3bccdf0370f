use num_bigint::BigUint;
use thiserror::Error;

/// Errors produced by rule construction, tape construction, and stepping.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum CaError {
    #[error("alphabet size k must be in [2, 256], got {0}")]
    InvalidAlphabet(u16),

    #[error("radius must be >= 1, got {0}")]
    InvalidRadius(u32),

    #[error("rule number {number} out of range for k={k}, r={radius}: bound is {bound}")]
    RuleNumberOutOfRange {
        number: BigUint,
        k: u16,
        radius: u32,
        /// `k^(k^(2r+1))` rendered exactly when small, symbolically otherwise.
        bound: String,
    },

    #[error("rule table for k={k}, r={radius} needs {entries} entries, exceeding the cap of {cap}")]
    TableCapacityExceeded {
        k: u16,
        radius: u32,
        entries: u128,
        cap: u64,
    },

    #[error("rule table has {actual} outputs, expected {expected}")]
    WrongTableLength { expected: usize, actual: usize },

    #[error("symbol {symbol} at cell {index} is outside the alphabet [0, {k})")]
    SymbolOutOfRange { index: usize, symbol: u8, k: u16 },

    #[error("configuration alphabet k={config_k} does not match rule alphabet k={table_k}")]
    AlphabetMismatch { config_k: u16, table_k: u16 },

    #[error("permutation {perm:?} is not a bijection on [0, {k})")]
    NotAPermutation { perm: Vec<u8>, k: u16 },

    #[error("tape width must be >= 1")]
    EmptyTape,

    #[error("process pattern must be non-empty")]
    EmptyPattern,

    #[error("background pattern must be non-empty")]
    EmptyBackgroundPattern,

    #[error(
        "process '{label}' at [{offset}, {end}) does not fit on a tape of width {width}"
    )]
    SegmentOutOfBounds {
        label: String,
        offset: usize,
        end: usize,
        width: usize,
    },

    #[error("processes '{first}' and '{second}' overlap on the tape")]
    SegmentOverlap { first: String, second: String },

    #[error("history rows must share width, alphabet, and boundary (row {row} differs)")]
    InconsistentHistoryRow { row: usize },

    #[error("history must contain at least one row")]
    EmptyHistory,
}
