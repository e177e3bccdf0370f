use thiserror::Error;

/// Errors produced by the string estimators and feature-series evaluation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MeasureError {
    #[error("string of length {len} is too short: need at least {min} symbols")]
    TooShort { len: usize, min: usize },

    #[error("block length must be >= 1")]
    ZeroBlockLength,

    #[error("alphabet size k must be >= 2, got {0}")]
    InvalidAlphabet(u16),

    #[error("ctm table line {line}: {message}")]
    TableParse { line: usize, message: String },

    #[error("ctm table has no entries")]
    EmptyTable,

    #[error("blocks missing from the ctm table: {}", blocks.join(", "))]
    MissingBlocks { blocks: Vec<String> },

    #[error("window [{start}, {end}) is invalid for width {width}")]
    InvalidWindow {
        start: usize,
        end: usize,
        width: usize,
    },

    #[error("step {step}: {source}")]
    AtStep {
        step: usize,
        source: Box<MeasureError>,
    },
}

impl MeasureError {
    pub(crate) fn at_step(self, step: usize) -> Self {
        MeasureError::AtStep {
            step,
            source: Box::new(self),
        }
    }
}
