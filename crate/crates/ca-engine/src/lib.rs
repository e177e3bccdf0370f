//! Generic one-dimensional cellular automata: rule tables under the
//! descending-neighborhood numbering convention, finite tapes with periodic
//! or fixed-background boundaries, and deterministic evolution.
//!
//! All operations are pure functions of their inputs; every value is
//! immutable after construction and safe to share across threads.

mod error;
mod evolve;
mod rule;
mod tape;

pub use error::CaError;
pub use evolve::{evolve, step, SpaceTimeHistory};
pub use rule::{RuleTable, TABLE_ENTRY_CAP};
pub use tape::{build_initial, sample_symbol, BackgroundSpec, Boundary, Configuration, ProcessSpec};
