//! Effective complexity estimators on symbol strings — block entropy, LZ78
//! phrase counting, and the block decomposition method over external CTM
//! tables — plus windowed evaluation over space-time histories.
//!
//! Everything here is a pure function over immutable inputs; a parsed
//! [`CtmTable`] is read-only and shareable across threads.

mod bdm;
mod entropy;
mod error;
mod feature;
mod lz78;

pub use bdm::{bdm, CtmTable};
pub use entropy::block_entropy;
pub use error::MeasureError;
pub use feature::{feature_series, Dilation, FeatureTrajectory, Measure, MeasureKind, WindowSpec};
pub use lz78::{lz78_normalized, lz78_phrase_count};
