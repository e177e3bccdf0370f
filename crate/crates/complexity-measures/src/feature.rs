use std::sync::Arc;

use ca_engine::SpaceTimeHistory;

use crate::bdm::{bdm, CtmTable};
use crate::entropy::block_entropy;
use crate::error::MeasureError;
use crate::lz78::{lz78_normalized, lz78_phrase_count};

/// A complexity estimator applicable to a symbol string.
#[derive(Debug, Clone, PartialEq)]
pub enum Measure {
    BlockEntropy { block_len: usize },
    Lz78PhraseCount,
    Lz78Normalized,
    Bdm { table: Arc<CtmTable> },
}

/// The estimator family, without its parameters. Trajectories produced by
/// different kinds are not comparable.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MeasureKind {
    BlockEntropy,
    Lz78PhraseCount,
    Lz78Normalized,
    Bdm,
}

impl Measure {
    pub fn kind(&self) -> MeasureKind {
        match self {
            Measure::BlockEntropy { .. } => MeasureKind::BlockEntropy,
            Measure::Lz78PhraseCount => MeasureKind::Lz78PhraseCount,
            Measure::Lz78Normalized => MeasureKind::Lz78Normalized,
            Measure::Bdm { .. } => MeasureKind::Bdm,
        }
    }

    /// Evaluates the measure on one string over a `k`-symbol alphabet.
    pub fn evaluate(&self, s: &[u8], k: u16) -> Result<f64, MeasureError> {
        match self {
            Measure::BlockEntropy { block_len } => block_entropy(s, *block_len),
            Measure::Lz78PhraseCount => lz78_phrase_count(s).map(|c| c as f64),
            Measure::Lz78Normalized => lz78_normalized(s, k),
            Measure::Bdm { table } => bdm(s, table),
        }
    }
}

/// How a tracked window changes over time.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dilation {
    /// The base interval at every step.
    Fixed,
    /// The interval grows by `growth` cells on each side per step, clipped
    /// to the tape. Matching the rule radius keeps a process's causal
    /// descendants inside the window.
    LightCone { growth: usize },
}

/// A tracked spatial interval `[start, end)` with a dilation mode.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WindowSpec {
    start: usize,
    end: usize,
    dilation: Dilation,
}

impl WindowSpec {
    pub fn fixed(start: usize, end: usize) -> Self {
        Self {
            start,
            end,
            dilation: Dilation::Fixed,
        }
    }

    pub fn light_cone(start: usize, end: usize, growth: usize) -> Self {
        Self {
            start,
            end,
            dilation: Dilation::LightCone { growth },
        }
    }

    pub fn start(&self) -> usize {
        self.start
    }

    pub fn end(&self) -> usize {
        self.end
    }

    pub fn dilation(&self) -> Dilation {
        self.dilation
    }

    /// The window at step `t`, clipped to `[0, width)`.
    pub fn bounds_at(&self, t: usize, width: usize) -> (usize, usize) {
        match self.dilation {
            Dilation::Fixed => (self.start, self.end.min(width)),
            Dilation::LightCone { growth } => {
                let spread = growth.saturating_mul(t);
                (
                    self.start.saturating_sub(spread),
                    self.end.saturating_add(spread).min(width),
                )
            }
        }
    }
}

/// A complexity measure evaluated over a tracked window at each time step.
#[derive(Debug, Clone, PartialEq)]
pub struct FeatureTrajectory {
    kind: MeasureKind,
    window: WindowSpec,
    values: Vec<f64>,
}

impl FeatureTrajectory {
    pub fn kind(&self) -> MeasureKind {
        self.kind
    }

    pub fn window(&self) -> WindowSpec {
        self.window
    }

    pub fn values(&self) -> &[f64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// Mean of the trailing `keep_num / keep_den` fraction of steps: with
    /// `T = len - 1`, averages steps `ceil((den - num) * T / den) ..= T`.
    pub fn tail_mean(&self, keep_num: usize, keep_den: usize) -> f64 {
        debug_assert!(keep_num >= 1 && keep_num <= keep_den);
        let t = self.values.len() - 1;
        let start = ((keep_den - keep_num) * t).div_ceil(keep_den);
        let tail = &self.values[start..];
        tail.iter().sum::<f64>() / tail.len() as f64
    }

    /// The summary statistic used for ranking and classification: the mean
    /// over steps `ceil(3T/4) ..= T`, skipping transients.
    pub fn final_quarter_mean(&self) -> f64 {
        self.tail_mean(1, 4)
    }
}

/// Evaluates `measure` on the windowed cell string of every history row.
///
/// The value at step `t` uses the window's bounds at `t`; light-cone windows
/// grow before clipping. Fails with the offending step when a windowed
/// string violates the measure's minimum length.
pub fn feature_series(
    history: &SpaceTimeHistory,
    window: &WindowSpec,
    measure: &Measure,
) -> Result<FeatureTrajectory, MeasureError> {
    let width = history.width();
    let k = history.k();
    if window.start >= window.end || window.end > width {
        return Err(MeasureError::InvalidWindow {
            start: window.start,
            end: window.end,
            width,
        });
    }
    let mut values = Vec::with_capacity(history.num_rows());
    for (t, row) in history.rows().iter().enumerate() {
        let (start, end) = window.bounds_at(t, width);
        let value = measure
            .evaluate(&row.cells()[start..end], k)
            .map_err(|e| e.at_step(t))?;
        values.push(value);
    }
    Ok(FeatureTrajectory {
        kind: measure.kind(),
        window: *window,
        values,
    })
}
