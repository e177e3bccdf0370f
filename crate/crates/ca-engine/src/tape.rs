use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::CaError;

/// Edge handling for a finite tape.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Boundary {
    /// Indices wrap modulo the width.
    Periodic,
    /// Reads beyond the edges return a fixed background symbol.
    Fixed { background: u8 },
}

/// One tape row: `width` symbols over the alphabet `[0, k)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Configuration {
    cells: Vec<u8>,
    k: u16,
    boundary: Boundary,
}

impl Configuration {
    pub fn new(cells: Vec<u8>, k: u16, boundary: Boundary) -> Result<Self, CaError> {
        if !(2..=256).contains(&k) {
            return Err(CaError::InvalidAlphabet(k));
        }
        if cells.is_empty() {
            return Err(CaError::EmptyTape);
        }
        if let Some(index) = cells.iter().position(|&s| u16::from(s) >= k) {
            return Err(CaError::SymbolOutOfRange {
                index,
                symbol: cells[index],
                k,
            });
        }
        if let Boundary::Fixed { background } = boundary {
            if u16::from(background) >= k {
                return Err(CaError::SymbolOutOfRange {
                    index: 0,
                    symbol: background,
                    k,
                });
            }
        }
        Ok(Self { cells, k, boundary })
    }

    pub fn cells(&self) -> &[u8] {
        &self.cells
    }

    pub fn width(&self) -> usize {
        self.cells.len()
    }

    pub fn k(&self) -> u16 {
        self.k
    }

    pub fn boundary(&self) -> Boundary {
        self.boundary
    }

    /// Reads the cell at a possibly out-of-range index under the boundary
    /// convention.
    #[inline]
    pub fn read(&self, index: isize) -> u8 {
        let width = self.cells.len() as isize;
        if (0..width).contains(&index) {
            return self.cells[index as usize];
        }
        match self.boundary {
            Boundary::Periodic => self.cells[index.rem_euclid(width) as usize],
            Boundary::Fixed { background } => background,
        }
    }
}

/// A labeled initial-condition segment to be spliced onto a tape.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProcessSpec {
    label: String,
    pattern: Vec<u8>,
    offset: usize,
}

impl ProcessSpec {
    pub fn new(
        label: impl Into<String>,
        pattern: Vec<u8>,
        offset: usize,
    ) -> Result<Self, CaError> {
        if pattern.is_empty() {
            return Err(CaError::EmptyPattern);
        }
        Ok(Self {
            label: label.into(),
            pattern,
            offset,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn pattern(&self) -> &[u8] {
        &self.pattern
    }

    pub fn len(&self) -> usize {
        self.pattern.len()
    }

    pub fn is_empty(&self) -> bool {
        false // patterns are non-empty by construction
    }

    pub fn offset(&self) -> usize {
        self.offset
    }

    /// End of the segment, exclusive.
    pub fn end(&self) -> usize {
        self.offset + self.pattern.len()
    }

    /// The same segment re-anchored at a new offset.
    pub fn at_offset(&self, offset: usize) -> Self {
        Self {
            label: self.label.clone(),
            pattern: self.pattern.clone(),
            offset,
        }
    }
}

/// How to fill the tape before any process segments are spliced in.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BackgroundSpec {
    /// Every cell holds the same symbol.
    Uniform(u8),
    /// The pattern is tiled across the tape.
    Periodic(Vec<u8>),
    /// Seeded i.i.d. uniform symbols.
    Random { seed: u64 },
}

impl BackgroundSpec {
    fn fill(&self, width: usize, k: u16) -> Result<Vec<u8>, CaError> {
        match self {
            BackgroundSpec::Uniform(symbol) => {
                check_symbol(*symbol, k)?;
                Ok(vec![*symbol; width])
            }
            BackgroundSpec::Periodic(pattern) => {
                if pattern.is_empty() {
                    return Err(CaError::EmptyBackgroundPattern);
                }
                if let Some(index) = pattern.iter().position(|&s| u16::from(s) >= k) {
                    return Err(CaError::SymbolOutOfRange {
                        index,
                        symbol: pattern[index],
                        k,
                    });
                }
                Ok(pattern.iter().copied().cycle().take(width).collect())
            }
            BackgroundSpec::Random { seed } => {
                let mut rng = ChaCha8Rng::seed_from_u64(*seed);
                Ok((0..width).map(|_| sample_symbol(&mut rng, k)).collect())
            }
        }
    }

    /// The single fill symbol, when the background has one.
    pub fn uniform_symbol(&self) -> Option<u8> {
        match self {
            BackgroundSpec::Uniform(symbol) => Some(*symbol),
            _ => None,
        }
    }
}

/// Draws a symbol uniformly from `[0, k)`.
///
/// Rejection sampling on the raw 32-bit stream: the accepted range is a
/// multiple of `k`, so the draw is exactly uniform and depends only on the
/// ChaCha keystream.
pub fn sample_symbol<R: RngCore>(rng: &mut R, k: u16) -> u8 {
    let k32 = u32::from(k);
    let zone = u32::MAX - u32::MAX % k32;
    loop {
        let draw = rng.next_u32();
        if draw < zone {
            return (draw % k32) as u8;
        }
    }
}

/// Builds an initial configuration: a background fill overwritten by each
/// process pattern at its offset.
///
/// Segments must lie within the tape and be pairwise disjoint.
pub fn build_initial(
    width: usize,
    background: &BackgroundSpec,
    processes: &[ProcessSpec],
    k: u16,
    boundary: Boundary,
) -> Result<Configuration, CaError> {
    if width == 0 {
        return Err(CaError::EmptyTape);
    }
    let mut cells = background.fill(width, k)?;

    let mut placed: Vec<&ProcessSpec> = processes.iter().collect();
    placed.sort_by_key(|p| p.offset());
    for pair in placed.windows(2) {
        if pair[1].offset() < pair[0].end() {
            return Err(CaError::SegmentOverlap {
                first: pair[0].label().to_string(),
                second: pair[1].label().to_string(),
            });
        }
    }

    for process in processes {
        if process.end() > width {
            return Err(CaError::SegmentOutOfBounds {
                label: process.label().to_string(),
                offset: process.offset(),
                end: process.end(),
                width,
            });
        }
        if let Some(index) = process.pattern().iter().position(|&s| u16::from(s) >= k) {
            return Err(CaError::SymbolOutOfRange {
                index: process.offset() + index,
                symbol: process.pattern()[index],
                k,
            });
        }
        cells[process.offset()..process.end()].copy_from_slice(process.pattern());
    }

    Configuration::new(cells, k, boundary)
}

fn check_symbol(symbol: u8, k: u16) -> Result<(), CaError> {
    if u16::from(symbol) >= k {
        return Err(CaError::SymbolOutOfRange {
            index: 0,
            symbol,
            k,
        });
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniform_background_with_one_segment() {
        let process = ProcessSpec::new("a", vec![1, 1], 2).unwrap();
        let tape = build_initial(
            7,
            &BackgroundSpec::Uniform(0),
            &[process],
            2,
            Boundary::Periodic,
        )
        .unwrap();
        assert_eq!(tape.cells(), &[0, 0, 1, 1, 0, 0, 0]);
    }

    #[test]
    fn overlapping_segments_name_both_labels() {
        let a = ProcessSpec::new("alpha", vec![1, 1, 1], 1).unwrap();
        let b = ProcessSpec::new("beta", vec![1], 2).unwrap();
        let err = build_initial(
            8,
            &BackgroundSpec::Uniform(0),
            &[a, b],
            2,
            Boundary::Periodic,
        )
        .unwrap_err();
        match err {
            CaError::SegmentOverlap { first, second } => {
                assert_eq!((first.as_str(), second.as_str()), ("alpha", "beta"));
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn periodic_background_tiles_the_tape() {
        let tape = build_initial(
            8,
            &BackgroundSpec::Periodic(vec![0, 1]),
            &[],
            2,
            Boundary::Periodic,
        )
        .unwrap();
        assert_eq!(tape.cells(), &[0, 1, 0, 1, 0, 1, 0, 1]);
    }

    #[test]
    fn out_of_bounds_segment_is_a_range_error() {
        let process = ProcessSpec::new("a", vec![1, 1], 6).unwrap();
        let err = build_initial(
            7,
            &BackgroundSpec::Uniform(0),
            &[process],
            2,
            Boundary::Periodic,
        )
        .unwrap_err();
        assert!(matches!(err, CaError::SegmentOutOfBounds { .. }));
    }

    #[test]
    fn random_background_is_seed_deterministic() {
        let spec = BackgroundSpec::Random { seed: 7 };
        let a = build_initial(64, &spec, &[], 2, Boundary::Periodic).unwrap();
        let b = build_initial(64, &spec, &[], 2, Boundary::Periodic).unwrap();
        assert_eq!(a, b);
        // Both symbols should appear in 64 fair draws with this seed.
        assert!(a.cells().contains(&0) && a.cells().contains(&1));
    }

    #[test]
    fn configuration_rejects_bad_symbols() {
        let err = Configuration::new(vec![0, 3, 1], 2, Boundary::Periodic).unwrap_err();
        assert_eq!(
            err,
            CaError::SymbolOutOfRange {
                index: 1,
                symbol: 3,
                k: 2
            }
        );
    }

    #[test]
    fn periodic_reads_wrap() {
        let tape = Configuration::new(vec![1, 0, 0], 2, Boundary::Periodic).unwrap();
        assert_eq!(tape.read(-1), 0);
        assert_eq!(tape.read(3), 1);
    }

    #[test]
    fn fixed_reads_return_the_background() {
        let tape = Configuration::new(vec![1, 0], 3, Boundary::Fixed { background: 2 }).unwrap();
        assert_eq!(tape.read(-1), 2);
        assert_eq!(tape.read(2), 2);
    }
}
