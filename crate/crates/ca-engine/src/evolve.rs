use crate::error::CaError;
use crate::rule::RuleTable;
use crate::tape::Configuration;

/// The stacked rows of an evolution; row 0 is the initial condition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpaceTimeHistory {
    rows: Vec<Configuration>,
}

impl SpaceTimeHistory {
    /// Assembles a history from pre-built rows, checking that they share
    /// width, alphabet, and boundary.
    pub fn from_rows(rows: Vec<Configuration>) -> Result<Self, CaError> {
        let first = rows.first().ok_or(CaError::EmptyHistory)?;
        let (width, k, boundary) = (first.width(), first.k(), first.boundary());
        for (row, config) in rows.iter().enumerate().skip(1) {
            if config.width() != width || config.k() != k || config.boundary() != boundary {
                return Err(CaError::InconsistentHistoryRow { row });
            }
        }
        Ok(Self { rows })
    }

    pub fn rows(&self) -> &[Configuration] {
        &self.rows
    }

    pub fn row(&self, t: usize) -> &Configuration {
        &self.rows[t]
    }

    /// Number of rows, i.e. steps + 1.
    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn width(&self) -> usize {
        self.rows[0].width()
    }

    pub fn k(&self) -> u16 {
        self.rows[0].k()
    }
}

/// Applies the rule once: every output cell is the table lookup on its
/// `(2r+1)`-neighborhood, with edges handled by the tape's boundary mode.
pub fn step(config: &Configuration, table: &RuleTable) -> Result<Configuration, CaError> {
    if config.k() != table.k() {
        return Err(CaError::AlphabetMismatch {
            config_k: config.k(),
            table_k: table.k(),
        });
    }
    if let Some(index) = config
        .cells()
        .iter()
        .position(|&s| u16::from(s) >= table.k())
    {
        return Err(CaError::SymbolOutOfRange {
            index,
            symbol: config.cells()[index],
            k: table.k(),
        });
    }

    let width = config.width();
    let k = table.k() as usize;
    let radius = table.radius() as isize;
    let mut next = vec![0u8; width];
    for (i, cell) in next.iter_mut().enumerate() {
        let mut value = 0usize;
        for d in -radius..=radius {
            value = value * k + config.read(i as isize + d) as usize;
        }
        *cell = table.output(value);
    }
    // Width, boundary, and alphabet carry over; outputs are table symbols,
    // so no re-validation is needed.
    Ok(Configuration::new(next, config.k(), config.boundary())
        .expect("step preserves configuration invariants"))
}

/// Evolves the initial condition for `steps` steps, returning all
/// `steps + 1` rows.
pub fn evolve(
    initial: &Configuration,
    table: &RuleTable,
    steps: usize,
) -> Result<SpaceTimeHistory, CaError> {
    let mut rows = Vec::with_capacity(steps + 1);
    rows.push(initial.clone());
    for _ in 0..steps {
        let next = step(rows.last().expect("rows is non-empty"), table)?;
        rows.push(next);
    }
    Ok(SpaceTimeHistory { rows })
}
