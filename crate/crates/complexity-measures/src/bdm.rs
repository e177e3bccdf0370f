use std::collections::HashMap;

use crate::error::MeasureError;

/// Algorithmic-complexity values for all length-`m` blocks over a `k`-symbol
/// alphabet, loaded from an external table.
#[derive(Debug, Clone, PartialEq)]
pub struct CtmTable {
    block_len: usize,
    k: u16,
    entries: HashMap<Vec<u8>, f64>,
}

impl CtmTable {
    /// Parses the line-oriented table format: one `<block> <value>` pair per
    /// line, `#` starts a comment, blank lines are ignored. Blocks are digit
    /// strings over `[0, k)` and must all share one length.
    pub fn parse(text: &str, k: u16) -> Result<Self, MeasureError> {
        if k < 2 {
            return Err(MeasureError::InvalidAlphabet(k));
        }
        let mut entries: HashMap<Vec<u8>, f64> = HashMap::new();
        let mut block_len: Option<usize> = None;
        for (index, raw_line) in text.lines().enumerate() {
            let line = index + 1;
            let err = |message: String| MeasureError::TableParse { line, message };
            let content = raw_line.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut fields = content.split_whitespace();
            let (block_text, value_text) = match (fields.next(), fields.next(), fields.next()) {
                (Some(block), Some(value), None) => (block, value),
                _ => return Err(err(format!("expected '<block> <value>', got '{content}'"))),
            };

            let mut block = Vec::with_capacity(block_text.len());
            for ch in block_text.chars() {
                let digit = ch
                    .to_digit(10)
                    .ok_or_else(|| err(format!("block symbol '{ch}' is not a digit")))?;
                if digit >= u32::from(k) {
                    return Err(err(format!("block symbol {digit} is >= k={k}")));
                }
                block.push(digit as u8);
            }
            match block_len {
                None => block_len = Some(block.len()),
                Some(expected) if expected != block.len() => {
                    return Err(err(format!(
                        "block length {} does not match earlier length {}",
                        block.len(),
                        expected
                    )));
                }
                _ => {}
            }

            let value: f64 = value_text
                .parse()
                .map_err(|_| err(format!("value '{value_text}' is not a number")))?;
            if !value.is_finite() || value < 0.0 {
                return Err(err(format!("value {value} must be finite and >= 0")));
            }
            if entries.insert(block, value).is_some() {
                return Err(err(format!("duplicate block '{block_text}'")));
            }
        }
        let block_len = block_len.ok_or(MeasureError::EmptyTable)?;
        Ok(Self {
            block_len,
            k,
            entries,
        })
    }

    pub fn block_len(&self) -> usize {
        self.block_len
    }

    pub fn k(&self) -> u16 {
        self.k
    }

    pub fn get(&self, block: &[u8]) -> Option<f64> {
        self.entries.get(block).copied()
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }
}

/// Block decomposition: partitions `s` into consecutive non-overlapping
/// blocks of the table's length (discarding a trailing partial block) and
/// sums `table(b) + log2(multiplicity)` over the distinct blocks.
///
/// Every occurring block must be present in the table.
pub fn bdm(s: &[u8], table: &CtmTable) -> Result<f64, MeasureError> {
    let m = table.block_len();
    if s.len() < m {
        return Err(MeasureError::TooShort {
            len: s.len(),
            min: m,
        });
    }
    let mut counts: HashMap<&[u8], u64> = HashMap::new();
    for block in s.chunks_exact(m) {
        *counts.entry(block).or_insert(0) += 1;
    }
    let mut missing: Vec<String> = counts
        .keys()
        .filter(|block| table.get(block).is_none())
        .map(|block| block.iter().map(|s| s.to_string()).collect())
        .collect();
    if !missing.is_empty() {
        missing.sort();
        return Err(MeasureError::MissingBlocks { blocks: missing });
    }
    Ok(counts
        .iter()
        .map(|(block, &count)| {
            table.get(block).expect("coverage checked above") + (count as f64).log2()
        })
        .sum())
}
