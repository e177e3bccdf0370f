use num_bigint::BigUint;

use crate::error::CaError;

/// Hard cap on the number of lookup-table entries (`k^(2r+1)`).
///
/// Decoding a rule with more entries than this is almost certainly an
/// accident (the rule-number space grows doubly exponentially).
pub const TABLE_ENTRY_CAP: u64 = 1 << 20;

/// A local update rule for a one-dimensional cellular automaton with `k`
/// symbols and radius `r`.
///
/// The table stores one output symbol per neighborhood. Internally
/// `outputs[v]` is the successor of the neighborhood whose base-`k` value is
/// `v`, reading the leftmost neighbor as the most significant digit. Under
/// that layout the output vector is exactly the little-endian base-`k` digit
/// string of the rule number, so rule 110 maps neighborhood `(1,1,1)` via its
/// highest digit — the usual elementary-CA numbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RuleTable {
    k: u16,
    radius: u32,
    outputs: Vec<u8>,
}

impl RuleTable {
    /// Builds a table from outputs indexed by neighborhood value.
    pub fn from_outputs(outputs: Vec<u8>, k: u16, radius: u32) -> Result<Self, CaError> {
        let entries = checked_table_len(k, radius)?;
        if outputs.len() != entries {
            return Err(CaError::WrongTableLength {
                expected: entries,
                actual: outputs.len(),
            });
        }
        if let Some(index) = outputs.iter().position(|&s| u16::from(s) >= k) {
            return Err(CaError::SymbolOutOfRange {
                index,
                symbol: outputs[index],
                k,
            });
        }
        Ok(Self { k, radius, outputs })
    }

    /// Decodes a rule number into its lookup table.
    ///
    /// The rule number must be below `k^(k^(2r+1))`; its base-`k` digits are
    /// the output symbols, most significant digit first when neighborhoods
    /// are listed in descending value order.
    pub fn decode(number: &BigUint, k: u16, radius: u32) -> Result<Self, CaError> {
        let entries = checked_table_len(k, radius)?;
        let digits = number.to_radix_le(u32::from(k));
        // `to_radix_le(0)` yields a single zero digit; strip so the length
        // check below only sees significant digits.
        let significant = if digits == [0] { 0 } else { digits.len() };
        if significant > entries {
            return Err(CaError::RuleNumberOutOfRange {
                number: number.clone(),
                k,
                radius,
                bound: describe_bound(k, entries),
            });
        }
        let mut outputs = vec![0u8; entries];
        outputs[..digits.len().min(entries)].copy_from_slice(&digits[..digits.len().min(entries)]);
        Ok(Self { k, radius, outputs })
    }

    /// Convenience decoder for elementary rules (k=2, r=1).
    pub fn elementary(number: u16) -> Result<Self, CaError> {
        Self::decode(&BigUint::from(number), 2, 1)
    }

    /// Re-encodes the table as its rule number.
    pub fn encode(&self) -> BigUint {
        BigUint::from_radix_le(&self.outputs, u32::from(self.k))
            .expect("outputs are valid base-k digits")
    }

    pub fn k(&self) -> u16 {
        self.k
    }

    pub fn radius(&self) -> u32 {
        self.radius
    }

    /// Neighborhood width `2r + 1`.
    pub fn neighborhood_len(&self) -> usize {
        2 * self.radius as usize + 1
    }

    pub fn table_len(&self) -> usize {
        self.outputs.len()
    }

    /// Output symbol for the neighborhood with base-`k` value `value`.
    #[inline]
    pub fn output(&self, value: usize) -> u8 {
        self.outputs[value]
    }

    /// Output symbol for an explicit neighborhood, leftmost cell first.
    pub fn output_for(&self, neighborhood: &[u8]) -> Result<u8, CaError> {
        if neighborhood.len() != self.neighborhood_len() {
            return Err(CaError::WrongTableLength {
                expected: self.neighborhood_len(),
                actual: neighborhood.len(),
            });
        }
        let mut value = 0usize;
        for (index, &symbol) in neighborhood.iter().enumerate() {
            if u16::from(symbol) >= self.k {
                return Err(CaError::SymbolOutOfRange {
                    index,
                    symbol,
                    k: self.k,
                });
            }
            value = value * self.k as usize + symbol as usize;
        }
        Ok(self.outputs[value])
    }

    /// True when the rule fixes a uniform tape of `symbol`.
    pub fn is_quiescent(&self, symbol: u8) -> bool {
        if u16::from(symbol) >= self.k {
            return false;
        }
        let mut value = 0usize;
        for _ in 0..self.neighborhood_len() {
            value = value * self.k as usize + symbol as usize;
        }
        self.outputs[value] == symbol
    }

    /// The left-right reflection of this rule: each neighborhood maps to the
    /// source table's value on the reversed neighborhood. An involution.
    pub fn mirrored(&self) -> Self {
        let k = self.k as usize;
        let width = self.neighborhood_len();
        let outputs = (0..self.outputs.len())
            .map(|value| self.outputs[reverse_digits(value, k, width)])
            .collect();
        Self {
            k: self.k,
            radius: self.radius,
            outputs,
        }
    }

    /// Conjugates the rule by a symbol permutation: the new table maps `n` to
    /// `perm(old(perm^-1 applied cellwise to n))`. Generalizes black-white
    /// complementation to k symbols.
    pub fn permuted(&self, perm: &[u8]) -> Result<Self, CaError> {
        let k = self.k as usize;
        let invalid = || CaError::NotAPermutation {
            perm: perm.to_vec(),
            k: self.k,
        };
        if perm.len() != k {
            return Err(invalid());
        }
        let mut inverse = vec![u8::MAX; k];
        for (source, &target) in perm.iter().enumerate() {
            let slot = inverse.get_mut(target as usize).ok_or_else(invalid)?;
            if *slot != u8::MAX {
                return Err(invalid());
            }
            *slot = source as u8;
        }
        let width = self.neighborhood_len();
        let outputs = (0..self.outputs.len())
            .map(|value| {
                let preimage = map_digits(value, k, width, |d| inverse[d] as usize);
                perm[self.outputs[preimage] as usize]
            })
            .collect();
        Ok(Self {
            k: self.k,
            radius: self.radius,
            outputs,
        })
    }
}

fn checked_table_len(k: u16, radius: u32) -> Result<usize, CaError> {
    if !(2..=256).contains(&k) {
        return Err(CaError::InvalidAlphabet(k));
    }
    if radius < 1 {
        return Err(CaError::InvalidRadius(radius));
    }
    let width = 2 * radius + 1;
    let mut entries: u128 = 1;
    for _ in 0..width {
        entries = entries.saturating_mul(u128::from(k));
        if entries > u128::from(TABLE_ENTRY_CAP) {
            return Err(CaError::TableCapacityExceeded {
                k,
                radius,
                entries,
                cap: TABLE_ENTRY_CAP,
            });
        }
    }
    Ok(entries as usize)
}

/// Renders `k^entries` exactly when it is small enough to read, otherwise
/// symbolically.
fn describe_bound(k: u16, entries: usize) -> String {
    let bits = (f64::from(k)).log2() * entries as f64;
    if bits <= 128.0 {
        format!("{}^{} = {}", k, entries, BigUint::from(k).pow(entries as u32))
    } else {
        format!("{k}^{entries}")
    }
}

/// Reverses the `width` base-`k` digits of `value`.
fn reverse_digits(mut value: usize, k: usize, width: usize) -> usize {
    let mut out = 0;
    for _ in 0..width {
        out = out * k + value % k;
        value /= k;
    }
    out
}

/// Applies `f` to each of the `width` base-`k` digits of `value`, keeping
/// digit positions.
fn map_digits(mut value: usize, k: usize, width: usize, f: impl Fn(usize) -> usize) -> usize {
    let mut out = 0;
    let mut place = 1;
    for _ in 0..width {
        out += f(value % k) * place;
        place *= k;
        value /= k;
    }
    out
}
