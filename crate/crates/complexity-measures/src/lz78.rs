use std::collections::HashMap;

use crate::error::MeasureError;

/// Number of phrases in the incremental-dictionary parse of `s`.
///
/// Each phrase is the longest prefix of the remaining input that is already
/// in the dictionary, extended by one symbol; the final phrase may be a bare
/// dictionary repeat when the input ends mid-extension. Always in
/// `[1, |s|]`.
pub fn lz78_phrase_count(s: &[u8]) -> Result<usize, MeasureError> {
    if s.is_empty() {
        return Err(MeasureError::TooShort { len: 0, min: 1 });
    }
    // Trie over (node id, symbol) edges; node 0 is the empty-phrase root.
    let mut children: HashMap<(u32, u8), u32> = HashMap::new();
    let mut next_id: u32 = 1;
    let mut node: u32 = 0;
    let mut phrases = 0usize;
    for &symbol in s {
        match children.get(&(node, symbol)) {
            Some(&child) => node = child,
            None => {
                children.insert((node, symbol), next_id);
                next_id += 1;
                phrases += 1;
                node = 0;
            }
        }
    }
    if node != 0 {
        phrases += 1;
    }
    Ok(phrases)
}

/// Scale-free LZ78 complexity: `c * (log_k(c) + 1) / |s|` with
/// `c = lz78_phrase_count(s)`.
///
/// Tends toward ~1 on incompressible strings and toward 0 on constant
/// strings as the length grows.
pub fn lz78_normalized(s: &[u8], k: u16) -> Result<f64, MeasureError> {
    if k < 2 {
        return Err(MeasureError::InvalidAlphabet(k));
    }
    if s.len() < 2 {
        return Err(MeasureError::TooShort {
            len: s.len(),
            min: 2,
        });
    }
    let c = lz78_phrase_count(s)? as f64;
    let log_k_c = c.ln() / f64::from(k).ln();
    Ok(c * (log_k_c + 1.0) / s.len() as f64)
}
