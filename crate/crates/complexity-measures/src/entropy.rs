use std::collections::HashMap;

use crate::error::MeasureError;

/// Shannon entropy, in bits, of the empirical distribution of all
/// overlapping length-`m` substrings of `s`.
///
/// Bounded by `min(m * log2(k), log2(|s| - m + 1))` and zero exactly when
/// every substring is identical.
pub fn block_entropy(s: &[u8], m: usize) -> Result<f64, MeasureError> {
    if m == 0 {
        return Err(MeasureError::ZeroBlockLength);
    }
    if s.len() < m {
        return Err(MeasureError::TooShort {
            len: s.len(),
            min: m,
        });
    }
    let mut counts: HashMap<&[u8], u64> = HashMap::new();
    for window in s.windows(m) {
        *counts.entry(window).or_insert(0) += 1;
    }
    let total = (s.len() - m + 1) as f64;
    let h: f64 = counts
        .values()
        .map(|&count| {
            let p = count as f64 / total;
            -p * p.log2()
        })
        .sum();
    // A single distinct substring sums to -0.0; normalize the sign.
    Ok(h.max(0.0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_string_has_zero_entropy() {
        assert_eq!(block_entropy(&[0, 0, 0, 0], 1).unwrap(), 0.0);
    }

    #[test]
    fn alternating_string_has_one_bit_per_symbol() {
        assert_eq!(block_entropy(&[0, 1, 0, 1], 1).unwrap(), 1.0);
    }

    #[test]
    fn two_thirds_one_third_split() {
        // Substrings 01, 10, 01: p = {2/3, 1/3}, H = log2(3) - 2/3.
        let h = block_entropy(&[0, 1, 0, 1], 2).unwrap();
        let expected = 3f64.log2() - 2.0 / 3.0;
        assert!((h - expected).abs() < 1e-12);
        assert!((h - 0.918296).abs() < 1e-6);
    }

    #[test]
    fn short_strings_are_rejected() {
        assert!(matches!(
            block_entropy(&[0], 2),
            Err(MeasureError::TooShort { len: 1, min: 2 })
        ));
        assert!(matches!(
            block_entropy(&[], 1),
            Err(MeasureError::TooShort { len: 0, min: 1 })
        ));
    }
}
