//! Finite binary words: node labels of the division tree and sequence prefixes.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::Zero;
use thiserror::Error;

/// A finite string of binary digits.
///
/// The empty word is valid and names the undivided whole; a word of length
/// `n` names one part of generation `n`. The derived `Ord` is lexicographic
/// with `0 < 1`, which on equal-length words coincides with numeric order.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BitWord(Vec<bool>);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid bit {found:?} in binary word (expected '0' or '1')")]
pub struct ParseBitWordError {
    found: char,
}

impl BitWord {
    /// The empty word.
    pub fn empty() -> Self {
        BitWord(Vec::new())
    }

    pub fn from_bits(bits: Vec<bool>) -> Self {
        BitWord(bits)
    }

    /// The word of length `width` whose digits are the binary numeral of
    /// `value`, most significant digit first. `value` must fit in `width` bits.
    pub fn from_index(value: &BigUint, width: usize) -> Self {
        assert!(
            value.bits() as usize <= width,
            "value does not fit in {width} bits"
        );
        let bits = (0..width).rev().map(|i| value.bit(i as u64)).collect();
        BitWord(bits)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn bit(&self, index: usize) -> bool {
        self.0[index]
    }

    pub fn last(&self) -> Option<bool> {
        self.0.last().copied()
    }

    pub fn bits(&self) -> &[bool] {
        &self.0
    }

    pub fn into_bits(self) -> Vec<bool> {
        self.0
    }

    pub fn iter(&self) -> impl Iterator<Item = bool> + '_ {
        self.0.iter().copied()
    }

    /// Reads the word as a big-endian binary numeral; the empty word is 0.
    pub fn to_biguint(&self) -> BigUint {
        let mut acc = BigUint::zero();
        for &b in &self.0 {
            acc <<= 1u8;
            if b {
                acc += 1u8;
            }
        }
        acc
    }

    /// A copy of the word with one digit appended.
    pub fn child(&self, bit: bool) -> Self {
        let mut bits = self.0.clone();
        bits.push(bit);
        BitWord(bits)
    }
}

impl fmt::Display for BitWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.0 {
            f.write_str(if b { "1" } else { "0" })?;
        }
        Ok(())
    }
}

impl FromStr for BitWord {
    type Err = ParseBitWordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        s.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                other => Err(ParseBitWordError { found: other }),
            })
            .collect::<Result<Vec<_>, _>>()
            .map(BitWord)
    }
}
