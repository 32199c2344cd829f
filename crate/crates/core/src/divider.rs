//! The finite-depth division tree of the unit rod and its two counting views.
//!
//! Halving the rod `n` times over, every part at once, yields `2^n` parts per
//! generation while the accumulated interior division points number `2^n - 1`.
//! The tree is never materialized: every query is answered by label
//! arithmetic on [`BitWord`]s, so `expand(64)` is as cheap as `expand(3)`.

use num_bigint::{BigInt, BigUint};
use num_traits::One;

use crate::bitword::BitWord;
use crate::rational::Rational;

/// A dyadic subinterval of the unit rod, named by the word that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DyadicInterval {
    lower: Rational,
    upper: Rational,
}

impl DyadicInterval {
    pub fn lower(&self) -> &Rational {
        &self.lower
    }

    pub fn upper(&self) -> &Rational {
        &self.upper
    }

    pub fn width(&self) -> Rational {
        &self.upper - &self.lower
    }

    pub fn midpoint(&self) -> Rational {
        (&self.lower + &self.upper) / Rational::from_integer(BigInt::from(2))
    }
}

/// The full binary division tree of a given depth.
///
/// Only the depth is stored; nodes are the implicit set of all words of
/// length at most `depth`, and leaves the words of exactly that length.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DivisionTree {
    depth: u32,
}

impl DivisionTree {
    /// Divides the unit rod through and through, `depth` generations deep.
    pub fn expand(depth: u32) -> Self {
        DivisionTree { depth }
    }

    pub fn depth(&self) -> u32 {
        self.depth
    }

    /// `2^depth` leaves.
    pub fn leaf_count(&self) -> BigUint {
        BigUint::one() << self.depth
    }

    /// `2^(depth+1) - 1` nodes of all generations combined.
    pub fn node_count(&self) -> BigUint {
        (BigUint::one() << (self.depth as u64 + 1)) - BigUint::one()
    }

    /// `2^depth - 1` interior division points accumulated so far.
    pub fn interior_point_count(&self) -> BigUint {
        self.leaf_count() - BigUint::one()
    }

    /// Leaf labels in lexicographic order: all words of length `depth`.
    pub fn leaves(&self) -> Leaves {
        Leaves {
            next: Some(vec![false; self.depth as usize]),
        }
    }

    /// Leaf labels paired with their intervals, in left-to-right order.
    pub fn leaf_intervals(&self) -> impl Iterator<Item = (BitWord, DyadicInterval)> {
        self.leaves().map(|w| {
            let interval = leaf_interval(&w);
            (w, interval)
        })
    }
}

/// Iterator over all words of a fixed length, counting upward.
pub struct Leaves {
    next: Option<Vec<bool>>,
}

impl Iterator for Leaves {
    type Item = BitWord;

    fn next(&mut self) -> Option<BitWord> {
        let current = self.next.take()?;
        let word = BitWord::from_bits(current.clone());
        let mut bits = current;
        // Binary increment; carry past the top digit exhausts the level.
        let mut done = true;
        for b in bits.iter_mut().rev() {
            if *b {
                *b = false;
            } else {
                *b = true;
                done = false;
                break;
            }
        }
        if !done {
            self.next = Some(bits);
        }
        Some(word)
    }
}

/// The two counts attached to generation `n`: division points and parts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counts {
    /// Interior division points accumulated through generation `n`: `2^n - 1`.
    pub partitions: BigUint,
    /// Parts present in generation `n`: `2^n`.
    pub parts: BigUint,
}

/// Partition and part counts for generation `n`, exact at any depth.
pub fn counts(n: u32) -> Counts {
    let parts = BigUint::one() << n;
    Counts {
        partitions: &parts - BigUint::one(),
        parts,
    }
}

/// The subinterval of `[0, 1]` named by `word`.
///
/// The lower endpoint is the binary place value of the digits and the width
/// is `2^-len`, so adjacent leaves of equal length share exactly one endpoint.
pub fn leaf_interval(word: &BitWord) -> DyadicInterval {
    let len = word.len();
    let denom = BigInt::one() << len;
    let numer = BigInt::from(word.to_biguint());
    DyadicInterval {
        lower: Rational::new(numer.clone(), denom.clone()),
        upper: Rational::new(numer + BigInt::one(), denom),
    }
}

/// The point created when part `word` is split: the midpoint of its interval,
/// a dyadic rational with denominator `2^(len+1)`.
pub fn division_point(word: &BitWord) -> Rational {
    let numer = BigInt::from(word.to_biguint()) * BigInt::from(2) + BigInt::one();
    Rational::new(numer, BigInt::one() << (word.len() + 1))
}
