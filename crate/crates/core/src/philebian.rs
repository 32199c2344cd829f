//! Eventually periodic elements of the binary sequence space, exactly.
//!
//! A sequence is stored as a finite prefix plus a nonempty repeating period
//! and kept in a canonical normal form, so structural equality coincides with
//! bitwise equality of the infinite expansions. The lexicographic order is
//! total and decidable; the valuation maps a sequence to the rational it
//! denotes in `[0, 1]`. Dyadic rationals are the only values with two
//! representations (an all-ones tail and an all-zeros tail), and those two
//! are lexicographically adjacent: nothing lies strictly between them.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::bitword::BitWord;
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeqError {
    #[error("period must be nonempty")]
    EmptyPeriod,
    #[error("sequence literal {0:?} is not of the form prefix:(period)")]
    MalformedLiteral(String),
    #[error("value {0} lies outside the unit interval")]
    ValueOutOfRange(Rational),
    #[error("{k}/2^{n} is not strictly between 0 and 1")]
    DyadicOutOfRange { k: BigUint, n: u32 },
    #[error("witness endpoints must satisfy x < y lexicographically")]
    WitnessOrder,
    #[error("witness endpoints must both lie in class A")]
    WitnessClass,
    #[error("threshold must be positive, got {0}")]
    EpsilonNotPositive(Rational),
    #[error("values must be strictly increasing")]
    ValuesNotIncreasing,
}

/// Which side of the canonical choice a sequence falls on.
///
/// `B` holds exactly the sequences with an all-ones tail; `A` is everything
/// else, one representative per point of the unit interval.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AbClass {
    A,
    B,
}

impl fmt::Display for AbClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AbClass::A => "A",
            AbClass::B => "B",
        })
    }
}

/// An eventually periodic binary sequence in normal form.
///
/// Normalization makes the period primitive (not a repetition of a shorter
/// word) and the prefix minimal (its last digit never equals the period's
/// last digit, else the digit could be absorbed into the cycle). Two values
/// are equal as infinite sequences iff their normal forms are identical.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PhilebianSeq {
    prefix: BitWord,
    period: BitWord,
}

impl PhilebianSeq {
    pub fn new(prefix: BitWord, period: BitWord) -> Result<Self, SeqError> {
        if period.is_empty() {
            return Err(SeqError::EmptyPeriod);
        }
        let mut prefix = prefix.into_bits();
        let mut period = period.into_bits();

        // Primitive period: keep the shortest word whose repetition equals it.
        let m = period.len();
        for d in 1..m {
            if m.is_multiple_of(d) && (d..m).all(|i| period[i] == period[i - d]) {
                period.truncate(d);
                break;
            }
        }

        // Minimal prefix: a trailing digit equal to the period's last digit
        // belongs to the cycle, rotated one place.
        while !prefix.is_empty() && prefix.last() == period.last() {
            prefix.pop();
            let last = period.pop().expect("period stays nonempty");
            period.insert(0, last);
        }

        Ok(PhilebianSeq {
            prefix: BitWord::from_bits(prefix),
            period: BitWord::from_bits(period),
        })
    }

    /// The constant-zero sequence, value 0.
    pub fn zeros() -> Self {
        PhilebianSeq {
            prefix: BitWord::empty(),
            period: BitWord::from_bits(vec![false]),
        }
    }

    pub fn prefix(&self) -> &BitWord {
        &self.prefix
    }

    pub fn period(&self) -> &BitWord {
        &self.period
    }

    /// Digit `k` of the infinite expansion, defined for every `k >= 0`.
    pub fn bit(&self, k: usize) -> bool {
        let p = self.prefix.len();
        if k < p {
            self.prefix.bit(k)
        } else {
            self.period.bit((k - p) % self.period.len())
        }
    }

    /// The rational this sequence denotes: the sum of `digit(k) * 2^-(k+1)`,
    /// folded into closed form through the geometric series of the period.
    pub fn value(&self) -> Rational {
        let p = self.prefix.len();
        let m = self.period.len();
        let prefix_int = BigInt::from(self.prefix.to_biguint());
        let period_int = BigInt::from(self.period.to_biguint());
        let cycle_denom = (BigInt::one() << m) - BigInt::one();
        let numer = prefix_int * &cycle_denom + period_int;
        Rational::new(numer, cycle_denom << p)
    }

    /// `B` iff the sequence ends in ones forever; in normal form that is
    /// exactly a period of `1`.
    pub fn classify(&self) -> AbClass {
        if self.period.bits() == [true] {
            AbClass::B
        } else {
            AbClass::A
        }
    }

    /// The chosen representative of this sequence's value: class `B` members
    /// map to the equal-valued all-zeros-tail form, class `A` members are
    /// returned unchanged. Idempotent and value-preserving.
    ///
    /// The all-ones sequence is the unique expansion of 1, with no
    /// zeros-tail form to choose, so it is its own representative.
    pub fn canonical(&self) -> PhilebianSeq {
        match self.classify() {
            AbClass::A => self.clone(),
            AbClass::B if self.prefix.is_empty() => self.clone(),
            AbClass::B => {
                // A normalized B prefix never ends in 1: flipping its last
                // digit carries the all-ones tail over into an all-zeros
                // tail of equal value.
                let mut bits = self.prefix.bits().to_vec();
                *bits.last_mut().expect("prefix is nonempty") = true;
                PhilebianSeq::new(BitWord::from_bits(bits), BitWord::from_bits(vec![false]))
                    .expect("period is nonempty")
            }
        }
    }

    /// The canonical sequence denoting `value`, for `value` in `[0, 1]`:
    /// the class-A form below 1, the all-ones sequence at 1.
    ///
    /// Long division of the numerator by the denominator produces the digits;
    /// the remainders range over a finite set, so the expansion is eventually
    /// periodic and the cycle is detected exactly.
    pub fn from_value(value: &Rational) -> Result<Self, SeqError> {
        if value.is_negative() || value > &Rational::one() {
            return Err(SeqError::ValueOutOfRange(value.clone()));
        }
        if value == &Rational::one() {
            return PhilebianSeq::new(BitWord::empty(), BitWord::from_bits(vec![true]));
        }
        let denom = value.denom().clone();
        let mut remainder = value.numer().clone();
        let mut digits: Vec<bool> = Vec::new();
        let mut seen: HashMap<BigInt, usize> = HashMap::new();
        loop {
            if let Some(&start) = seen.get(&remainder) {
                let period = digits.split_off(start);
                return PhilebianSeq::new(BitWord::from_bits(digits), BitWord::from_bits(period));
            }
            seen.insert(remainder.clone(), digits.len());
            remainder *= 2;
            if remainder >= denom {
                digits.push(true);
                remainder -= &denom;
            } else {
                digits.push(false);
            }
        }
    }
}

impl Ord for PhilebianSeq {
    /// First-difference comparison. Two normalized sequences that agree on
    /// every position up to `max(prefix lengths) + lcm(period lengths)` agree
    /// everywhere, so the scan is bounded.
    fn cmp(&self, other: &Self) -> Ordering {
        if self == other {
            return Ordering::Equal;
        }
        let bound =
            self.prefix.len().max(other.prefix.len()) + self.period.len().lcm(&other.period.len());
        for k in 0..bound {
            match (self.bit(k), other.bit(k)) {
                (false, true) => return Ordering::Less,
                (true, false) => return Ordering::Greater,
                _ => {}
            }
        }
        debug_assert!(false, "distinct normal forms must differ within the bound");
        Ordering::Equal
    }
}

impl PartialOrd for PhilebianSeq {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for PhilebianSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:({})", self.prefix, self.period)
    }
}

impl FromStr for PhilebianSeq {
    type Err = SeqError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let malformed = || SeqError::MalformedLiteral(s.to_owned());
        let (prefix, period) = s.split_once(':').ok_or_else(malformed)?;
        let period = period
            .strip_prefix('(')
            .and_then(|p| p.strip_suffix(')'))
            .ok_or_else(malformed)?;
        let prefix: BitWord = prefix.parse().map_err(|_| malformed())?;
        let period: BitWord = period.parse().map_err(|_| malformed())?;
        PhilebianSeq::new(prefix, period)
    }
}

/// The two representations of a dyadic rational: lexicographically adjacent,
/// equal in value.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoublePair {
    lower: PhilebianSeq,
    upper: PhilebianSeq,
}

impl DoublePair {
    /// The all-ones-tail form `w0(1)`, the smaller of the two.
    pub fn lower(&self) -> &PhilebianSeq {
        &self.lower
    }

    /// The all-zeros-tail form `w1(0)`, the larger of the two.
    pub fn upper(&self) -> &PhilebianSeq {
        &self.upper
    }

    pub fn value(&self) -> Rational {
        self.upper.value()
    }
}

/// The double pair of `k / 2^n`. Non-reduced inputs are reduced first; the
/// reduced fraction must lie strictly between 0 and 1.
pub fn dyadic_pair(k: &BigUint, n: u32) -> Result<DoublePair, SeqError> {
    let out_of_range = || SeqError::DyadicOutOfRange { k: k.clone(), n };
    let mut k_red = k.clone();
    let mut n_red = n;
    if k_red.is_zero() {
        return Err(out_of_range());
    }
    while k_red.is_even() && n_red > 0 {
        k_red >>= 1;
        n_red -= 1;
    }
    if n_red == 0 || k_red.bits() > u64::from(n_red) {
        return Err(out_of_range());
    }

    // The terminating expansion of k/2^n, n digits, ends in 1.
    let word = BitWord::from_index(&k_red, n_red as usize);
    let mut lower_prefix = word.bits().to_vec();
    *lower_prefix.last_mut().expect("n >= 1") = false;

    let lower = PhilebianSeq::new(
        BitWord::from_bits(lower_prefix),
        BitWord::from_bits(vec![true]),
    )?;
    let upper = PhilebianSeq::new(word, BitWord::from_bits(vec![false]))?;
    debug_assert_eq!(lower.value(), upper.value());
    debug_assert!(lower < upper);
    Ok(DoublePair { lower, upper })
}

/// A class-A sequence strictly between `x` and `y`.
///
/// On class A the lexicographic order agrees with the valuation, so the
/// expansion of the value midpoint is such a witness.
pub fn density_witness(x: &PhilebianSeq, y: &PhilebianSeq) -> Result<PhilebianSeq, SeqError> {
    if x.classify() == AbClass::B || y.classify() == AbClass::B {
        return Err(SeqError::WitnessClass);
    }
    if x >= y {
        return Err(SeqError::WitnessOrder);
    }
    let midpoint = (x.value() + y.value()) / Rational::from_integer(BigInt::from(2));
    let witness = PhilebianSeq::from_value(&midpoint).expect("midpoint stays in the unit interval");
    debug_assert!(x < &witness && &witness < y);
    Ok(witness)
}

/// True iff no candidate falls strictly between the members of the pair.
/// The library guarantees this holds for every sequence whatsoever; the
/// check makes the claim testable against any finite family.
pub fn gap_check<'a, I>(pair: &DoublePair, candidates: I) -> bool
where
    I: IntoIterator<Item = &'a PhilebianSeq>,
{
    candidates
        .into_iter()
        .all(|m| !(pair.lower() < m && m < pair.upper()))
}

/// Indistinguishability relations among an increasing chain of magnitudes
/// under a perception threshold.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PoincareReport {
    epsilon: Rational,
    values: Vec<Rational>,
    indistinguishable: Vec<(usize, usize)>,
    distinguishable: Vec<(usize, usize)>,
    witnesses: Vec<(usize, usize, usize)>,
}

impl PoincareReport {
    pub fn epsilon(&self) -> &Rational {
        &self.epsilon
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// Consecutive pairs whose difference is within the threshold.
    pub fn indistinguishable(&self) -> &[(usize, usize)] {
        &self.indistinguishable
    }

    /// Non-adjacent pairs whose difference exceeds the threshold.
    pub fn distinguishable(&self) -> &[(usize, usize)] {
        &self.distinguishable
    }

    /// Triples `(i, j, k)` with `v_i ~ v_j`, `v_j ~ v_k` but `v_i < v_k`
    /// distinguishable: the equality-like relation fails to be transitive.
    pub fn witnesses(&self) -> &[(usize, usize, usize)] {
        &self.witnesses
    }

    pub fn intransitive(&self) -> bool {
        !self.witnesses.is_empty()
    }
}

/// Surveys a strictly increasing chain of magnitudes under threshold
/// `epsilon`, flagging every witness of intransitive indistinguishability.
/// Differences equal to `epsilon` count as indistinguishable.
pub fn poincare_chain(epsilon: &Rational, values: &[Rational]) -> Result<PoincareReport, SeqError> {
    if !epsilon.is_positive() {
        return Err(SeqError::EpsilonNotPositive(epsilon.clone()));
    }
    if !values.windows(2).all(|w| w[0] < w[1]) {
        return Err(SeqError::ValuesNotIncreasing);
    }

    let within = |i: usize, j: usize| &values[j] - &values[i] <= *epsilon;
    let n = values.len();

    let indistinguishable: Vec<(usize, usize)> = (1..n)
        .filter(|&j| within(j - 1, j))
        .map(|j| (j - 1, j))
        .collect();

    let mut distinguishable = Vec::new();
    let mut witnesses = Vec::new();
    for i in 0..n {
        for j in i + 2..n {
            if !within(i, j) {
                distinguishable.push((i, j));
            }
        }
        for j in i + 1..n {
            for k in j + 1..n {
                if within(i, j) && within(j, k) && !within(i, k) {
                    witnesses.push((i, j, k));
                }
            }
        }
    }

    Ok(PoincareReport {
        epsilon: epsilon.clone(),
        values: values.to_vec(),
        indistinguishable,
        distinguishable,
        witnesses,
    })
}
