//! Exact accounting for the four motion paradoxes.
//!
//! Each simulator reports the stepwise view (a count of partition acts, a
//! partial geometric sum) next to the simultaneous view (a count of parts),
//! with every quantity an exact rational or big integer. No claim is made to
//! resolve anything; the two bookkeepings are simply placed side by side.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParadoxError {
    #[error("depth must be at least 1")]
    ZeroDepth,
    #[error("speed ratio must exceed 1 for the pursuer to close in, got {0}")]
    RatioNotGreaterThanOne(Rational),
    #[error("head start must be positive, got {0}")]
    HeadStartNotPositive(Rational),
    #[error("row length must be at least 1")]
    EmptyRow,
    #[error("tick count must be at least 1")]
    ZeroTicks,
}

/// Halving runs toward a goal: step lengths, what they add up to, and the two
/// counts attached to depth `n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DichotomyReport {
    pub depth: u32,
    /// `1/2, 1/4, ..., 2^-n`.
    pub steps: Vec<Rational>,
    /// `1 - 2^-n`, the distance covered after `n` steps.
    pub cumulative: Rational,
    /// `2^-n`, the distance still to go.
    pub remaining: Rational,
    /// Partition acts performed stepwise: `n`.
    pub partitions: BigUint,
    /// Parts the same depth carves out all at once: `2^n`.
    pub parts: BigUint,
}

/// Runs the halving to depth `n >= 1`, summing exactly.
pub fn dichotomy(n: u32) -> Result<DichotomyReport, ParadoxError> {
    if n == 0 {
        return Err(ParadoxError::ZeroDepth);
    }
    let steps: Vec<Rational> = (1..=n)
        .map(|i| Rational::new(BigInt::one(), BigInt::one() << i))
        .collect();
    let cumulative = steps.iter().fold(Rational::zero(), |acc, step| acc + step);
    let remaining = Rational::new(BigInt::one(), BigInt::one() << n);
    Ok(DichotomyReport {
        depth: n,
        steps,
        cumulative,
        remaining,
        partitions: BigUint::from(n),
        parts: BigUint::one() << n,
    })
}

/// The pursuit: catch-up points, each short of the limit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AchillesReport {
    pub ratio: Rational,
    pub head_start: Rational,
    /// `p_0 = s`, then `p_i = s · (1 + 1/r + ... + 1/r^i)`.
    pub points: Vec<Rational>,
    /// `s·r/(r-1)`, approached but never attained at any finite stage.
    pub limit: Rational,
}

/// Runs `k` pursuit stages at speed ratio `r > 1` and head start `s > 0`.
pub fn achilles(r: &Rational, s: &Rational, k: u32) -> Result<AchillesReport, ParadoxError> {
    if r <= &Rational::one() {
        return Err(ParadoxError::RatioNotGreaterThanOne(r.clone()));
    }
    if !s.is_positive() {
        return Err(ParadoxError::HeadStartNotPositive(s.clone()));
    }
    let mut points = Vec::with_capacity(k as usize + 1);
    let mut gain = s.clone();
    let mut total = s.clone();
    points.push(total.clone());
    for _ in 0..k {
        gain /= r;
        total += &gain;
        points.push(total.clone());
    }
    let limit = s * r / (r - Rational::one());
    Ok(AchillesReport {
        ratio: r.clone(),
        head_start: s.clone(),
        points,
        limit,
    })
}

/// Three rows of unit bodies after `k` unit ticks: one at rest, two moving
/// oppositely. Passings count body-widths of relative slippage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StadiumReport {
    pub row_length: u32,
    pub ticks: u32,
    pub offset_a: i64,
    pub offset_b: i64,
    pub offset_c: i64,
    /// Bodies of the counter-moving row a moving body has drawn past: `2k`.
    pub passings_b_vs_c: u64,
    /// Bodies of the resting row the same body has drawn past: `k`.
    pub passings_b_vs_a: u64,
}

impl StadiumReport {
    /// "Half a given time is equal to its double": exactly 2.
    pub fn ratio(&self) -> Rational {
        Rational::new(
            BigInt::from(self.passings_b_vs_c),
            BigInt::from(self.passings_b_vs_a),
        )
    }
}

/// Ticks the three rows forward one body-width at a time, accumulating
/// relative passings as they happen.
pub fn stadium(row_length: u32, ticks: u32) -> Result<StadiumReport, ParadoxError> {
    if row_length == 0 {
        return Err(ParadoxError::EmptyRow);
    }
    if ticks == 0 {
        return Err(ParadoxError::ZeroTicks);
    }
    let mut offset_b: i64 = 0;
    let mut offset_c: i64 = 0;
    let offset_a: i64 = 0;
    let mut passings_b_vs_c: u64 = 0;
    let mut passings_b_vs_a: u64 = 0;
    for _ in 0..ticks {
        let prev_b = offset_b;
        let prev_c = offset_c;
        offset_b += 1;
        offset_c -= 1;
        passings_b_vs_a += offset_b.abs_diff(prev_b);
        passings_b_vs_c += (offset_b - offset_c).abs_diff(prev_b - prev_c);
    }
    Ok(StadiumReport {
        row_length,
        ticks,
        offset_a,
        offset_b,
        offset_c,
        passings_b_vs_c,
        passings_b_vs_a,
    })
}

/// The arrow at depth `n`: each part has width `2^-n`, there are `2^n` of
/// them, and the aggregate is the unit whatever the depth.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ArrowReport {
    pub depth: u32,
    pub width: Rational,
    pub count: BigUint,
    pub product: Rational,
}

pub fn arrow(n: u32) -> ArrowReport {
    let width = Rational::new(BigInt::one(), BigInt::one() << n);
    let count = BigUint::one() << n;
    let product = &width * Rational::from_integer(BigInt::from(count.clone()));
    ArrowReport {
        depth: n,
        width,
        count,
        product,
    }
}
