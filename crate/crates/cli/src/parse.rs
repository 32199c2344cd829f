//! Literal parsing and the two error surfaces: usage errors (exit 2) and
//! domain errors (exit 1, structured JSON on stderr).

use num_bigint::BigUint;
use zeno_core::nilpotent::{Dual, DualError, Polynomial};
use zeno_core::paradoxes::ParadoxError;
use zeno_core::philebian::{PhilebianSeq, SeqError};
use zeno_core::rational::{parse_rational, Rational};
use zeno_core::BitWord;

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Domain { kind: &'static str, message: String },
}

fn usage(message: impl ToString) -> CliError {
    CliError::Usage(message.to_string())
}

pub fn rat(s: &str) -> Result<Rational, CliError> {
    parse_rational(s).map_err(usage)
}

pub fn rat_list(s: &str) -> Result<Vec<Rational>, CliError> {
    s.split(',').map(rat).collect()
}

pub fn seq(s: &str) -> Result<PhilebianSeq, CliError> {
    s.parse().map_err(usage)
}

pub fn word(s: &str) -> Result<BitWord, CliError> {
    s.parse().map_err(usage)
}

/// A nilpotent number literal `a,b` with rational components.
pub fn dual(s: &str) -> Result<Dual, CliError> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| usage(format!("dual literal {s:?} is not of the form a,b")))?;
    Ok(Dual::new(rat(a)?, rat(b)?))
}

/// Polynomial coefficients as a comma list, constant term first.
pub fn poly(s: &str) -> Result<Polynomial, CliError> {
    Ok(Polynomial::new(rat_list(s)?))
}

pub fn numerator(s: &str) -> Result<BigUint, CliError> {
    s.trim()
        .parse()
        .map_err(|_| usage(format!("invalid numerator {s:?}")))
}

pub fn seq_domain(err: SeqError) -> CliError {
    let kind = match err {
        SeqError::EmptyPeriod | SeqError::MalformedLiteral(_) => "invalid-sequence",
        SeqError::ValueOutOfRange(_) => "value-out-of-range",
        SeqError::DyadicOutOfRange { .. } => "dyadic-out-of-range",
        SeqError::WitnessOrder => "witness-order",
        SeqError::WitnessClass => "witness-class",
        SeqError::EpsilonNotPositive(_) => "epsilon-not-positive",
        SeqError::ValuesNotIncreasing => "values-not-increasing",
    };
    CliError::Domain {
        kind,
        message: err.to_string(),
    }
}

pub fn dual_domain(err: DualError) -> CliError {
    let kind = match err {
        DualError::ZeroDivisor(_) => "zero-divisor",
    };
    CliError::Domain {
        kind,
        message: err.to_string(),
    }
}

pub fn paradox_domain(err: ParadoxError) -> CliError {
    let kind = match err {
        ParadoxError::ZeroDepth => "zero-depth",
        ParadoxError::RatioNotGreaterThanOne(_) => "ratio-not-greater-than-one",
        ParadoxError::HeadStartNotPositive(_) => "head-start-not-positive",
        ParadoxError::EmptyRow => "empty-row",
        ParadoxError::ZeroTicks => "zero-ticks",
    };
    CliError::Domain {
        kind,
        message: err.to_string(),
    }
}
