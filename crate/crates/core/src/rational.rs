//! Exact rational scalars and the `p/q` literal syntax used across the crate.

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

/// The only numeric ground type: an arbitrary-precision rational.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseRationalError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer part {0:?}")]
    InvalidInteger(String),
    #[error("rational literal has zero denominator")]
    ZeroDenominator,
}

/// Parses a rational literal: either an integer (`-3`) or a fraction (`5/8`).
///
/// The result is always in lowest terms with the sign on the numerator,
/// so parsing and re-displaying a value is canonical.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRationalError::Empty);
    }
    let (numer, denom) = match s.split_once('/') {
        Some((n, d)) => (parse_bigint(n)?, parse_bigint(d)?),
        None => (parse_bigint(s)?, BigInt::from(1)),
    };
    if denom.is_zero() {
        return Err(ParseRationalError::ZeroDenominator);
    }
    Ok(Rational::new(numer, denom))
}

fn parse_bigint(s: &str) -> Result<BigInt, ParseRationalError> {
    let s = s.trim();
    s.parse()
        .map_err(|_| ParseRationalError::InvalidInteger(s.to_owned()))
}

/// Shorthand for small rational constants.
pub fn ratio(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("7").unwrap(), ratio(7, 1));
        assert_eq!(parse_rational("-3/6").unwrap(), ratio(-1, 2));
        assert_eq!(parse_rational(" 10/4 ").unwrap(), ratio(5, 2));
    }

    #[test]
    fn display_is_reduced() {
        assert_eq!(parse_rational("6/8").unwrap().to_string(), "3/4");
        assert_eq!(parse_rational("8/4").unwrap().to_string(), "2");
        assert_eq!(parse_rational("-1/2").unwrap().to_string(), "-1/2");
    }

    #[test]
    fn rejects_malformed_literals() {
        assert!(matches!(parse_rational(""), Err(ParseRationalError::Empty)));
        assert!(matches!(
            parse_rational("1/0"),
            Err(ParseRationalError::ZeroDenominator)
        ));
        assert!(parse_rational("a/b").is_err());
        assert!(parse_rational("1/2/3").is_err());
    }
}
