//! Exact rational scalars and their `"p/q"` text form.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::LinalgError;

/// The ground field. Always in lowest terms with a positive denominator.
pub type Scalar = BigRational;

pub fn int(n: i64) -> Scalar {
  Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> Scalar {
  Scalar::new(BigInt::from(p), BigInt::from(q))
}

pub fn zero() -> Scalar {
  Scalar::zero()
}

pub fn one() -> Scalar {
  Scalar::one()
}

/// Parses `"p"`, `"-p"`, `"p/q"` or `"-p/q"`. Whitespace around the literal is ignored;
/// decimal points and exponents are rejected.
pub fn parse_scalar(text: &str) -> Result<Scalar, LinalgError> {
  let trimmed = text.trim();
  let bad = || LinalgError::ScalarParse(text.to_string());
  let (num, den) = match trimmed.split_once('/') {
    Some((n, d)) => (n.trim(), Some(d.trim())),
    None => (trimmed, None),
  };
  let num = BigInt::from_str(num).map_err(|_| bad())?;
  let den = match den {
    Some(d) => BigInt::from_str(d).map_err(|_| bad())?,
    None => BigInt::one(),
  };
  if den.is_zero() || den.is_negative() {
    return Err(bad());
  }
  Ok(Scalar::new(num, den))
}

/// Renders `p` for integers and `p/q` otherwise.
pub fn format_scalar(value: &Scalar) -> String {
  if value.is_integer() {
    value.numer().to_string()
  } else {
    format!("{}/{}", value.numer(), value.denom())
  }
}

#[cfg(test)]
mod tests {
  use proptest::prelude::*;

  use super::*;

  #[test]
  fn parses_the_usual_forms() {
    assert_eq!(parse_scalar("3").unwrap(), int(3));
    assert_eq!(parse_scalar("-1/2").unwrap(), ratio(-1, 2));
    assert_eq!(parse_scalar(" 4/6 ").unwrap(), ratio(2, 3));
    assert!(parse_scalar("1.5").is_err());
    assert!(parse_scalar("1/0").is_err());
    assert!(parse_scalar("1/-2").is_err());
    assert!(parse_scalar("").is_err());
  }

  #[test]
  fn formats_in_lowest_terms() {
    assert_eq!(format_scalar(&ratio(6, -4)), "-3/2");
    assert_eq!(format_scalar(&int(0)), "0");
    assert_eq!(format_scalar(&ratio(8, 4)), "2");
  }

  proptest! {
    #[test]
    fn text_round_trip(p in -10_000i64..10_000, q in 1i64..10_000) {
      let x = ratio(p, q);
      prop_assert_eq!(parse_scalar(&format_scalar(&x)).unwrap(), x);
    }
  }
}
