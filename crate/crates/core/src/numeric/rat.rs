//! Arbitrary-precision rationals and their exact string encoding.

use crate::error::{Error, Result};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Exact rational number; always stored in lowest terms with a positive denominator.
pub type Rat = BigRational;

pub fn rat(numer: i64, denom: i64) -> Rat {
    Rat::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Encodes as `"num/den"`, denominator always written.
pub fn format_rat(r: &Rat) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `"n"`, `"n/d"` or signed variants. Whitespace is ignored.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    let bad = || Error::Parse(format!("malformed rational {s:?}"));
    match t.split_once('/') {
        None => t.parse::<BigInt>().map(Rat::from_integer).map_err(|_| bad()),
        Some((n, d)) => {
            let n = n.parse::<BigInt>().map_err(|_| bad())?;
            let d = d.parse::<BigInt>().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(Error::DivisionByZero);
            }
            Ok(Rat::new(n, d))
        }
    }
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Nearest integer, ties rounded away from zero.
pub fn round_rat(r: &Rat) -> BigInt {
    (r + r.signum() * rat(1, 2)).trunc().to_integer()
}

pub fn to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Serializes a rational as its `"num/den"` string.
pub fn serialize_rat<S: serde::Serializer>(r: &Rat, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rat(r))
}

pub fn serialize_opt_rat<S: serde::Serializer>(
    r: &Option<Rat>,
    s: S,
) -> std::result::Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.serialize_str(&format_rat(r)),
        None => s.serialize_none(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("3").unwrap(), rat_int(3));
        assert_eq!(parse_rat("-6/4").unwrap(), rat(-3, 2));
        assert_eq!(format_rat(&rat(-3, 2)), "-3/2");
        assert_eq!(format_rat(&rat_int(0)), "0/1");
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("x").is_err());
        assert!(parse_rat("").is_err());
    }

    #[test]
    fn rounding() {
        assert_eq!(round_rat(&rat(1, 2)), BigInt::from(1));
        assert_eq!(round_rat(&rat(-1, 2)), BigInt::from(-1));
        assert_eq!(round_rat(&rat(2, 5)), BigInt::from(0));
        assert_eq!(round_rat(&rat(-7, 3)), BigInt::from(-2));
        assert_eq!(round_rat(&rat(8, 3)), BigInt::from(3));
        assert_eq!(round_rat(&rat_int(5)), BigInt::from(5));
    }
}
