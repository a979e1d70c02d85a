//! Exact rationals. `BigRational` keeps values in lowest terms with a positive
//! denominator, which is all the variety code needs.

use alloc::format;
use core::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `num/den`; panics on a zero denominator.
pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn zero() -> Rational {
    Rational::zero()
}

pub fn one() -> Rational {
    Rational::one()
}

/// Parses `a`, `-a`, or `a/b` (b nonzero).
pub fn parse(s: &str) -> Result<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational".into()));
    }
    if let Some((n, d)) = s.split_once('/') {
        let n = BigInt::from_str(n.trim()).map_err(|_| Error::Parse(format!("bad numerator in {s:?}")))?;
        let d = BigInt::from_str(d.trim()).map_err(|_| Error::Parse(format!("bad denominator in {s:?}")))?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
        Ok(Rational::new(n, d))
    } else {
        BigInt::from_str(s)
            .map(Rational::from_integer)
            .map_err(|_| Error::Parse(format!("bad rational {s:?}")))
    }
}

/// Integer value if the rational is integral.
pub fn as_integer(x: &Rational) -> Option<BigInt> {
    x.is_integer().then(|| x.to_integer())
}

pub fn as_i64(x: &Rational) -> Option<i64> {
    use num_traits::ToPrimitive;
    as_integer(x).and_then(|n| n.to_i64())
}

pub fn is_positive(x: &Rational) -> bool {
    x.is_positive()
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn parse_forms() {
        assert_eq!(parse("5/3").unwrap(), frac(5, 3));
        assert_eq!(parse("-4").unwrap(), int(-4));
        assert_eq!(parse(" 6/4 ").unwrap(), frac(3, 2));
        assert_eq!(parse("2/-4").unwrap(), frac(-1, 2));
        assert!(parse("1/0").is_err());
        assert!(parse("x").is_err());
        assert!(parse("").is_err());
    }

    #[test]
    fn display_is_lowest_terms() {
        assert_eq!(frac(10, 4).to_string(), "5/2");
        assert_eq!(frac(-6, 3).to_string(), "-2");
    }
}
