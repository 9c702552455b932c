//! Exact rational scalars and their canonical text form.
//!
//! Amounts, prices and cut coefficients are arbitrary-precision rationals.
//! The text form accepted on input is either a decimal string (`"57.5"`) or
//! a fraction literal (`"115/2"`); the canonical emitted form is the reduced
//! fraction `"p/q"`, with integers printed as plain `"n"`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;

pub type Rat = BigRational;

/// Shorthand for an integer-valued rational.
pub fn rat(n: i64) -> Rat {
    BigRational::from_integer(BigInt::from(n))
}

/// Shorthand for `n/d`.
pub fn ratio(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn is_integer(r: &Rat) -> bool {
    r.denom().is_one()
}

/// Parse `"57.5"`, `"-3"`, or `"115/2"` into a rational.
pub fn parse_rat(s: &str) -> Result<Rat, Error> {
    let s = s.trim();
    if s.is_empty() {
        return Err(Error::Parse("empty rational literal".into()));
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad numerator in rational literal `{s}`")))?;
        let d: BigInt = den
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("bad denominator in rational literal `{s}`")))?;
        if d.is_zero() {
            return Err(Error::Parse(format!("zero denominator in `{s}`")));
        }
        return Ok(BigRational::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        let negative = int_part.trim_start().starts_with('-');
        let int_part = if int_part.is_empty() || int_part == "-" {
            "0"
        } else {
            int_part
        };
        let i: BigInt = int_part
            .parse()
            .map_err(|_| Error::Parse(format!("bad decimal literal `{s}`")))?;
        if frac_part.is_empty() {
            return Ok(BigRational::from_integer(i));
        }
        if !frac_part.chars().all(|c| c.is_ascii_digit()) {
            return Err(Error::Parse(format!("bad decimal literal `{s}`")));
        }
        let f: BigInt = frac_part
            .parse()
            .map_err(|_| Error::Parse(format!("bad decimal literal `{s}`")))?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let frac = BigRational::new(f, scale);
        let int = BigRational::from_integer(i.abs());
        let abs = int + frac;
        return Ok(if negative { -abs } else { abs });
    }
    let i: BigInt = s
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational literal `{s}`")))?;
    Ok(BigRational::from_integer(i))
}

/// Canonical reduced form: `"p/q"`, integers as `"n"`.
pub fn format_rat(r: &Rat) -> String {
    if is_integer(r) {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_decimal_and_fraction_forms() {
        assert_eq!(parse_rat("57.5").unwrap(), ratio(115, 2));
        assert_eq!(parse_rat("115/2").unwrap(), ratio(115, 2));
        assert_eq!(parse_rat("12").unwrap(), rat(12));
        assert_eq!(parse_rat("-0.25").unwrap(), ratio(-1, 4));
        assert_eq!(parse_rat("0.500").unwrap(), ratio(1, 2));
    }

    #[test]
    fn canonical_form_is_reduced() {
        assert_eq!(format_rat(&ratio(115, 2)), "115/2");
        assert_eq!(format_rat(&ratio(4, 2)), "2");
        assert_eq!(format_rat(&rat(-7)), "-7");
        assert_eq!(format_rat(&ratio(-3, 6)), "-1/2");
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_rat("").is_err());
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("abc").is_err());
        assert!(parse_rat("1.2.3").is_err());
    }
}
