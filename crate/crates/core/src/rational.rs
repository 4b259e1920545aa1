//! Exact rational scalars and the handful of helpers every module leans on.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The single scalar type of the library.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// `(-1)^e` for any integer exponent.
pub fn sign(e: i64) -> Rational {
    if e.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

/// `1/s!`, with the convention that it vanishes for negative `s`.
pub fn inv_factorial(s: i64) -> Rational {
    if s < 0 {
        Rational::zero()
    } else {
        Rational::new(BigInt::one(), factorial(s as u32))
    }
}

/// Formats as `p/q` with `q > 0` and `gcd(p, q) = 1`; integers print bare.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    match s.split_once('/') {
        Some((p, q)) => {
            let p: BigInt = p.trim().parse().map_err(|_| bad())?;
            let q: BigInt = q.trim().parse().map_err(|_| bad())?;
            if q.is_zero() {
                return Err(bad());
            }
            Ok(Rational::new(p, q))
        }
        None => {
            let p: BigInt = s.parse().map_err(|_| bad())?;
            Ok(Rational::from_integer(p))
        }
    }
}

/// Term prefix used when printing linear combinations: `""`, `"-"`, `"3/2*"`.
pub(crate) fn coefficient_prefix(c: &Rational) -> (bool, String) {
    let negative = c.is_negative();
    let mag = c.abs();
    if mag.is_one() {
        (negative, String::new())
    } else {
        (negative, format!("{}*", format_rational(&mag)))
    }
}

/// Joins `(coefficient, rendered basis element)` pairs as `a + 2*b - c`.
pub(crate) fn format_combination<'a, I>(terms: I) -> String
where
    I: IntoIterator<Item = (&'a Rational, String)>,
{
    let mut out = String::new();
    for (i, (c, body)) in terms.into_iter().enumerate() {
        let (negative, prefix) = coefficient_prefix(c);
        match (i, negative) {
            (0, false) => {}
            (0, true) => out.push('-'),
            (_, false) => out.push_str(" + "),
            (_, true) => out.push_str(" - "),
        }
        out.push_str(&prefix);
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

pub mod serde_rational {
    use super::{format_rational, parse_rational, Rational};
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let s = String::deserialize(d)?;
        parse_rational(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting_is_reduced_with_positive_denominator() {
        assert_eq!(format_rational(&frac(6, -4)), "-3/2");
        assert_eq!(format_rational(&frac(4, 2)), "2");
        assert_eq!(format_rational(&int(0)), "0");
        assert_eq!(parse_rational(" -3/2 ").unwrap(), frac(-3, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn negative_factorials_vanish() {
        assert_eq!(inv_factorial(-1), int(0));
        assert_eq!(inv_factorial(0), int(1));
        assert_eq!(inv_factorial(4), frac(1, 24));
    }

    #[test]
    fn combination_rendering() {
        let a = int(1);
        let b = frac(-3, 2);
        let s = format_combination(vec![(&a, "(2)".to_string()), (&b, "(1,1)".to_string())]);
        assert_eq!(s, "(2) - 3/2*(1,1)");
        assert_eq!(format_combination(Vec::<(&Rational, String)>::new()), "0");
    }
}
