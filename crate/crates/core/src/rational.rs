//! Exact rational scalars and their `num/den` text form.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Arbitrary-precision rational, always stored in lowest terms with a
/// positive denominator.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("cannot parse rational from {input:?}")]
pub struct ParseRationalError {
    pub input: String,
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"n"`, `"-n"`, `"n/d"` (whitespace around the slash is allowed) or
/// a plain decimal such as `"-0.25"`, which is read exactly.
pub fn parse_rational(s: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError {
        input: s.to_string(),
    };
    let t = s.trim();
    if let Some((whole, frac)) = t.split_once('.') {
        if t.contains('/') || frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let negative = whole.starts_with('-');
        let digits = whole.trim_start_matches(['-', '+']);
        if !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        let num: BigInt = format!("{digits}{frac}").parse().map_err(|_| err())?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let q = Rational::new(num, den);
        return Ok(if negative { -q } else { q });
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| err())?;
    let den: BigInt = den.parse().map_err(|_| err())?;
    if den.is_zero() {
        return Err(err());
    }
    Ok(Rational::new(num, den))
}

/// Canonical text: `num/den`, with the denominator omitted when it is 1.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// Exact conversion of a finite double into a rational.
pub fn from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

pub fn abs(q: &Rational) -> Rational {
    q.abs()
}
