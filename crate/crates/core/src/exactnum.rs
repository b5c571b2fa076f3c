//! Exact integer and rational arithmetic.
//!
//! Rationals are `num_rational::BigRational`, which keeps every value in
//! lowest terms with a positive denominator (zero is `0/1`). This module adds
//! the number-theoretic helpers and the textual `a/b` format used on the
//! command line and in JSON output.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Exact arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

/// Builds `num/den` in canonical form. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Builds the integer `n` as a rational.
pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Largest `e` with `p^e | n`.
pub fn p_adic_valuation(p: &BigInt, n: &BigInt) -> Result<u64> {
    if n.is_zero() {
        return Err(Error::ValuationOfZero);
    }
    let mut e = 0;
    let mut m = n.abs();
    loop {
        let (q, r) = m.div_rem(p);
        if !r.is_zero() {
            return Ok(e);
        }
        m = q;
        e += 1;
    }
}

/// Greatest odd positive divisor of `n`.
pub fn odd_part(n: &BigInt) -> Result<BigInt> {
    if !n.is_positive() {
        return Err(Error::NotPositive(n.to_string()));
    }
    let shift = n.trailing_zeros().unwrap_or(0);
    Ok(n >> shift)
}

/// Smallest positive integer `m` with `m * r` integral.
pub fn denominator_of(r: &Rational) -> BigInt {
    r.denom().clone()
}

/// `true` when `r` has denominator 1.
pub fn is_integral(r: &Rational) -> bool {
    r.denom().is_one()
}

/// Binomial coefficient `C(n, k)` for naturals.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// Parses `"a"` or `"a/b"` (optional leading sign on `a`, `b` nonzero).
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::ParseRational(text.to_string());
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (t, None),
    };
    let num = parse_integer(num, true).ok_or_else(bad)?;
    let den = match den {
        Some(d) => parse_integer(d, false).ok_or_else(bad)?,
        None => BigInt::one(),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

fn parse_integer(s: &str, signed: bool) -> Option<BigInt> {
    let (negative, digits) = match s.strip_prefix('-') {
        Some(rest) if signed => (true, rest),
        Some(_) => return None,
        None => (false, s.strip_prefix('+').filter(|_| signed).unwrap_or(s)),
    };
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    let magnitude: BigInt = digits.parse().ok()?;
    Some(if negative { -magnitude } else { magnitude })
}

/// Canonical text form: `"a"` for integers, `"a/b"` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Serde adapter writing rationals as their canonical `a/b` strings.
pub mod serde_rational {
    use super::{format_rational, parse_rational, Rational};
    use serde::{de::Error as _, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(r: &Rational, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&format_rational(r))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Rational, D::Error> {
        let text = String::deserialize(d)?;
        parse_rational(&text).map_err(D::Error::custom)
    }
}
