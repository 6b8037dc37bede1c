//! Arbitrary-precision rationals.
//!
//! `Rational` is `num_rational::BigRational`, which is always kept in lowest
//! terms with a positive denominator. This module adds parsing and a few
//! conveniences used throughout the crate.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

pub type Rational = num_rational::BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Parses `INT` or `INT/POSINT` with an optional leading sign.
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), Some(d.trim())),
        None => (s, None),
    };
    let num: BigInt = num.parse().ok()?;
    match den {
        None => Some(Rational::from_integer(num)),
        Some(d) => {
            if d.starts_with('-') || d.starts_with('+') {
                return None;
            }
            let den: BigInt = d.parse().ok()?;
            if den.is_zero() {
                return None;
            }
            Some(Rational::new(num, den))
        }
    }
}

/// `p/q`, or `p` when the denominator is one.
pub fn fmt_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

pub fn factorial(m: usize) -> Rational {
    let mut acc = BigInt::one();
    for k in 2..=m {
        acc *= BigInt::from(k);
    }
    Rational::from_integer(acc)
}

pub(crate) fn max_abs_int(point: &[i64]) -> u64 {
    point.iter().map(|v| v.unsigned_abs()).max().unwrap_or(0)
}

pub(crate) fn is_negative(r: &Rational) -> bool {
    r.is_negative()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("3"), Some(int(3)));
        assert_eq!(parse_rational("-2/4"), Some(frac(-1, 2)));
        assert_eq!(parse_rational(" 6/3 "), Some(int(2)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("1/-2"), None);
        assert_eq!(parse_rational("x"), None);
    }

    #[test]
    fn lowest_terms() {
        let r = frac(6, -4);
        assert_eq!(r.numer(), &BigInt::from(-3));
        assert_eq!(r.denom(), &BigInt::from(2));
        assert_eq!(fmt_rational(&r), "-3/2");
        assert_eq!(fmt_rational(&int(5)), "5");
    }

    #[test]
    fn factorials() {
        assert_eq!(factorial(0), int(1));
        assert_eq!(factorial(5), int(120));
    }
}
