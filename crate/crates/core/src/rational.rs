//! Exact rational helpers.

use alloc::format;
use alloc::string::String;
use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn from_int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn from_big(v: &BigUint) -> Rational {
    Rational::from_integer(BigInt::from(v.clone()))
}

pub fn half() -> Rational {
    ratio(1, 2)
}

/// `p/q` rendering used by every serialized document; integers get an
/// explicit `/1`.
pub fn to_pq(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Parses `p/q`, `p`, or a finite decimal like `0.25`.
pub fn parse(s: &str) -> Option<Rational> {
    let s = s.trim();
    if let Some((p, q)) = s.split_once('/') {
        let p: BigInt = p.trim().parse().ok()?;
        let q: BigInt = q.trim().parse().ok()?;
        if q.is_zero() {
            return None;
        }
        return Some(Rational::new(p, q));
    }
    if let Some((int, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int.starts_with('-');
        let int_part: BigInt = if int.is_empty() || int == "-" {
            BigInt::zero()
        } else {
            int.parse().ok()?
        };
        let scale = num_traits::pow(BigInt::from(10u32), frac.len());
        let frac_part: BigInt = frac.parse().ok()?;
        let mut num = int_part.abs() * &scale + frac_part;
        if negative {
            num = -num;
        }
        return Some(Rational::new(num, scale));
    }
    let v: BigInt = s.parse().ok()?;
    Some(Rational::from_integer(v))
}

pub fn pow(base: &Rational, exp: u32) -> Rational {
    num_traits::pow(base.clone(), exp as usize)
}

/// Nearest `f64`, for display only.
pub fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pq_format_is_lowest_terms() {
        assert_eq!(to_pq(&ratio(6, 20)), "3/10");
        assert_eq!(to_pq(&ratio(4, 2)), "2/1");
        assert_eq!(to_pq(&ratio(0, 7)), "0/1");
        assert_eq!(to_pq(&ratio(1, -2)), "-1/2");
    }

    #[test]
    fn parse_forms() {
        assert_eq!(parse("1/100"), Some(ratio(1, 100)));
        assert_eq!(parse(" 3 "), Some(from_int(3)));
        assert_eq!(parse("0.25"), Some(ratio(1, 4)));
        assert_eq!(parse("-0.5"), Some(ratio(-1, 2)));
        assert_eq!(parse("1/0"), None);
        assert_eq!(parse("x"), None);
    }
}
