//! Exact scalars and the few conversions the rest of the crate needs.

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational number in lowest terms.
pub type Rational = BigRational;

/// Denominator used for outward n-th root bounds.
pub const ROOT_BOUND_DENOMINATOR: u64 = 1_000_000_000_000;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `p`, `-p`, `p/q`. Whitespace around the tokens is ignored.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let t = text.trim();
    if t.is_empty() {
        return Err(Error::EmptyInput);
    }
    let (num, den) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::parse(0, format!("bad rational numerator in {t:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::parse(0, format!("bad rational denominator in {t:?}")))?;
    if den.is_zero() {
        return Err(Error::parse(0, "zero denominator"));
    }
    Ok(Rational::new(num, den))
}

/// Exact `p/q` rendering (`p` when the value is an integer).
pub fn format_rational(r: &Rational) -> String {
    r.to_string()
}

/// Decimal rendering with `digits` significant digits, round-half-even.
/// Positional notation for moderate magnitudes, scientific otherwise.
pub fn to_decimal(r: &Rational, digits: u32) -> String {
    assert!(digits >= 1);
    if r.is_zero() {
        return "0".to_string();
    }
    let negative = r.is_negative();
    let a = r.abs();
    // Find k with 10^(digits-1) <= a * 10^k < 10^digits.
    let lower = BigInt::from(10u32).pow(digits - 1);
    let upper = BigInt::from(10u32).pow(digits);
    let mut k: i64 = digits as i64 - 1 - estimate_log10(&a);
    let mut scaled;
    loop {
        scaled = scale_pow10(&a, k);
        if scaled < Rational::from_integer(lower.clone()) {
            k += 1;
        } else if scaled >= Rational::from_integer(upper.clone()) {
            k -= 1;
        } else {
            break;
        }
    }
    let mut mantissa = round_half_even(&scaled);
    if mantissa == upper {
        mantissa = lower.clone();
        k -= 1;
    }
    // value = mantissa * 10^(-k); mantissa has exactly `digits` digits.
    let digits_str = mantissa.to_string();
    let exp10 = digits as i64 - 1 - k; // exponent of the leading digit
    let body = if (-6..=15).contains(&exp10) {
        positional(&digits_str, exp10)
    } else {
        let (head, tail) = digits_str.split_at(1);
        if tail.is_empty() {
            format!("{head}e{exp10}")
        } else {
            format!("{head}.{tail}e{exp10}")
        }
    };
    if negative {
        format!("-{body}")
    } else {
        body
    }
}

fn positional(digits: &str, exp10: i64) -> String {
    let len = digits.len() as i64;
    if exp10 < 0 {
        let zeros = "0".repeat((-exp10 - 1) as usize);
        format!("0.{zeros}{digits}")
    } else if exp10 + 1 >= len {
        let zeros = "0".repeat((exp10 + 1 - len) as usize);
        format!("{digits}{zeros}")
    } else {
        let (a, b) = digits.split_at((exp10 + 1) as usize);
        format!("{a}.{b}")
    }
}

fn estimate_log10(a: &Rational) -> i64 {
    let n = a.numer().to_string().len() as i64;
    let d = a.denom().to_string().len() as i64;
    n - d
}

fn scale_pow10(a: &Rational, k: i64) -> Rational {
    let p = BigInt::from(10u32).pow(k.unsigned_abs() as u32);
    if k >= 0 {
        a * Rational::from_integer(p)
    } else {
        a / Rational::from_integer(p)
    }
}

/// Nearest integer, ties to even. Input must be non-negative.
fn round_half_even(x: &Rational) -> BigInt {
    let fl = x.floor().to_integer();
    let frac = x - Rational::from_integer(fl.clone());
    let half = ratio(1, 2);
    if frac > half || (frac == half && fl.is_odd()) {
        fl + 1
    } else {
        fl
    }
}

pub fn floor_int(r: &Rational) -> BigInt {
    r.floor().to_integer()
}

pub fn ceil_int(r: &Rational) -> BigInt {
    r.ceil().to_integer()
}

pub fn to_i128(r: &BigInt) -> Result<i128> {
    r.to_i128().ok_or(Error::Overflow)
}

pub fn to_u64(r: &BigInt) -> Result<u64> {
    r.to_u64().ok_or(Error::Overflow)
}

/// Outward bounds `lo <= value^(1/n) <= hi` with denominator
/// [`ROOT_BOUND_DENOMINATOR`]; `lo == hi` exactly when the root is hit.
pub fn nth_root_bounds(value: &BigUint, n: u32) -> (Rational, Rational) {
    assert!(n >= 1);
    let den = BigUint::from(ROOT_BOUND_DENOMINATOR);
    let scaled = value * den.pow(n);
    let lo = scaled.nth_root(n);
    let exact = lo.pow(n) == scaled;
    let hi = if exact { lo.clone() } else { &lo + 1u32 };
    let den = BigInt::from(den);
    (
        Rational::new(BigInt::from_biguint(Sign::Plus, lo), den.clone()),
        Rational::new(BigInt::from_biguint(Sign::Plus, hi), den),
    )
}

pub fn pow(r: &Rational, k: u32) -> Rational {
    let mut acc = Rational::one();
    for _ in 0..k {
        acc *= r;
    }
    acc
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("5/6").unwrap(), ratio(5, 6));
        assert_eq!(parse_rational(" -3 ").unwrap(), int(-3));
        assert_eq!(parse_rational("10/4").unwrap(), ratio(5, 2));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
        assert!(parse_rational("").is_err());
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(to_decimal(&ratio(5, 7), 12), "0.714285714286");
        assert_eq!(to_decimal(&int(6), 12), "6.00000000000");
        assert_eq!(to_decimal(&ratio(-1, 3), 3), "-0.333");
        assert_eq!(to_decimal(&ratio(1, 8), 2), "0.12"); // 0.125 ties to even
        assert_eq!(to_decimal(&ratio(3, 8), 2), "0.38"); // 0.375 ties to even
        assert_eq!(to_decimal(&ratio(999_999, 1_000_000), 3), "1.00");
        assert_eq!(to_decimal(&int(0), 12), "0");
        assert_eq!(to_decimal(&ratio(1, 10_000_000_000), 2), "1.0e-10");
        assert_eq!(to_decimal(&int(12345), 3), "12300");
    }

    #[test]
    fn root_bounds_are_outward() {
        let (lo, hi) = nth_root_bounds(&BigUint::from(4u32), 2);
        assert_eq!(lo, int(2));
        assert_eq!(hi, int(2));
        let (lo, hi) = nth_root_bounds(&BigUint::from(2u32), 2);
        assert!(&lo * &lo < int(2));
        assert!(&hi * &hi > int(2));
        assert_eq!(&hi - &lo, ratio(1, 1_000_000_000_000));
        let (lo, hi) = nth_root_bounds(&BigUint::from(10u32), 3);
        assert!(pow(&lo, 3) <= int(10) && pow(&hi, 3) >= int(10));
    }
}
