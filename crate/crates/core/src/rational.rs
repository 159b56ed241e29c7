//! Exact rational helpers shared by every module.
//!
//! `Rat` is `num_rational::BigRational`: always reduced, denominator positive.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;

use crate::error::{Error, Result};

pub type Rat = BigRational;

pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(v: i64) -> Rat {
    Rat::from_integer(BigInt::from(v))
}

pub fn to_f64(x: &Rat) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Parses `"a/b"`, `"a"` or a plain decimal such as `"0.35"` into an exact rational.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not a rational number: {s:?}"));
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().map_err(|_| bad())?;
        let d: BigInt = d.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        return Ok(Rat::new(n, d));
    }
    if let Some((whole, frac)) = s.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(bad());
        }
        let negative = whole.trim_start().starts_with('-');
        let whole: BigInt = match whole {
            "" | "-" | "+" => BigInt::zero(),
            w => w.parse().map_err(|_| bad())?,
        };
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let frac: BigInt = frac.parse().map_err(|_| bad())?;
        let mag = whole.abs() * &scale + frac;
        let num = if negative { -mag } else { mag };
        return Ok(Rat::new(num, scale));
    }
    let n: BigInt = s.parse().map_err(|_| bad())?;
    Ok(Rat::from_integer(n))
}

pub fn factorial(n: u32) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// Row `n` of Pascal's triangle, built by the additive recurrence.
pub fn binomial_row(n: u32) -> Vec<BigInt> {
    let mut row = vec![BigInt::one()];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(BigInt::one());
        for w in row.windows(2) {
            next.push(&w[0] + &w[1]);
        }
        next.push(BigInt::one());
        row = next;
    }
    row
}

pub fn pow_rat(x: &Rat, e: u32) -> Rat {
    num_traits::pow(x.clone(), e as usize)
}

/// Compares `sqrt(radicand)` with `value` exactly, for `radicand >= 0`.
pub fn cmp_sqrt(radicand: &Rat, value: &Rat) -> Ordering {
    debug_assert!(!radicand.is_negative());
    if value.is_negative() {
        return Ordering::Greater;
    }
    radicand.cmp(&(value * value))
}

/// Integer square root test; returns `Some(s)` when `k == s*s`.
pub fn perfect_square(k: u64) -> Option<u64> {
    let s = (k as f64).sqrt().round() as u64;
    (s.saturating_sub(1)..=s + 1).find(|c| c * c == k)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_forms() {
        assert_eq!(parse_rat("3/10").unwrap(), rat(3, 10));
        assert_eq!(parse_rat("0.3").unwrap(), rat(3, 10));
        assert_eq!(parse_rat("-1.25").unwrap(), rat(-5, 4));
        assert_eq!(parse_rat("-0.5").unwrap(), rat(-1, 2));
        assert_eq!(parse_rat(" 7 ").unwrap(), int(7));
        assert!(parse_rat("1/0").is_err());
        assert!(parse_rat("abc").is_err());
        assert!(parse_rat("1.").is_err());
    }

    #[test]
    fn pascal_matches_factorial_formula() {
        let row = binomial_row(10);
        for (i, c) in row.iter().enumerate() {
            let i = i as u32;
            assert_eq!(*c, factorial(10) / (factorial(i) * factorial(10 - i)));
        }
    }

    #[test]
    fn sqrt_comparison() {
        assert_eq!(cmp_sqrt(&int(4), &int(2)), Ordering::Equal);
        assert_eq!(cmp_sqrt(&int(2), &rat(141, 100)), Ordering::Greater);
        assert_eq!(cmp_sqrt(&int(2), &rat(142, 100)), Ordering::Less);
        assert_eq!(cmp_sqrt(&int(0), &int(-1)), Ordering::Greater);
    }

    #[test]
    fn squares() {
        assert_eq!(perfect_square(16), Some(4));
        assert_eq!(perfect_square(1), Some(1));
        assert_eq!(perfect_square(5), None);
    }
}
