//! Eulerian numbers `A(m, l)`: permutations of `{1..m}` with exactly `l-1` ascents.

use itertools::Itertools;
use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{invalid, Result};
use crate::laplace::JTable;
use crate::rational::{binomial_row, factorial, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EulerianValue {
    pub m: u32,
    pub l: i64,
    #[serde(serialize_with = "crate::bounds::ser_rat")]
    pub value: BigUint,
}

/// `A(m,l) = Σ_{i=0}^{l} (-1)^i C(m+1,i) (l-i)^m`.
pub fn eulerian_explicit(m: u32, l: i64) -> BigUint {
    if l < 1 || l > m as i64 {
        return BigUint::zero();
    }
    let binom = binomial_row(m + 1);
    let mut sum = BigInt::zero();
    for i in 0..=l {
        let Some(c) = binom.get(i as usize) else { break };
        let term = c * num_traits::pow(BigInt::from(l - i), m as usize);
        if i % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    sum.to_biguint().expect("Eulerian numbers are nonnegative")
}

/// `A(m,l) = m! · J_{m+1}(2l - m - 1)`.
pub fn eulerian_via_laplace(table: &JTable, m: u32, l: i64) -> BigUint {
    let v: Rat = Rat::from_integer(factorial(m)) * table.get(m + 1, 2 * l - m as i64 - 1);
    assert!(v.is_integer(), "m! J_(m+1)(2l-m-1) must be an integer");
    let (sign, mag) = v.to_integer().into_parts();
    assert!(sign != Sign::Minus);
    mag
}

/// Eulerian number by both the explicit sum and the Laplace–Pólya route.
///
/// Panics if the two routes disagree, which can only mean an implementation bug.
pub fn eulerian(table: &JTable, m: u32, l: i64) -> Result<EulerianValue> {
    if m < 1 {
        return invalid(format!("Eulerian numbers need m >= 1, got m={m}"));
    }
    let explicit = eulerian_explicit(m, l);
    let via_j = eulerian_via_laplace(table, m, l);
    assert_eq!(
        explicit, via_j,
        "Eulerian routes disagree at m={m}, l={l}"
    );
    Ok(EulerianValue { m, l, value: explicit })
}

pub fn eulerian_row(table: &JTable, m: u32) -> Result<Vec<BigUint>> {
    (1..=m as i64)
        .map(|l| eulerian(table, m, l).map(|e| e.value))
        .collect()
}

/// Ascent counts over all `m!` permutations: entry `l-1` holds `A(m, l)`.
pub fn eulerian_row_bruteforce(m: u32) -> Result<Vec<u64>> {
    if !(1..=9).contains(&m) {
        return invalid(format!("brute-force enumeration needs 1 <= m <= 9, got m={m}"));
    }
    let mut counts = vec![0u64; m as usize];
    for perm in (1..=m).permutations(m as usize) {
        let ascents = perm.windows(2).filter(|w| w[1] > w[0]).count();
        counts[ascents] += 1;
    }
    Ok(counts)
}

pub fn eulerian_bruteforce(m: u32, l: i64) -> Result<u64> {
    let row = eulerian_row_bruteforce(m)?;
    if l < 1 || l > m as i64 {
        return Ok(0);
    }
    Ok(row[(l - 1) as usize])
}

pub fn factorial_u(m: u32) -> BigUint {
    factorial(m).to_biguint().unwrap_or_else(BigUint::one)
}
