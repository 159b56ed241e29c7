//! The Laplace–Pólya integral `J_n(r) = (1/π) ∫ sincⁿ(t) cos(rt) dt` at integer `r`.
//!
//! Two exact routes are provided: Laplace's alternating finite sum
//! ([`jn_explicit`]) and Thompson's three-term recursion in `n`, memoized in a
//! [`JTable`] ([`jn`]). Only `n >= 2` is exposed.

use std::sync::{Arc, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{invalid, Result};
use crate::rational::{binomial_row, factorial, int, rat, to_f64, Rat};

/// Finite-sum evaluation of `J_n(r)`:
///
/// `J_n(r) = 1/(2^{n-1}(n-1)!) Σ_{i=0}^{⌊(n+r)/2⌋} (-1)^i C(n,i) (n+r-2i)^{n-1}`,
/// evaluated at `|r|` with exact integers. The sum is not short-circuited for
/// `|r| >= n`; it vanishes there on its own.
pub fn jn_explicit(n: u32, r: i64) -> Result<Rat> {
    if n < 2 {
        return invalid(format!("J_n requires n >= 2, got n={n}"));
    }
    let r = r.unsigned_abs();
    let binom = binomial_row(n);
    let top = (n as u64 + r) / 2;
    let mut sum = BigInt::zero();
    for i in 0..=top.min(n as u64) {
        let base = BigInt::from(n as u64 + r - 2 * i);
        let term = &binom[i as usize] * num_traits::pow(base, (n - 1) as usize);
        if i % 2 == 0 {
            sum += term;
        } else {
            sum -= term;
        }
    }
    let den = num_traits::pow(BigInt::from(2), (n - 1) as usize) * factorial(n - 1);
    Ok(Rat::new(sum, den))
}

/// Memoized triangular table of `J_n(r)` for `n >= 2`, `0 <= r <= n`.
///
/// Row `n` is derived from row `n-1` by Thompson's recursion; negative `r` is
/// folded onto `|r|` at lookup, and `|r| >= n` short-circuits to zero. The table
/// is internally synchronized: rows are appended under a write lock and are
/// immutable once published, so concurrent readers only ever see complete rows.
#[derive(Debug, Default)]
pub struct JTable {
    rows: RwLock<Vec<Arc<Vec<Rat>>>>,
}

impl JTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a table already filled up to `n_max`.
    pub fn with_capacity(n_max: u32) -> Self {
        let t = Self::new();
        if n_max >= 2 {
            t.row(n_max);
        }
        t
    }

    /// Largest `n` currently stored (1 when empty).
    pub fn filled_to(&self) -> u32 {
        self.rows.read().expect("poisoned JTable").len() as u32 + 1
    }

    /// Returns the row `[J_n(0), …, J_n(n)]`, filling the table on demand.
    pub fn row(&self, n: u32) -> Arc<Vec<Rat>> {
        assert!(n >= 2, "J_n rows start at n = 2");
        let idx = (n - 2) as usize;
        if let Some(row) = self.rows.read().expect("poisoned JTable").get(idx) {
            return Arc::clone(row);
        }
        let mut rows = self.rows.write().expect("poisoned JTable");
        while rows.len() <= idx {
            let next_n = rows.len() as u32 + 2;
            let row = if next_n == 2 {
                (0..=2)
                    .map(|r| jn_explicit(2, r).expect("n = 2 is valid"))
                    .collect()
            } else {
                thompson_step(rows.last().expect("base row present"), next_n)
            };
            rows.push(Arc::new(row));
        }
        Arc::clone(&rows[idx])
    }

    pub fn get(&self, n: u32, r: i64) -> Rat {
        let r = r.unsigned_abs();
        if r >= n as u64 {
            return Rat::zero();
        }
        self.row(n)[r as usize].clone()
    }
}

/// `J_n(r) = (n+r)/(2(n-1)) J_{n-1}(r+1) + (n-r)/(2(n-1)) J_{n-1}(r-1)`.
fn thompson_step(prev: &[Rat], n: u32) -> Vec<Rat> {
    let m = n as i64 - 1;
    let prev_at = |r: i64| -> Rat {
        let r = r.unsigned_abs() as usize;
        prev.get(r).cloned().unwrap_or_else(Rat::zero)
    };
    let mut row = Vec::with_capacity(n as usize + 1);
    for r in 0..n as i64 {
        let up = rat(n as i64 + r, 2 * m) * prev_at(r + 1);
        let down = rat(n as i64 - r, 2 * m) * prev_at(r - 1);
        row.push(up + down);
    }
    row.push(Rat::zero());
    row
}

/// Recursion route for `J_n(r)`, `n >= 2`.
pub fn jn(table: &JTable, n: u32, r: i64) -> Result<Rat> {
    if n < 2 {
        return invalid(format!("J_n requires n >= 2, got n={n}"));
    }
    Ok(table.get(n, r))
}

/// Both sides of `J_n(0) = n/(n-1) · J_{n-1}(1)`, for `n >= 3`.
pub fn jn0_central_identity(table: &JTable, n: u32) -> Result<(Rat, Rat)> {
    if n < 3 {
        return invalid(format!("central identity requires n >= 3, got n={n}"));
    }
    let lhs = table.get(n, 0);
    let rhs = rat(n as i64, n as i64 - 1) * table.get(n - 1, 1);
    Ok((lhs, rhs))
}

/// Third-order asymptotic expansion of `J_n(0)`:
/// `sqrt(6/(πn)) (1 - 3/(20n) - 13/(1120n²) + 27/(3200n³))`.
pub fn jn0_asymptotic(n: u32) -> f64 {
    let n = n as f64;
    let lead = (6.0 / (std::f64::consts::PI * n)).sqrt();
    lead * (1.0 - 3.0 / (20.0 * n) - 13.0 / (1120.0 * n * n) + 27.0 / (3200.0 * n * n * n))
}

/// `√n · J_n(0)` as a float; the exact comparisons square it instead.
pub fn scaled_central(table: &JTable, n: u32) -> f64 {
    (n as f64).sqrt() * to_f64(&table.get(n, 0))
}

/// `n · J_n(0)²`, the exact square of `√n · J_n(0)`.
pub fn scaled_central_sq(table: &JTable, n: u32) -> Rat {
    let j = table.get(n, 0);
    int(n as i64) * &j * &j
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_one_values() {
        let t = JTable::new();
        let expected = [
            rat(1, 1),
            rat(3, 4),
            rat(2, 3),
            rat(115, 192),
            rat(11, 20),
            rat(5887, 11520),
            rat(151, 315),
        ];
        for (i, e) in expected.iter().enumerate() {
            let n = i as u32 + 2;
            assert_eq!(&jn(&t, n, 0).unwrap(), e, "J_{n}(0)");
            assert_eq!(&jn_explicit(n, 0).unwrap(), e, "explicit J_{n}(0)");
        }
    }

    #[test]
    fn explicit_examples() {
        assert_eq!(jn_explicit(4, 2).unwrap(), rat(1, 6));
        assert_eq!(jn_explicit(4, 1).unwrap(), rat(23, 48));
        assert_eq!(jn_explicit(3, 5).unwrap(), Rat::zero());
        assert_eq!(jn_explicit(2, 1).unwrap(), rat(1, 2));
        assert_eq!(jn_explicit(5, -3).unwrap(), jn_explicit(5, 3).unwrap());
    }

    #[test]
    fn rejects_small_n() {
        assert!(jn_explicit(1, 0).is_err());
        assert!(jn_explicit(0, 0).is_err());
        assert!(jn(&JTable::new(), 1, 0).is_err());
        assert!(jn0_central_identity(&JTable::new(), 2).is_err());
    }

    #[test]
    fn recursion_examples() {
        let t = JTable::new();
        assert_eq!(jn(&t, 5, 0).unwrap(), rat(115, 192));
        assert_eq!(jn(&t, 4, 1).unwrap(), rat(23, 48));
        for n in 2..12 {
            for r in 0..=n as i64 + 2 {
                assert_eq!(jn(&t, n, -r).unwrap(), jn(&t, n, r).unwrap());
            }
        }
    }

    #[test]
    fn central_identity_examples() {
        let t = JTable::new();
        let (l, r) = jn0_central_identity(&t, 5).unwrap();
        assert_eq!(l, rat(115, 192));
        assert_eq!(r, rat(115, 192));
        let (l, r) = jn0_central_identity(&t, 3).unwrap();
        assert_eq!((l, r), (rat(3, 4), rat(3, 4)));
        let (l, r) = jn0_central_identity(&t, 8).unwrap();
        assert_eq!(l, rat(151, 315));
        assert_eq!(l, r);
    }

    #[test]
    fn support_and_decay() {
        let t = JTable::with_capacity(60);
        for n in 2..=60u32 {
            for r in 0..=n as i64 + 1 {
                let v = t.get(n, r);
                assert_eq!(v.is_zero(), r >= n as i64, "support n={n} r={r}");
                assert!(v >= Rat::zero());
            }
            for r in 0..=n as i64 - 2 {
                assert!(t.get(n, r + 2) < t.get(n, r), "decay n={n} r={r}");
            }
        }
    }

    #[test]
    fn asymptotic_limit() {
        let t = JTable::new();
        let exact = to_f64(&t.get(100, 0));
        assert!((jn0_asymptotic(100) / exact - 1.0).abs() < 1e-6);
        let limit = (6.0 / std::f64::consts::PI).sqrt();
        assert!(((1e8f64).sqrt() * jn0_asymptotic(100_000_000) - limit).abs() < 1e-8);
        // outside the asymptotic regime; no tolerance intended
        assert!(jn0_asymptotic(2) > 0.0 && jn0_asymptotic(2) < 1.0);
    }

    #[test]
    fn concurrent_readers_see_complete_rows() {
        let t = Arc::new(JTable::new());
        let handles: Vec<_> = (0..8)
            .map(|i| {
                let t = Arc::clone(&t);
                std::thread::spawn(move || {
                    let n = 20 + 5 * i;
                    (n, t.get(n, 0))
                })
            })
            .collect();
        for h in handles {
            let (n, v) = h.join().unwrap();
            assert_eq!(v, jn_explicit(n, 0).unwrap());
        }
    }
}
