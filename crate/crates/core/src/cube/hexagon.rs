//! Sections of `Q_3` near the main diagonal. Along the curve through
//! `d_{3,3}` the section is a hexagon of area
//! `a(t) = ((3+t)/√2) √(1 + (1-t)²/2)`, and its Taylor expansion at `t = 0`
//! decides extremality.

use num_traits::Zero;
use serde::Serialize;

use crate::cube::quadnum::QuadNum;
use crate::error::{invalid, Result};
use crate::rational::{int, rat, Rat};

/// Area of the hexagonal section at parameter `t ∈ [-1, 1]`.
pub fn hexagon_area(t: f64) -> Result<f64> {
    if !(-1.0..=1.0).contains(&t) {
        return invalid(format!("t must lie in [-1, 1], got {t}"));
    }
    let s = 1.0 - t;
    Ok((3.0 + t) / 2f64.sqrt() * (1.0 + s * s / 2.0).sqrt())
}

/// `a(0)` and its first three derivatives, exact in `ℚ(√3)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct HexagonDerivatives {
    pub a0: QuadNum,
    pub a1: QuadNum,
    pub a2: QuadNum,
    pub a3: QuadNum,
}

impl HexagonDerivatives {
    /// Order of the first nonvanishing derivative among `a′, a″, a‴`.
    pub fn first_nonzero_order(&self) -> Option<u32> {
        [&self.a1, &self.a2, &self.a3]
            .iter()
            .position(|d| !d.is_zero())
            .map(|i| i as u32 + 1)
    }
}

fn poly_mul(p: &[Rat], q: &[Rat]) -> Vec<Rat> {
    let mut out = vec![Rat::zero(); p.len() + q.len() - 1];
    for (i, x) in p.iter().enumerate() {
        for (j, y) in q.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

/// Coefficients of `P(t) = a(t)² = (3+t)²(t²-2t+3)/4`, lowest degree first.
pub fn area_square_poly() -> Vec<Rat> {
    let lin = [int(3), int(1)];
    let quad = [int(3), int(-2), int(1)];
    poly_mul(&poly_mul(&lin, &lin), &quad)
        .into_iter()
        .map(|c| c / int(4))
        .collect()
}

/// Differentiates `a = √P` through `a² = P`:
/// `a′ = P′/(2a)`, `a″ = (P″ - 2a′²)/(2a)`, `a‴ = (P‴ - 6a′a″)/(2a)`.
pub fn hexagon_derivatives() -> HexagonDerivatives {
    const K: u64 = 3;
    let p = area_square_poly();
    // P^{(j)}(0) = j! c_j
    let d = |j: usize, fact: i64| QuadNum::rational(K, &p[j] * int(fact));
    debug_assert_eq!(p[0], rat(27, 4));
    // √(27/4) = (3/2)√3
    let a0 = QuadNum::surd(K, rat(3, 2));
    let two_a = a0.scale(&int(2));
    let div = |x: QuadNum| x.checked_div(&two_a).expect("a(0) != 0");
    let a1 = div(d(1, 1));
    let a2 = div(d(2, 2) - (&a1 * &a1).scale(&int(2)));
    let a3 = div(d(3, 6) - (&a1 * &a2).scale(&int(6)));
    HexagonDerivatives { a0, a1, a2, a3 }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_expands() {
        let want = [rat(27, 4), int(0), int(0), int(1), rat(1, 4)];
        assert_eq!(area_square_poly(), want);
    }

    #[test]
    fn derivatives_at_zero() {
        let h = hexagon_derivatives();
        assert_eq!(h.a0, QuadNum::surd(3, rat(3, 2)));
        assert!(h.a1.is_zero() && h.a2.is_zero());
        // 2/√3 = (2/3)√3
        assert_eq!(h.a3, QuadNum::surd(3, rat(2, 3)));
        assert_eq!(h.first_nonzero_order(), Some(3));
        assert!((h.a3.to_f64() - 2.0 / 3f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn area_matches_polynomial_and_differences() {
        assert!((hexagon_area(0.0).unwrap() - 1.5 * 3f64.sqrt()).abs() < 1e-14);
        for t in [-1.0, -0.3, 0.4, 1.0] {
            let p = (27.0 + 4.0 * t * t * t + t * t * t * t) / 4.0;
            assert!((hexagon_area(t).unwrap() - p.sqrt()).abs() < 1e-13);
        }
        let h = 1e-2;
        let a = |t: f64| hexagon_area(t).unwrap();
        let third = (a(2.0 * h) - 2.0 * a(h) + 2.0 * a(-h) - a(-2.0 * h)) / (2.0 * h * h * h);
        assert!((third - 2.0 / 3f64.sqrt()).abs() < 1e-3, "{third}");
        assert!(hexagon_area(1.5).is_err());
        assert!(hexagon_area(f64::NAN).is_err());
    }
}
