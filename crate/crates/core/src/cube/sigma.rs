//! Exact central-section function `σ(w)` for rational directions.
//!
//! For `w` with positive entries and `W = Σ w_i`, `σ(w)` is the density of
//! `Σ w_i U_i` (`U_i` uniform on `[0,1]`) at `W/2`:
//!
//! `σ(w) = 1/((n-1)! ∏ w_i) · Σ_{S ⊆ [n]} (-1)^{|S|} max(0, W/2 - Σ_{i∈S} w_i)^{n-1}`.
//!
//! Signs and zero coordinates are normalised away first; the formula needs at
//! least two nonzero coordinates.

use num_traits::{Signed, Zero};

use crate::error::{invalid, Result};
use crate::rational::{factorial, pow_rat, Rat};

/// Largest effective dimension accepted by the `2^n`-term exact sum.
pub const MAX_EXACT_DIM: usize = 22;

/// A nonzero rational direction (not necessarily of unit length).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DirectionQ {
    coords: Vec<Rat>,
}

impl DirectionQ {
    pub fn new(coords: Vec<Rat>) -> Result<Self> {
        if coords.len() < 2 {
            return invalid("a direction needs at least two coordinates");
        }
        if coords.iter().all(Zero::is_zero) {
            return invalid("the zero vector is not a direction");
        }
        Ok(Self { coords })
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// Absolute values of the nonzero coordinates, sorted; σ is invariant
    /// under sign flips and permutations.
    pub fn normalized(&self) -> Vec<Rat> {
        let mut v: Vec<Rat> = self
            .coords
            .iter()
            .filter(|x| !x.is_zero())
            .map(|x| x.abs())
            .collect();
        v.sort();
        v
    }

    pub fn scaled(&self, c: &Rat) -> Self {
        Self { coords: self.coords.iter().map(|x| x * c).collect() }
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coords.iter().map(crate::rational::to_f64).collect()
    }
}

pub fn sigma_exact(w: &DirectionQ) -> Result<Rat> {
    let v = w.normalized();
    let n = v.len();
    if n < 2 {
        return invalid("σ needs at least two nonzero coordinates");
    }
    if n > MAX_EXACT_DIM {
        return invalid(format!("exact σ supports at most {MAX_EXACT_DIM} nonzero coordinates"));
    }
    let half: Rat = v.iter().sum::<Rat>() / Rat::from_integer(2.into());
    let mut acc = Rat::zero();
    for mask in 0u32..(1 << n) {
        let subset: Rat = (0..n)
            .filter(|i| mask & (1 << i) != 0)
            .map(|i| &v[i])
            .sum();
        let x = &half - subset;
        if x.is_positive() {
            let term = pow_rat(&x, n as u32 - 1);
            if mask.count_ones() % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
    }
    let prod: Rat = v.iter().product();
    Ok(acc / (prod * Rat::from_integer(factorial(n as u32 - 1))))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laplace::JTable;
    use crate::rational::{int, rat};

    fn dir(v: &[Rat]) -> DirectionQ {
        DirectionQ::new(v.to_vec()).unwrap()
    }

    #[test]
    fn ones_give_central_values() {
        let t = JTable::new();
        for k in 2..=12u32 {
            let mut w = vec![int(1); k as usize];
            w.extend([int(0), int(0)]);
            assert_eq!(sigma_exact(&dir(&w)).unwrap(), t.get(k, 0), "k={k}");
        }
        assert_eq!(sigma_exact(&dir(&vec![int(1); 7])).unwrap(), rat(5887, 11520));
    }

    #[test]
    fn homogeneity_and_symmetry() {
        assert_eq!(sigma_exact(&dir(&[int(2), int(2), int(0)])).unwrap(), rat(1, 2));
        let w = dir(&[rat(3, 10), rat(-2, 5), rat(1, 2)]);
        let s = sigma_exact(&w).unwrap();
        for c in [int(2), int(3), rat(7, 2)] {
            assert_eq!(sigma_exact(&w.scaled(&c)).unwrap(), &s / &c);
        }
        let flipped = dir(&[rat(1, 2), rat(3, 10), rat(2, 5)]);
        assert_eq!(sigma_exact(&flipped).unwrap(), s);
    }

    #[test]
    fn two_coordinates_closed_form() {
        // the density of aU + bV at (a+b)/2 is 1/max(a,b)
        assert_eq!(sigma_exact(&dir(&[int(1), int(3)])).unwrap(), rat(1, 3));
        assert_eq!(sigma_exact(&dir(&[rat(1, 2), rat(1, 5)])).unwrap(), int(2));
    }

    #[test]
    fn degenerate_inputs_rejected() {
        assert!(DirectionQ::new(vec![int(0), int(0)]).is_err());
        assert!(DirectionQ::new(vec![int(1)]).is_err());
        assert!(sigma_exact(&dir(&[int(1), int(0), int(0)])).is_err());
    }
}
