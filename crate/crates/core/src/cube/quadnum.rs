//! Exact arithmetic in `ℚ(√k)`: numbers `a + b√k` with rational `a`, `b`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::rational::{int, perfect_square, to_f64, Rat};

/// `a + b√k` for a fixed positive radicand `k`.
///
/// When `k` is a perfect square `s²` the value is folded into `a` (so `b = 0`),
/// which keeps the representation unique and division well defined.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuadNum {
    k: u64,
    a: Rat,
    b: Rat,
}

impl QuadNum {
    pub fn new(k: u64, a: Rat, b: Rat) -> Self {
        assert!(k > 0, "radicand must be positive");
        match perfect_square(k) {
            Some(s) if !b.is_zero() => Self {
                k,
                a: a + b * int(s as i64),
                b: Rat::zero(),
            },
            _ => Self { k, a, b },
        }
    }

    pub fn rational(k: u64, a: Rat) -> Self {
        Self::new(k, a, Rat::zero())
    }

    /// `b√k`.
    pub fn surd(k: u64, b: Rat) -> Self {
        Self::new(k, Rat::zero(), b)
    }

    pub fn zero(k: u64) -> Self {
        Self::rational(k, Rat::zero())
    }

    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn a(&self) -> &Rat {
        &self.a
    }

    pub fn b(&self) -> &Rat {
        &self.b
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    /// Exact sign in `{-1, 0, 1}`.
    pub fn signum(&self) -> i8 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 || sa == sb {
            return if sa != 0 { sa } else { sb };
        }
        if sa == 0 {
            return sb;
        }
        // mixed signs: the larger of a² and k b² wins
        let a2 = &self.a * &self.a;
        let kb2 = &self.b * &self.b * int(self.k as i64);
        match a2.cmp(&kb2) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn to_f64(&self) -> f64 {
        to_f64(&self.a) + to_f64(&self.b) * (self.k as f64).sqrt()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.k, &self.a * c, &self.b * c)
    }

    fn norm(&self) -> Rat {
        &self.a * &self.a - &self.b * &self.b * int(self.k as i64)
    }

    /// Exact quotient; `None` on division by zero.
    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        same_field(self, rhs);
        if rhs.is_zero() {
            return None;
        }
        let norm = rhs.norm();
        debug_assert!(!norm.is_zero(), "non-square radicand has no zero divisors");
        let conj = Self { k: rhs.k, a: rhs.a.clone(), b: -rhs.b.clone() };
        let p = self * &conj;
        Some(Self::new(self.k, p.a / &norm, p.b / &norm))
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::rational(self.k, int(1));
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }
}

fn sign_of(x: &Rat) -> i8 {
    if x.is_positive() {
        1
    } else if x.is_negative() {
        -1
    } else {
        0
    }
}

fn same_field(x: &QuadNum, y: &QuadNum) {
    assert_eq!(x.k, y.k, "operands live in different quadratic fields");
}

impl fmt::Display for QuadNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            write!(f, "{}", self.a)
        } else if self.a.is_zero() {
            write!(f, "({})*sqrt({})", self.b, self.k)
        } else {
            write!(f, "{} + ({})*sqrt({})", self.a, self.b, self.k)
        }
    }
}

impl Serialize for QuadNum {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("QuadNum", 3)?;
        st.serialize_field("k", &self.k)?;
        st.serialize_field("a", &self.a.to_string())?;
        st.serialize_field("b", &self.b.to_string())?;
        st.end()
    }
}

impl<'a> Add<&'a QuadNum> for &'a QuadNum {
    type Output = QuadNum;
    fn add(self, rhs: &QuadNum) -> QuadNum {
        same_field(self, rhs);
        QuadNum::new(self.k, &self.a + &rhs.a, &self.b + &rhs.b)
    }
}

impl<'a> Sub<&'a QuadNum> for &'a QuadNum {
    type Output = QuadNum;
    fn sub(self, rhs: &QuadNum) -> QuadNum {
        same_field(self, rhs);
        QuadNum::new(self.k, &self.a - &rhs.a, &self.b - &rhs.b)
    }
}

impl<'a> Mul<&'a QuadNum> for &'a QuadNum {
    type Output = QuadNum;
    fn mul(self, rhs: &QuadNum) -> QuadNum {
        same_field(self, rhs);
        let k = int(self.k as i64);
        QuadNum::new(
            self.k,
            &self.a * &rhs.a + &self.b * &rhs.b * k,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Add for QuadNum {
    type Output = QuadNum;
    fn add(self, rhs: QuadNum) -> QuadNum {
        &self + &rhs
    }
}

impl Sub for QuadNum {
    type Output = QuadNum;
    fn sub(self, rhs: QuadNum) -> QuadNum {
        &self - &rhs
    }
}

impl Mul for QuadNum {
    type Output = QuadNum;
    fn mul(self, rhs: QuadNum) -> QuadNum {
        &self * &rhs
    }
}

impl Neg for QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        QuadNum { k: self.k, a: -self.a, b: -self.b }
    }
}

impl Neg for &QuadNum {
    type Output = QuadNum;
    fn neg(self) -> QuadNum {
        self.clone().neg()
    }
}

/// Determinant by fraction-free (Bareiss) elimination with row pivoting.
pub fn det_bareiss(mut m: Vec<Vec<QuadNum>>) -> QuadNum {
    let size = m.len();
    assert!(m.iter().all(|row| row.len() == size), "matrix must be square");
    assert!(size > 0, "empty matrix");
    let k = m[0][0].k();
    let mut negate = false;
    let mut prev = QuadNum::rational(k, int(1));
    for p in 0..size - 1 {
        if m[p][p].is_zero() {
            match (p + 1..size).find(|&i| !m[i][p].is_zero()) {
                Some(i) => {
                    m.swap(p, i);
                    negate = !negate;
                }
                None => return QuadNum::zero(k),
            }
        }
        for i in p + 1..size {
            for j in p + 1..size {
                let t = &(&m[p][p] * &m[i][j]) - &(&m[i][p] * &m[p][j]);
                m[i][j] = t.checked_div(&prev).expect("Bareiss pivots are nonzero");
            }
            m[i][p] = QuadNum::zero(k);
        }
        prev = m[p][p].clone();
    }
    let d = m[size - 1][size - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Plain cofactor expansion, used only to cross-check [`det_bareiss`] in tests.
#[cfg(test)]
pub(crate) fn det_laplace(m: &[Vec<QuadNum>]) -> QuadNum {
    let n = m.len();
    let k = m[0][0].k();
    if n == 1 {
        return m[0][0].clone();
    }
    let mut acc = QuadNum::zero(k);
    for (j, x) in m[0].iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        let minor: Vec<Vec<QuadNum>> = m[1..]
            .iter()
            .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect())
            .collect();
        let term = x * &det_laplace(&minor);
        acc = if j % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::rat;
    use proptest::prelude::*;

    fn q(k: u64, a: (i64, i64), b: (i64, i64)) -> QuadNum {
        QuadNum::new(k, rat(a.0, a.1), rat(b.0, b.1))
    }

    #[test]
    fn signs() {
        assert_eq!(q(2, (1, 1), (1, 1)).signum(), 1);
        assert_eq!(q(2, (-1, 1), (-1, 1)).signum(), -1);
        assert_eq!(q(2, (3, 2), (-1, 1)).signum(), 1); // 1.5 - 1.414
        assert_eq!(q(2, (7, 5), (-1, 1)).signum(), -1); // 1.4 - 1.414
        assert_eq!(q(5, (0, 1), (-5, 32)).signum(), -1);
        assert_eq!(QuadNum::zero(3).signum(), 0);
        // perfect square radicand folds: 2 - 1*sqrt(4) = 0
        assert_eq!(q(4, (2, 1), (-1, 1)).signum(), 0);
        assert!(q(4, (2, 1), (-1, 1)).is_zero());
    }

    #[test]
    fn division_inverts_multiplication() {
        let x = q(5, (3, 4), (-2, 7));
        let y = q(5, (1, 3), (5, 2));
        let z = &x * &y;
        assert_eq!(z.checked_div(&y).unwrap(), x);
        assert!(x.checked_div(&QuadNum::zero(5)).is_none());
    }

    #[test]
    fn bareiss_matches_cofactor_expansion() {
        let k = 7;
        let m: Vec<Vec<QuadNum>> = (0..5)
            .map(|i| {
                (0..5)
                    .map(|j| q(k, ((i * 3 + j * 5) % 7 - 3, 1 + (i % 2)), ((i * j) % 3 - 1, 2)))
                    .collect()
            })
            .collect();
        assert_eq!(det_bareiss(m.clone()), det_laplace(&m));
        // zero leading pivot forces a swap
        let mut m2 = m.clone();
        m2[0][0] = QuadNum::zero(k);
        assert_eq!(det_bareiss(m2.clone()), det_laplace(&m2));
    }

    proptest! {
        #[test]
        fn sign_agrees_with_float(a in -400i64..400, b in -400i64..400, k in 2u64..40) {
            let x = QuadNum::new(k, rat(a, 17), rat(b, 13));
            let f = x.to_f64();
            if f.abs() > 1e-9 {
                prop_assert_eq!(x.signum() as f64, f.signum());
            }
        }

        #[test]
        fn ring_laws(a in -50i64..50, b in -50i64..50, c in -50i64..50, d in -50i64..50, k in 2u64..30) {
            let x = QuadNum::new(k, int(a), rat(b, 3));
            let y = QuadNum::new(k, rat(c, 2), int(d));
            prop_assert_eq!(&x * &y, &y * &x);
            prop_assert_eq!(&(&x + &y) - &y, x.clone());
            let s = &(&x * &y) + &(&x * &x);
            prop_assert_eq!(s, &x * &(&x + &y));
        }
    }
}
