//! Numerical evaluation of `(1/π) ∫ ∏ f_i(t) dt` for products of sinc-type
//! factors, as needed for `σ(v)`, its gradient, the criticality condition and
//! the bordered Hessian.
//!
//! The even integrand is integrated on `[0, T]` with adaptive Gauss–Kronrod
//! panels split at the zeros of the fastest factor. The tail `[T, ∞)` is not
//! truncated: the product is expanded into terms `C t^E e^{iωt}` and each
//! `∫_T^∞ t^E e^{iωt} dt` is evaluated along the rotated contour `t = T + is`,
//! where the integrand decays like `e^{-ωs}` and has no oscillation.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BinaryHeap};
use std::f64::consts::PI;

use num_complex::Complex64;

use crate::error::{Error, Result};

#[allow(clippy::excessive_precision)]
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144845693013,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];
#[allow(clippy::excessive_precision)]
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];
#[allow(clippy::excessive_precision)]
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// One 15-point Kronrod step: `(estimate, |K15 - G7|)`.
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = fc * WGK[7];
    let mut g = fc * WG[3];
    for j in 0..7 {
        let x = h * XGK[j];
        let s = f(c - x) + f(c + x);
        k += WGK[j] * s;
        if j % 2 == 1 {
            g += WG[j / 2] * s;
        }
    }
    (k * h, ((k - g) * h).abs())
}

struct Segment {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Segment {
    fn eq(&self, o: &Self) -> bool {
        self.err == o.err
    }
}
impl Eq for Segment {}
impl PartialOrd for Segment {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Segment {
    fn cmp(&self, o: &Self) -> Ordering {
        self.err.total_cmp(&o.err)
    }
}

/// Adaptive G7/K15 on `[a, b]`, bisecting the worst segment until the summed
/// error estimate meets `max(abs_tol, rel_tol |I|)`.
pub fn integrate_adaptive<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_segments: usize,
) -> Result<f64> {
    let (v, e) = gk15(&f, a, b);
    let mut heap = BinaryHeap::new();
    heap.push(Segment { a, b, value: v, err: e });
    let (mut total, mut err) = (v, e);
    while err > abs_tol.max(rel_tol * total.abs()) {
        if heap.len() >= max_segments {
            return Err(Error::NonConvergence(format!(
                "error estimate {err:e} after {max_segments} segments on [{a}, {b}]"
            )));
        }
        let s = heap.pop().expect("heap is nonempty");
        let m = 0.5 * (s.a + s.b);
        let (v1, e1) = gk15(&f, s.a, m);
        let (v2, e2) = gk15(&f, m, s.b);
        total += v1 + v2 - s.value;
        err += e1 + e2 - s.err;
        heap.push(Segment { a: s.a, b: m, value: v1, err: e1 });
        heap.push(Segment { a: m, b: s.b, value: v2, err: e2 });
    }
    // re-sum to shed the drift of the running updates
    Ok(heap.iter().map(|s| s.value).sum())
}

/// One factor of the integrand, as a function of `t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Factor {
    /// `sinc(v t)`
    Sinc(f64),
    /// `cos(v t)`
    Cos(f64),
    /// `(cos(v t) - sinc(v t)) / v`, the `v`-derivative of `sinc(v t)`
    Deriv(f64),
    /// `(2/v²)(sinc(vt) - cos(vt)) - t² sinc(vt) + sinc(vt)`
    Second(f64),
    /// limit of [`Factor::Second`] as `v → 0`: `1 - t²/3`
    SecondAtZero,
}

fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-4 {
        1.0 - x * x / 6.0
    } else {
        x.sin() / x
    }
}

/// `sinc(x) - cos(x)`, with a series near zero to avoid cancellation.
fn sinc_minus_cos(x: f64) -> f64 {
    if x.abs() < 0.05 {
        let x2 = x * x;
        x2 * (1.0 / 3.0 - x2 * (1.0 / 30.0 - x2 / 840.0))
    } else {
        x.sin() / x - x.cos()
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
enum Trig {
    Sin,
    Cos,
    One,
}

/// `coef · t^power · trig(freq · t)`
#[derive(Debug, Clone, Copy)]
struct Monomial {
    coef: f64,
    power: i32,
    trig: Trig,
    freq: f64,
}

impl Factor {
    fn eval(self, t: f64) -> f64 {
        match self {
            Factor::Sinc(v) => sinc(v * t),
            Factor::Cos(v) => (v * t).cos(),
            Factor::Deriv(v) => -sinc_minus_cos(v * t) / v,
            Factor::Second(v) => {
                let x = v * t;
                let s = sinc(x);
                2.0 / (v * v) * sinc_minus_cos(x) - t * t * s + s
            }
            Factor::SecondAtZero => 1.0 - t * t / 3.0,
        }
    }

    /// Highest frequency present, for panel placement.
    fn freq(self) -> f64 {
        match self {
            Factor::Sinc(v) | Factor::Cos(v) | Factor::Deriv(v) | Factor::Second(v) => v.abs(),
            Factor::SecondAtZero => 0.0,
        }
    }

    fn monomials(self) -> Vec<Monomial> {
        let m = |coef, power, trig, freq| Monomial { coef, power, trig, freq };
        match self {
            Factor::Sinc(v) => vec![m(1.0 / v, -1, Trig::Sin, v)],
            Factor::Cos(v) => vec![m(1.0, 0, Trig::Cos, v)],
            Factor::Deriv(v) => vec![
                m(1.0 / v, 0, Trig::Cos, v),
                m(-1.0 / (v * v), -1, Trig::Sin, v),
            ],
            Factor::Second(v) => vec![
                m(2.0 / (v * v * v) + 1.0 / v, -1, Trig::Sin, v),
                m(-2.0 / (v * v), 0, Trig::Cos, v),
                m(-1.0 / v, 1, Trig::Sin, v),
            ],
            Factor::SecondAtZero => vec![m(1.0, 0, Trig::One, 0.0), m(-1.0 / 3.0, 2, Trig::One, 0.0)],
        }
    }
}

/// Upper limit on expanded tail terms before giving up.
const MAX_TAIL_TERMS: usize = 1 << 18;

/// `scale · (1/π) ∫_{-∞}^{∞} ∏ factors(t) dt` for an even integrand.
#[derive(Debug, Clone)]
pub struct SincProduct {
    pub factors: Vec<Factor>,
    pub scale: f64,
}

impl SincProduct {
    pub fn new(factors: Vec<Factor>) -> Self {
        Self { factors, scale: 1.0 }
    }

    pub fn eval(&self, t: f64) -> f64 {
        self.factors.iter().fold(self.scale, |acc, f| acc * f.eval(t))
    }

    pub fn integrate(&self, tol: f64) -> Result<f64> {
        if tol.is_nan() || tol <= 0.0 {
            return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
        }
        let freqs: Vec<f64> = self.factors.iter().map(|f| f.freq()).filter(|w| *w > 0.0).collect();
        if freqs.is_empty() {
            return Err(Error::InvalidArgument("integrand has no oscillating factor".into()));
        }
        let fast = freqs.iter().cloned().fold(0.0, f64::max);
        let slow = freqs.iter().cloned().fold(f64::INFINITY, f64::min);
        let spacing = PI / fast;
        let panels = ((8.0 * fast / slow).ceil() as usize).clamp(8, 200_000);
        let cutoff = spacing * panels as f64;

        let panel_tol = 0.05 * tol * PI / panels as f64;
        let mut body = 0.0;
        for p in 0..panels {
            let a = spacing * p as f64;
            body += integrate_adaptive(|t| self.eval(t), a, a + spacing, panel_tol, 1e-13, 2000)?;
        }
        let tail = self.tail(cutoff, 0.05 * tol * PI)?;
        Ok(2.0 / PI * (body + tail))
    }

    /// `∫_T^∞ ∏ factors(t) dt` via the exponential expansion.
    fn tail(&self, cutoff: f64, tol: f64) -> Result<f64> {
        // choose one monomial per factor, then one exponential per trig
        let mut terms: BTreeMap<(i32, i64), (f64, Complex64)> = BTreeMap::new();
        terms.insert((0, 0), (0.0, Complex64::new(self.scale, 0.0)));
        let freq_scale = self
            .factors
            .iter()
            .map(|f| f.freq())
            .fold(0.0, f64::max)
            .max(1e-300);
        let key = |w: f64| (w / freq_scale * 1e11).round() as i64;
        for factor in &self.factors {
            let monos = factor.monomials();
            let mut next: BTreeMap<(i32, i64), (f64, Complex64)> = BTreeMap::new();
            for (&(power, _), &(omega, coef)) in &terms {
                for m in &monos {
                    let exps: &[(f64, Complex64)] = match m.trig {
                        Trig::Sin => &[(1.0, Complex64::new(0.0, -0.5)), (-1.0, Complex64::new(0.0, 0.5))],
                        Trig::Cos => &[(1.0, Complex64::new(0.5, 0.0)), (-1.0, Complex64::new(0.5, 0.0))],
                        Trig::One => &[(0.0, Complex64::new(1.0, 0.0))],
                    };
                    for &(sign, c) in exps {
                        let w = omega + sign * m.freq;
                        let p = power + m.power;
                        let e = next.entry((p, key(w))).or_insert((w, Complex64::new(0.0, 0.0)));
                        e.1 += coef * c * m.coef;
                    }
                }
            }
            if next.len() > MAX_TAIL_TERMS {
                return Err(Error::NonConvergence(format!(
                    "tail expansion exceeds {MAX_TAIL_TERMS} terms"
                )));
            }
            terms = next;
        }
        let per_term_tol = tol / terms.len() as f64;
        let mut acc = Complex64::new(0.0, 0.0);
        for (&(power, k), &(omega, coef)) in &terms {
            if coef.norm() == 0.0 {
                continue;
            }
            let omega = if k == 0 { 0.0 } else { omega };
            let scale = coef.norm().max(1e-300);
            acc += coef * tail_exp_integral(power, omega, cutoff, per_term_tol / scale)?;
        }
        Ok(acc.re)
    }
}

/// `∫_T^∞ t^E e^{iωt} dt`.
fn tail_exp_integral(power: i32, omega: f64, cutoff: f64, tol: f64) -> Result<Complex64> {
    if omega == 0.0 {
        if power >= -1 {
            return Err(Error::NonConvergence(format!(
                "non-oscillating tail term t^{power} is not integrable"
            )));
        }
        let p1 = (power + 1) as f64;
        return Ok(Complex64::new(-cutoff.powf(p1) / p1, 0.0));
    }
    if omega < 0.0 {
        return Ok(tail_exp_integral(power, -omega, cutoff, tol)?.conj());
    }
    // t = T(1 + ix): i e^{iωT} T^{E+1} ∫_0^∞ e^{-ax} (1 + ix)^E dx with a = ωT
    let a = omega * cutoff;
    let c = 1.0 / a.max(1.0);
    let mapped = |u: f64, part: usize| -> f64 {
        let x = c * u / (1.0 - u);
        let jac = c / ((1.0 - u) * (1.0 - u));
        let z = (-a * x).exp() * Complex64::new(1.0, x).powi(power) * jac;
        if part == 0 {
            z.re
        } else {
            z.im
        }
    };
    let front = Complex64::new(0.0, 1.0) * Complex64::from_polar(1.0, a) * cutoff.powi(power + 1);
    let inner_tol = (tol / front.norm().max(1e-300)).max(1e-15);
    let re = integrate_adaptive(|u| mapped(u, 0), 0.0, 1.0, inner_tol, 1e-13, 4000)?;
    let im = integrate_adaptive(|u| mapped(u, 1), 0.0, 1.0, inner_tol, 1e-13, 4000)?;
    Ok(front * Complex64::new(re, im))
}

fn nonzero(v: &[f64]) -> usize {
    v.iter().filter(|x| **x != 0.0).count()
}

fn check_finite(v: &[f64]) -> Result<()> {
    if v.iter().any(|x| !x.is_finite()) {
        return Err(Error::InvalidArgument("direction has non-finite coordinates".into()));
    }
    Ok(())
}

/// `σ(v) = (1/π) ∫ ∏ sinc(v_i t) dt`.
pub fn sigma_quadrature(v: &[f64], tol: f64) -> Result<f64> {
    check_finite(v)?;
    if nonzero(v) < 2 {
        return Err(Error::InvalidArgument("σ needs at least two nonzero coordinates".into()));
    }
    let factors = v.iter().filter(|x| **x != 0.0).map(|&x| Factor::Sinc(x)).collect();
    SincProduct::new(factors).integrate(tol)
}

/// `∂σ/∂v_j = (1/π) ∫ ∏_{i≠j} sinc(v_i t) · (cos(v_j t) - sinc(v_j t))/v_j dt`.
pub fn grad_sigma_quadrature(v: &[f64], j: usize, tol: f64) -> Result<f64> {
    check_finite(v)?;
    if j >= v.len() {
        return Err(Error::InvalidArgument(format!("index {j} out of range")));
    }
    if nonzero(v) < 3 {
        return Err(Error::InvalidArgument("σ is differentiable only with >= 3 nonzero coordinates".into()));
    }
    if v[j] == 0.0 {
        return Err(Error::InvalidArgument("partial derivative needs v_j != 0".into()));
    }
    let mut factors: Vec<Factor> = v
        .iter()
        .enumerate()
        .filter(|(i, x)| *i != j && **x != 0.0)
        .map(|(_, &x)| Factor::Sinc(x))
        .collect();
    factors.push(Factor::Deriv(v[j]));
    SincProduct::new(factors).integrate(tol)
}

/// Per-coordinate residuals `RHS_j - σ(u)` of the criticality condition
/// `σ(u) = 1/(π(1-u_j²)) ∫ ∏_{i≠j} sinc(u_i t) cos(u_j t) dt`.
pub fn critical_residual(u: &[f64], tol: f64) -> Result<Vec<f64>> {
    check_finite(u)?;
    let norm2: f64 = u.iter().map(|x| x * x).sum();
    if (norm2.sqrt() - 1.0).abs() > 1e-12 {
        return Err(Error::InvalidArgument(format!("expected a unit vector, |u| = {}", norm2.sqrt())));
    }
    if nonzero(u) < 3 {
        return Err(Error::InvalidArgument("criticality needs >= 3 nonzero coordinates".into()));
    }
    let sigma = sigma_quadrature(u, tol)?;
    u.iter()
        .enumerate()
        .map(|(j, &uj)| {
            let mut factors: Vec<Factor> = u
                .iter()
                .enumerate()
                .filter(|(i, x)| *i != j && **x != 0.0)
                .map(|(_, &x)| Factor::Sinc(x))
                .collect();
            if uj != 0.0 {
                factors.push(Factor::Cos(uj));
            }
            let mut prod = SincProduct::new(factors);
            prod.scale = 1.0 / (1.0 - uj * uj);
            Ok(prod.integrate(tol)? - sigma)
        })
        .collect()
}

/// Entry `(j1, j2)` of the lower-right block of the bordered Hessian of
/// `σ(v) + (σ(u)/2)(|v|² - 1)`: `β_j(v)` on the diagonal, `γ_{j1,j2}(v)` off it.
/// Zero coordinates use the `v_j → 0` limits of the integrands.
pub fn hessian_entries_numeric(v: &[f64], j1: usize, j2: usize, tol: f64) -> Result<f64> {
    check_finite(v)?;
    if j1 >= v.len() || j2 >= v.len() {
        return Err(Error::InvalidArgument("index out of range".into()));
    }
    if nonzero(v) < 4 {
        return Err(Error::InvalidArgument("σ is twice differentiable only with >= 4 nonzero coordinates".into()));
    }
    let others = |skip: &[usize]| -> Vec<Factor> {
        v.iter()
            .enumerate()
            .filter(|(i, x)| !skip.contains(i) && **x != 0.0)
            .map(|(_, &x)| Factor::Sinc(x))
            .collect()
    };
    if j1 == j2 {
        let mut f = others(&[j1]);
        f.push(if v[j1] == 0.0 { Factor::SecondAtZero } else { Factor::Second(v[j1]) });
        return SincProduct::new(f).integrate(tol);
    }
    if v[j1] == 0.0 || v[j2] == 0.0 {
        // (cos(v t) - sinc(v t))/v → 0 as v → 0
        return Ok(0.0);
    }
    let mut f = others(&[j1, j2]);
    f.push(Factor::Deriv(v[j1]));
    f.push(Factor::Deriv(v[j2]));
    SincProduct::new(f).integrate(tol)
}

/// `d_{n,k} = (1_k, 0_{n-k}) / √k`.
pub fn diagonal_direction(n: usize, k: usize) -> Vec<f64> {
    let c = 1.0 / (k as f64).sqrt();
    (0..n).map(|i| if i < k { c } else { 0.0 }).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adaptive_polynomial_and_peak() {
        let v = integrate_adaptive(|x| x * x, 0.0, 3.0, 1e-12, 1e-12, 100).unwrap();
        assert!((v - 9.0).abs() < 1e-12);
        let v = integrate_adaptive(|x| 1.0 / (1e-4 + x * x), -1.0, 1.0, 1e-10, 1e-12, 1000).unwrap();
        let exact = 2.0 / 1e-2 * (1.0f64 / 1e-2).atan();
        assert!((v - exact).abs() < 1e-8 * exact);
    }

    #[test]
    fn adaptive_reports_non_convergence() {
        let r = integrate_adaptive(|x| (1.0 / x).sin(), 1e-9, 1.0, 1e-14, 0.0, 10);
        assert!(matches!(r, Err(Error::NonConvergence(_))));
    }

    #[test]
    fn tail_integral_matches_direct_sum() {
        // ∫_T^∞ cos(t)/t² dt against a long direct integration plus a small remainder
        let t0 = 10.0;
        let i = tail_exp_integral(-2, 1.0, t0, 1e-14).unwrap();
        let mut direct = 0.0;
        let step = PI;
        let mut a = t0;
        for _ in 0..20000 {
            direct += integrate_adaptive(|t| t.cos() / (t * t), a, a + step, 1e-15, 1e-14, 50).unwrap();
            a += step;
        }
        assert!((i.re - direct).abs() < 1e-8, "{} vs {}", i.re, direct);
        let zero = tail_exp_integral(-3, 0.0, 2.0, 1e-14).unwrap();
        assert!((zero.re - 0.125).abs() < 1e-15);
        assert!(tail_exp_integral(-1, 0.0, 2.0, 1e-14).is_err());
    }

    #[test]
    fn sigma_of_two_equal_coordinates() {
        let s = sigma_quadrature(&[1.0, 1.0], 1e-10).unwrap();
        assert!((s - 1.0).abs() < 1e-9, "{s}");
        let s = sigma_quadrature(&[1.0, 3.0], 1e-10).unwrap();
        assert!((s - 1.0 / 3.0).abs() < 1e-9, "{s}");
    }

    #[test]
    fn sigma_main_diagonal_four() {
        let s = sigma_quadrature(&[0.5; 4], 1e-10).unwrap();
        assert!((s - 4.0 / 3.0).abs() < 1e-9, "{s}");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(sigma_quadrature(&[1.0, 0.0], 1e-8).is_err());
        assert!(sigma_quadrature(&[1.0, 1.0], 0.0).is_err());
        assert!(grad_sigma_quadrature(&[1.0, 1.0, 0.0], 0, 1e-8).is_err());
        assert!(grad_sigma_quadrature(&[1.0, 1.0, 1.0, 0.0], 3, 1e-8).is_err());
        assert!(critical_residual(&[1.0, 1.0, 1.0], 1e-8).is_err());
        assert!(hessian_entries_numeric(&[1.0, 1.0, 1.0], 0, 0, 1e-8).is_err());
        assert!(sigma_quadrature(&[f64::NAN, 1.0], 1e-8).is_err());
    }

    #[test]
    fn factor_series_branches_are_continuous() {
        for f in [Factor::Deriv(0.7), Factor::Second(0.7)] {
            let lo = f.eval(0.05 / 0.7 - 1e-9);
            let hi = f.eval(0.05 / 0.7 + 1e-9);
            assert!((lo - hi).abs() < 1e-9, "{f:?}: {lo} {hi}");
        }
        assert!((Factor::Second(1e-3).eval(2.0) - Factor::SecondAtZero.eval(2.0)).abs() < 1e-5);
    }

    #[test]
    fn gradient_at_main_diagonal() {
        let u = diagonal_direction(5, 5);
        let sigma = 5f64.sqrt() * 115.0 / 192.0;
        let g = grad_sigma_quadrature(&u, 2, 1e-10).unwrap();
        assert!((g + sigma / 5f64.sqrt()).abs() < 1e-8, "{g}");
    }

    #[test]
    fn gradient_matches_central_difference() {
        let v = [0.3, -0.4, 0.5, 0.6];
        let h = 1e-4;
        for j in 0..4 {
            let mut p = v;
            let mut m = v;
            p[j] += h;
            m[j] -= h;
            let fd = (sigma_quadrature(&p, 1e-12).unwrap() - sigma_quadrature(&m, 1e-12).unwrap()) / (2.0 * h);
            let g = grad_sigma_quadrature(&v, j, 1e-10).unwrap();
            assert!((fd - g).abs() < 1e-6, "j={j}: {fd} vs {g}");
        }
    }

    #[test]
    fn generic_direction_is_not_critical() {
        let s = 6f64.sqrt();
        let res = critical_residual(&[1.0 / s, 1.0 / s, 2.0 / s], 1e-9).unwrap();
        assert!(res.iter().any(|r| r.abs() > 1e-3), "{res:?}");
    }

    #[test]
    fn hessian_entries_at_sub_diagonal() {
        let u = diagonal_direction(6, 4);
        assert!(hessian_entries_numeric(&u, 0, 0, 1e-10).unwrap().abs() < 1e-7);
        assert!(hessian_entries_numeric(&u, 4, 4, 1e-10).unwrap().abs() < 1e-7);
        assert_eq!(hessian_entries_numeric(&u, 0, 4, 1e-10).unwrap(), 0.0);
        let g = hessian_entries_numeric(&u, 0, 1, 1e-10).unwrap();
        assert!((g - 4.0 / 3.0).abs() < 1e-7, "{g}");
    }
}
