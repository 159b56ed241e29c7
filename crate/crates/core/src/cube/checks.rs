//! Verification reports for the section function: exact values on diagonals,
//! agreement of quadrature with the exact route, and the first- and
//! second-order conditions at diagonal directions.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;

use crate::bounds::pass_if;
use crate::cube::hessian::hessian_diag_entries;
use crate::cube::quadrature::{
    critical_residual, diagonal_direction, grad_sigma_quadrature, hessian_entries_numeric, sigma_quadrature,
};
use crate::cube::sigma::{sigma_exact, DirectionQ};
use crate::error::Result;
use crate::laplace::JTable;
use crate::rational::{int, rat, to_f64, Rat};
use crate::report::{fields, ClaimKind, VerificationReport};

/// Agreement required between quadrature and the exact route.
pub const QUADRATURE_AGREEMENT: f64 = 1e-6;
/// Tolerance for criticality residuals and gradients at diagonal directions.
pub const CRITICAL_TOL: f64 = 1e-6;
/// Tolerance for numeric Hessian entries against the exact diagonal values.
pub const HESSIAN_TOL: f64 = 1e-5;

/// A direction in `ℚⁿ` with coordinates `±p/q`, `1 <= p, q <= 10`.
pub fn random_direction(rng: &mut StdRng, n: usize) -> Vec<Rat> {
    (0..n)
        .map(|_| {
            let p: i64 = rng.gen_range(1..=10);
            let q: i64 = rng.gen_range(1..=10);
            let s = if rng.gen_bool(0.5) { 1 } else { -1 };
            rat(s * p, q)
        })
        .collect()
}

fn fmt_dir(v: &[Rat]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" ")
}

/// `samples` random rational directions for each `n` in `2..=n_max`.
pub fn quadrature_report(samples: usize, n_max: usize, seed: u64, tol: f64) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(
        "sigma-quadrature",
        ClaimKind::Identity,
        "quadrature of the sinc product agrees with the exact section volume within 1e-6",
    );
    let mut rng = StdRng::seed_from_u64(seed);
    let dirs: Vec<Vec<Rat>> = (2..=n_max)
        .flat_map(|n| (0..samples).map(move |_| n))
        .map(|n| random_direction(&mut rng, n))
        .collect();
    let results: Vec<(f64, f64)> = dirs
        .par_iter()
        .map(|d| {
            let exact = to_f64(&sigma_exact(&DirectionQ::new(d.clone())?)?);
            let v: Vec<f64> = d.iter().map(to_f64).collect();
            Ok((exact, sigma_quadrature(&v, tol)?))
        })
        .collect::<Result<_>>()?;
    for (d, (exact, quad)) in dirs.iter().zip(results) {
        let err = (quad - exact).abs();
        rep.push(
            fields([("n", d.len().to_string()), ("v", fmt_dir(d))]),
            pass_if(err <= QUADRATURE_AGREEMENT),
            fields([
                ("exact", format!("{exact:.15e}")),
                ("quadrature", format!("{quad:.15e}")),
                ("abs_err", format!("{err:.3e}")),
            ]),
        );
    }
    Ok(rep)
}

/// Exact checks: `σ(1_k) = J_k(0)` for `k <= 12` and homogeneity of degree -1.
pub fn exact_sigma_reports(table: &JTable) -> Result<Vec<VerificationReport>> {
    let mut diag = VerificationReport::new(
        "sigma-exact-diagonal",
        ClaimKind::Identity,
        "sigma(1_k) = J_k(0) for 2 <= k <= 12",
    );
    for k in 2..=12u32 {
        let s = sigma_exact(&DirectionQ::new(vec![int(1); k as usize])?)?;
        let j = table.get(k, 0);
        diag.push(fields([("k", k)]), pass_if(s == j), fields([("sigma", s.to_string()), ("J_k(0)", j.to_string())]));
    }
    let mut homog = VerificationReport::new(
        "sigma-homogeneity",
        ClaimKind::Identity,
        "sigma(c w) = sigma(w)/c for c in {2, 3, 7/2}",
    );
    let ws = [
        vec![rat(3, 10), rat(2, 5), rat(1, 2)],
        vec![int(1), int(2), int(3), int(0)],
        vec![rat(-1, 3), rat(5, 7), int(1), rat(2, 9), rat(1, 4)],
    ];
    for w in ws {
        let d = DirectionQ::new(w.clone())?;
        let s = sigma_exact(&d)?;
        for c in [int(2), int(3), rat(7, 2)] {
            let sc = sigma_exact(&d.scaled(&c))?;
            homog.push(
                fields([("w", fmt_dir(&w)), ("c", c.to_string())]),
                pass_if(&sc * &c == s),
                fields([("sigma(cw)", sc.to_string()), ("sigma(w)", s.to_string())]),
            );
        }
    }
    Ok(vec![diag, homog])
}

/// Criticality residuals and gradients at `d_{6,4}` and `d_{5,5}`, and the
/// numeric Hessian entries at `d_{6,4}` and `d_{6,5}` against their exact values.
pub fn critical_reports(table: &JTable, tol: f64) -> Result<Vec<VerificationReport>> {
    let mut crit = VerificationReport::new(
        "diagonal-critical",
        ClaimKind::Theorem,
        "d_{n,k} satisfies the criticality condition in every coordinate",
    );
    let mut grad = VerificationReport::new(
        "diagonal-gradient",
        ClaimKind::Identity,
        "d sigma/d u_j = -sigma(u) u_j at critical directions",
    );
    for (n, k) in [(6usize, 4usize), (5, 5)] {
        let u = diagonal_direction(n, k);
        let res = critical_residual(&u, tol)?;
        for (j, r) in res.iter().enumerate() {
            crit.push(
                fields([("n", n), ("k", k), ("j", j + 1)]),
                pass_if(r.abs() <= CRITICAL_TOL),
                fields([("residual", format!("{r:.3e}"))]),
            );
        }
        let sigma = (k as f64).sqrt() * to_f64(&table.get(k as u32, 0));
        for j in 0..k {
            let g = grad_sigma_quadrature(&u, j, tol)?;
            let want = -sigma * u[j];
            grad.push(
                fields([("n", n), ("k", k), ("j", j + 1)]),
                pass_if((g - want).abs() <= CRITICAL_TOL),
                fields([("gradient", format!("{g:.12e}")), ("expected", format!("{want:.12e}"))]),
            );
        }
    }

    let mut hess = VerificationReport::new(
        "hessian-numeric",
        ClaimKind::Identity,
        "numeric beta_j and gamma_{j1,j2} at d_{n,k} reduce to beta_k, beta_k/3, gamma_k and 0",
    );
    for (n, k) in [(6usize, 4u32), (6, 5)] {
        let u = diagonal_direction(n, k as usize);
        let e = hessian_diag_entries(table, k)?;
        let beta = e.beta.to_f64();
        let gamma = e.gamma.to_f64();
        let cases = [(0, 0, beta), (k as usize, k as usize, beta / 3.0), (0, 1, gamma), (0, k as usize, 0.0)];
        for (j1, j2, want) in cases {
            let got = hessian_entries_numeric(&u, j1, j2, tol)?;
            hess.push(
                fields([("n", n), ("k", k as usize), ("j1", j1 + 1), ("j2", j2 + 1)]),
                pass_if((got - want).abs() <= HESSIAN_TOL),
                fields([("numeric", format!("{got:.12e}")), ("exact", format!("{want:.12e}"))]),
            );
        }
    }
    Ok(vec![crit, grad, hess])
}

/// All section reports with the default sample sizes.
pub fn verify_sections(table: &JTable, tol: f64, seed: u64) -> Result<Vec<VerificationReport>> {
    let mut out = exact_sigma_reports(table)?;
    out.push(quadrature_report(20, 8, seed, tol)?);
    out.extend(critical_reports(table, tol)?);
    Ok(out)
}
