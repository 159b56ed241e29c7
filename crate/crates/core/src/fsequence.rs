//! The normalised row maxima `f(m) = M_m / m!` of the Eulerian triangle, and
//! their ratio, monotonicity and convexity properties.

use num_bigint::{BigInt, BigUint};
use num_traits::Signed;
use serde::Serialize;

use crate::bounds::{c_bound, d_bound, pass_if, ser_rat};
use crate::error::{invalid, Result};
use crate::eulerian::{eulerian_row, eulerian_row_bruteforce};
use crate::laplace::JTable;
use crate::rational::{factorial, int, rat, to_f64, Rat};
use crate::report::{fields, ClaimKind, Status, VerificationReport};

/// Values of `f(1..=7)` as printed in the source table.
pub const PRINTED_TABLE: [(i64, i64); 7] = [
    (1, 1),
    (1, 2),
    (3, 4),
    (23, 48),
    (115, 192),
    (841, 1920),
    (5887, 11520),
];

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FRecord {
    pub m: u32,
    #[serde(rename = "M_m", serialize_with = "ser_rat")]
    pub row_max: BigUint,
    #[serde(serialize_with = "ser_rat")]
    pub f: Rat,
}

/// `f(m)` from the row maximum, cross-checked against `J_{m+1}(1)` (even `m`)
/// or `J_{m+1}(0)` (odd `m`), and against enumeration for `m <= 8`.
///
/// Panics if the routes disagree.
pub fn f_value(table: &JTable, m: u32) -> Result<FRecord> {
    if m < 1 {
        return invalid("f(m) needs m >= 1");
    }
    let row = eulerian_row(table, m)?;
    let row_max = row.iter().max().cloned().expect("row is nonempty");
    assert_eq!(row_max, row[(m / 2) as usize], "row maximum sits at l = m/2 + 1");
    let f = Rat::new(BigInt::from(row_max.clone()), factorial(m));
    let via_j = table.get(m + 1, if m.is_multiple_of(2) { 1 } else { 0 });
    assert_eq!(f, via_j, "f({m}) routes disagree");
    if m <= 8 {
        let brute = eulerian_row_bruteforce(m)?;
        let bmax = *brute.iter().max().expect("nonempty");
        assert_eq!(f, Rat::new(BigInt::from(bmax), factorial(m)), "f({m}) brute force");
    }
    Ok(FRecord { m, row_max, f })
}

/// `f(m)` without the cross-checks, for sweeps that call it many times.
pub fn f_fast(table: &JTable, m: u32) -> Rat {
    table.get(m + 1, if m.is_multiple_of(2) { 1 } else { 0 })
}

/// `(c_{m+1,2l-m-1}, d_{m+1,2l-m-1}, A(m,l+1)/A(m,l))` for `m >= 3`, `m/2 <= l <= m-1`.
pub fn eulerian_ratio_bounds(table: &JTable, m: u32, l: i64) -> Result<(Rat, Rat, Rat)> {
    if m < 3 {
        return invalid(format!("need m >= 3, got m={m}"));
    }
    let lo_l = (m as i64 + 1) / 2;
    if l < lo_l || l > m as i64 - 1 {
        return invalid(format!("need {lo_l} <= l <= {} for m={m}, got l={l}", m - 1));
    }
    let row = eulerian_row(table, m)?;
    let ratio = Rat::new(
        BigInt::from(row[l as usize].clone()),
        BigInt::from(row[(l - 1) as usize].clone()),
    );
    let (n, r) = (m as i64 + 1, 2 * l - m as i64 - 1);
    Ok((c_bound(n, r)?, d_bound(n, r)?, ratio))
}

pub fn verify_eulerian_ratios(table: &JTable, m_max: u32) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(
        "cor-eulerian-ratio",
        ClaimKind::Theorem,
        "c_{m+1,2l-m-1} <= A(m,l+1)/A(m,l) <= d_{m+1,2l-m-1}, m >= 3, m/2 <= l <= m-1",
    );
    for m in 3..=m_max {
        for l in (m as i64 + 1) / 2..=m as i64 - 1 {
            let (lo, hi, ratio) = eulerian_ratio_bounds(table, m, l)?;
            rep.push(
                fields([("m", m as i64), ("l", l)]),
                pass_if(lo <= ratio && ratio <= hi),
                fields([("lower", lo.to_string()), ("ratio", ratio.to_string()), ("upper", hi.to_string())]),
            );
        }
    }
    Ok(rep)
}

/// Compares the printed table of `f(1..=7)` with the computed values.
pub fn f_printed_report(table: &JTable) -> Result<VerificationReport> {
    let mut rep = VerificationReport::new(
        "f-printed-values",
        ClaimKind::Erratum,
        "printed f(1..7) against M_m/m! (row maximum and enumeration)",
    );
    for (i, &(a, b)) in PRINTED_TABLE.iter().enumerate() {
        let m = i as u32 + 1;
        let rec = f_value(table, m)?;
        let printed = rat(a, b);
        let brute = eulerian_row_bruteforce(m)?;
        let st = if rec.f == printed { Status::Pass } else { Status::Discrepancy };
        rep.push(
            fields([("m", m)]),
            st,
            fields([
                ("computed", rec.f.to_string()),
                ("printed", printed.to_string()),
                ("bruteforce_row", format!("{brute:?}").replace(", ", " ")),
            ]),
        );
    }
    Ok(rep)
}

/// Ratio bounds, the even/odd identity, and monotonicity of `f` along each parity.
pub fn verify_f_ratios(table: &JTable, p_max: u32) -> Result<Vec<VerificationReport>> {
    if p_max < 2 {
        return invalid(format!("p_max must be >= 2, got {p_max}"));
    }
    table.row(2 * p_max + 4);
    let f = |m: i64| f_fast(table, m as u32);
    let p_max = p_max as i64;

    let mut even_odd = VerificationReport::new(
        "f-even-odd",
        ClaimKind::Identity,
        "f(2p) = (2p+1)/(2p+2) f(2p+1), p >= 1",
    );
    let mut ln = VerificationReport::new(
        "ln-odd-ratio",
        ClaimKind::CitedClaim,
        "2p/(2p+1) < f(2p+1)/f(2p-1) < (2p+1)/(2p+2), p >= 1",
    );
    let mut odd = VerificationReport::new(
        "f-ratio-odd",
        ClaimKind::Theorem,
        "2p/(2p+1) < f(2p+1)/f(2p-1) <= (p+1)(2p^2+2p-1)/(p(p+2)(2p+1)), p >= 2",
    );
    let mut even = VerificationReport::new(
        "f-ratio-even",
        ClaimKind::Theorem,
        "2p^2/(2p^2+p-1) < f(2p)/f(2p-2) <= (2p^2+2p-1)/((p+2)(2p-1)), p >= 2",
    );
    let mut even_strong = VerificationReport::new(
        "f-ratio-even-strong",
        ClaimKind::CitedClaim,
        "f(2p)/f(2p-2) < p(2p+1)^2/(2(p+1)^2(2p-1)), p >= 2",
    );
    let mut decreasing = VerificationReport::new(
        "f-decreasing",
        ClaimKind::CitedClaim,
        "f(2p+2) < f(2p) and f(2p+3) < f(2p+1)",
    );

    for p in 1..=p_max {
        let lhs = f(2 * p);
        let rhs = rat(2 * p + 1, 2 * p + 2) * f(2 * p + 1);
        even_odd.push(
            fields([("p", p)]),
            pass_if(lhs == rhs),
            fields([("f(2p)", lhs.to_string()), ("rhs", rhs.to_string())]),
        );

        let r_odd = f(2 * p + 1) / f(2 * p - 1);
        let lo = rat(2 * p, 2 * p + 1);
        let hi = rat(2 * p + 1, 2 * p + 2);
        let st = if lo < r_odd && r_odd < hi {
            Status::Pass
        } else if lo == r_odd && p == 1 {
            // f(3)/f(1) = 2/3 meets the lower bound with equality
            Status::Discrepancy
        } else {
            Status::Fail
        };
        ln.push(
            fields([("p", p)]),
            st,
            fields([("lower", lo.to_string()), ("ratio", r_odd.to_string()), ("upper", hi.to_string())]),
        );

        if p >= 2 {
            let up = rat((p + 1) * (2 * p * p + 2 * p - 1), p * (p + 2) * (2 * p + 1));
            odd.push(
                fields([("p", p)]),
                pass_if(lo < r_odd && r_odd <= up),
                fields([("lower", lo.to_string()), ("ratio", r_odd.to_string()), ("upper", up.to_string())]),
            );

            let r_even = f(2 * p) / f(2 * p - 2);
            let lo_e = rat(2 * p * p, 2 * p * p + p - 1);
            let up_e = rat(2 * p * p + 2 * p - 1, (p + 2) * (2 * p - 1));
            even.push(
                fields([("p", p)]),
                pass_if(lo_e < r_even && r_even <= up_e),
                fields([("lower", lo_e.to_string()), ("ratio", r_even.to_string()), ("upper", up_e.to_string())]),
            );
            let strong = rat(p * (2 * p + 1) * (2 * p + 1), 2 * (p + 1) * (p + 1) * (2 * p - 1));
            even_strong.push(
                fields([("p", p)]),
                pass_if(lo_e < r_even && r_even < strong),
                fields([("ratio", r_even.to_string()), ("upper", strong.to_string())]),
            );
        }

        let ok = f(2 * p + 2) < f(2 * p) && f(2 * p + 3) < f(2 * p + 1);
        decreasing.push(
            fields([("p", p)]),
            pass_if(ok),
            fields([
                ("f(2p)", f(2 * p).to_string()),
                ("f(2p+2)", f(2 * p + 2).to_string()),
                ("f(2p+1)", f(2 * p + 1).to_string()),
                ("f(2p+3)", f(2 * p + 3).to_string()),
            ]),
        );
    }
    let printed = f_printed_report(table)?;
    Ok(vec![printed, even_odd, ln, odd, even, even_strong, decreasing])
}

fn poly(p: i64, c: &[i64]) -> Rat {
    int(c.iter().fold(0i64, |acc, k| acc * p + k))
}

/// Convexity of both parity subsequences, log-convexity of the odd one, and
/// the three rational inequalities used to establish them.
pub fn verify_f_convexity(table: &JTable, p_max: u32) -> Result<Vec<VerificationReport>> {
    if p_max < 2 {
        return invalid(format!("p_max must be >= 2, got {p_max}"));
    }
    table.row(2 * p_max + 4);
    let f = |m: i64| f_fast(table, m as u32);
    let p_max = p_max as i64;

    let mut odd_cvx = VerificationReport::new(
        "prop-odd-convex",
        ClaimKind::Theorem,
        "f(2p+3) + f(2p-1) >= 2 f(2p+1), p >= 1",
    );
    let mut odd_log = VerificationReport::new(
        "prop-odd-logconvex",
        ClaimKind::Theorem,
        "f(2p+3) f(2p-1) >= f(2p+1)^2, p >= 1",
    );
    let mut even_cvx = VerificationReport::new(
        "prop-even-convex",
        ClaimKind::Theorem,
        "f(2p+2) + f(2p-2) >= 2 f(2p), p >= 3",
    );
    let mut ids = VerificationReport::new(
        "prop-rational-identities",
        ClaimKind::Identity,
        "closed forms of the bound combinations used for convexity, each > 1",
    );

    for p in 1..=p_max {
        let (a, b, c) = (f(2 * p - 1), f(2 * p + 1), f(2 * p + 3));
        odd_cvx.push(
            fields([("p", p)]),
            pass_if(&c + &a >= int(2) * &b),
            fields([("f(2p-1)", a.to_string()), ("f(2p+1)", b.to_string()), ("f(2p+3)", c.to_string())]),
        );
        odd_log.push(
            fields([("p", p)]),
            pass_if(&c * &a >= &b * &b),
            fields([("margin", (&c * &a / (&b * &b) - int(1)).to_string())]),
        );
        if p >= 3 {
            let (x, y, z) = (f(2 * p - 2), f(2 * p), f(2 * p + 2));
            even_cvx.push(
                fields([("p", p)]),
                pass_if(&z + &x >= int(2) * &y),
                fields([("f(2p-2)", x.to_string()), ("f(2p)", y.to_string()), ("f(2p+2)", z.to_string())]),
            );
        }

        let half = rat(1, 2);
        let odd_sum = &half
            * (rat(2 * p + 2, 2 * p + 3)
                + rat(p * (p + 2) * (2 * p + 1), (p + 1) * (2 * p * p + 2 * p - 1)));
        let odd_sum_closed = poly(p, &[8, 28, 29, 6, -2]) / poly(p, &[8, 28, 28, 2, -6]);
        let odd_prod = rat(2 * p + 2, 2 * p + 3)
            * rat(p * (p + 2) * (2 * p + 1), (p + 1) * (2 * p * p + 2 * p - 1));
        let odd_prod_closed = poly(p, &[4, 10, 4, 0]) / poly(p, &[4, 10, 4, -3]);
        let even_sum = &half
            * (rat(2 * p * p + 4 * p + 2, 2 * p * p + 5 * p + 2)
                + rat((p + 2) * (2 * p - 1), 2 * p * p + 2 * p - 1));
        let even_sum_closed = poly(p, &[8, 28, 25, -4, -6]) / poly(p, &[8, 28, 24, -2, -4]);
        let one = int(1);
        for (name, v, closed) in [
            ("odd-sum", odd_sum, odd_sum_closed),
            ("odd-product", odd_prod, odd_prod_closed),
            ("even-sum", even_sum, even_sum_closed),
        ] {
            // the even-sum form exceeds 1 only from p = 3, where even convexity starts
            let status = if name == "even-sum" && p < 3 && v == closed {
                Status::Skip
            } else {
                pass_if(v == closed && v > one)
            };
            ids.push(
                fields([("p", p.to_string()), ("form", name.to_string())]),
                status,
                fields([("value", v.to_string()), ("closed_form", closed.to_string())]),
            );
        }
    }
    Ok(vec![odd_cvx, odd_log, even_cvx, ids])
}

/// Empirical check of log-convexity of `(f(2p))_{p>=2}`, with the margin
/// `f(2p+2) f(2p-2) / f(2p)² - 1` and the proven weaker bound for comparison.
pub fn logconvexity_scan_even(table: &JTable, p_max: u32) -> Result<Vec<VerificationReport>> {
    if p_max < 2 {
        return invalid(format!("p_max must be >= 2, got {p_max}"));
    }
    table.row(2 * p_max + 4);
    let f = |m: i64| f_fast(table, m as u32);
    let mut conj = VerificationReport::new(
        "conj-even-logconvex",
        ClaimKind::Conjecture,
        "f(2p+2) f(2p-2) >= f(2p)^2, p >= 3",
    );
    let mut weak = VerificationReport::new(
        "even-logconvex-weak",
        ClaimKind::Theorem,
        "f(2p+2) f(2p-2) / f(2p)^2 >= (4p^3+6p^2-2)/(4p^3+6p^2-1), p >= 2",
    );
    for p in 2..=p_max as i64 {
        let q = f(2 * p + 2) * f(2 * p - 2) / (f(2 * p) * f(2 * p));
        let margin = &q - int(1);
        let bound = rat(4 * p * p * p + 6 * p * p - 2, 4 * p * p * p + 6 * p * p - 1);
        weak.push(
            fields([("p", p)]),
            pass_if(q >= bound && bound < int(1)),
            fields([("product", q.to_string()), ("bound", bound.to_string())]),
        );
        let params = fields([("p", p)]);
        let w = fields([("margin", margin.to_string()), ("margin_float", format!("{:.6e}", to_f64(&margin)))]);
        if p >= 3 {
            conj.push(params, pass_if(!margin.is_negative()), w);
        } else {
            // the triple (f(2), f(4), f(6)) lies outside the conjectured range
            conj.push(params, Status::Skip, w);
        }
    }
    Ok(vec![conj, weak])
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FigureTwoRow {
    pub m: u32,
    pub parity: &'static str,
    /// exact `num/den`
    pub f: String,
    pub f_float: f64,
    pub log_f: f64,
}

pub fn figure2_rows(table: &JTable, m_max: u32) -> Result<Vec<FigureTwoRow>> {
    (1..=m_max)
        .map(|m| {
            let rec = f_value(table, m)?;
            let x = to_f64(&rec.f);
            Ok(FigureTwoRow {
                m,
                parity: if m % 2 == 0 { "even" } else { "odd" },
                f: rec.f.to_string(),
                f_float: x,
                log_f: x.ln(),
            })
        })
        .collect()
}
