//! Acceptance criteria, one line each. Tolerances and time limits are pinned
//! here; the process exits non-zero if any criterion fails or overruns.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;

use laplace_polya::bounds::{pn_identities, two_step_reports, verify_asymptotics, verify_central};
use laplace_polya::cube::checks::{critical_reports, exact_sigma_reports, quadrature_report};
use laplace_polya::cube::hessian::{classify_diagonal, verify_hessian, Verdict};
use laplace_polya::cube::hexagon::hexagon_derivatives;
use laplace_polya::cube::quadnum::QuadNum;
use laplace_polya::eulerian::{eulerian, eulerian_bruteforce, eulerian_row, factorial_u};
use laplace_polya::figures::figure1_rows;
use laplace_polya::fsequence::{f_fast, figure2_rows, f_printed_report, verify_f_convexity, verify_f_ratios};
use laplace_polya::laplace::{jn, jn_explicit, JTable};
use laplace_polya::rational::rat;
use laplace_polya::report::{any_failures, Status, VerificationReport};
use laplace_polya::Result;

const HEXAGON_TOL: f64 = 1e-12;
const QUADRATURE_TOL: f64 = 1e-9;
const SAMPLE_SEED: u64 = 20_240_601;

type Check = fn() -> Result<(bool, String)>;

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

fn report<'a>(reps: &'a [VerificationReport], id: &str) -> &'a VerificationReport {
    reps.iter().find(|r| r.claim_id == id).unwrap_or_else(|| panic!("missing report {id}"))
}

fn summary(reps: &[VerificationReport]) -> String {
    let (mut pass, mut disc, mut skip) = (0, 0, 0);
    for r in reps {
        let t = r.tally();
        pass += t.pass;
        disc += t.discrepancy;
        skip += t.skip;
    }
    format!("{pass} records pass, {disc} discrepancies, {skip} skipped")
}

fn central_values() -> Result<(bool, String)> {
    let t = JTable::new();
    let printed = [(1, 1), (3, 4), (2, 3), (115, 192), (11, 20), (5887, 11520), (151, 315)];
    let mut ok = true;
    for (i, &(a, b)) in printed.iter().enumerate() {
        ok &= jn(&t, i as u32 + 2, 0)? == rat(a, b);
    }
    Ok((ok, "J_n(0), n = 2..8".into()))
}

fn route_equivalence() -> Result<(bool, String)> {
    let t = JTable::new();
    let mut count = 0;
    for n in 2..=60u32 {
        for r in 0..=n as i64 {
            if jn_explicit(n, r)? != jn(&t, n, r)? {
                return Ok((false, format!("mismatch at n={n}, r={r}")));
            }
            count += 1;
        }
    }
    Ok((true, format!("{count} pairs agree")))
}

fn eulerian_oracle() -> Result<(bool, String)> {
    let t = JTable::new();
    for m in 1..=8u32 {
        for l in 1..=m as i64 {
            if eulerian(&t, m, l)?.value != BigUint::from(eulerian_bruteforce(m, l)?) {
                return Ok((false, format!("A({m},{l}) differs from enumeration")));
            }
        }
    }
    for m in 1..=20u32 {
        let row = eulerian_row(&t, m)?;
        let sum: BigUint = row.iter().sum();
        let symmetric = row.iter().eq(row.iter().rev());
        if sum != factorial_u(m) || !symmetric {
            return Ok((false, format!("row {m} fails sum or symmetry")));
        }
    }
    Ok((true, "enumeration m <= 8, row sums and symmetry m <= 20".into()))
}

fn theorem_sweep() -> Result<(bool, String)> {
    let t = JTable::new();
    let reps = two_step_reports(&t, 200)?;
    let base = report(&reps, "two-step-base-n4").tally();
    let ok = !any_failures(&reps) && base.pass == 4;
    Ok((ok, summary(&reps)))
}

fn polynomial_identities() -> Result<(bool, String)> {
    let reps = pn_identities(100)?;
    Ok((!any_failures(&reps), summary(&reps)))
}

fn central_consequences() -> Result<(bool, String)> {
    let t = JTable::new();
    let reps = verify_central(&t, 200)?;
    let edge = report(&reps, "cor-central-lower")
        .with_status(Status::Discrepancy)
        .any(|r| r.params["n"] == "2");
    let ball_ok = report(&reps, "ball").tally().pass == 199;
    Ok((!any_failures(&reps) && edge && ball_ok, summary(&reps)))
}

fn f_sequence() -> Result<(bool, String)> {
    let t = JTable::new();
    let mut reps = verify_f_ratios(&t, 100)?;
    reps.extend(verify_f_convexity(&t, 100)?);
    let printed = f_printed_report(&t)?;
    let witness = printed
        .records
        .iter()
        .any(|r| r.status == Status::Discrepancy && r.params["m"] == "3" && r.witness["computed"] == "2/3");
    let ok = !any_failures(&reps) && witness && f_fast(&t, 3) == rat(2, 3);
    Ok((ok, summary(&reps)))
}

fn sigma_consistency() -> Result<(bool, String)> {
    let t = JTable::new();
    let mut reps = exact_sigma_reports(&t)?;
    reps.push(quadrature_report(20, 8, SAMPLE_SEED, QUADRATURE_TOL)?);
    Ok((!any_failures(&reps), summary(&reps)))
}

fn criticality() -> Result<(bool, String)> {
    let t = JTable::new();
    let reps: Vec<_> = critical_reports(&t, QUADRATURE_TOL)?
        .into_iter()
        .filter(|r| r.claim_id != "hessian-numeric")
        .collect();
    Ok((!any_failures(&reps), summary(&reps)))
}

fn hessian() -> Result<(bool, String)> {
    let t = JTable::new();
    let reps = verify_hessian(&t, 12, 12, 12)?;
    let mut ok = !any_failures(&reps);
    for n in 4..=12 {
        for k in 3..n {
            ok &= classify_diagonal(&t, n, k)?.verdict == Verdict::NotExtremal;
        }
    }
    Ok((ok, summary(&reps)))
}

fn hexagon() -> Result<(bool, String)> {
    let h = hexagon_derivatives();
    let err = (h.a3.to_f64() - 2.0 / 3f64.sqrt()).abs();
    let ok = h.a1.is_zero() && h.a2.is_zero() && h.a3 == QuadNum::surd(3, rat(2, 3)) && err <= HEXAGON_TOL;
    Ok((ok, format!("a'''(0) = {}, |err| = {err:.1e}", h.a3)))
}

fn asymptotics() -> Result<(bool, String)> {
    let t = JTable::new();
    let reps = verify_asymptotics(&t, 200)?;
    Ok((!any_failures(&reps), summary(&reps)))
}

fn figure_data() -> Result<(bool, String)> {
    let t = JTable::new();
    let fig1 = figure1_rows(&t, 4, 200)?;
    let gaps_ok = fig1.iter().all(|r| !r.lower_gap.starts_with('-') && !r.upper_gap.starts_with('-'));
    let fig2 = figure2_rows(&t, 20)?;
    let f_ok = fig2.iter().all(|r| r.f == f_fast(&t, r.m).to_string());
    let n4 = fig1[0].ratio == "1/4" && fig1[0].upper_gap == "0";
    Ok((gaps_ok && f_ok && n4, format!("{} + {} rows", fig1.len(), fig2.len())))
}

fn main() -> ExitCode {
    let criteria: [(&str, &str, Duration, Check); 13] = [
        ("1", "J_n(0) for n = 2..8", secs(1), central_values),
        ("2", "explicit sum = recursion, n <= 60", secs(30), route_equivalence),
        ("3", "Eulerian numbers against enumeration", secs(30), eulerian_oracle),
        ("4", "two-step bounds, n <= 200, and the n = 4 base case", secs(120), theorem_sweep),
        ("5", "cubic p_n identities", secs(60), polynomial_identities),
        ("6", "central-value corollaries and Ball bound", secs(60), central_consequences),
        ("7", "f-sequence ratios and convexity, p <= 100", secs(60), f_sequence),
        ("8", "exact and quadrature sigma agree", secs(120), sigma_consistency),
        ("9", "criticality and gradient at d_{6,4}, d_{5,5}", secs(60), criticality),
        ("10", "Hessian entries, minors and classification", secs(60), hessian),
        ("11", "hexagon derivatives", secs(1), hexagon),
        ("12", "asymptotics and monotonicity", secs(30), asymptotics),
        ("F", "figure rows satisfy the sweeps", secs(60), figure_data),
    ];
    let mut failed = 0;
    for (id, name, limit, check) in criteria {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let (ok, detail) = match outcome {
            Ok((ok, d)) => (ok && elapsed <= limit, d),
            Err(e) => (false, format!("error: {e}")),
        };
        if !ok {
            failed += 1;
        }
        println!(
            "criterion {id:>2} {} {name} [{:.2}s / {}s] {detail}",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_secs_f64(),
            limit.as_secs()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
