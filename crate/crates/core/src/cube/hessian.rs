//! Bordered Hessian of `σ` restricted to the sphere, evaluated at the
//! diagonal directions `d_{n,k}`, and the second-derivative test built on its
//! leading principal minors `H_{m,k}`.

use rayon::prelude::*;
use serde::Serialize;

use crate::bounds::pass_if;
use crate::cube::hexagon::hexagon_derivatives;
use crate::cube::quadnum::{det_bareiss, QuadNum};
use crate::error::{invalid, Result};
use crate::laplace::JTable;
use crate::rational::{int, rat};
use crate::report::{fields, ClaimKind, Status, VerificationReport};

/// `α_k, β_k, γ_k, δ_k = β_k - γ_k`, all in `ℚ(√k)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DiagEntries {
    pub k: u32,
    pub alpha: QuadNum,
    pub beta: QuadNum,
    pub gamma: QuadNum,
    pub delta: QuadNum,
}

pub fn hessian_diag_entries(table: &JTable, k: u32) -> Result<DiagEntries> {
    if k < 4 {
        return invalid(format!("diagonal Hessian entries need k >= 4, got {k}"));
    }
    let kk = k as i64;
    let j0 = table.get(k - 2, 0);
    let j2 = table.get(k - 2, 2);
    // k^{3/2}/(2(k-1)) = (k/(2(k-1))) √k
    let front = rat(kk, 2 * (kk - 1));
    let beta_c = &front * (int(4 - kk) * &j0 + rat(kk * kk + 2, kk - 2) * &j2);
    let gamma_c = &front * (&j0 - &j2);
    let q = k as u64;
    let beta = QuadNum::surd(q, beta_c);
    let gamma = QuadNum::surd(q, gamma_c);
    let delta = &beta - &gamma;
    Ok(DiagEntries { k, alpha: QuadNum::surd(q, rat(2, kk)), beta, gamma, delta })
}

/// Leading `m × m` block of the bordered Hessian at `d_{n,k}` in the displayed
/// block form: border `α`, then a `k × k` block with `β` on the diagonal and
/// `γ` elsewhere, then `β/3` on the remaining diagonal.
pub fn bordered_matrix(e: &DiagEntries, m: u32) -> Vec<Vec<QuadNum>> {
    let q = e.k as u64;
    let k = e.k as usize;
    let third = e.beta.scale(&rat(1, 3));
    (0..m as usize)
        .map(|i| {
            (0..m as usize)
                .map(|j| match (i, j) {
                    (0, 0) => QuadNum::zero(q),
                    (0, _) | (_, 0) => e.alpha.clone(),
                    (i, j) if i <= k && j <= k => {
                        if i == j {
                            e.beta.clone()
                        } else {
                            e.gamma.clone()
                        }
                    }
                    (i, j) if i == j => third.clone(),
                    _ => QuadNum::zero(q),
                })
                .collect()
        })
        .collect()
}

/// `H_{m,k}` from the closed forms:
/// `-(m-1) α² δ^{m-2}` for `m <= k+1`, and for `m >= k+2`
/// `-α² (β/3)^{m-k-2} (β + (k-1)γ) δ^{k-1} + (β/3) H_{m-1,k}`.
pub fn minor_value(table: &JTable, m: u32, k: u32) -> Result<QuadNum> {
    if m < 3 {
        return invalid(format!("minor order must be >= 3, got {m}"));
    }
    let e = hessian_diag_entries(table, k)?;
    Ok(minor_closed(&e, m))
}

fn minor_closed(e: &DiagEntries, m: u32) -> QuadNum {
    let k = e.k;
    let a2 = &e.alpha * &e.alpha;
    if m <= k + 1 {
        return -(a2.scale(&int(m as i64 - 1)) * e.delta.pow(m - 2));
    }
    let third = e.beta.scale(&rat(1, 3));
    let block = (&e.beta + &e.gamma.scale(&int(k as i64 - 1))) * e.delta.pow(k - 1);
    let mut h = -(a2.scale(&int(k as i64)) * e.delta.pow(k - 1));
    for j in k + 2..=m {
        h = -(&a2 * &third.pow(j - k - 2)) * block.clone() + &third * &h;
    }
    h
}

/// `H_{m,k}` as an explicit determinant of [`bordered_matrix`].
pub fn minor_direct(table: &JTable, m: u32, k: u32) -> Result<QuadNum> {
    if !(3..=9).contains(&m) {
        return invalid(format!("direct minors are computed for 3 <= m <= 9, got {m}"));
    }
    let e = hessian_diag_entries(table, k)?;
    Ok(det_bareiss(bordered_matrix(&e, m)))
}

/// `H_{m,k}` for `m = 3..=n+1`.
#[derive(Debug, Clone, PartialEq)]
pub struct MinorSequence {
    pub k: u32,
    pub n: u32,
    pub values: Vec<QuadNum>,
    pub signs: Vec<i8>,
}

#[derive(Debug, Clone, Serialize)]
pub struct MinorEntry {
    pub m: u32,
    pub a: String,
    pub b: String,
    pub sign: i8,
}

impl MinorSequence {
    pub fn entries(&self) -> Vec<MinorEntry> {
        self.values
            .iter()
            .zip(&self.signs)
            .enumerate()
            .map(|(i, (v, &sign))| MinorEntry {
                m: i as u32 + 3,
                a: v.a().to_string(),
                b: v.b().to_string(),
                sign,
            })
            .collect()
    }
}

pub fn minor_sequence(table: &JTable, n: u32, k: u32) -> Result<MinorSequence> {
    if n < k {
        return invalid(format!("need n >= k, got n={n}, k={k}"));
    }
    let e = hessian_diag_entries(table, k)?;
    let values: Vec<QuadNum> = (3..=n + 1).map(|m| minor_closed(&e, m)).collect();
    let signs = values.iter().map(QuadNum::signum).collect();
    Ok(MinorSequence { k, n, values, signs })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    NotExtremal,
    ConsistentWithMin,
    ConsistentWithMax,
    Inconclusive,
}

/// Evidence behind a [`Verdict::NotExtremal`] verdict. Minor pairs are given
/// by their orders `(m, m+1)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Witness {
    Minors { same_sign: (u32, u32), alternating: (u32, u32) },
    OddDerivative { order: u32 },
}

#[derive(Debug, Clone, PartialEq)]
pub struct Classification {
    pub n: u32,
    pub k: u32,
    pub minors: Option<MinorSequence>,
    pub verdict: Verdict,
    pub witness: Option<Witness>,
}

#[derive(Serialize)]
struct ClassificationJson<'a> {
    k: u32,
    n: u32,
    minors: Vec<MinorEntry>,
    verdict: Verdict,
    witnesses: Option<&'a Witness>,
}

impl Serialize for Classification {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ClassificationJson {
            k: self.k,
            n: self.n,
            minors: self.minors.as_ref().map(MinorSequence::entries).unwrap_or_default(),
            verdict: self.verdict,
            witnesses: self.witness.as_ref(),
        }
        .serialize(s)
    }
}

/// Second-derivative test on a minor sequence. A sequence is not extremal when
/// it has both a pair of consecutive nonzero minors of equal sign and one of
/// opposite sign; zero minors carry no information.
pub fn classify_minors(seq: &MinorSequence) -> (Verdict, Option<Witness>) {
    let s = &seq.signs;
    let order = |i: usize| i as u32 + 3;
    let pair = |same: bool| {
        (0..s.len().saturating_sub(1))
            .find(|&i| s[i] != 0 && s[i + 1] != 0 && (s[i] == s[i + 1]) == same)
            .map(|i| (order(i), order(i + 1)))
    };
    if let (Some(same_sign), Some(alternating)) = (pair(true), pair(false)) {
        return (Verdict::NotExtremal, Some(Witness::Minors { same_sign, alternating }));
    }
    if s.contains(&0) {
        return (Verdict::Inconclusive, None);
    }
    let max_pattern = s.iter().enumerate().all(|(i, &x)| x == if order(i) % 2 == 1 { 1 } else { -1 });
    if max_pattern {
        (Verdict::ConsistentWithMax, None)
    } else if s.iter().all(|&x| x < 0) {
        (Verdict::ConsistentWithMin, None)
    } else {
        (Verdict::Inconclusive, None)
    }
}

/// Classifies `d_{n,k}` for `4 <= n` and `3 <= k <= n-1`. For `k = 3` the test
/// moves to the hexagon curve, where an odd first nonvanishing derivative of
/// the area rules out an extremum.
pub fn classify_diagonal(table: &JTable, n: u32, k: u32) -> Result<Classification> {
    if n < 4 || k < 3 || k >= n {
        return invalid(format!("need 4 <= n and 3 <= k <= n-1, got n={n}, k={k}"));
    }
    if k == 3 {
        let h = hexagon_derivatives();
        let (verdict, witness) = match h.first_nonzero_order() {
            Some(order) if order % 2 == 1 => (Verdict::NotExtremal, Some(Witness::OddDerivative { order })),
            _ => (Verdict::Inconclusive, None),
        };
        return Ok(Classification { n, k, minors: None, verdict, witness });
    }
    let seq = minor_sequence(table, n, k)?;
    let (verdict, witness) = classify_minors(&seq);
    Ok(Classification { n, k, minors: Some(seq), verdict, witness })
}

/// Printed `(m, H_{m,4})` values, checked by sign only.
pub const PRINTED_K4_MINORS: [(u32, i64); 3] = [(4, -3), (5, 4), (6, 3)];

fn sign_of_parity(e: u32) -> i8 {
    if e.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Exact checks on the entries, the minors, their sign pattern, and the
/// resulting classification of every `d_{n,k}` with `n <= n_max`.
pub fn verify_hessian(table: &JTable, k_max: u32, m_max: u32, n_max: u32) -> Result<Vec<VerificationReport>> {
    if k_max < 5 || m_max < 3 || n_max < 4 {
        return invalid("need k_max >= 5, m_max >= 3, n_max >= 4");
    }
    table.row(k_max.max(n_max).max(100));

    let mut printed = VerificationReport::new(
        "hessian-entries",
        ClaimKind::Identity,
        "beta_4 = 0, delta_4 = -4/3, delta_5 = -5 sqrt5/32",
    );
    let e4 = hessian_diag_entries(table, 4)?;
    let e5 = hessian_diag_entries(table, 5)?;
    let expect = [
        ("beta_4", &e4.beta, QuadNum::zero(4)),
        ("delta_4", &e4.delta, QuadNum::rational(4, rat(-4, 3))),
        ("delta_5", &e5.delta, QuadNum::surd(5, rat(-5, 32))),
    ];
    for (name, got, want) in expect {
        printed.push(
            fields([("entry", name)]),
            pass_if(*got == want),
            fields([("computed", got.to_string()), ("expected", want.to_string())]),
        );
    }

    let mut signs = VerificationReport::new(
        "hessian-entry-signs",
        ClaimKind::CitedClaim,
        "delta_k < 0 and gamma_k > 0 for k >= 4, beta_k > 0 for k >= 5",
    );
    for k in 4..=100 {
        let e = hessian_diag_entries(table, k)?;
        let ok = e.delta.signum() < 0 && e.gamma.signum() > 0 && (k == 4 || e.beta.signum() > 0);
        signs.push(
            fields([("k", k)]),
            pass_if(ok),
            fields([
                ("beta", e.beta.to_string()),
                ("gamma", e.gamma.to_string()),
                ("delta", e.delta.to_string()),
            ]),
        );
    }

    let mut closed = VerificationReport::new(
        "minor-closed-form",
        ClaimKind::Identity,
        "closed-form H_{m,k} equals the explicit determinant, 3 <= m <= 9, 4 <= k <= 7",
    );
    let pairs: Vec<(u32, u32)> = (4..=7).flat_map(|k| (3..=9).map(move |m| (m, k))).collect();
    let direct: Vec<(u32, u32, QuadNum, QuadNum)> = pairs
        .par_iter()
        .map(|&(m, k)| Ok((m, k, minor_value(table, m, k)?, minor_direct(table, m, k)?)))
        .collect::<Result<_>>()?;
    for (m, k, v, d) in direct {
        closed.push(
            fields([("m", m), ("k", k)]),
            pass_if(v == d),
            fields([("closed_form", v.to_string()), ("determinant", d.to_string())]),
        );
    }

    let mut law = VerificationReport::new(
        "minor-sign-law",
        ClaimKind::Theorem,
        "(-1)^(m-1) H_{m,k} > 0 for m <= k+1; sign H_{m,k} = (-1)^k for m >= k+1, k >= 5",
    );
    for k in 4..=k_max {
        let e = hessian_diag_entries(table, k)?;
        for m in 3..=m_max {
            let h = minor_closed(&e, m);
            let mut ok = true;
            let mut applies = false;
            if m <= k + 1 {
                applies = true;
                ok &= h.signum() == sign_of_parity(m - 1);
            }
            if m > k && k >= 5 {
                applies = true;
                ok &= h.signum() == sign_of_parity(k);
            }
            if applies {
                law.push(
                    fields([("m", m), ("k", k)]),
                    pass_if(ok),
                    fields([("H", h.to_string()), ("sign", h.signum().to_string())]),
                );
            }
        }
    }

    let mut k4 = VerificationReport::new(
        "minor-printed-k4",
        ClaimKind::Erratum,
        "printed H_{4,4}, H_{5,4}, H_{6,4} against the closed form (sign-only reference)",
    );
    for (m, value) in PRINTED_K4_MINORS {
        let h = minor_closed(&e4, m);
        let want = QuadNum::rational(4, int(value));
        let st = if h == want {
            Status::Pass
        } else if h.signum() == want.signum() {
            Status::Discrepancy
        } else {
            Status::Fail
        };
        k4.push(
            fields([("m", m), ("k", 4)]),
            st,
            fields([("computed", h.to_string()), ("printed", value.to_string())]),
        );
    }

    let mut diag = VerificationReport::new(
        "diagonal-not-extremal",
        ClaimKind::Theorem,
        "d_{n,k} is not locally extremal for 3 <= k <= n-1",
    );
    for n in 4..=n_max {
        for k in 3..n {
            let c = classify_diagonal(table, n, k)?;
            let witness = match c.witness {
                Some(Witness::Minors { same_sign, alternating }) => fields([
                    ("same_sign", format!("{}-{}", same_sign.0, same_sign.1)),
                    ("alternating", format!("{}-{}", alternating.0, alternating.1)),
                ]),
                Some(Witness::OddDerivative { order }) => fields([("odd_derivative", order)]),
                None => fields([("verdict", format!("{:?}", c.verdict))]),
            };
            diag.push(fields([("n", n), ("k", k)]), pass_if(c.verdict == Verdict::NotExtremal), witness);
        }
    }

    let mut hex = VerificationReport::new(
        "hexagon",
        ClaimKind::Theorem,
        "a'(0) = a''(0) = 0 and a'''(0) = 2/sqrt3",
    );
    let h = hexagon_derivatives();
    let ok = h.a1.is_zero() && h.a2.is_zero() && h.a3 == QuadNum::surd(3, rat(2, 3));
    hex.push(
        fields([("t", 0)]),
        pass_if(ok),
        fields([
            ("a1", h.a1.to_string()),
            ("a2", h.a2.to_string()),
            ("a3", h.a3.to_string()),
        ]),
    );

    Ok(vec![printed, signs, closed, law, k4, diag, hex])
}

/// `H_{m,k}` is zero for `k = 4`, `m >= 7`.
pub fn vanishing_k4(table: &JTable, m_max: u32) -> Result<bool> {
    Ok((7..=m_max).all(|m| minor_value(table, m, 4).map(|h| h.is_zero()).unwrap_or(false)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cube::quadnum::det_laplace;

    #[test]
    fn entries_k4_k5() {
        let t = JTable::new();
        let e = hessian_diag_entries(&t, 4).unwrap();
        assert_eq!(e.alpha, QuadNum::rational(4, int(1)));
        assert!(e.beta.is_zero());
        assert_eq!(e.gamma, QuadNum::rational(4, rat(4, 3)));
        assert_eq!(e.delta, QuadNum::rational(4, rat(-4, 3)));
        let e = hessian_diag_entries(&t, 5).unwrap();
        assert_eq!(e.beta, QuadNum::surd(5, rat(15, 64)));
        assert_eq!(e.gamma, QuadNum::surd(5, rat(25, 64)));
        assert_eq!(e.delta, QuadNum::surd(5, rat(-5, 32)));
        assert!(hessian_diag_entries(&t, 3).is_err());
    }

    #[test]
    fn k4_minor_values() {
        let t = JTable::new();
        let want = [rat(8, 3), rat(-16, 3), rat(256, 27), rat(256, 27), int(0), int(0)];
        for (i, w) in want.iter().enumerate() {
            let m = i as u32 + 3;
            assert_eq!(minor_value(&t, m, 4).unwrap(), QuadNum::rational(4, w.clone()), "m={m}");
        }
        assert!(vanishing_k4(&t, 12).unwrap());
    }

    #[test]
    fn closed_form_matches_determinants() {
        let t = JTable::new();
        for k in 4..=7 {
            for m in 3..=9 {
                let d = minor_direct(&t, m, k).unwrap();
                assert_eq!(minor_value(&t, m, k).unwrap(), d, "m={m} k={k}");
                if m <= 6 {
                    let e = hessian_diag_entries(&t, k).unwrap();
                    assert_eq!(det_laplace(&bordered_matrix(&e, m)), d);
                }
            }
        }
        assert!(minor_direct(&t, 10, 4).is_err());
        assert!(minor_value(&t, 2, 4).is_err());
    }

    #[test]
    fn classification_examples() {
        let t = JTable::new();
        let c = classify_diagonal(&t, 6, 4).unwrap();
        assert_eq!(c.minors.as_ref().unwrap().signs, vec![1, -1, 1, 1, 0]);
        assert_eq!(c.verdict, Verdict::NotExtremal);
        assert_eq!(c.witness, Some(Witness::Minors { same_sign: (5, 6), alternating: (3, 4) }));

        let c = classify_diagonal(&t, 8, 5).unwrap();
        assert_eq!(c.minors.as_ref().unwrap().signs, vec![1, -1, 1, -1, -1, -1, -1]);
        assert_eq!(c.verdict, Verdict::NotExtremal);

        let c = classify_diagonal(&t, 5, 3).unwrap();
        assert_eq!(c.witness, Some(Witness::OddDerivative { order: 3 }));

        assert!(classify_diagonal(&t, 5, 5).is_err());
        assert!(classify_diagonal(&t, 3, 2).is_err());
    }

    #[test]
    fn verdict_rule_on_synthetic_sequences() {
        let seq = |signs: Vec<i8>| MinorSequence {
            k: 4,
            n: signs.len() as u32 + 2,
            values: signs.iter().map(|&s| QuadNum::rational(4, int(s as i64))).collect(),
            signs,
        };
        assert_eq!(classify_minors(&seq(vec![1, -1, 1, -1])).0, Verdict::ConsistentWithMax);
        assert_eq!(classify_minors(&seq(vec![-1, -1, -1])).0, Verdict::ConsistentWithMin);
        assert_eq!(classify_minors(&seq(vec![1, 0, 1])).0, Verdict::Inconclusive);
        // zeros break adjacency
        assert_eq!(classify_minors(&seq(vec![1, -1, 0, 1, 1])).0, Verdict::NotExtremal);
        assert_eq!(classify_minors(&seq(vec![1, 0, -1, 0, 1])).0, Verdict::Inconclusive);
    }

    #[test]
    fn json_shape() {
        let t = JTable::new();
        let c = classify_diagonal(&t, 6, 4).unwrap();
        let v = serde_json::to_value(&c).unwrap();
        let keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
        assert_eq!(keys, ["k", "n", "minors", "verdict", "witnesses"]);
        assert_eq!(v["minors"][1]["a"], "-16/3");
        assert_eq!(v["verdict"], "NotExtremal");
        assert_eq!(v["witnesses"]["minors"]["same_sign"], serde_json::json!([5, 6]));
    }

    #[test]
    fn report_is_clean() {
        let t = JTable::new();
        let reps = verify_hessian(&t, 12, 12, 12).unwrap();
        assert!(!crate::report::any_failures(&reps));
        let k4 = reps.iter().find(|r| r.claim_id == "minor-printed-k4").unwrap();
        assert_eq!(k4.with_status(Status::Discrepancy).count(), 3);
    }
}
