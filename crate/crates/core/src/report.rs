//! Structured pass/fail records for every verified claim.

use std::fmt::Write as _;
use std::io::Write;

use indexmap::IndexMap;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    Skip,
    /// A printed value disagrees with the computation while the mathematics holds.
    Discrepancy,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Skip => "SKIP",
            Status::Discrepancy => "DISCREPANCY",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimKind {
    Theorem,
    Identity,
    CitedClaim,
    Conjecture,
    Erratum,
}

impl ClaimKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ClaimKind::Theorem => "theorem",
            ClaimKind::Identity => "identity",
            ClaimKind::CitedClaim => "cited-claim",
            ClaimKind::Conjecture => "conjecture",
            ClaimKind::Erratum => "erratum",
        }
    }
}

pub type Fields = IndexMap<String, String>;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Record {
    pub params: Fields,
    pub status: Status,
    pub witness: Fields,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub claim_id: String,
    pub kind: ClaimKind,
    pub description: String,
    pub records: Vec<Record>,
}

/// Builds an ordered field map from `(name, value)` pairs.
pub fn fields<K: Into<String>, V: ToString>(pairs: impl IntoIterator<Item = (K, V)>) -> Fields {
    pairs
        .into_iter()
        .map(|(k, v)| (k.into(), v.to_string()))
        .collect()
}

#[derive(Debug, Default, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub pass: usize,
    pub fail: usize,
    pub skip: usize,
    pub discrepancy: usize,
}

impl VerificationReport {
    pub fn new(claim_id: &str, kind: ClaimKind, description: &str) -> Self {
        Self {
            claim_id: claim_id.to_string(),
            kind,
            description: description.to_string(),
            records: Vec::new(),
        }
    }

    /// Appends a record. FAIL and DISCREPANCY must carry a witness.
    pub fn push(&mut self, params: Fields, status: Status, witness: Fields) {
        assert!(
            !(matches!(status, Status::Fail | Status::Discrepancy) && witness.is_empty()),
            "{}: {} record without witness",
            self.claim_id,
            status.as_str()
        );
        self.records.push(Record { params, status, witness });
    }

    pub fn tally(&self) -> Tally {
        let mut t = Tally::default();
        for r in &self.records {
            match r.status {
                Status::Pass => t.pass += 1,
                Status::Fail => t.fail += 1,
                Status::Skip => t.skip += 1,
                Status::Discrepancy => t.discrepancy += 1,
            }
        }
        t
    }

    pub fn has_failures(&self) -> bool {
        self.records.iter().any(|r| r.status == Status::Fail)
    }

    pub fn with_status(&self, status: Status) -> impl Iterator<Item = &Record> {
        self.records.iter().filter(move |r| r.status == status)
    }
}

pub fn any_failures(reports: &[VerificationReport]) -> bool {
    reports.iter().any(VerificationReport::has_failures)
}

fn join_fields(f: &Fields) -> String {
    f.iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(";")
}

/// Human-readable summary: one line per claim, then every non-PASS record.
pub fn render_text(reports: &[VerificationReport]) -> String {
    let mut out = String::new();
    for rep in reports {
        let t = rep.tally();
        let _ = writeln!(
            out,
            "{} [{}] pass={} fail={} skip={} discrepancy={}  {}",
            rep.claim_id,
            rep.kind.as_str(),
            t.pass,
            t.fail,
            t.skip,
            t.discrepancy,
            rep.description
        );
        for r in rep.records.iter().filter(|r| r.status != Status::Pass) {
            let _ = writeln!(
                out,
                "  {} {} :: {}",
                r.status.as_str(),
                join_fields(&r.params),
                join_fields(&r.witness)
            );
        }
    }
    out
}

pub fn write_csv<W: Write>(reports: &[VerificationReport], w: W) -> Result<()> {
    let mut wtr = csv::WriterBuilder::new()
        .terminator(csv::Terminator::Any(b'\n'))
        .from_writer(w);
    let err = |e: csv::Error| Error::Io(e.to_string());
    wtr.write_record(["claim_id", "kind", "status", "params", "witness"])
        .map_err(err)?;
    for rep in reports {
        for r in &rep.records {
            wtr.write_record([
                rep.claim_id.as_str(),
                rep.kind.as_str(),
                r.status.as_str(),
                &join_fields(&r.params),
                &join_fields(&r.witness),
            ])
            .map_err(err)?;
        }
    }
    wtr.flush()?;
    Ok(())
}

pub fn to_json(reports: &[VerificationReport]) -> String {
    let mut s = serde_json::to_string_pretty(&serde_json::json!({ "reports": reports }))
        .expect("reports serialize");
    s.push('\n');
    s
}

pub fn from_json(s: &str) -> Result<Vec<VerificationReport>> {
    #[derive(Deserialize)]
    struct Wrapper {
        reports: Vec<VerificationReport>,
    }
    serde_json::from_str::<Wrapper>(s)
        .map(|w| w.reports)
        .map_err(|e| Error::Parse(e.to_string()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Vec<VerificationReport> {
        let mut r = VerificationReport::new("thm-lower", ClaimKind::Theorem, "c <= ratio");
        r.push(fields([("n", 4), ("r", 0)]), Status::Pass, fields([("ratio", "1/4")]));
        r.push(
            fields([("n", 2)]),
            Status::Discrepancy,
            fields([("lhs", "2/3"), ("rhs", "2/3")]),
        );
        vec![r]
    }

    #[test]
    fn json_round_trip_keeps_exact_strings() {
        let reps = sample();
        let s = to_json(&reps);
        let back = from_json(&s).unwrap();
        assert_eq!(back, reps);
        assert_eq!(to_json(&back), s);
    }

    #[test]
    fn csv_layout() {
        let mut buf = Vec::new();
        write_csv(&sample(), &mut buf).unwrap();
        let s = String::from_utf8(buf).unwrap();
        let lines: Vec<_> = s.lines().collect();
        assert_eq!(lines[0], "claim_id,kind,status,params,witness");
        assert_eq!(lines[1], "thm-lower,theorem,PASS,n=4;r=0,ratio=1/4");
        assert!(!s.contains('\r'));
    }

    #[test]
    #[should_panic(expected = "without witness")]
    fn fail_needs_witness() {
        let mut r = VerificationReport::new("x", ClaimKind::Theorem, "");
        r.push(Fields::new(), Status::Fail, Fields::new());
    }

    #[test]
    fn tally_and_failures() {
        let reps = sample();
        assert_eq!(reps[0].tally().discrepancy, 1);
        assert!(!any_failures(&reps));
    }
}
