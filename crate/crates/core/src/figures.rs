//! Row data behind the two plots: the central ratio against its bounds, and
//! the sequence `f(m)`.

use std::io::Write;

use serde::Serialize;

use crate::bounds::{c_bound, d_bound};
use crate::error::{invalid, Error, Result};
use crate::fsequence::{figure2_rows, FigureTwoRow};
use crate::laplace::JTable;
use crate::rational::{rat, to_f64};

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FigureOneRow {
    pub n: u32,
    pub ratio: String,
    pub ratio_float: f64,
    /// `J_n(2)/J_n(0) - c_{n,0}`
    pub lower_gap: String,
    /// `d_{n,0} - J_n(2)/J_n(0)`
    pub upper_gap: String,
    /// `n(n²-2)/(n+2)³ - J_n(2)/J_n(0)`
    pub conjectured_gap: String,
    pub lower_gap_float: f64,
    pub upper_gap_float: f64,
    pub conjectured_gap_float: f64,
}

pub fn figure1_rows(table: &JTable, n_min: u32, n_max: u32) -> Result<Vec<FigureOneRow>> {
    if n_min < 4 || n_max < n_min {
        return invalid(format!("need 4 <= n_min <= n_max, got {n_min}..{n_max}"));
    }
    table.row(n_max);
    (n_min..=n_max)
        .map(|n| {
            let ni = n as i64;
            let ratio = table.get(n, 2) / table.get(n, 0);
            let lower = &ratio - c_bound(ni, 0)?;
            let upper = d_bound(ni, 0)? - &ratio;
            let conj = rat(ni * (ni * ni - 2), (ni + 2).pow(3)) - &ratio;
            Ok(FigureOneRow {
                n,
                ratio_float: to_f64(&ratio),
                ratio: ratio.to_string(),
                lower_gap_float: to_f64(&lower),
                upper_gap_float: to_f64(&upper),
                conjectured_gap_float: to_f64(&conj),
                lower_gap: lower.to_string(),
                upper_gap: upper.to_string(),
                conjectured_gap: conj.to_string(),
            })
        })
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Figure {
    CentralRatio,
    FSequence,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(untagged)]
pub enum FigureRows {
    CentralRatio(Vec<FigureOneRow>),
    FSequence(Vec<FigureTwoRow>),
}

/// Rows for `which`; `lo..=hi` is the `n` range for the central ratio and the
/// `m` range for `f`.
pub fn emit_figure_data(table: &JTable, which: Figure, lo: u32, hi: u32) -> Result<FigureRows> {
    match which {
        Figure::CentralRatio => Ok(FigureRows::CentralRatio(figure1_rows(table, lo, hi)?)),
        Figure::FSequence => {
            if lo < 1 || hi < lo {
                return invalid(format!("need 1 <= m_min <= m_max, got {lo}..{hi}"));
            }
            let rows = figure2_rows(table, hi)?.into_iter().filter(|r| r.m >= lo).collect();
            Ok(FigureRows::FSequence(rows))
        }
    }
}

impl FigureRows {
    pub fn write_csv<W: Write>(&self, w: W) -> Result<()> {
        let mut out = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(w);
        match self {
            FigureRows::CentralRatio(rows) => rows.iter().try_for_each(|r| out.serialize(r)),
            FigureRows::FSequence(rows) => rows.iter().try_for_each(|r| out.serialize(r)),
        }
        .map_err(|e| Error::Io(e.to_string()))?;
        out.flush()?;
        Ok(())
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("rows serialize");
        s.push('\n');
        s
    }

    pub fn render_text(&self) -> String {
        let mut s = String::new();
        match self {
            FigureRows::CentralRatio(rows) => {
                for r in rows {
                    s += &format!(
                        "n={:<4} ratio={:.12} lower_gap={:.6e} upper_gap={:.6e} conjectured_gap={:.6e}\n",
                        r.n, r.ratio_float, r.lower_gap_float, r.upper_gap_float, r.conjectured_gap_float
                    );
                }
            }
            FigureRows::FSequence(rows) => {
                for r in rows {
                    s += &format!("m={:<4} f={:<24} {:.12} log={:.12}\n", r.m, r.f, r.f_float, r.log_f);
                }
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn central_ratio_rows() {
        let t = JTable::new();
        let rows = figure1_rows(&t, 4, 40).unwrap();
        assert_eq!(rows[0].ratio, "1/4");
        assert_eq!(rows[0].upper_gap, "0");
        for r in &rows {
            assert!(r.lower_gap_float >= 0.0 && r.upper_gap_float >= 0.0 && r.conjectured_gap_float >= 0.0);
        }
        assert!(figure1_rows(&t, 3, 10).is_err());
    }

    #[test]
    fn csv_layout() {
        let t = JTable::new();
        let rows = emit_figure_data(&t, Figure::FSequence, 1, 3).unwrap();
        let mut buf = Vec::new();
        rows.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let mut lines = text.lines();
        assert_eq!(lines.next().unwrap(), "m,parity,f,f_float,log_f");
        assert!(lines.next().unwrap().starts_with("1,odd,1,1.0,"));
        assert!(!text.contains('\r'));
    }
}
