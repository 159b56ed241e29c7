//! Command-line front end: value queries, verification sweeps and figure data.

use std::fs::File;
use std::io::{self, Write};
use std::path::PathBuf;

use clap::{Args, CommandFactory, Parser, Subcommand, ValueEnum};
use serde_json::Value;

use crate::bounds::{conjecture_scan, pn_identities, two_step_reports, verify_asymptotics, verify_central};
use crate::cube::checks::verify_sections;
use crate::cube::hessian::{classify_diagonal, hessian_diag_entries, minor_value, verify_hessian, Classification};
use crate::cube::hexagon::{hexagon_area, hexagon_derivatives};
use crate::cube::quadrature::{critical_residual, diagonal_direction, sigma_quadrature};
use crate::cube::quadnum::QuadNum;
use crate::cube::sigma::{sigma_exact, DirectionQ};
use crate::error::{Error, Result};
use crate::eulerian::eulerian;
use crate::figures::{emit_figure_data, Figure, FigureRows};
use crate::fsequence::{
    f_value, logconvexity_scan_even, f_printed_report, verify_eulerian_ratios, verify_f_convexity, verify_f_ratios,
};
use crate::laplace::{jn, JTable};
use crate::rational::{parse_rat, to_f64};
use crate::report::{any_failures, fields, render_text, to_json, write_csv, Fields, VerificationReport};

#[derive(Debug, Parser)]
#[command(name = "laplace-polya", version, about = "Exact Laplace-Polya values, Eulerian numbers and cube sections")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    #[command(flatten)]
    pub common: Common,
}

#[derive(Debug, Clone, Args)]
pub struct Common {
    /// Output format
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,
    /// Write to this file instead of standard output
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Quadrature tolerance
    #[arg(long, default_value_t = 1e-8, global = true)]
    pub tol: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FigureArg {
    Fig1,
    Fig2,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact J_n(r)
    Jn {
        #[arg(long)]
        n: u32,
        #[arg(long, allow_negative_numbers = true)]
        r: i64,
    },
    /// Eulerian number A(m, l)
    Eulerian {
        #[arg(long)]
        m: u32,
        #[arg(long, allow_negative_numbers = true)]
        l: i64,
    },
    /// f(m) = M_m/m!, or the f-sequence sweeps when --m is absent
    Fm {
        #[arg(long)]
        m: Option<u32>,
        #[arg(long, default_value_t = 100)]
        p_max: u32,
    },
    /// Two-step ratio bounds for 4 <= n <= n_max
    Bounds {
        #[arg(long, default_value_t = 200)]
        n_max: u32,
    },
    /// Central-value consequences and asymptotics
    Central {
        #[arg(long, default_value_t = 200)]
        n_max: u32,
    },
    /// Identities of the cubic p_n
    Pn {
        #[arg(long, default_value_t = 100)]
        n_max: u32,
    },
    /// sigma of a direction, of d_{n,k}, or the section sweeps when neither is given
    Sigma {
        /// Comma-separated rational coordinates, e.g. 3/10,2/5,1/2
        #[arg(long, allow_hyphen_values = true)]
        direction: Option<String>,
        #[arg(long, requires = "k")]
        n: Option<usize>,
        #[arg(long, requires = "n")]
        k: Option<usize>,
        /// Seed for the random directions of the sweep
        #[arg(long, default_value_t = 20_240_601)]
        seed: u64,
    },
    /// Hessian entries and minors for one k, or the Hessian sweeps when --k is absent
    Hessian {
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        m_max: Option<u32>,
        #[arg(long, default_value_t = 12)]
        n_max: u32,
    },
    /// Second-derivative test at d_{n,k}
    Classify {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        k: u32,
    },
    /// Derivatives of the hexagon area at 0, and a(t) when --t is given
    Hexagon {
        #[arg(long, allow_negative_numbers = true)]
        t: Option<f64>,
    },
    /// Empirical scans of the open conjectures
    Conjectures {
        #[arg(long, default_value_t = 200)]
        n_max: u32,
        #[arg(long, default_value_t = 100)]
        p_max: u32,
    },
    /// Figure data: fig1 for 4 <= n <= n_max, fig2 for 1 <= m <= m_max
    Figures {
        #[arg(long, value_enum)]
        which: FigureArg,
        #[arg(long, default_value_t = 60)]
        n_max: u32,
        #[arg(long, default_value_t = 20)]
        m_max: u32,
    },
}

/// What a command produced.
#[derive(Debug)]
pub enum Outcome {
    /// A single exact value; text output prints it bare.
    Value { value: String, row: Fields },
    Rows(Vec<Fields>),
    Reports(Vec<VerificationReport>),
    Classification(Classification),
    Figure(FigureRows),
}

impl Outcome {
    pub fn exit_code(&self) -> i32 {
        match self {
            Outcome::Reports(r) if any_failures(r) => 1,
            _ => 0,
        }
    }

    pub fn render(&self, format: Format) -> Result<Vec<u8>> {
        let mut buf = Vec::new();
        match (self, format) {
            (Outcome::Value { value, .. }, Format::Text) => writeln!(buf, "{value}")?,
            (Outcome::Value { row, .. }, f) => render_rows(std::slice::from_ref(row), f, &mut buf, true)?,
            (Outcome::Rows(rows), f) => render_rows(rows, f, &mut buf, false)?,
            (Outcome::Reports(r), Format::Text) => buf.extend(render_text(r).into_bytes()),
            (Outcome::Reports(r), Format::Csv) => write_csv(r, &mut buf)?,
            (Outcome::Reports(r), Format::Json) => buf.extend(to_json(r).into_bytes()),
            (Outcome::Classification(c), Format::Json) => {
                buf.extend(serde_json::to_string_pretty(c).expect("serializable").into_bytes());
                buf.push(b'\n');
            }
            (Outcome::Classification(c), f) => {
                let rows: Vec<Fields> = c
                    .minors
                    .as_ref()
                    .map(|s| s.entries())
                    .unwrap_or_default()
                    .into_iter()
                    .map(|e| fields([("m", e.m.to_string()), ("a", e.a), ("b", e.b), ("sign", e.sign.to_string())]))
                    .collect();
                if f == Format::Text {
                    writeln!(buf, "n={} k={} verdict={:?}", c.n, c.k, c.verdict)?;
                    if let Some(w) = &c.witness {
                        writeln!(buf, "witness: {}", serde_json::to_string(w).expect("serializable"))?;
                    }
                }
                render_rows(&rows, f, &mut buf, false)?;
            }
            (Outcome::Figure(rows), Format::Text) => buf.extend(rows.render_text().into_bytes()),
            (Outcome::Figure(rows), Format::Csv) => rows.write_csv(&mut buf)?,
            (Outcome::Figure(rows), Format::Json) => buf.extend(rows.to_json().into_bytes()),
        }
        Ok(buf)
    }
}

fn render_rows(rows: &[Fields], format: Format, buf: &mut Vec<u8>, single: bool) -> Result<()> {
    match format {
        Format::Text => {
            for row in rows {
                let line: Vec<String> = row.iter().map(|(k, v)| format!("{k}={v}")).collect();
                writeln!(buf, "{}", line.join(" "))?;
            }
        }
        Format::Csv => {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(&mut *buf);
            if let Some(first) = rows.first() {
                w.write_record(first.keys()).map_err(|e| Error::Io(e.to_string()))?;
            }
            for row in rows {
                w.write_record(row.values()).map_err(|e| Error::Io(e.to_string()))?;
            }
            w.flush()?;
        }
        Format::Json => {
            let v: Value = if single {
                serde_json::to_value(&rows[0])
            } else {
                serde_json::to_value(rows)
            }
            .expect("serializable");
            buf.extend(serde_json::to_string_pretty(&v).expect("serializable").into_bytes());
            buf.push(b'\n');
        }
    }
    Ok(())
}

fn parse_direction(s: &str) -> Result<DirectionQ> {
    let coords = s.split(',').map(|c| parse_rat(c.trim())).collect::<Result<Vec<_>>>()?;
    DirectionQ::new(coords)
}

/// Executes one command against a fresh table.
pub fn execute(command: &Command, tol: f64) -> Result<Outcome> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::InvalidArgument(format!("--tol must be positive, got {tol}")));
    }
    let table = JTable::new();
    let t = &table;
    Ok(match *command {
        Command::Jn { n, r } => {
            let v = jn(t, n, r)?;
            Outcome::Value {
                value: v.to_string(),
                row: fields([("n", n.to_string()), ("r", r.to_string()), ("value", v.to_string())]),
            }
        }
        Command::Eulerian { m, l } => {
            let e = eulerian(t, m, l)?;
            Outcome::Value {
                value: e.value.to_string(),
                row: fields([("m", m.to_string()), ("l", l.to_string()), ("value", e.value.to_string())]),
            }
        }
        Command::Fm { m: Some(m), .. } => {
            let rec = f_value(t, m)?;
            Outcome::Value {
                value: rec.f.to_string(),
                row: fields([("m", m.to_string()), ("M_m", rec.row_max.to_string()), ("f", rec.f.to_string())]),
            }
        }
        Command::Fm { m: None, p_max } => {
            let mut r = vec![f_printed_report(t)?];
            r.extend(verify_f_ratios(t, p_max)?.into_iter().filter(|x| x.claim_id != "f-printed-values"));
            r.extend(verify_f_convexity(t, p_max)?);
            r.push(verify_eulerian_ratios(t, (2 * p_max).min(60))?);
            Outcome::Reports(r)
        }
        Command::Bounds { n_max } => {
            if n_max < 4 {
                return Err(Error::InvalidArgument(format!("--n-max must be >= 4, got {n_max}")));
            }
            Outcome::Reports(two_step_reports(t, n_max)?)
        }
        Command::Central { n_max } => {
            let mut r = verify_central(t, n_max)?;
            r.extend(verify_asymptotics(t, n_max)?);
            Outcome::Reports(r)
        }
        Command::Pn { n_max } => Outcome::Reports(pn_identities(n_max)?),
        Command::Sigma { ref direction, n, k, seed } => sigma_command(t, direction.as_deref(), n.zip(k), seed, tol)?,
        Command::Hessian { k: Some(k), m_max, .. } => {
            let e = hessian_diag_entries(t, k)?;
            let row = |name: &str, q: &QuadNum| {
                fields([
                    ("quantity", name.to_string()),
                    ("a", q.a().to_string()),
                    ("b", q.b().to_string()),
                    ("sign", q.signum().to_string()),
                    ("float", format!("{:.15e}", q.to_f64())),
                ])
            };
            let mut rows = vec![row("alpha", &e.alpha), row("beta", &e.beta), row("gamma", &e.gamma), row("delta", &e.delta)];
            for m in 3..=m_max.unwrap_or(k + 3) {
                rows.push(row(&format!("H_{m}"), &minor_value(t, m, k)?));
            }
            Outcome::Rows(rows)
        }
        Command::Hessian { k: None, m_max, n_max } => {
            Outcome::Reports(verify_hessian(t, 12, m_max.unwrap_or(12), n_max)?)
        }
        Command::Classify { n, k } => Outcome::Classification(classify_diagonal(t, n, k)?),
        Command::Hexagon { t: at } => {
            let h = hexagon_derivatives();
            let mut row = fields([
                ("a0", h.a0.to_string()),
                ("a1", h.a1.to_string()),
                ("a2", h.a2.to_string()),
                ("a3", h.a3.to_string()),
                ("a3_float", format!("{:.15e}", h.a3.to_f64())),
                ("two_over_sqrt3", format!("{:.15e}", 2.0 / 3f64.sqrt())),
            ]);
            if let Some(x) = at {
                row.insert("t".into(), x.to_string());
                row.insert("area".into(), format!("{:.15e}", hexagon_area(x)?));
            }
            Outcome::Rows(vec![row])
        }
        Command::Conjectures { n_max, p_max } => {
            let mut r = conjecture_scan(t, n_max)?;
            r.extend(logconvexity_scan_even(t, p_max)?);
            Outcome::Reports(r)
        }
        Command::Figures { which, n_max, m_max } => Outcome::Figure(match which {
            FigureArg::Fig1 => emit_figure_data(t, Figure::CentralRatio, 4, n_max)?,
            FigureArg::Fig2 => emit_figure_data(t, Figure::FSequence, 1, m_max)?,
        }),
    })
}

fn sigma_command(
    t: &JTable,
    direction: Option<&str>,
    nk: Option<(usize, usize)>,
    seed: u64,
    tol: f64,
) -> Result<Outcome> {
    match (direction, nk) {
        (Some(_), Some(_)) => Err(Error::InvalidArgument("give either --direction or --n/--k".into())),
        (Some(s), None) => {
            let d = parse_direction(s)?;
            let exact = sigma_exact(&d)?;
            let quad = sigma_quadrature(&d.to_f64(), tol)?;
            Ok(Outcome::Rows(vec![fields([
                ("direction", s.to_string()),
                ("exact", exact.to_string()),
                ("exact_float", format!("{:.15e}", to_f64(&exact))),
                ("quadrature", format!("{quad:.15e}")),
                ("abs_err", format!("{:.3e}", (quad - to_f64(&exact)).abs())),
            ])]))
        }
        (None, Some((n, k))) => {
            if k < 2 || k > n {
                return Err(Error::InvalidArgument(format!("need 2 <= k <= n, got n={n}, k={k}")));
            }
            // σ(d_{n,k}) = √k J_k(0)
            let exact = QuadNum::surd(k as u64, t.get(k as u32, 0));
            let u = diagonal_direction(n, k);
            let quad = sigma_quadrature(&u, tol)?;
            let mut row = fields([
                ("n", n.to_string()),
                ("k", k.to_string()),
                ("exact", exact.to_string()),
                ("exact_float", format!("{:.15e}", exact.to_f64())),
                ("quadrature", format!("{quad:.15e}")),
            ]);
            if k >= 3 {
                let res = critical_residual(&u, tol)?;
                let worst = res.iter().fold(0.0f64, |a, r| a.max(r.abs()));
                row.insert("max_critical_residual".into(), format!("{worst:.3e}"));
            }
            Ok(Outcome::Rows(vec![row]))
        }
        (None, None) => Ok(Outcome::Reports(verify_sections(t, tol.min(1e-9), seed)?)),
    }
}

fn emit(bytes: &[u8], output: Option<&PathBuf>) -> Result<()> {
    match output {
        Some(p) => File::create(p)?.write_all(bytes)?,
        None => io::stdout().lock().write_all(bytes)?,
    }
    Ok(())
}

/// Parses `args`, runs the command and returns the process exit code:
/// 0 on success, 1 if any verification record failed (or a computation
/// failed), 2 on invalid arguments.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            if !e.use_stderr() {
                return 0;
            }
            if !e.render().to_string().contains("Usage:") {
                eprintln!("\n{}", Cli::command().render_usage());
            }
            return 2;
        }
    };
    let result = execute(&cli.command, cli.common.tol).and_then(|out| {
        let bytes = out.render(cli.common.format)?;
        emit(&bytes, cli.common.output.as_ref())?;
        Ok(out.exit_code())
    });
    match result {
        Ok(code) => code,
        Err(e @ (Error::InvalidArgument(_) | Error::Parse(_) | Error::ZeroDenominator { .. })) => {
            eprintln!("error: {e}");
            eprintln!("{}", Cli::command().render_usage());
            2
        }
        Err(e) => {
            eprintln!("error: {e}");
            1
        }
    }
}
