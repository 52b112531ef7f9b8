//! `qea`: build, print and verify quantum enveloping algebra data from the command line.
//!
//! Exit codes: 0 when everything requested passes, 1 when a verification fails (the report
//! goes to standard output), 2 on a usage or input error.

mod suites;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use qea_core::lops::{catalog_entry, catalog_lmatrix, lminus_from_r, lplus_from_r, LKind, LMatrix};
use qea_core::ncalg::NcTermWire;
use qea_core::report::Report;
use qea_core::reps::{matrix_latex, MatrixWire, Representation};
use qea_core::rmatrix::{PointMatrixWire, RMatrix, DEFAULT_MAX_HEIGHT};
use qea_core::{Algebra, NcExpr, Rational};

#[derive(Parser, Debug)]
#[command(name = "qea", version, about = "Quantum enveloping algebras, universal R-matrices and L-operators")]
struct Cli {
    /// `aN:<N>` (also `a<N>`) or `g2`.
    #[arg(long, global = true)]
    algebra: Option<String>,
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    /// Write the result here instead of standard output.
    #[arg(long, short, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Defining relations and Hopf axioms in the minimal representation and its tensor square.
    Relations,
    /// The truncated universal R on the square of the minimal representation.
    Rmatrix {
        /// Evaluate at a point, `v=p/q`.
        #[arg(long)]
        at: Option<String>,
    },
    /// An entry (or, without `--a`/`--b`, the whole matrix) of L+ or L-.
    Lop {
        #[arg(long, value_enum)]
        kind: KindArg,
        #[arg(long)]
        a: Option<usize>,
        #[arg(long)]
        b: Option<usize>,
        #[arg(long, value_enum, default_value = "slice")]
        source: SourceArg,
    },
    /// Run verification suites.
    Verify {
        #[arg(long, value_enum, default_value = "all")]
        suite: Suite,
        /// Evaluate point-wise at `v=p/q`; may be repeated.
        #[arg(long)]
        at: Vec<String>,
        /// Exact arithmetic everywhere, even where the default is point evaluation.
        #[arg(long)]
        exact: bool,
    },
    /// Evaluate an expression read from a JSON file.
    Eval {
        #[arg(long)]
        expr: PathBuf,
        #[arg(long, value_enum, default_value = "minimal")]
        rep: RepArg,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Json,
    Latex,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum KindArg {
    Minus,
    Plus,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum SourceArg {
    Slice,
    Catalog,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Suite {
    Relations,
    Ybe,
    Slice,
    Catalog,
    Perm,
    Transform,
    Inverse,
    Qh,
    Radical,
    All,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum RepArg {
    Minimal,
    Tensor2,
}

#[derive(Debug)]
pub(crate) enum Failure {
    Usage(String),
    Core(qea_core::Error),
}

impl From<qea_core::Error> for Failure {
    fn from(e: qea_core::Error) -> Self {
        Failure::Core(e)
    }
}

impl std::fmt::Display for Failure {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Failure::Usage(s) => f.write_str(s),
            Failure::Core(e) => write!(f, "{e}"),
        }
    }
}

fn usage(msg: impl Into<String>) -> Failure {
    Failure::Usage(msg.into())
}

/// Result text plus whether every check in it passed.
struct Output {
    text: String,
    passed: bool,
}

impl Output {
    fn data(text: String) -> Self {
        Output { text, passed: true }
    }
}

fn max_height() -> Result<i64, Failure> {
    match std::env::var("QEA_MAX_BETA_HEIGHT") {
        Err(_) => Ok(DEFAULT_MAX_HEIGHT),
        Ok(s) => match s.trim().parse::<i64>() {
            Ok(h) if h >= 0 => Ok(h),
            _ => Err(usage(format!("QEA_MAX_BETA_HEIGHT must be a non-negative integer, got {s:?}"))),
        },
    }
}

pub(crate) fn parse_point(s: &str) -> Result<Rational, Failure> {
    let body = s.trim().strip_prefix("v=").ok_or_else(|| usage(format!("expected v=p/q, got {s:?}")))?;
    let v: Rational = body.trim().parse().map_err(|_| usage(format!("bad rational {body:?}")))?;
    if v == Rational::from_integer(0.into()) {
        return Err(usage("v = 0 is not allowed"));
    }
    Ok(v)
}

fn to_json<T: Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("output serializes")
}

fn report_output(alg: &Algebra, reports: &[Report], format: Option<Format>) -> Result<Output, Failure> {
    let passed = reports.iter().all(Report::passed);
    let text = match format {
        Some(Format::Latex) => return Err(usage("reports are available as text or json")),
        Some(Format::Json) => to_json(&json!({
            "algebra": alg.cartan_type().to_string(),
            "passed": passed,
            "reports": reports,
        })),
        None => {
            let mut s: String = reports.iter().map(|r| r.to_string()).collect();
            let checks: usize = reports.iter().map(Report::len).sum();
            let failed: usize = reports.iter().map(|r| r.failures().count()).sum();
            s.push_str(&format!(
                "{}: {} in {} reports, {checks} checks, {failed} failed",
                alg.cartan_type(),
                if passed { "PASS" } else { "FAIL" },
                reports.len()
            ));
            s
        }
    };
    Ok(Output { text, passed })
}

fn lop_matrix(alg: &Algebra, kind: LKind, source: SourceArg) -> Result<LMatrix, Failure> {
    Ok(match source {
        SourceArg::Catalog => catalog_lmatrix(alg, kind)?,
        SourceArg::Slice => {
            let rep = Representation::minimal(alg);
            match kind {
                LKind::Minus => lminus_from_r(&rep, max_height()?)?,
                LKind::Plus => lplus_from_r(&rep, max_height()?)?,
            }
        }
    })
}

fn kind_symbol(kind: LKind) -> &'static str {
    match kind {
        LKind::Minus => "-",
        LKind::Plus => "+",
    }
}

fn lop(alg: &Algebra, kind: LKind, a: Option<usize>, b: Option<usize>, source: SourceArg, format: Option<Format>) -> Result<Output, Failure> {
    let l = lop_matrix(alg, kind, source)?;
    let n = l.dim();
    let cells: Vec<(usize, usize)> = match (a, b) {
        (Some(a), Some(b)) => {
            if a == 0 || b == 0 || a > n || b > n {
                return Err(usage(format!("({a}, {b}) is outside 1..={n}")));
            }
            vec![(a, b)]
        }
        (None, None) => (1..=n).flat_map(|a| (1..=n).map(move |b| (a, b))).collect(),
        _ => return Err(usage("give both --a and --b, or neither")),
    };
    let latex_of = |a: usize, b: usize| -> Result<String, Failure> {
        Ok(match source {
            SourceArg::Catalog => catalog_entry(alg, kind, a, b)?.to_latex(alg),
            SourceArg::Slice => l.entry(a, b)?.to_latex(),
        })
    };
    let text = match format.unwrap_or(Format::Json) {
        Format::Latex if cells.len() == 1 => latex_of(cells[0].0, cells[0].1)?,
        Format::Latex => {
            let mut lines = Vec::new();
            for &(a, b) in &cells {
                if !l.entry(a, b)?.is_zero() {
                    lines.push(format!("(L^{{{}}})^{{{a}}}_{{{b}}} = {}", kind_symbol(kind), latex_of(a, b)?));
                }
            }
            lines.join("\n")
        }
        Format::Json => {
            let head = json!({
                "algebra": alg.cartan_type().to_string(),
                "kind": kind,
                "source": l.source,
            });
            let entry = |a: usize, b: usize| -> Result<serde_json::Value, Failure> {
                Ok(json!({ "a": a, "b": b, "expr": l.entry(a, b)?.to_wire() }))
            };
            let mut v = head;
            if cells.len() == 1 {
                let e = entry(cells[0].0, cells[0].1)?;
                for key in ["a", "b", "expr"] {
                    v[key] = e[key].clone();
                }
            } else {
                v["entries"] = serde_json::Value::Array(cells.iter().map(|&(a, b)| entry(a, b)).collect::<Result<_, _>>()?);
            }
            to_json(&v)
        }
    };
    Ok(Output::data(text))
}

/// Accepts a bare term list, an object with `expr`, or an object with a single `entries` item.
fn read_expr(alg: &Algebra, path: &PathBuf) -> Result<NcExpr, Failure> {
    let raw = std::fs::read_to_string(path).map_err(|e| usage(format!("cannot read {}: {e}", path.display())))?;
    let v: serde_json::Value = serde_json::from_str(&raw).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    let terms = match &v {
        serde_json::Value::Array(_) => v.clone(),
        serde_json::Value::Object(o) => match (o.get("expr"), o.get("entries")) {
            (Some(e), _) => e.clone(),
            (None, Some(serde_json::Value::Array(es))) if es.len() == 1 => es[0]["expr"].clone(),
            _ => return Err(usage("expected a term list, an object with \"expr\", or a single entry")),
        },
        _ => return Err(usage("expected a JSON array or object")),
    };
    let terms: Vec<NcTermWire> = serde_json::from_value(terms).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    Ok(NcExpr::from_wire(alg, &terms)?)
}

fn eval(alg: &Algebra, path: &PathBuf, rep: RepArg, format: Option<Format>) -> Result<Output, Failure> {
    let x = read_expr(alg, path)?;
    let rep = match rep {
        RepArg::Minimal => Representation::minimal(alg),
        RepArg::Tensor2 => Representation::tensor_square(alg),
    };
    let m = rep.evaluate(&x)?;
    let text = match format.unwrap_or(Format::Json) {
        Format::Latex => matrix_latex(alg, &m),
        Format::Json => to_json(&json!({
            "algebra": alg.cartan_type().to_string(),
            "rep": rep.label(),
            "matrix": MatrixWire::from_matrix(&m),
        })),
    };
    Ok(Output::data(text))
}

fn rmatrix(alg: &Algebra, at: Option<&str>, format: Option<Format>) -> Result<Output, Failure> {
    let rep = Representation::minimal(alg);
    let r = RMatrix::build(&rep, max_height()?)?;
    let text = match (at, format.unwrap_or(Format::Json)) {
        (Some(_), Format::Latex) => return Err(usage("point-evaluated R is available as json only")),
        (Some(p), Format::Json) => {
            let v = parse_point(p)?;
            to_json(&PointMatrixWire::new(&r.at_point(&v)?, r.n(), &v))
        }
        (None, Format::Latex) => r.to_latex(),
        (None, Format::Json) => to_json(&json!({
            "algebra": alg.cartan_type().to_string(),
            "r": r.to_wire(),
        })),
    };
    Ok(Output::data(text))
}

fn run(cli: Cli) -> Result<Output, Failure> {
    let name = cli.algebra.as_deref().ok_or_else(|| usage("--algebra is required"))?;
    let alg = Algebra::parse(name).map_err(|e| usage(e.to_string()))?;
    let format = cli.format;
    match cli.command {
        Command::Relations => report_output(&alg, &suites::run(&alg, Suite::Relations, &[], false)?, format),
        Command::Rmatrix { at } => rmatrix(&alg, at.as_deref(), format),
        Command::Lop { kind, a, b, source } => {
            let kind = match kind {
                KindArg::Minus => LKind::Minus,
                KindArg::Plus => LKind::Plus,
            };
            lop(&alg, kind, a, b, source, format)
        }
        Command::Verify { suite, at, exact } => {
            if exact && !at.is_empty() {
                return Err(usage("--exact and --at exclude each other"));
            }
            let points = at.iter().map(|s| parse_point(s)).collect::<Result<Vec<_>, _>>()?;
            report_output(&alg, &suites::run(&alg, suite, &points, exact)?, format)
        }
        Command::Eval { expr, rep } => eval(&alg, &expr, rep, format),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let path = cli.output.clone();
    match run(cli) {
        Ok(out) => {
            let mut text = out.text;
            text.push('\n');
            match path {
                Some(p) => {
                    if let Err(e) = std::fs::write(&p, text) {
                        eprintln!("qea: cannot write {}: {e}", p.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            if out.passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("qea: {f}");
            ExitCode::from(2)
        }
    }
}
