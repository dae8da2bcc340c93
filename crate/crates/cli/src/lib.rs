//! Command-line front end: verification runs, coefficient tables and family
//! exploration.
//!
//! Exit status: 0 when every requested case passes (with --all the negative
//! control is expected to fail and does not count), 1 on any mismatch or
//! skipped case, 2 on usage errors.

use std::io::Write;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use qplab_core::partitions::{enumerate_family, statistics, Family, DEFAULT_ENUMERATION_BUDGET};
use qplab_core::qengine::{rational_series, DenominatorFactor};
use qplab_core::registry::{
    find_identity, list_identities, IdentityReport, Status, Verifier, DEFAULT_ENUMERATION_ORDER,
    DEFAULT_SERIES_ORDER,
};
use qplab_core::special::{mock_theta, theta_squares, Argument, Form, MockTheta, MockThetaForm};
use qplab_core::Series;

pub const MAX_ORDER_VAR: &str = "QPLAB_MAX_ORDER";

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "qplab",
    version,
    about = "Exact q-series and two-color partition laboratory"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check registered identities coefficient by coefficient
    Verify(VerifyArgs),
    /// Print the coefficients of a series
    Coeffs(CoeffsArgs),
    /// Count or list the members of a partition family
    Enum(EnumArgs),
    /// List registered identities
    List,
    /// Show how both sides of an identity are computed
    Show {
        #[arg(long)]
        id: String,
    },
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("which").required(true).args(["id", "all"])))]
pub struct VerifyArgs {
    #[arg(long)]
    pub id: Option<String>,
    #[arg(long)]
    pub all: bool,
    /// Defaults to each case's own order with --id, or 60 with --all
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    pub order: Option<u32>,
    /// Cap for cases that enumerate partitions
    #[arg(long, default_value_t = DEFAULT_ENUMERATION_ORDER as u32, value_parser = clap::value_parser!(u32).range(1..))]
    pub enum_order: u32,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableFormat {
    List,
    Csv,
    Json,
}

#[derive(Debug, Args)]
pub struct CoeffsArgs {
    /// omega | psi | nu | nu-neg | theta | theta-alt | family:<id>[:signed] | rational:<num>/<den>
    #[arg(long)]
    pub target: String,
    #[arg(long, default_value_t = DEFAULT_SERIES_ORDER as u32)]
    pub order: u32,
    #[arg(long, conflicts_with = "json")]
    pub csv: bool,
    #[arg(long)]
    pub json: bool,
}

#[derive(Debug, Args)]
pub struct EnumArgs {
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub n: u32,
    /// Print every member
    #[arg(long)]
    pub list: bool,
    /// Print the parity breakdown
    #[arg(long)]
    pub stats: bool,
}

#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

fn usage(msg: impl Into<String>) -> UsageError {
    UsageError(msg.into())
}

/// One report in the machine-readable schema.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportJson {
    pub id: String,
    pub order: usize,
    pub status: String,
    pub mismatch: Option<MismatchJson>,
    pub notes: String,
    pub elapsed_ms: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MismatchJson {
    pub n: usize,
    pub lhs: String,
    pub rhs: String,
}

impl From<&IdentityReport> for ReportJson {
    fn from(r: &IdentityReport) -> Self {
        let mismatch = match &r.status {
            Status::Mismatch { index, lhs, rhs } => Some(MismatchJson {
                n: *index,
                lhs: lhs.to_string(),
                rhs: rhs.to_string(),
            }),
            _ => None,
        };
        let notes = match &r.status {
            Status::Skipped { reason } if r.notes.is_empty() => reason.clone(),
            Status::Skipped { reason } => format!("{} | {reason}", r.notes),
            _ => r.notes.clone(),
        };
        ReportJson {
            id: r.id.clone(),
            order: r.order,
            status: r.status.label().to_string(),
            mismatch,
            notes,
            elapsed_ms: r.elapsed.as_millis() as u64,
        }
    }
}

/// The order cap from `QPLAB_MAX_ORDER`, if set.
pub fn max_order() -> Result<Option<usize>, UsageError> {
    match std::env::var(MAX_ORDER_VAR) {
        Ok(v) => v.trim().parse::<usize>().map(Some).map_err(|_| {
            usage(format!(
                "{MAX_ORDER_VAR} must be a non-negative integer, got '{v}'"
            ))
        }),
        Err(_) => Ok(None),
    }
}

fn capped(value: usize, cap: Option<usize>, what: &str, err: &mut dyn Write) -> usize {
    match cap {
        Some(c) if value > c => {
            let _ = writeln!(err, "note: {what} {value} capped to {c} by {MAX_ORDER_VAR}");
            c
        }
        _ => value,
    }
}

pub fn run(cli: Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<i32, UsageError> {
    let cap = max_order()?;
    let io = |e: std::io::Error| usage(format!("write failed: {e}"));
    match cli.command {
        Command::Verify(args) => verify(args, cap, out, err),
        Command::Coeffs(args) => {
            let order = capped(args.order as usize, cap, "order", err);
            let series = coefficients(&args.target, order)?;
            let format = if args.csv {
                TableFormat::Csv
            } else if args.json {
                TableFormat::Json
            } else {
                TableFormat::List
            };
            write_table(out, &args.target, &series, format).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Enum(args) => {
            let family: Family = args.family.parse().map_err(|e| usage(format!("{e}")))?;
            let budget = cap.map_or(DEFAULT_ENUMERATION_BUDGET, |c| {
                c.min(DEFAULT_ENUMERATION_BUDGET)
            });
            if args.n as usize > budget {
                return Err(usage(format!(
                    "n = {} exceeds the enumeration budget {budget}",
                    args.n
                )));
            }
            enumerate(out, family, args.n, args.list, args.stats).map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::List => {
            for c in list_identities() {
                writeln!(out, "{}\t{}\t{}", c.id, c.default_order, c.description).map_err(io)?;
            }
            Ok(EXIT_OK)
        }
        Command::Show { id } => {
            let c = find_identity(&id).map_err(|e| usage(e.to_string()))?;
            writeln!(out, "id: {}", c.id).map_err(io)?;
            writeln!(out, "description: {}", c.description).map_err(io)?;
            writeln!(out, "statement: {}", c.reference).map_err(io)?;
            writeln!(out, "default order: {}", c.default_order).map_err(io)?;
            if !c.notes.is_empty() {
                writeln!(out, "notes: {}", c.notes).map_err(io)?;
            }
            write!(
                out,
                "lhs:\n{}rhs:\n{}",
                indent(&c.lhs.tree()),
                indent(&c.rhs.tree())
            )
            .map_err(io)?;
            Ok(EXIT_OK)
        }
    }
}

fn indent(text: &str) -> String {
    text.lines().map(|l| format!("  {l}\n")).collect()
}

fn verify(
    args: VerifyArgs,
    cap: Option<usize>,
    out: &mut dyn Write,
    err: &mut dyn Write,
) -> Result<i32, UsageError> {
    let io = |e: std::io::Error| usage(format!("write failed: {e}"));
    let enum_order = capped(args.enum_order as usize, cap, "enumeration order", err);
    let verifier = Verifier::new(enum_order);
    let reports = if args.all {
        let order = capped(
            args.order.map_or(DEFAULT_SERIES_ORDER, |o| o as usize),
            cap,
            "order",
            err,
        );
        verifier.verify_all(order)
    } else {
        let id = args.id.expect("clap enforces --id or --all");
        let case = find_identity(&id).map_err(|e| usage(e.to_string()))?;
        let order = capped(
            args.order.map_or(case.default_order, |o| o as usize),
            cap,
            "order",
            err,
        );
        vec![verifier.verify_case(&case, order)]
    };
    if args.json {
        let docs: Vec<ReportJson> = reports.iter().map(ReportJson::from).collect();
        let text = if args.all {
            serde_json::to_string_pretty(&docs)
        } else {
            serde_json::to_string_pretty(&docs[0])
        }
        .expect("reports serialize");
        writeln!(out, "{text}").map_err(io)?;
    } else {
        write_report_table(out, &reports).map_err(io)?;
    }
    // A case named with --id must pass, even the negative control.
    let failed = if args.all {
        reports.iter().any(IdentityReport::is_failure)
    } else {
        !reports[0].passed()
    };
    Ok(if failed { EXIT_MISMATCH } else { EXIT_OK })
}

fn write_report_table(out: &mut dyn Write, reports: &[IdentityReport]) -> std::io::Result<()> {
    let width = reports.iter().map(|r| r.id.len()).max().unwrap_or(0);
    let (mut pass, mut fail, mut expected) = (0, 0, 0);
    for r in reports {
        let label = match (&r.status, r.negative_control) {
            (Status::Pass, false) => {
                pass += 1;
                "PASS"
            }
            (_, true) if !r.passed() => {
                expected += 1;
                "XFAIL"
            }
            _ => {
                fail += 1;
                "FAIL"
            }
        };
        let detail = match &r.status {
            Status::Pass => String::new(),
            Status::Mismatch { index, lhs, rhs } => {
                format!("  first mismatch at n={index}: lhs={lhs} rhs={rhs}")
            }
            Status::Skipped { reason } => format!("  skipped: {reason}"),
        };
        writeln!(
            out,
            "{label:<5} {:<width$}  order {:>3}  {:>6} ms{detail}",
            r.id,
            r.order,
            r.elapsed.as_millis()
        )?;
    }
    writeln!(
        out,
        "{pass} passed, {fail} failed, {expected} expected failure(s)"
    )
}

/// Parses `1-1^2,1+3` into `(1-q)^2 (1+q^3)`.
fn parse_denominator(text: &str) -> Result<Vec<DenominatorFactor>, UsageError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|f| {
            let f = f.trim();
            let bad = || {
                usage(format!(
                    "bad denominator factor '{f}', expected 1-<e>[^m] or 1+<e>[^m]"
                ))
            };
            let (minus, rest) = if let Some(r) = f.strip_prefix("1-") {
                (true, r)
            } else {
                (false, f.strip_prefix("1+").ok_or_else(bad)?)
            };
            let (e, m) = rest.split_once('^').unwrap_or((rest, "1"));
            let e: u32 = e.parse().map_err(|_| bad())?;
            let m: u32 = m.parse().map_err(|_| bad())?;
            Ok(if minus {
                DenominatorFactor::minus(e, m)
            } else {
                DenominatorFactor::plus(e, m)
            })
        })
        .collect()
}

/// Evaluates a `coeffs` target to `order`.
pub fn coefficients(target: &str, order: usize) -> Result<Series, UsageError> {
    let mock = |function, argument| {
        mock_theta(
            MockThetaForm::new(function, Form::Defining, argument),
            order,
        )
        .map_err(|e| usage(e.to_string()))
    };
    match target {
        "omega" => mock(MockTheta::Omega, Argument::Q),
        "psi" => mock(MockTheta::Psi, Argument::Q),
        "nu" => mock(MockTheta::Nu, Argument::Q),
        "nu-neg" => mock(MockTheta::Nu, Argument::NegQ),
        "theta" => Ok(theta_squares(order, false)),
        "theta-alt" => Ok(theta_squares(order, true)),
        _ => {
            if let Some(rest) = target.strip_prefix("family:") {
                let (id, signed) = match rest.strip_suffix(":signed") {
                    Some(id) => (id, true),
                    None => (rest, false),
                };
                let family: Family = id.parse().map_err(|e| usage(format!("{e}")))?;
                family
                    .generating_function(signed)
                    .expand(order)
                    .map_err(|e| usage(e.to_string()))
            } else if let Some(rest) = target.strip_prefix("rational:") {
                let (num, den) = rest.split_once('/').unwrap_or((rest, ""));
                let numerator = num
                    .split(',')
                    .map(|c| c.trim().parse::<i64>())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(|_| usage(format!("bad numerator '{num}'")))?;
                let denominator = parse_denominator(den)?;
                rational_series(&numerator, &denominator, order).map_err(|e| usage(e.to_string()))
            } else {
                Err(usage(format!("unknown target '{target}'")))
            }
        }
    }
}

fn write_table(
    out: &mut dyn Write,
    target: &str,
    s: &Series,
    format: TableFormat,
) -> std::io::Result<()> {
    let text: Vec<String> = s.coeffs().iter().map(ToString::to_string).collect();
    match format {
        TableFormat::List => writeln!(out, "{}", text.join(",")),
        TableFormat::Csv => {
            let mut w = csv::Writer::from_writer(out);
            w.write_record(["n", "coefficient"])?;
            for (n, c) in text.iter().enumerate() {
                w.write_record([n.to_string(), c.clone()])?;
            }
            w.flush()
        }
        TableFormat::Json => {
            let doc =
                serde_json::json!({ "target": target, "order": s.order(), "coefficients": text });
            writeln!(out, "{}", serde_json::to_string_pretty(&doc).expect("json"))
        }
    }
}

fn enumerate(
    out: &mut dyn Write,
    family: Family,
    n: u32,
    list: bool,
    stats: bool,
) -> std::io::Result<()> {
    let spec = family.spec();
    let st = statistics(&spec, n);
    writeln!(out, "family {family}, n = {n}")?;
    writeln!(out, "count: {}", st.total)?;
    writeln!(out, "weighted count: {}", st.weighted)?;
    if stats {
        writeln!(
            out,
            "{family}_0 = {}  (even number of even parts)",
            st.even_evens
        )?;
        writeln!(
            out,
            "{family}_1 = {}  (odd number of even parts)",
            st.odd_evens
        )?;
        writeln!(
            out,
            "{family}_2 = {}  (even number of parts)",
            st.even_length
        )?;
        writeln!(out, "{family}_3 = {}  (odd number of parts)", st.odd_length)?;
    }
    if list {
        for p in enumerate_family(&spec, n) {
            writeln!(out, "{p}")?;
        }
    }
    Ok(())
}
