//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage or I/O error, 2 census or verification
//! failure, 3 oracle mismatch.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::census::{self, write_tables, CensusTable, Family, Format, Mode};
use crate::checks::{j_findings, run_suite, IdentityRecord};
use crate::oracle::{self, oracle_vs_formula, DEFAULT_BUDGET, MAX_BUDGET};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_VERIFY: i32 = 2;
pub const EXIT_ORACLE: i32 = 3;

/// Environment override for the oracle budget.
pub const BUDGET_ENV: &str = "MAPCENSUS_ORACLE_BUDGET";

#[derive(Debug, Parser)]
#[command(name = "mapcensus", version, about = "Exact census of unrooted planar maps")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Count unrooted maps by edges or by vertices and faces.
    Census(CensusArgs),
    /// Check every decomposition identity as an exact series equality.
    Verify(VerifyArgs),
    /// Compare brute-force enumeration with the formula census.
    Oracle(OracleArgs),
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FamilyArg {
    Maps,
    #[value(name = "2c")]
    TwoConnected,
    #[value(name = "3c")]
    ThreeConnected,
    All,
}

impl FamilyArg {
    fn families(self) -> Vec<Family> {
        match self {
            FamilyArg::Maps => vec![Family::Maps],
            FamilyArg::TwoConnected => vec![Family::TwoConnected],
            FamilyArg::ThreeConnected => vec![Family::ThreeConnected],
            FamilyArg::All => Family::ALL.to_vec(),
        }
    }
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ModeArg {
    Edges,
    Vf,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum FormatArg {
    Csv,
    Json,
    Text,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
            FormatArg::Text => Format::Text,
        }
    }
}

#[derive(Debug, Args)]
struct CensusArgs {
    #[arg(long, value_enum, default_value = "maps")]
    family: FamilyArg,
    #[arg(long, value_enum, default_value = "edges")]
    mode: ModeArg,
    /// Largest edge count (total degree `i + j` in vf mode).
    #[arg(long, default_value_t = 10, value_parser = clap::value_parser!(u64).range(1..))]
    max: u64,
    #[arg(long, value_enum, default_value = "csv")]
    format: FormatArg,
    /// Write to a file instead of standard output.
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    /// Order of the one-variable identities.
    #[arg(long, default_value_t = 30, value_parser = clap::value_parser!(u64).range(1..))]
    max: u64,
    /// Total degree of the two-variable identities.
    #[arg(long, default_value_t = 20, value_parser = clap::value_parser!(u64).range(1..))]
    max2: u64,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    #[arg(long)]
    output: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct OracleArgs {
    /// Largest edge count to enumerate; defaults to the budget.
    #[arg(long)]
    max: Option<usize>,
    /// Upper bound on `--max`, at most 7.
    #[arg(long)]
    budget: Option<usize>,
    #[arg(long, value_enum, default_value = "text")]
    format: FormatArg,
    #[arg(long)]
    output: Option<PathBuf>,
    /// Write every canonical code to this file.
    #[arg(long)]
    dump_codes: Option<PathBuf>,
}

struct Outcome {
    body: String,
    code: i32,
}

fn emit(out: &mut dyn Write, err: &mut dyn Write, path: Option<&PathBuf>, o: Outcome) -> i32 {
    let written = match path {
        Some(p) => std::fs::write(p, &o.body),
        None => out.write_all(o.body.as_bytes()),
    };
    match written {
        Ok(()) => o.code,
        Err(e) => {
            let _ = writeln!(err, "error: cannot write output: {e}");
            EXIT_USAGE
        }
    }
}

fn run_census(a: &CensusArgs, err: &mut dyn Write) -> Outcome {
    let mode = match a.mode {
        ModeArg::Edges => Mode::Edges,
        ModeArg::Vf => Mode::VerticesFaces,
    };
    let families = a.family.families();
    let tables: Result<Vec<CensusTable>, _> = families
        .iter()
        .map(|&f| census::census(f, mode, a.max as usize))
        .collect();
    match tables {
        Ok(t) => Outcome {
            body: write_tables(&t, a.format.into(), matches!(a.family, FamilyArg::All)),
            code: EXIT_OK,
        },
        Err(e) => {
            let _ = writeln!(err, "error: census failed: {e}");
            Outcome {
                body: String::new(),
                code: EXIT_VERIFY,
            }
        }
    }
}

#[derive(Serialize)]
struct JRecord {
    order: usize,
    swap_symmetric: bool,
    first_asymmetry: Option<(usize, usize)>,
    nonnegative_integers: bool,
    diagonal_matches: bool,
}

#[derive(Serialize)]
struct VerifyRecord {
    order: usize,
    order_2v: usize,
    passed: bool,
    identities: Vec<IdentityRecord>,
    j: Option<JRecord>,
}

fn run_verify(a: &VerifyArgs) -> Outcome {
    let (n1, n2) = (a.max as usize, a.max2 as usize);
    let reports = run_suite(n1, n2);
    let findings = j_findings(n2).ok();
    let failed = reports.iter().filter(|r| !r.passed).count();
    let passed = failed == 0;
    let body = match a.format {
        FormatArg::Json => {
            let rec = VerifyRecord {
                order: n1,
                order_2v: n2,
                passed,
                identities: reports.iter().map(|r| r.record()).collect(),
                j: findings.map(|f| JRecord {
                    order: f.order,
                    swap_symmetric: f.swap_symmetric,
                    first_asymmetry: f.first_asymmetry,
                    nonnegative_integers: f.nonnegative_integers,
                    diagonal_matches: f.diagonal_matches,
                }),
            };
            let mut s = serde_json::to_string_pretty(&rec).expect("records serialize");
            s.push('\n');
            s
        }
        FormatArg::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            w.write_record(["id", "variables", "order", "pass", "first_failure"])
                .expect("in-memory write");
            for r in &reports {
                let ff = r
                    .first_failure
                    .as_ref()
                    .map(|v| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(" "))
                    .unwrap_or_default();
                w.write_record([
                    r.id.clone(),
                    r.variables.to_string(),
                    r.order.to_string(),
                    r.passed.to_string(),
                    ff,
                ])
                .expect("in-memory write");
            }
            String::from_utf8(w.into_inner().expect("flush")).expect("ascii")
        }
        FormatArg::Text => {
            let mut s = String::new();
            for r in &reports {
                s.push_str(&r.line());
                s.push('\n');
            }
            if let Some(f) = &findings {
                s.push_str(&format!(
                    "note j_2v order={} swap_symmetric={} first_asymmetry={:?} nonnegative_integers={} diagonal_matches={}\n",
                    f.order, f.swap_symmetric, f.first_asymmetry, f.nonnegative_integers, f.diagonal_matches
                ));
            }
            s.push_str(&format!(
                "{} identities, {} failed\n",
                reports.len(),
                failed
            ));
            s
        }
    };
    Outcome {
        body,
        code: if passed { EXIT_OK } else { EXIT_VERIFY },
    }
}

fn budget_from(arg: Option<usize>, env: Option<String>) -> Result<usize, String> {
    let budget = match (arg, env) {
        (Some(b), _) => b,
        (None, Some(v)) => v
            .trim()
            .parse()
            .map_err(|_| format!("{BUDGET_ENV} must be an integer, got '{v}'"))?,
        (None, None) => DEFAULT_BUDGET,
    };
    if budget == 0 || budget > MAX_BUDGET {
        return Err(format!("oracle budget must lie in 1..={MAX_BUDGET}, got {budget}"));
    }
    Ok(budget)
}

fn run_oracle(a: &OracleArgs, err: &mut dyn Write) -> Outcome {
    let budget = match budget_from(a.budget, std::env::var(BUDGET_ENV).ok()) {
        Ok(b) => b,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return Outcome {
                body: String::new(),
                code: EXIT_USAGE,
            };
        }
    };
    let n_max = a.max.unwrap_or(budget);
    let fail = |msg: String, code: i32, err: &mut dyn Write| {
        let _ = writeln!(err, "error: {msg}");
        Outcome {
            body: String::new(),
            code,
        }
    };
    if let Some(path) = &a.dump_codes {
        match oracle::enumerate_maps(n_max, budget) {
            Ok(e) => {
                if let Err(io) = std::fs::write(path, e.dump_codes()) {
                    return fail(format!("cannot write codes: {io}"), EXIT_USAGE, err);
                }
            }
            Err(e) => return fail(e.to_string(), EXIT_USAGE, err),
        }
    }
    let report = match oracle_vs_formula(n_max, budget) {
        Ok(r) => r,
        Err(oracle::OracleError::Census(e)) => return fail(e.to_string(), EXIT_VERIFY, err),
        Err(e) => return fail(e.to_string(), EXIT_USAGE, err),
    };
    let lines = report.lines();
    let body = match a.format {
        FormatArg::Json => {
            #[derive(Serialize)]
            struct Rec<'a> {
                max: usize,
                classes: usize,
                passed: bool,
                checks: &'a [String],
            }
            let mut s = serde_json::to_string_pretty(&Rec {
                max: n_max,
                classes: report.classes,
                passed: report.passed(),
                checks: &lines,
            })
            .expect("serializes");
            s.push('\n');
            s
        }
        _ => {
            let mut s = lines.join("\n");
            s.push('\n');
            s.push_str(&format!(
                "{} classes up to {} edges: {}\n",
                report.classes,
                n_max,
                if report.passed() { "agreement" } else { "MISMATCH" }
            ));
            s
        }
    };
    Outcome {
        body,
        code: if report.passed() { EXIT_OK } else { EXIT_ORACLE },
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match &cli.command {
        Command::Census(a) => {
            let o = run_census(a, err);
            emit(out, err, a.output.as_ref(), o)
        }
        Command::Verify(a) => {
            let o = run_verify(a);
            emit(out, err, a.output.as_ref(), o)
        }
        Command::Oracle(a) => {
            let o = run_oracle(a, err);
            emit(out, err, a.output.as_ref(), o)
        }
    }
}

pub fn run() -> i32 {
    let stdout = std::io::stdout();
    let stderr = std::io::stderr();
    run_with(std::env::args_os(), &mut stdout.lock(), &mut stderr.lock())
}
