//! The `jocto` command line.
//!
//! Exit codes: `0` when every check passes, `1` when at least one exact
//! discrepancy was found, `2` on a usage error. Data goes to stdout (or
//! `--out`), diagnostics to stderr.

use std::fmt::Write as _;
use std::io::Write;
use std::path::PathBuf;

use clap::{ArgGroup, Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::json;

use crate::identity::{run_suite, verify_range, IdentityId, RangeReport, VariantPolicy};
use crate::octonion::{multiplication_table, Octonion};
use crate::octonion_sequences::{oct_seq, oct_seq_closed, OctonionSequenceKind};
use crate::scalar::{seq_range, SequenceKind};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DISCREPANCY: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Parser)]
#[command(
    name = "jocto",
    version,
    about = "Exact third-order Jacobsthal octonions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print sequence values for n in a range.
    Seq(SeqArgs),
    /// Print the coefficients of JO_n or jO_n.
    Oct(OctArgs),
    /// Check identities over a range of n.
    Verify(VerifyArgs),
    /// Print the basis multiplication table.
    MulTable(Output),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum VariantArg {
    Printed,
    Corrected,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Scalar(SequenceKind),
    Octonion(OctonionSequenceKind),
}

fn parse_kind(s: &str) -> Result<Kind, String> {
    Ok(match s {
        "j3" => Kind::Scalar(SequenceKind::ThirdOrderJacobsthal),
        "jl3" => Kind::Scalar(SequenceKind::ThirdOrderJacobsthalLucas),
        "jacobsthal" => Kind::Scalar(SequenceKind::Jacobsthal),
        "jacobsthal-lucas" => Kind::Scalar(SequenceKind::JacobsthalLucas),
        "JO" => Kind::Octonion(OctonionSequenceKind::JO),
        "jO" => Kind::Octonion(OctonionSequenceKind::jO),
        _ => {
            return Err(format!(
                "unknown kind {s:?} (expected j3, jl3, jacobsthal, jacobsthal-lucas, JO or jO)"
            ))
        }
    })
}

#[derive(Debug, Args)]
struct Output {
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write output here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct SeqArgs {
    #[arg(long, value_parser = parse_kind)]
    kind: Kind,
    #[arg(long, allow_negative_numbers = true)]
    from: i64,
    #[arg(long, allow_negative_numbers = true)]
    to: i64,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
struct OctArgs {
    #[arg(long, value_parser = parse_kind)]
    kind: Kind,
    #[arg(long, allow_negative_numbers = true)]
    n: i64,
    /// Evaluate the closed form and compare it with the recurrence.
    #[arg(long)]
    closed: bool,
    #[command(flatten)]
    output: Output,
}

#[derive(Debug, Args)]
#[command(group(ArgGroup::new("selector").required(true).args(["identity", "all"])))]
struct VerifyArgs {
    #[arg(long)]
    identity: Option<String>,
    #[arg(long)]
    all: bool,
    #[arg(long, value_enum, default_value = "printed")]
    variant: VariantArg,
    #[arg(long, default_value_t = 0, allow_negative_numbers = true)]
    from: i64,
    #[arg(long, allow_negative_numbers = true)]
    to: i64,
    #[command(flatten)]
    output: Output,
}

struct Usage(String);

type Outcome = Result<(String, i32), Usage>;

/// Runs one invocation. `args` includes the program name.
pub fn run<I, T>(args: I, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() {
                let _ = write!(stderr, "{e}");
                EXIT_USAGE
            } else {
                let _ = write!(stdout, "{e}");
                EXIT_OK
            };
            return code;
        }
    };
    let (outcome, out_path) = match cli.command {
        Command::Seq(a) => (cmd_seq(&a), a.output.out),
        Command::Oct(a) => (cmd_oct(&a), a.output.out),
        Command::Verify(a) => (cmd_verify(&a), a.output.out),
        Command::MulTable(o) => (
            Ok((cmd_mul_table(o.format.unwrap_or(Format::Plain)), EXIT_OK)),
            o.out,
        ),
    };
    match outcome {
        Ok((text, code)) => {
            let written = match out_path {
                Some(path) => std::fs::write(&path, text.as_bytes())
                    .map_err(|e| format!("cannot write {}: {e}", path.display())),
                None => stdout.write_all(text.as_bytes()).map_err(|e| e.to_string()),
            };
            match written {
                Ok(()) => code,
                Err(msg) => {
                    let _ = writeln!(stderr, "error: {msg}");
                    EXIT_USAGE
                }
            }
        }
        Err(Usage(msg)) => {
            let _ = writeln!(stderr, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn check_range(from: i64, to: i64) -> Result<(usize, usize), Usage> {
    if from < 0 || to < 0 {
        return Err(Usage(format!("negative index in range {from}..={to}")));
    }
    if from > to {
        return Err(Usage(format!(
            "empty range: --from {from} is after --to {to}"
        )));
    }
    Ok((from as usize, to as usize))
}

fn cmd_seq(a: &SeqArgs) -> Outcome {
    let Kind::Scalar(kind) = a.kind else {
        return Err(Usage(
            "seq takes a scalar kind; use `oct` for JO and jO".into(),
        ));
    };
    let (from, to) = check_range(a.from, a.to)?;
    let values = seq_range(kind, from, to);
    let rows = (from..=to).zip(&values);
    let mut text = String::new();
    match a.output.format.unwrap_or(Format::Plain) {
        Format::Plain => rows.for_each(|(n, v)| writeln!(text, "{n} {v}").unwrap()),
        Format::Csv => rows.for_each(|(n, v)| writeln!(text, "{n},{v}").unwrap()),
        Format::Json => {
            let arr: Vec<_> = rows
                .map(|(n, v)| json!({"n": n, "value": v.to_string()}))
                .collect();
            writeln!(text, "{}", serde_json::to_string(&arr).unwrap()).unwrap();
        }
    }
    Ok((text, EXIT_OK))
}

fn render_octonion(o: &Octonion, format: Format) -> String {
    let strings: Vec<String> = o.coefficients().iter().map(ToString::to_string).collect();
    match format {
        Format::Json => serde_json::to_string(o).unwrap(),
        Format::Csv => strings.join(","),
        Format::Plain => strings.join(" "),
    }
}

fn cmd_oct(a: &OctArgs) -> Outcome {
    let Kind::Octonion(kind) = a.kind else {
        return Err(Usage(
            "oct takes JO or jO; use `seq` for scalar kinds".into(),
        ));
    };
    if a.n < 0 {
        return Err(Usage(format!("negative index {}", a.n)));
    }
    let n = a.n as usize;
    let format = a.output.format.unwrap_or(Format::Json);
    let direct = oct_seq(kind, n);
    if !a.closed {
        return Ok((render_octonion(&direct, format) + "\n", EXIT_OK));
    }
    match oct_seq_closed(kind, n) {
        Ok(closed) => {
            let agree = closed == direct;
            let text = format!(
                "{}\nclosed=recurrence: {agree}\n",
                render_octonion(&closed, format)
            );
            Ok((text, if agree { EXIT_OK } else { EXIT_DISCREPANCY }))
        }
        // An inexact closed form is a discrepancy, not a usage error.
        Err(e) => Ok((
            format!("closed=recurrence: false ({e})\n"),
            EXIT_DISCREPANCY,
        )),
    }
}

fn cmd_verify(a: &VerifyArgs) -> Outcome {
    let (from, to) = check_range(a.from, a.to)?;
    let (from, to) = (from as i64, to as i64);
    let policy = match a.variant {
        VariantArg::Printed => VariantPolicy::PrintedOnly,
        VariantArg::Corrected => VariantPolicy::CorrectedOnly,
        VariantArg::Both => VariantPolicy::PrintedAndCorrected,
    };
    let reports: Vec<RangeReport> = match &a.identity {
        Some(name) => {
            let id: IdentityId = name.parse().map_err(Usage)?;
            if a.variant == VariantArg::Corrected && !id.has_corrected() {
                return Err(Usage(format!("{id} has no corrected variant")));
            }
            policy
                .variants_for(id)
                .into_iter()
                .map(|v| verify_range(id, v, from, to))
                .collect::<Result<_, _>>()
                .map_err(|e| Usage(e.to_string()))?
        }
        None if from == 0 => run_suite(policy, to).map_err(|e| Usage(e.to_string()))?,
        None => IdentityId::ALL
            .iter()
            .flat_map(|&id| policy.variants_for(id).into_iter().map(move |v| (id, v)))
            .map(|(id, v)| verify_range(id, v, from, to))
            .collect::<Result<_, _>>()
            .map_err(|e| Usage(e.to_string()))?,
    };
    let code = if reports.iter().all(RangeReport::passed) {
        EXIT_OK
    } else {
        EXIT_DISCREPANCY
    };
    Ok((
        render_reports(&reports, a.output.format.unwrap_or(Format::Json)),
        code,
    ))
}

fn render_reports(reports: &[RangeReport], format: Format) -> String {
    let mut text = String::new();
    match format {
        Format::Json => {
            writeln!(text, "{}", serde_json::to_string_pretty(reports).unwrap()).unwrap();
        }
        Format::Csv => {
            text.push_str("id,variant,n_from,n_to,checked,skipped,failures,failed_n\n");
            for r in reports {
                let failed: Vec<String> = r.failures.iter().map(|f| f.n.to_string()).collect();
                writeln!(
                    text,
                    "{},{},{},{},{},{},{},{}",
                    r.id,
                    r.variant,
                    r.n_from,
                    r.n_to,
                    r.total_checked,
                    r.skipped.len(),
                    r.failures.len(),
                    failed.join(";")
                )
                .unwrap();
            }
        }
        Format::Plain => {
            for r in reports {
                let status = if r.passed() { "PASS" } else { "FAIL" };
                writeln!(
                    text,
                    "{status} {} [{}] n={}..{} checked={} skipped={} failures={}",
                    r.id,
                    r.variant,
                    r.n_from,
                    r.n_to,
                    r.total_checked,
                    r.skipped.len(),
                    r.failures.len()
                )
                .unwrap();
                for f in &r.failures {
                    writeln!(text, "  n={}: lhs = {}", f.n, f.lhs).unwrap();
                    writeln!(text, "  n={}: rhs = {}", f.n, f.rhs).unwrap();
                }
            }
        }
    }
    text
}

#[derive(Serialize)]
struct Cell {
    sign: i8,
    e: usize,
}

fn cmd_mul_table(format: Format) -> String {
    let table = multiplication_table();
    let mut text = String::new();
    match format {
        Format::Json => {
            let rows: Vec<Vec<_>> = table
                .iter()
                .map(|row| {
                    row.iter()
                        .map(|b| Cell {
                            sign: b.sign(),
                            e: b.index().get(),
                        })
                        .collect()
                })
                .collect();
            writeln!(text, "{}", serde_json::to_string(&rows).unwrap()).unwrap();
        }
        Format::Csv => {
            text.push_str("x,e0,e1,e2,e3,e4,e5,e6,e7\n");
            for (i, row) in table.iter().enumerate() {
                let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
                writeln!(text, "e{i},{}", cells.join(",")).unwrap();
            }
        }
        Format::Plain => {
            text.push_str(&format!("{:<4}", "x"));
            for j in 0..8 {
                text.push_str(&format!("{:>4}", format!("e{j}")));
            }
            text.push('\n');
            for (i, row) in table.iter().enumerate() {
                text.push_str(&format!("{:<4}", format!("e{i}")));
                for b in row {
                    text.push_str(&format!("{:>4}", b.to_string()));
                }
                text.push('\n');
            }
        }
    }
    text
}
