//! The command-line interface.
//!
//! Three subcommands: `run` executes a `.geo` construction script (optionally
//! writing its JSON traces and an SVG of the last construction), `verify`
//! checks an axiom/property suite against a model, and `table` prints the
//! constructed addition and multiplication tables of a finite model.
//!
//! Exit codes: 0 when everything passed, 1 when a statement, assertion, or
//! claim failed, 2 for usage and parse errors (bad flags, unreadable files,
//! script diagnostics, a suite/model mismatch). Diagnostics go to standard
//! error with `line:column` spans; `--json` swaps the human text on standard
//! output for versioned machine-readable reports.

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::dsl::{self, RunResult, StatementStatus};
use crate::line_algebra::Frame;
use crate::plane::{Line, Point};
use crate::scalar::{RingDescriptor, RingKind};
use crate::svg::{render_svg, RenderOptions};
use crate::verification::{run_suite, Mode, SuiteName, SuiteReport, VerifyError};

/// Schema version of the `run --json` report.
pub const RUN_REPORT_SCHEMA_VERSION: u64 = 1;
/// Schema version of the `table --json` report.
pub const TABLE_SCHEMA_VERSION: u64 = 1;

const EXIT_PASS: i32 = 0;
const EXIT_FAIL: i32 = 1;
const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "skewline",
    version,
    about = "Ruler-only arithmetic on a line of an affine plane: run construction \
             scripts, verify axiom suites, print operation tables"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a .geo construction script
    Run {
        /// Path to the script
        script: PathBuf,
        /// Write every construction trace to FILE as a JSON array
        #[arg(long, value_name = "FILE")]
        trace: Option<PathBuf>,
        /// Render the last construction to FILE as SVG 1.1
        #[arg(long, value_name = "FILE")]
        svg: Option<PathBuf>,
        /// Seed for default auxiliary-point choices (`using` overrides it)
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Emit the run report as JSON on standard output
        #[arg(long)]
        json: bool,
    },
    /// Check an axiom/property suite against a model
    Verify {
        /// affine-axioms, desargues, pappus, order-axioms, skew-field,
        /// positive-cone, map-order, or all
        suite: String,
        /// rational, gf(p), or quaternion
        #[arg(long)]
        model: String,
        /// Seed for sampled checking
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Sample count per claim family
        #[arg(long, default_value_t = 200)]
        samples: u64,
        /// Enumerate the whole (finite) model instead of sampling
        #[arg(long)]
        exhaustive: bool,
        /// Emit the suite report as JSON on standard output
        #[arg(long)]
        json: bool,
    },
    /// Print the constructed + and * tables of a finite model
    Table {
        /// gf(p) for a prime p
        #[arg(long)]
        model: String,
        /// Frame as two points on a common line: "(ox,oy) (ix,iy)"
        #[arg(long, default_value = "(0,0) (1,0)")]
        frame: String,
        /// Emit the tables as JSON on standard output
        #[arg(long)]
        json: bool,
    },
}

/// Parses and dispatches; returns the process exit code.
pub fn cli_main<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_PASS,
                _ => EXIT_USAGE,
            };
            let _ = e.print();
            return code;
        }
    };
    match cli.command {
        Command::Run {
            script,
            trace,
            svg,
            seed,
            json,
        } => run_script(&script, trace.as_deref(), svg.as_deref(), seed, json),
        Command::Verify {
            suite,
            model,
            seed,
            samples,
            exhaustive,
            json,
        } => verify(&suite, &model, seed, samples, exhaustive, json),
        Command::Table { model, frame, json } => table(&model, &frame, json),
    }
}

fn usage_error(message: impl std::fmt::Display) -> i32 {
    eprintln!("error: {message}");
    EXIT_USAGE
}

// ---------------------------------------------------------------------------
// run

fn run_script(
    script_path: &Path,
    trace_path: Option<&Path>,
    svg_path: Option<&Path>,
    seed: u64,
    json: bool,
) -> i32 {
    let text = match fs::read_to_string(script_path) {
        Ok(t) => t,
        Err(e) => return usage_error(format_args!("cannot read {}: {e}", script_path.display())),
    };
    let script = match dsl::parse(&text) {
        Ok(s) => s,
        Err(diagnostics) => {
            for d in &diagnostics {
                eprintln!("{}: {d}", script_path.display());
            }
            return EXIT_USAGE;
        }
    };
    let result = dsl::execute(&script, seed);

    if let Some(path) = trace_path {
        let traces: Vec<Value> = result.traces.iter().map(|t| t.to_value()).collect();
        let body = serde_json::to_string_pretty(&Value::Array(traces)).expect("traces serialize");
        if let Err(e) = fs::write(path, body + "\n") {
            return usage_error(format_args!("cannot write {}: {e}", path.display()));
        }
    }

    if let Some(path) = svg_path {
        let document = match render_svg(result.last_trace(), &RenderOptions::default()) {
            Ok(doc) => doc,
            Err(e) => {
                eprintln!("error: cannot render {}: {e}", path.display());
                return EXIT_FAIL;
            }
        };
        if let Err(e) = fs::write(path, document) {
            return usage_error(format_args!("cannot write {}: {e}", path.display()));
        }
    }

    if json {
        let report = run_report(&result);
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("run reports serialize")
        );
    } else {
        print_run_text(&result);
    }
    if result.passed() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn print_run_text(result: &RunResult) {
    println!("model {}", result.model.label());
    for outcome in &result.outcomes {
        let (tag, note) = match &outcome.status {
            StatementStatus::Bound { name, value } => {
                ("ok  ".to_string(), format!("{name} = {}", value.text()))
            }
            StatementStatus::Asserted { passed: true, detail } => {
                ("ok  ".to_string(), detail.clone())
            }
            StatementStatus::Asserted {
                passed: false,
                detail,
            } => ("FAIL".to_string(), detail.clone()),
            StatementStatus::Failed { message } => ("FAIL".to_string(), message.clone()),
            StatementStatus::Skipped { missing } => {
                ("skip".to_string(), format!("needs `{missing}`, which failed earlier"))
            }
        };
        println!("[{tag}] line {:>3}: {}  ({note})", outcome.line, outcome.rendered);
    }
    let problems = result.problems();
    if problems.is_empty() {
        println!("run passed: {} statements, {} traces", result.outcomes.len(), result.traces.len());
    } else {
        println!("run failed: {} problem(s)", problems.len());
    }
}

fn run_report(result: &RunResult) -> Value {
    let outcomes: Vec<Value> = result
        .outcomes
        .iter()
        .map(|o| {
            let (status, detail) = match &o.status {
                StatementStatus::Bound { name, value } => {
                    ("bound", format!("{name} = {}", value.text()))
                }
                StatementStatus::Asserted { passed: true, detail } => ("pass", detail.clone()),
                StatementStatus::Asserted {
                    passed: false,
                    detail,
                } => ("fail", detail.clone()),
                StatementStatus::Failed { message } => ("error", message.clone()),
                StatementStatus::Skipped { missing } => ("skipped", format!("needs `{missing}`")),
            };
            json!({
                "line": o.line,
                "text": o.rendered,
                "status": status,
                "detail": detail,
            })
        })
        .collect();
    let traces: Vec<Value> = result.traces.iter().map(|t| t.to_value()).collect();
    json!({
        "schema_version": RUN_REPORT_SCHEMA_VERSION,
        "model": result.model.label(),
        "passed": result.passed(),
        "outcomes": outcomes,
        "traces": traces,
    })
}

// ---------------------------------------------------------------------------
// verify

fn verify(suite: &str, model: &str, seed: u64, samples: u64, exhaustive: bool, json: bool) -> i32 {
    let suite = match SuiteName::parse(suite) {
        Ok(s) => s,
        Err(e) => return usage_error(e),
    };
    let ring = match RingDescriptor::parse_label(model) {
        Ok(r) => r,
        Err(e) => return usage_error(e),
    };
    let mode = if exhaustive {
        Mode::Exhaustive
    } else {
        Mode::Sampled { seed, samples }
    };
    let report = match run_suite(suite, &ring, mode) {
        Ok(report) => report,
        Err(e @ VerifyError::SuiteModelMismatch { .. }) => return usage_error(e),
        Err(e) => {
            eprintln!("error: {e}");
            return EXIT_FAIL;
        }
    };
    if json {
        println!("{}", report.to_json());
    } else {
        print_suite_text(&report);
    }
    if report.passed() {
        EXIT_PASS
    } else {
        EXIT_FAIL
    }
}

fn print_suite_text(report: &SuiteReport) {
    println!(
        "suite {} over {} [{}]",
        report.suite, report.model, report.mode
    );
    for check in &report.checks {
        if check.passed() {
            println!("  [pass] {}: tested {}", check.claim, check.tested);
        } else {
            println!(
                "  [FAIL] {}: tested {}, {} failure(s)",
                check.claim, check.tested, check.failures
            );
            for witness in &check.witnesses {
                println!("         witness: {witness}");
            }
        }
    }
    for skipped in &report.skipped {
        println!("  [skip] {}: {}", skipped.suite, skipped.reason);
    }
    let verdict = if report.passed() { "PASS" } else { "FAIL" };
    println!("result: {verdict} ({} ms)", report.wall_time_ms);
}

// ---------------------------------------------------------------------------
// table

fn table(model: &str, frame_spec: &str, json: bool) -> i32 {
    let ring = match RingDescriptor::parse_label(model) {
        Ok(r) => r,
        Err(e) => return usage_error(e),
    };
    let RingKind::PrimeField(p) = ring.kind() else {
        return usage_error(format_args!(
            "`table` needs a finite model; {} has infinitely many line points",
            ring.label()
        ));
    };
    let frame = match parse_frame_spec(ring, frame_spec) {
        Ok(f) => f,
        Err(message) => return usage_error(message),
    };

    let (add, mul) = match build_tables(&frame, p) {
        Ok(tables) => tables,
        Err(message) => {
            eprintln!("error: {message}");
            return EXIT_FAIL;
        }
    };

    if json {
        let report = json!({
            "schema_version": TABLE_SCHEMA_VERSION,
            "model": ring.label(),
            "frame": {
                "line": frame.line().to_string(),
                "origin": frame.origin().to_string(),
                "unit": frame.unit().to_string(),
            },
            "add": add,
            "mul": mul,
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&report).expect("tables serialize")
        );
    } else {
        println!(
            "frame: O = {}, I = {} on {}",
            frame.origin(),
            frame.unit(),
            frame.line()
        );
        print_table(&format!("+ over {}", ring.label()), &add, p);
        print_table(&format!("* over {}", ring.label()), &mul, p);
    }
    EXIT_PASS
}

/// Two parenthesized scalar pairs, e.g. `(0,0) (1,0)`.
fn parse_frame_spec(ring: RingDescriptor, spec: &str) -> Result<Frame, String> {
    let mut groups: Vec<&str> = Vec::new();
    let mut rest = spec;
    while let Some(open) = rest.find('(') {
        let Some(close_rel) = rest[open..].find(')') else {
            return Err(format!("unclosed `(` in frame spec `{spec}`"));
        };
        groups.push(&rest[open + 1..open + close_rel]);
        rest = &rest[open + close_rel + 1..];
    }
    if groups.len() != 2 || !rest.trim().is_empty() {
        return Err(format!(
            "frame spec must be two points `(ox,oy) (ix,iy)`, got `{spec}`"
        ));
    }
    let mut points = Vec::with_capacity(2);
    for group in groups {
        let Some((x, y)) = group.split_once(',') else {
            return Err(format!("point `({group})` needs two comma-separated coordinates"));
        };
        let x = ring.parse_scalar(x).map_err(|e| e.to_string())?;
        let y = ring.parse_scalar(y).map_err(|e| e.to_string())?;
        points.push(Point::new(x, y));
    }
    let unit = points.pop().expect("two points");
    let origin = points.pop().expect("two points");
    let line = Line::through(&origin, &unit)
        .map_err(|_| "frame points must be distinct".to_string())?;
    Frame::new(line, origin, unit).map_err(|e| e.to_string())
}

/// Cayley tables by construction: entry (s, t) is `to_parameter` of the
/// constructed sum/product of the points at parameters s and t.
fn build_tables(frame: &Frame, p: u64) -> Result<(Vec<Vec<u64>>, Vec<Vec<u64>>), String> {
    let ring = frame.ring();
    let value_of = |point: &Point| -> Result<u64, String> {
        match frame.to_parameter(point).map_err(|e| e.to_string())? {
            crate::scalar::Scalar::PrimeField { value, .. } => Ok(value),
            other => Err(format!("parameter {other} is not a field residue")),
        }
    };
    let mut add = Vec::with_capacity(p as usize);
    let mut mul = Vec::with_capacity(p as usize);
    for s in 0..p {
        let x = frame.from_parameter(&ring.int(s as i64));
        let mut add_row = Vec::with_capacity(p as usize);
        let mut mul_row = Vec::with_capacity(p as usize);
        for t in 0..p {
            let y = frame.from_parameter(&ring.int(t as i64));
            let (sum, _) = frame.add(&x, &y).map_err(|e| e.to_string())?;
            let (product, _) = frame.mul(&x, &y).map_err(|e| e.to_string())?;
            add_row.push(value_of(&sum)?);
            mul_row.push(value_of(&product)?);
        }
        add.push(add_row);
        mul.push(mul_row);
    }
    Ok((add, mul))
}

fn print_table(title: &str, table: &[Vec<u64>], p: u64) {
    let w = p.to_string().len();
    println!("{title}");
    let header: Vec<String> = (0..p).map(|t| format!("{t:>w$}")).collect();
    println!("  {:>w$} | {}", "", header.join(" "));
    println!("  {}-+-{}", "-".repeat(w), "-".repeat((w + 1) * p as usize - 1));
    for (s, row) in table.iter().enumerate() {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:>w$}")).collect();
        println!("  {s:>w$} | {}", cells.join(" "));
    }
}
