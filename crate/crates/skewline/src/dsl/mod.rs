//! A small construction-script language for driving the kernel.
//!
//! Scripts are line-oriented `.geo` files: a `model` header picks the
//! coordinate ring, then each line declares a point, line, or frame, runs a
//! ruler construction (`add`, `mul`, `neg`, `inv`, `project`), or asserts a
//! predicate. Parsing reports spanned diagnostics with per-line recovery and
//! resolves every identifier (declared before use, kind-checked); execution
//! is deterministic for a fixed `(script, seed)` pair, records every
//! statement outcome, and never lets a failed assertion halt the rest of the
//! script.
//!
//! `parse` and `pretty` are mutually inverse on abstract syntax: pretty
//! printing emits canonical scalar forms, and re-parsing the printed text
//! yields an equal [`Script`] (source line numbers are not part of script
//! equality).

mod parse;
mod run;

pub use parse::{parse, Diagnostic};
pub use run::{execute, RunResult, StatementOutcome, StatementStatus, Value};

use crate::line_algebra::InvSide;
use crate::ordering::SignClass;
use crate::scalar::{RingDescriptor, Scalar};

/// A parsed, name-resolved script: the model header plus its statements.
#[derive(Debug, Clone)]
pub struct Script {
    pub model: RingDescriptor,
    pub statements: Vec<Statement>,
    /// 1-based source line of each statement, parallel to `statements`.
    /// Not part of script equality, so pretty-printing round-trips.
    source_lines: Vec<u32>,
}

impl Script {
    pub(crate) fn source_line(&self, index: usize) -> u32 {
        self.source_lines.get(index).copied().unwrap_or(0)
    }

    /// Canonical text form; parsing it back yields an equal script.
    pub fn pretty(&self) -> String {
        let mut out = format!("model {}\n", self.model.label());
        for statement in &self.statements {
            out.push_str(&pretty_statement(statement));
            out.push('\n');
        }
        out
    }
}

impl PartialEq for Script {
    fn eq(&self, other: &Self) -> bool {
        self.model == other.model && self.statements == other.statements
    }
}

impl Eq for Script {}

/// One script statement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Statement {
    Point {
        name: String,
        x: Scalar,
        y: Scalar,
    },
    /// `line l = A B`: the join of two declared points.
    LineJoin {
        name: String,
        a: String,
        b: String,
    },
    /// `line l : x = c` or `line l : y = m * x + b`.
    LineForm { name: String, form: LineForm },
    /// `frame f = l O I`.
    Frame {
        name: String,
        line: String,
        origin: String,
        unit: String,
    },
    Add {
        name: String,
        a: String,
        c: String,
        frame: String,
        using: Option<String>,
    },
    Mul {
        name: String,
        a: String,
        c: String,
        frame: String,
        using: Option<String>,
    },
    Neg {
        name: String,
        a: String,
        frame: String,
        using: Option<String>,
    },
    Inv {
        name: String,
        a: String,
        side: InvSide,
        frame: String,
        using: Option<String>,
    },
    /// `project Q = P via d onto m`: slide `P` along the direction of line
    /// `d` onto line `m`.
    Project {
        name: String,
        point: String,
        via: String,
        onto: String,
    },
    Assert { predicate: Predicate },
}

/// Explicit line equation in a `line … : …` statement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LineForm {
    Vertical { c: Scalar },
    Sloped { m: Scalar, b: Scalar },
}

/// The assertable predicates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Predicate {
    Between(String, String, String),
    Collinear(String, String, String),
    Parallel(String, String),
    Eq(String, String),
    Sign {
        point: String,
        sign: SignClass,
        frame: String,
    },
}

fn side_text(side: InvSide) -> &'static str {
    match side {
        InvSide::Left => "left",
        InvSide::Right => "right",
    }
}

fn sign_text(sign: SignClass) -> &'static str {
    match sign {
        SignClass::Positive => "+",
        SignClass::Negative => "-",
        SignClass::Zero => "0",
    }
}

fn using_suffix(using: &Option<String>) -> String {
    match using {
        Some(b) => format!(" using {b}"),
        None => String::new(),
    }
}

/// The canonical text of one statement (no trailing newline).
pub fn pretty_statement(statement: &Statement) -> String {
    match statement {
        Statement::Point { name, x, y } => {
            format!("point {name} = ({}, {})", x.canonical(), y.canonical())
        }
        Statement::LineJoin { name, a, b } => format!("line {name} = {a} {b}"),
        Statement::LineForm { name, form } => match form {
            LineForm::Vertical { c } => format!("line {name} : x = {}", c.canonical()),
            LineForm::Sloped { m, b } => {
                format!("line {name} : y = {} * x + {}", m.canonical(), b.canonical())
            }
        },
        Statement::Frame {
            name,
            line,
            origin,
            unit,
        } => format!("frame {name} = {line} {origin} {unit}"),
        Statement::Add {
            name,
            a,
            c,
            frame,
            using,
        } => format!("add {name} = {a} + {c} in {frame}{}", using_suffix(using)),
        Statement::Mul {
            name,
            a,
            c,
            frame,
            using,
        } => format!("mul {name} = {a} * {c} in {frame}{}", using_suffix(using)),
        Statement::Neg {
            name,
            a,
            frame,
            using,
        } => format!("neg {name} = - {a} in {frame}{}", using_suffix(using)),
        Statement::Inv {
            name,
            a,
            side,
            frame,
            using,
        } => format!(
            "inv {name} = {a} ^-1 {} in {frame}{}",
            side_text(*side),
            using_suffix(using)
        ),
        Statement::Project {
            name,
            point,
            via,
            onto,
        } => format!("project {name} = {point} via {via} onto {onto}"),
        Statement::Assert { predicate } => match predicate {
            Predicate::Between(a, b, c) => format!("assert between {a} {b} {c}"),
            Predicate::Collinear(a, b, c) => format!("assert collinear {a} {b} {c}"),
            Predicate::Parallel(l, m) => format!("assert parallel {l} {m}"),
            Predicate::Eq(x, y) => format!("assert eq {x} {y}"),
            Predicate::Sign { point, sign, frame } => {
                format!("assert sign {point} {} in {frame}", sign_text(*sign))
            }
        },
    }
}
