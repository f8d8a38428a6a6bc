//! Line-oriented script parser with spanned diagnostics.
//!
//! Each source line holds at most one statement; `#` starts a comment. The
//! parser recovers per line — a bad line yields one diagnostic and parsing
//! moves on — and resolves names as it goes: every identifier must be
//! declared before use, with the right kind, and redeclaration is an error.
//! Scalar literals are tokenized by delimiter (`,`, `)`, `*`) and handed to
//! the model ring's own literal parser, so each ring's text forms work
//! unchanged inside scripts.

use std::collections::BTreeMap;
use std::fmt;

use crate::line_algebra::InvSide;
use crate::ordering::SignClass;
use crate::scalar::{RingDescriptor, Scalar};

use super::{LineForm, Predicate, Script, Statement};

/// A parse or name-resolution error with a source span (1-based).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Diagnostic {
    pub line: u32,
    pub col: u32,
    pub message: String,
    pub expected: Option<String>,
    pub found: Option<String>,
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "error at {}:{}: {}", self.line, self.col, self.message)?;
        match (&self.expected, &self.found) {
            (Some(e), Some(g)) => write!(f, " (expected {e}, found {g})"),
            (Some(e), None) => write!(f, " (expected {e})"),
            (None, Some(g)) => write!(f, " (found {g})"),
            (None, None) => Ok(()),
        }
    }
}

/// What kind of object a name is bound to, fixed at its declaration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Kind {
    Point,
    Line,
    Frame,
}

impl Kind {
    fn word(self) -> &'static str {
        match self {
            Kind::Point => "point",
            Kind::Line => "line",
            Kind::Frame => "frame",
        }
    }
}

/// Grammar words that cannot be used as names.
const RESERVED: &[&str] = &[
    "model", "point", "line", "frame", "add", "mul", "neg", "inv", "project",
    "assert", "in", "using", "via", "onto", "left", "right", "between",
    "collinear", "parallel", "eq", "sign", "x", "y",
];

/// Parses a script. On failure returns every diagnostic found (at most one
/// per line — parsing recovers at line boundaries).
pub fn parse(text: &str) -> Result<Script, Vec<Diagnostic>> {
    let mut diagnostics: Vec<Diagnostic> = Vec::new();
    let mut model: Option<RingDescriptor> = None;
    let mut statements: Vec<Statement> = Vec::new();
    let mut source_lines: Vec<u32> = Vec::new();
    let mut names: BTreeMap<String, Kind> = BTreeMap::new();
    let mut saw_any = false;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = (idx + 1) as u32;
        let body = strip_comment(raw);
        if body.trim().is_empty() {
            continue;
        }
        saw_any = true;

        if model.is_none() {
            if first_word(body) == Some("model") {
                match parse_header(body, line_no) {
                    Ok(ring) => model = Some(ring),
                    Err(d) => {
                        diagnostics.push(d);
                        // Recover so the rest of the script is still checked.
                        model = Some(RingDescriptor::rational());
                    }
                }
                continue;
            }
            diagnostics.push(Diagnostic {
                line: line_no,
                col: 1,
                message: "script must start with a `model <ring>` header".into(),
                expected: Some("`model rational`, `model gf(p)`, or `model quaternion`".into()),
                found: first_word(body).map(|w| format!("`{w}`")),
            });
            model = Some(RingDescriptor::rational());
            // Fall through: still try the line as a statement.
        }

        let ring = model.expect("model is set before statements");
        let mut cursor = Cursor::new(body, line_no, &ring, &names);
        match cursor.statement() {
            Ok(statement) => {
                if let Some((name, kind)) = declares(&statement) {
                    names.insert(name.to_string(), kind);
                }
                statements.push(statement);
                source_lines.push(line_no);
            }
            Err(d) => diagnostics.push(d),
        }
    }

    if !saw_any {
        diagnostics.push(Diagnostic {
            line: 1,
            col: 1,
            message: "script is empty".into(),
            expected: Some("a `model <ring>` header".into()),
            found: None,
        });
    }

    if diagnostics.is_empty() {
        Ok(Script {
            model: model.expect("non-empty script has a model"),
            statements,
            source_lines,
        })
    } else {
        Err(diagnostics)
    }
}

/// The name and kind a statement declares, if any.
fn declares(statement: &Statement) -> Option<(&str, Kind)> {
    match statement {
        Statement::Point { name, .. } => Some((name, Kind::Point)),
        Statement::LineJoin { name, .. } | Statement::LineForm { name, .. } => {
            Some((name, Kind::Line))
        }
        Statement::Frame { name, .. } => Some((name, Kind::Frame)),
        Statement::Add { name, .. }
        | Statement::Mul { name, .. }
        | Statement::Neg { name, .. }
        | Statement::Inv { name, .. }
        | Statement::Project { name, .. } => Some((name, Kind::Point)),
        Statement::Assert { .. } => None,
    }
}

fn strip_comment(raw: &str) -> &str {
    match raw.find('#') {
        Some(i) => &raw[..i],
        None => raw,
    }
}

fn first_word(body: &str) -> Option<&str> {
    body.split_whitespace().next()
}

fn parse_header(body: &str, line_no: u32) -> Result<RingDescriptor, Diagnostic> {
    let after = body
        .trim_start()
        .strip_prefix("model")
        .expect("caller checked the first word");
    let col = (body.len() - after.len() + 1) as u32;
    let label = after.trim();
    if label.is_empty() {
        return Err(Diagnostic {
            line: line_no,
            col,
            message: "missing model label".into(),
            expected: Some("`rational`, `gf(p)`, or `quaternion`".into()),
            found: Some("end of line".into()),
        });
    }
    RingDescriptor::parse_label(label).map_err(|e| Diagnostic {
        line: line_no,
        col: col + (after.len() - after.trim_start().len()) as u32,
        message: e.to_string(),
        expected: Some("`rational`, `gf(p)`, or `quaternion`".into()),
        found: Some(format!("`{label}`")),
    })
}

/// Character cursor over one comment-stripped source line.
struct Cursor<'a> {
    chars: Vec<char>,
    pos: usize,
    line: u32,
    ring: &'a RingDescriptor,
    names: &'a BTreeMap<String, Kind>,
}

impl<'a> Cursor<'a> {
    fn new(
        body: &str,
        line: u32,
        ring: &'a RingDescriptor,
        names: &'a BTreeMap<String, Kind>,
    ) -> Cursor<'a> {
        Cursor {
            chars: body.chars().collect(),
            pos: 0,
            line,
            ring,
            names,
        }
    }

    fn col(&self) -> u32 {
        self.pos as u32 + 1
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while matches!(self.peek(), Some(c) if c.is_whitespace()) {
            self.pos += 1;
        }
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos >= self.chars.len()
    }

    /// The next whitespace-delimited chunk, for `found:` fields.
    fn lookahead(&mut self) -> String {
        self.skip_ws();
        let rest: String = self.chars[self.pos..]
            .iter()
            .take_while(|c| !c.is_whitespace())
            .collect();
        if rest.is_empty() {
            "end of line".into()
        } else {
            format!("`{rest}`")
        }
    }

    fn error(
        &self,
        col: u32,
        message: impl Into<String>,
        expected: Option<String>,
        found: Option<String>,
    ) -> Diagnostic {
        Diagnostic {
            line: self.line,
            col,
            message: message.into(),
            expected,
            found,
        }
    }

    /// Reads an identifier: `[A-Za-z_][A-Za-z0-9_']*`.
    fn ident(&mut self) -> Option<(String, u32)> {
        self.skip_ws();
        let start = self.pos;
        match self.peek() {
            Some(c) if c.is_ascii_alphabetic() || c == '_' => self.pos += 1,
            _ => return None,
        }
        while matches!(self.peek(), Some(c) if c.is_ascii_alphanumeric() || c == '_' || c == '\'')
        {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        Some((text, start as u32 + 1))
    }

    fn expect_ident(&mut self, what: &str) -> Result<(String, u32), Diagnostic> {
        self.skip_ws();
        let col = self.col();
        let found = self.lookahead();
        self.ident()
            .ok_or_else(|| self.error(col, format!("expected {what}"), None, Some(found)))
    }

    fn expect_char(&mut self, c: char, what: &str) -> Result<(), Diagnostic> {
        self.skip_ws();
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            let col = self.col();
            let found = self.lookahead();
            Err(self.error(col, format!("expected {what}"), Some(format!("`{c}`")), Some(found)))
        }
    }

    /// Consumes the exact keyword `word`.
    fn expect_word(&mut self, word: &str) -> Result<(), Diagnostic> {
        self.skip_ws();
        let col = self.col();
        let found = self.lookahead();
        match self.ident() {
            Some((w, _)) if w == word => Ok(()),
            _ => Err(self.error(
                col,
                format!("expected `{word}`"),
                Some(format!("`{word}`")),
                Some(found),
            )),
        }
    }

    /// Reads a scalar literal: everything up to one of `stops` (or the end of
    /// the line), handed to the model ring's literal parser.
    fn scalar(&mut self, stops: &[char], what: &str) -> Result<Scalar, Diagnostic> {
        self.skip_ws();
        let col = self.col();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if !stops.contains(&c)) {
            self.pos += 1;
        }
        let text: String = self.chars[start..self.pos].iter().collect();
        if text.trim().is_empty() {
            let found = if self.pos >= self.chars.len() {
                "end of line".to_string()
            } else {
                format!("`{}`", self.peek().expect("not at end"))
            };
            return Err(self.error(col, format!("expected {what}"), None, Some(found)));
        }
        self.ring
            .parse_scalar(&text)
            .map_err(|e| self.error(col, e.to_string(), None, Some(format!("`{}`", text.trim()))))
    }

    /// Reads an identifier that must already be bound with kind `kind`.
    fn use_name(&mut self, kind: Kind, what: &str) -> Result<String, Diagnostic> {
        let (name, col) = self.expect_ident(what)?;
        match self.names.get(&name) {
            Some(k) if *k == kind => Ok(name),
            Some(k) => Err(self.error(
                col,
                format!("`{name}` is a {}, not a {}", k.word(), kind.word()),
                Some(format!("a {} name", kind.word())),
                Some(format!("`{name}`")),
            )),
            None => Err(self.error(
                col,
                format!("`{name}` is not defined"),
                Some(format!("a {} name declared earlier", kind.word())),
                Some(format!("`{name}`")),
            )),
        }
    }

    /// Reads the identifier a statement declares; it must be unused.
    fn fresh_name(&mut self, what: &str) -> Result<String, Diagnostic> {
        let (name, col) = self.expect_ident(what)?;
        if RESERVED.contains(&name.as_str()) {
            return Err(self.error(
                col,
                format!("`{name}` is a reserved word"),
                Some(what.to_string()),
                Some(format!("`{name}`")),
            ));
        }
        if let Some(kind) = self.names.get(&name) {
            return Err(self.error(
                col,
                format!("`{name}` is already defined as a {}", kind.word()),
                None,
                None,
            ));
        }
        Ok(name)
    }

    /// Optional trailing `using B`; `B` must be a declared point.
    fn using_clause(&mut self) -> Result<Option<String>, Diagnostic> {
        if self.at_end() {
            return Ok(None);
        }
        let col = self.col();
        let found = self.lookahead();
        match self.ident() {
            Some((w, _)) if w == "using" => {}
            _ => {
                return Err(self.error(
                    col,
                    "expected `using` or end of statement",
                    Some("`using <point>`".into()),
                    Some(found),
                ))
            }
        }
        Ok(Some(self.use_name(Kind::Point, "auxiliary point name")?))
    }

    fn finish(&mut self, statement: Statement) -> Result<Statement, Diagnostic> {
        if self.at_end() {
            Ok(statement)
        } else {
            let col = self.col();
            let rest: String = self.chars[self.pos..].iter().collect();
            Err(self.error(
                col,
                "trailing input after statement",
                Some("end of line".into()),
                Some(format!("`{}`", rest.trim_end())),
            ))
        }
    }

    fn statement(&mut self) -> Result<Statement, Diagnostic> {
        let col = self.col();
        let found = self.lookahead();
        let Some((word, _)) = self.ident() else {
            return Err(self.error(col, "expected a statement", None, Some(found)));
        };
        let statement = match word.as_str() {
            "point" => self.point_statement()?,
            "line" => self.line_statement()?,
            "frame" => self.frame_statement()?,
            "add" => self.binary_statement(BinaryOp::Add)?,
            "mul" => self.binary_statement(BinaryOp::Mul)?,
            "neg" => self.neg_statement()?,
            "inv" => self.inv_statement()?,
            "project" => self.project_statement()?,
            "assert" => self.assert_statement()?,
            other => {
                return Err(self.error(
                    col,
                    format!("unknown statement `{other}`"),
                    Some(
                        "`point`, `line`, `frame`, `add`, `mul`, `neg`, `inv`, \
                         `project`, or `assert`"
                            .into(),
                    ),
                    None,
                ))
            }
        };
        self.finish(statement)
    }

    fn point_statement(&mut self) -> Result<Statement, Diagnostic> {
        let name = self.fresh_name("a new point name")?;
        self.expect_char('=', "`=`")?;
        self.expect_char('(', "`(`")?;
        let x = self.scalar(&[',', ')'], "an x coordinate")?;
        self.expect_char(',', "`,`")?;
        let y = self.scalar(&[')'], "a y coordinate")?;
        self.expect_char(')', "`)`")?;
        Ok(Statement::Point { name, x, y })
    }

    fn line_statement(&mut self) -> Result<Statement, Diagnostic> {
        let name = self.fresh_name("a new line name")?;
        self.skip_ws();
        match self.peek() {
            Some('=') => {
                self.pos += 1;
                let a = self.use_name(Kind::Point, "a point name")?;
                let b = self.use_name(Kind::Point, "a point name")?;
                Ok(Statement::LineJoin { name, a, b })
            }
            Some(':') => {
                self.pos += 1;
                let (axis, axis_col) = self.expect_ident("`x` or `y`")?;
                match axis.as_str() {
                    "x" => {
                        self.expect_char('=', "`=`")?;
                        let c = self.scalar(&[], "a constant")?;
                        Ok(Statement::LineForm {
                            name,
                            form: LineForm::Vertical { c },
                        })
                    }
                    "y" => {
                        self.expect_char('=', "`=`")?;
                        let m = self.scalar(&['*'], "a slope")?;
                        self.expect_char('*', "`*`")?;
                        self.expect_word("x")?;
                        self.expect_char('+', "`+`")?;
                        let b = self.scalar(&[], "an intercept")?;
                        Ok(Statement::LineForm {
                            name,
                            form: LineForm::Sloped { m, b },
                        })
                    }
                    other => Err(self.error(
                        axis_col,
                        format!("unknown line form `{other}`"),
                        Some("`x = c` or `y = m * x + b`".into()),
                        Some(format!("`{other}`")),
                    )),
                }
            }
            _ => {
                let col = self.col();
                let found = self.lookahead();
                Err(self.error(
                    col,
                    "expected `=` (join of two points) or `:` (line equation)",
                    Some("`=` or `:`".into()),
                    Some(found),
                ))
            }
        }
    }

    fn frame_statement(&mut self) -> Result<Statement, Diagnostic> {
        let name = self.fresh_name("a new frame name")?;
        self.expect_char('=', "`=`")?;
        let line = self.use_name(Kind::Line, "a line name")?;
        let origin = self.use_name(Kind::Point, "an origin point name")?;
        let unit = self.use_name(Kind::Point, "a unit point name")?;
        Ok(Statement::Frame {
            name,
            line,
            origin,
            unit,
        })
    }

    fn binary_statement(&mut self, op: BinaryOp) -> Result<Statement, Diagnostic> {
        let name = self.fresh_name("a new point name")?;
        self.expect_char('=', "`=`")?;
        let a = self.use_name(Kind::Point, "a point name")?;
        match op {
            BinaryOp::Add => self.expect_char('+', "`+`")?,
            BinaryOp::Mul => self.expect_char('*', "`*`")?,
        }
        let c = self.use_name(Kind::Point, "a point name")?;
        self.expect_word("in")?;
        let frame = self.use_name(Kind::Frame, "a frame name")?;
        let using = self.using_clause()?;
        Ok(match op {
            BinaryOp::Add => Statement::Add {
                name,
                a,
                c,
                frame,
                using,
            },
            BinaryOp::Mul => Statement::Mul {
                name,
                a,
                c,
                frame,
                using,
            },
        })
    }

    fn neg_statement(&mut self) -> Result<Statement, Diagnostic> {
        let name = self.fresh_name("a new point name")?;
        self.expect_char('=', "`=`")?;
        self.expect_char('-', "`-`")?;
        let a = self.use_name(Kind::Point, "a point name")?;
        self.expect_word("in")?;
        let frame = self.use_name(Kind::Frame, "a frame name")?;
        let using = self.using_clause()?;
        Ok(Statement::Neg {
            name,
            a,
            frame,
            using,
        })
    }

    fn inv_statement(&mut self) -> Result<Statement, Diagnostic> {
        let name = self.fresh_name("a new point name")?;
        self.expect_char('=', "`=`")?;
        let a = self.use_name(Kind::Point, "a point name")?;
        self.expect_char('^', "`^-1`")?;
        self.expect_char('-', "`^-1`")?;
        self.expect_char('1', "`^-1`")?;
        let (side_word, side_col) = self.expect_ident("`left` or `right`")?;
        let side = match side_word.as_str() {
            "left" => InvSide::Left,
            "right" => InvSide::Right,
            other => {
                return Err(self.error(
                    side_col,
                    format!("unknown inverse side `{other}`"),
                    Some("`left` or `right`".into()),
                    Some(format!("`{other}`")),
                ))
            }
        };
        self.expect_word("in")?;
        let frame = self.use_name(Kind::Frame, "a frame name")?;
        let using = self.using_clause()?;
        Ok(Statement::Inv {
            name,
            a,
            side,
            frame,
            using,
        })
    }

    fn project_statement(&mut self) -> Result<Statement, Diagnostic> {
        let name = self.fresh_name("a new point name")?;
        self.expect_char('=', "`=`")?;
        let point = self.use_name(Kind::Point, "a point name")?;
        self.expect_word("via")?;
        let via = self.use_name(Kind::Line, "a direction line name")?;
        self.expect_word("onto")?;
        let onto = self.use_name(Kind::Line, "a target line name")?;
        Ok(Statement::Project {
            name,
            point,
            via,
            onto,
        })
    }

    fn assert_statement(&mut self) -> Result<Statement, Diagnostic> {
        let (word, col) = self.expect_ident("a predicate")?;
        let predicate = match word.as_str() {
            "between" => Predicate::Between(
                self.use_name(Kind::Point, "a point name")?,
                self.use_name(Kind::Point, "a point name")?,
                self.use_name(Kind::Point, "a point name")?,
            ),
            "collinear" => Predicate::Collinear(
                self.use_name(Kind::Point, "a point name")?,
                self.use_name(Kind::Point, "a point name")?,
                self.use_name(Kind::Point, "a point name")?,
            ),
            "parallel" => Predicate::Parallel(
                self.use_name(Kind::Line, "a line name")?,
                self.use_name(Kind::Line, "a line name")?,
            ),
            "eq" => {
                let (first, first_col) = self.expect_ident("a name")?;
                let Some(first_kind) = self.names.get(&first).copied() else {
                    return Err(self.error(
                        first_col,
                        format!("`{first}` is not defined"),
                        Some("a name declared earlier".into()),
                        Some(format!("`{first}`")),
                    ));
                };
                let second = self.use_name(first_kind, &format!("a {} name", first_kind.word()))?;
                Predicate::Eq(first, second)
            }
            "sign" => {
                let point = self.use_name(Kind::Point, "a point name")?;
                self.skip_ws();
                let sign_col = self.col();
                let sign = match self.peek() {
                    Some('+') => SignClass::Positive,
                    Some('-') => SignClass::Negative,
                    Some('0') => SignClass::Zero,
                    _ => {
                        let found = self.lookahead();
                        return Err(self.error(
                            sign_col,
                            "expected a sign",
                            Some("`+`, `-`, or `0`".into()),
                            Some(found),
                        ));
                    }
                };
                self.pos += 1;
                self.expect_word("in")?;
                let frame = self.use_name(Kind::Frame, "a frame name")?;
                Predicate::Sign { point, sign, frame }
            }
            other => {
                return Err(self.error(
                    col,
                    format!("unknown predicate `{other}`"),
                    Some("`between`, `collinear`, `parallel`, `eq`, or `sign`".into()),
                    Some(format!("`{other}`")),
                ))
            }
        };
        Ok(Statement::Assert { predicate })
    }
}

enum BinaryOp {
    Add,
    Mul,
}
