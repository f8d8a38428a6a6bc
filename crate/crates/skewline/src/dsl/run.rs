//! Script execution.
//!
//! `execute` walks the statements in order against an environment of named
//! points, lines, and frames. Every statement produces a recorded outcome:
//! a binding, an assertion verdict, a failure (construction errors,
//! predicates the model cannot express), or a skip when an input failed
//! earlier. Nothing halts the run — later statements that do not depend on a
//! failed one still execute — and nothing panics on script-level mistakes.
//!
//! Runs are deterministic in `(script, seed)`: the seed only picks default
//! auxiliary points (a `using` clause overrides it), and every construction
//! is recorded as a [`ConstructionTrace`] in statement order.

use std::collections::BTreeMap;

use crate::line_algebra::Frame;
use crate::ordering::{self, OrderError};
use crate::plane::{self, Intersection, Line, Point};
use crate::scalar::{RingDescriptor, Scalar};
use crate::trace::ConstructionTrace;

use super::{pretty_statement, sign_text, LineForm, Predicate, Script, Statement};

/// A bound script object.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Value {
    Point(Point),
    Line(Line),
    Frame(Frame),
}

impl Value {
    fn kind_word(&self) -> &'static str {
        match self {
            Value::Point(_) => "point",
            Value::Line(_) => "line",
            Value::Frame(_) => "frame",
        }
    }

    /// Human-readable rendering, used in assertion details and run reports.
    pub fn text(&self) -> String {
        match self {
            Value::Point(p) => p.to_string(),
            Value::Line(l) => l.to_string(),
            Value::Frame(f) => {
                format!("frame(O = {}, I = {} on {})", f.origin(), f.unit(), f.line())
            }
        }
    }
}

/// What happened to one statement.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StatementStatus {
    /// The statement bound `name` to `value`.
    Bound { name: String, value: Value },
    /// An assertion was evaluated.
    Asserted { passed: bool, detail: String },
    /// The statement itself failed (degenerate input, construction error,
    /// or a predicate the model cannot express).
    Failed { message: String },
    /// An input binding is missing because its statement failed earlier.
    Skipped { missing: String },
}

/// One executed statement: its source line, canonical text, and status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatementOutcome {
    pub line: u32,
    pub rendered: String,
    pub status: StatementStatus,
}

/// The record of a whole run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RunResult {
    pub model: RingDescriptor,
    pub outcomes: Vec<StatementOutcome>,
    /// Traces of the framed constructions (`add`, `mul`, `neg`, `inv`), in
    /// execution order.
    pub traces: Vec<ConstructionTrace>,
    /// Final environment.
    pub bindings: BTreeMap<String, Value>,
}

impl RunResult {
    /// True when every statement bound its name and every assertion held.
    pub fn passed(&self) -> bool {
        self.outcomes.iter().all(|o| {
            matches!(
                &o.status,
                StatementStatus::Bound { .. } | StatementStatus::Asserted { passed: true, .. }
            )
        })
    }

    pub fn last_trace(&self) -> Option<&ConstructionTrace> {
        self.traces.last()
    }

    /// Failed or skipped statements and failed assertions, rendered for
    /// reporting.
    pub fn problems(&self) -> Vec<String> {
        self.outcomes
            .iter()
            .filter_map(|o| match &o.status {
                StatementStatus::Bound { .. } => None,
                StatementStatus::Asserted { passed: true, .. } => None,
                StatementStatus::Asserted { passed: false, detail } => Some(format!(
                    "line {}: assertion failed: {} ({detail})",
                    o.line, o.rendered
                )),
                StatementStatus::Failed { message } => {
                    Some(format!("line {}: {}: {message}", o.line, o.rendered))
                }
                StatementStatus::Skipped { missing } => Some(format!(
                    "line {}: skipped (needs `{missing}`, which failed earlier)",
                    o.line
                )),
            })
            .collect()
    }
}

/// Runs a script. The seed picks default auxiliary points for constructions
/// without a `using` clause; results are independent of that choice, so the
/// seed never changes what a run computes, only how it gets there.
pub fn execute(script: &Script, seed: u64) -> RunResult {
    let mut exec = Exec {
        ring: script.model,
        seed,
        env: BTreeMap::new(),
        traces: Vec::new(),
    };
    let mut outcomes = Vec::with_capacity(script.statements.len());
    for (index, statement) in script.statements.iter().enumerate() {
        let status = exec.run_statement(statement);
        if let StatementStatus::Bound { name, value } = &status {
            exec.env.insert(name.clone(), value.clone());
        }
        outcomes.push(StatementOutcome {
            line: script.source_line(index),
            rendered: pretty_statement(statement),
            status,
        });
    }
    RunResult {
        model: script.model,
        outcomes,
        traces: exec.traces,
        bindings: exec.env,
    }
}

struct Exec {
    ring: RingDescriptor,
    seed: u64,
    env: BTreeMap<String, Value>,
    traces: Vec<ConstructionTrace>,
}

/// Early-exit sugar: a dependency error becomes the statement's status.
macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(status) => return status,
        }
    };
}

impl Exec {
    fn lookup(&self, name: &str) -> Result<&Value, StatementStatus> {
        self.env.get(name).ok_or_else(|| StatementStatus::Skipped {
            missing: name.to_string(),
        })
    }

    fn point(&self, name: &str) -> Result<Point, StatementStatus> {
        match self.lookup(name)? {
            Value::Point(p) => Ok(p.clone()),
            other => Err(wrong_kind(name, other, "point")),
        }
    }

    fn line(&self, name: &str) -> Result<Line, StatementStatus> {
        match self.lookup(name)? {
            Value::Line(l) => Ok(l.clone()),
            other => Err(wrong_kind(name, other, "line")),
        }
    }

    fn frame(&self, name: &str) -> Result<Frame, StatementStatus> {
        match self.lookup(name)? {
            Value::Frame(f) => Ok(f.clone()),
            other => Err(wrong_kind(name, other, "frame")),
        }
    }

    /// The scalars in a parsed script share the model ring by construction;
    /// this guards hand-built scripts so execution still cannot panic.
    fn guard_scalar(&self, s: &Scalar) -> Result<(), StatementStatus> {
        if s.ring() == self.ring.kind() {
            Ok(())
        } else {
            Err(StatementStatus::Failed {
                message: format!(
                    "scalar {} belongs to {}, but the script model is {}",
                    s.canonical(),
                    s.ring(),
                    self.ring.kind()
                ),
            })
        }
    }

    /// The auxiliary point for a framed construction: the `using` point if
    /// given, else a deterministic seed-picked off-line point.
    fn auxiliary(
        &self,
        frame: &Frame,
        using: &Option<String>,
    ) -> Result<Point, StatementStatus> {
        match using {
            Some(name) => self.point(name),
            None => Ok(frame.choose_auxiliary(self.seed)),
        }
    }

    fn bind_construction(
        &mut self,
        name: &str,
        built: Result<(Point, ConstructionTrace), crate::line_algebra::ConstructError>,
    ) -> StatementStatus {
        match built {
            Ok((point, trace)) => {
                self.traces.push(trace);
                StatementStatus::Bound {
                    name: name.to_string(),
                    value: Value::Point(point),
                }
            }
            Err(e) => StatementStatus::Failed {
                message: e.to_string(),
            },
        }
    }

    fn run_statement(&mut self, statement: &Statement) -> StatementStatus {
        match statement {
            Statement::Point { name, x, y } => {
                try_status!(self.guard_scalar(x));
                try_status!(self.guard_scalar(y));
                StatementStatus::Bound {
                    name: name.clone(),
                    value: Value::Point(Point::new(x.clone(), y.clone())),
                }
            }
            Statement::LineJoin { name, a, b } => {
                let pa = try_status!(self.point(a));
                let pb = try_status!(self.point(b));
                match Line::through(&pa, &pb) {
                    Ok(line) => StatementStatus::Bound {
                        name: name.clone(),
                        value: Value::Line(line),
                    },
                    Err(e) => StatementStatus::Failed {
                        message: format!("cannot join `{a}` and `{b}`: {e}"),
                    },
                }
            }
            Statement::LineForm { name, form } => {
                let line = match form {
                    LineForm::Vertical { c } => {
                        try_status!(self.guard_scalar(c));
                        Line::Vertical { c: c.clone() }
                    }
                    LineForm::Sloped { m, b } => {
                        try_status!(self.guard_scalar(m));
                        try_status!(self.guard_scalar(b));
                        Line::Sloped {
                            m: m.clone(),
                            b: b.clone(),
                        }
                    }
                };
                StatementStatus::Bound {
                    name: name.clone(),
                    value: Value::Line(line),
                }
            }
            Statement::Frame {
                name,
                line,
                origin,
                unit,
            } => {
                let l = try_status!(self.line(line));
                let o = try_status!(self.point(origin));
                let i = try_status!(self.point(unit));
                match Frame::new(l, o, i) {
                    Ok(frame) => StatementStatus::Bound {
                        name: name.clone(),
                        value: Value::Frame(frame),
                    },
                    Err(e) => StatementStatus::Failed {
                        message: e.to_string(),
                    },
                }
            }
            Statement::Add {
                name,
                a,
                c,
                frame,
                using,
            } => {
                let f = try_status!(self.frame(frame));
                let pa = try_status!(self.point(a));
                let pc = try_status!(self.point(c));
                let aux = try_status!(self.auxiliary(&f, using));
                self.bind_construction(name, f.add_with(&pa, &pc, &aux))
            }
            Statement::Mul {
                name,
                a,
                c,
                frame,
                using,
            } => {
                let f = try_status!(self.frame(frame));
                let pa = try_status!(self.point(a));
                let pc = try_status!(self.point(c));
                let aux = try_status!(self.auxiliary(&f, using));
                self.bind_construction(name, f.mul_with(&pa, &pc, &aux))
            }
            Statement::Neg {
                name,
                a,
                frame,
                using,
            } => {
                let f = try_status!(self.frame(frame));
                let pa = try_status!(self.point(a));
                let aux = try_status!(self.auxiliary(&f, using));
                self.bind_construction(name, f.neg_with(&pa, &aux))
            }
            Statement::Inv {
                name,
                a,
                side,
                frame,
                using,
            } => {
                let f = try_status!(self.frame(frame));
                let pa = try_status!(self.point(a));
                let aux = try_status!(self.auxiliary(&f, using));
                self.bind_construction(name, f.inv_with(&pa, *side, &aux))
            }
            Statement::Project {
                name,
                point,
                via,
                onto,
            } => {
                let p = try_status!(self.point(point));
                let d = try_status!(self.line(via));
                let target = try_status!(self.line(onto));
                match Line::intersect(&d.parallel_through(&p), &target) {
                    Intersection::At(q) => StatementStatus::Bound {
                        name: name.clone(),
                        value: Value::Point(q),
                    },
                    Intersection::Coincident => StatementStatus::Failed {
                        message: format!(
                            "`{point}` already lies on `{onto}` along `{via}`: \
                             the moved line coincides with the target"
                        ),
                    },
                    Intersection::Disjoint => StatementStatus::Failed {
                        message: format!(
                            "`{via}` is parallel to `{onto}`: the projection never lands"
                        ),
                    },
                }
            }
            Statement::Assert { predicate } => self.run_assert(predicate),
        }
    }

    fn run_assert(&self, predicate: &Predicate) -> StatementStatus {
        match predicate {
            Predicate::Between(a, b, c) => {
                let pa = try_status!(self.point(a));
                let pb = try_status!(self.point(b));
                let pc = try_status!(self.point(c));
                if pa == pc {
                    return StatementStatus::Asserted {
                        passed: false,
                        detail: format!("`{a}` and `{c}` coincide; betweenness needs distinct endpoints"),
                    };
                }
                let carrier = Line::through(&pa, &pc).expect("endpoints are distinct");
                if !carrier.contains(&pb) {
                    return StatementStatus::Asserted {
                        passed: false,
                        detail: format!("`{b}` is not on the line through `{a}` and `{c}`"),
                    };
                }
                match ordering::between(&carrier, &pa, &pb, &pc) {
                    Ok(holds) => StatementStatus::Asserted {
                        passed: holds,
                        detail: if holds {
                            format!("[{a}, {b}, {c}] holds")
                        } else {
                            format!("[{a}, {b}, {c}] does not hold")
                        },
                    },
                    Err(e @ OrderError::Unordered(_)) => StatementStatus::Failed {
                        message: format!("cannot evaluate betweenness: {e}"),
                    },
                    Err(e) => StatementStatus::Failed {
                        message: e.to_string(),
                    },
                }
            }
            Predicate::Collinear(a, b, c) => {
                let pa = try_status!(self.point(a));
                let pb = try_status!(self.point(b));
                let pc = try_status!(self.point(c));
                let holds = plane::collinear(&pa, &pb, &pc);
                StatementStatus::Asserted {
                    passed: holds,
                    detail: if holds {
                        "the points are collinear".into()
                    } else {
                        "the points are not collinear".into()
                    },
                }
            }
            Predicate::Parallel(l, m) => {
                let ll = try_status!(self.line(l));
                let lm = try_status!(self.line(m));
                let holds = ll.parallel_to(&lm);
                StatementStatus::Asserted {
                    passed: holds,
                    detail: if holds {
                        "the lines share a direction".into()
                    } else {
                        "the lines meet".into()
                    },
                }
            }
            Predicate::Eq(x, y) => {
                let vx = try_status!(self.lookup(x)).clone();
                let vy = try_status!(self.lookup(y)).clone();
                if vx.kind_word() != vy.kind_word() {
                    return StatementStatus::Failed {
                        message: format!(
                            "`{x}` is a {} but `{y}` is a {}; only like kinds compare",
                            vx.kind_word(),
                            vy.kind_word()
                        ),
                    };
                }
                let passed = vx == vy;
                StatementStatus::Asserted {
                    passed,
                    detail: if passed {
                        format!("both are {}", vx.text())
                    } else {
                        format!("left is {}, right is {}", vx.text(), vy.text())
                    },
                }
            }
            Predicate::Sign { point, sign, frame } => {
                let p = try_status!(self.point(point));
                let f = try_status!(self.frame(frame));
                match ordering::sign_classify(&f, &p) {
                    Ok(actual) => StatementStatus::Asserted {
                        passed: actual == *sign,
                        detail: format!("sign of `{point}` is {}", sign_text(actual)),
                    },
                    Err(e @ OrderError::Unordered(_)) => StatementStatus::Failed {
                        message: format!("cannot evaluate sign: {e}"),
                    },
                    Err(e) => StatementStatus::Asserted {
                        passed: false,
                        detail: e.to_string(),
                    },
                }
            }
        }
    }
}

fn wrong_kind(name: &str, value: &Value, wanted: &str) -> StatementStatus {
    StatementStatus::Failed {
        message: format!(
            "`{name}` is bound to a {}, but a {wanted} is needed",
            value.kind_word()
        ),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dsl::parse;
    use crate::line_algebra::InvSide;
    use crate::trace::{validate_trace_value, TraceOp};

    fn run(text: &str, seed: u64) -> RunResult {
        let script = parse(text).unwrap_or_else(|ds| {
            panic!(
                "script should parse:\n{}",
                ds.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("\n")
            )
        });
        execute(&script, seed)
    }

    fn bound_point(result: &RunResult, name: &str) -> Point {
        match result.bindings.get(name) {
            Some(Value::Point(p)) => p.clone(),
            other => panic!("`{name}` should be a bound point, got {other:?}"),
        }
    }

    const XY_HEADER: &str = "point O = (0, 0)\npoint I = (1, 0)\nline axis = O I\nframe f = axis O I\n";

    #[test]
    fn rational_addition_matches_the_parameter_oracle_and_traces_validate() {
        let text = format!(
            "model rational\n{XY_HEADER}point A = (2/3, 0)\npoint C = (-1/4, 0)\nadd E = A + C in f\n"
        );
        let result = run(&text, 0);
        assert!(result.passed(), "{:?}", result.problems());

        let ring = RingDescriptor::rational();
        let e = bound_point(&result, "E");
        // Oracle: addition on the unit x-axis frame is coordinate addition.
        assert_eq!(e, Point::new(Scalar::rational(5, 12), ring.int(0)));

        assert_eq!(result.traces.len(), 1);
        let trace = result.last_trace().unwrap();
        assert_eq!(trace.op, TraceOp::Add);
        assert_eq!(trace.result, e);
        validate_trace_value(&trace.to_value()).unwrap();
    }

    #[test]
    fn prime_field_multiplication_lands_on_the_reduced_product() {
        let text = format!(
            "model gf(7)\n{XY_HEADER}point A = (3, 0)\npoint C = (4, 0)\nmul F = A * C in f\nassert sign F 0 in f\n"
        );
        let result = run(&text, 0);
        // 3 * 4 = 12 = 5 mod 7; the sign assert must fail the run over gf(7).
        let ring = RingDescriptor::parse_label("gf(7)").unwrap();
        assert_eq!(bound_point(&result, "F"), Point::new(ring.int(5), ring.int(0)));
        assert!(!result.passed(), "sign is unavailable over a finite field");
        let failed: Vec<_> = result
            .outcomes
            .iter()
            .filter(|o| matches!(o.status, StatementStatus::Failed { .. }))
            .collect();
        assert_eq!(failed.len(), 1);
        assert!(matches!(
            &failed[0].status,
            StatementStatus::Failed { message } if message.contains("order is not available")
        ));
    }

    #[test]
    fn quaternion_multiplication_keeps_the_factor_order() {
        let text = format!(
            "model quaternion\n{XY_HEADER}point A = (i, 0)\npoint C = (j, 0)\n\
             mul P = A * C in f\npoint K = (k, 0)\nassert eq P K\n"
        );
        assert!(run(&text, 0).passed());

        let flipped = format!(
            "model quaternion\n{XY_HEADER}point A = (i, 0)\npoint C = (j, 0)\n\
             mul P = C * A in f\npoint K = (-1k, 0)\nassert eq P K\n"
        );
        assert!(run(&flipped, 0).passed(), "j * i = -k");
    }

    #[test]
    fn assertions_fail_without_halting_the_run() {
        let text = "model rational\n\
                    point O = (0, 0)\n\
                    point I = (1, 0)\n\
                    line axis = O I\n\
                    frame f = axis O I\n\
                    assert eq O I\n\
                    add E = O + I in f\n\
                    assert between O E I\n";
        let result = run(text, 0);
        assert!(!result.passed());
        // The failed eq is recorded…
        assert!(matches!(
            &result.outcomes[4].status,
            StatementStatus::Asserted { passed: false, .. }
        ));
        // …and the later statements still ran: E = 0 + 1 = I, which is not
        // strictly between O and I.
        assert_eq!(bound_point(&result, "E"), bound_point(&result, "I"));
        assert!(matches!(
            &result.outcomes[6].status,
            StatementStatus::Asserted { passed: false, detail } if detail.contains("does not hold")
        ));
        assert_eq!(result.problems().len(), 2);
    }

    #[test]
    fn a_failed_construction_skips_its_dependents_only() {
        let text = "model rational\n\
                    point O = (0, 0)\n\
                    point I = (1, 0)\n\
                    line axis = O I\n\
                    frame g = axis O O\n\
                    add E = O + I in g\n\
                    point A = (2, 0)\n\
                    assert collinear O I A\n";
        let result = run(text, 0);
        assert!(matches!(
            &result.outcomes[3].status,
            StatementStatus::Failed { .. }
        ), "a frame with O = I is degenerate");
        assert!(matches!(
            &result.outcomes[4].status,
            StatementStatus::Skipped { missing } if missing == "g"
        ));
        // Independent statements still run.
        assert!(matches!(
            &result.outcomes[6].status,
            StatementStatus::Asserted { passed: true, .. }
        ));
    }

    #[test]
    fn using_pins_the_auxiliary_point_and_seeds_only_move_defaults() {
        let pinned = format!(
            "model rational\n{XY_HEADER}point B = (3, 7)\npoint A = (2, 0)\nadd E = A + I in f using B\n"
        );
        let result = run(&pinned, 0);
        assert!(result.passed(), "{:?}", result.problems());
        let ring = RingDescriptor::rational();
        let trace = result.last_trace().unwrap();
        assert_eq!(trace.auxiliary_b, Point::new(ring.int(3), ring.int(7)));

        let unpinned = format!("model rational\n{XY_HEADER}point A = (2, 0)\nadd E = A + I in f\n");
        let a = execute(&parse(&unpinned).unwrap(), 0);
        let b = execute(&parse(&unpinned).unwrap(), 0);
        assert_eq!(a, b, "same script and seed, same run");
        let c = execute(&parse(&unpinned).unwrap(), 3);
        assert_ne!(
            a.last_trace().unwrap().auxiliary_b,
            c.last_trace().unwrap().auxiliary_b,
            "different seeds pick different default auxiliaries"
        );
        assert_eq!(
            bound_point(&a, "E"),
            bound_point(&c, "E"),
            "the sum does not depend on the auxiliary"
        );
    }

    #[test]
    fn an_on_line_using_point_fails_the_construction() {
        let text = format!(
            "model rational\n{XY_HEADER}point B = (5, 0)\npoint A = (2, 0)\nadd E = A + I in f using B\n"
        );
        let result = run(&text, 0);
        assert!(matches!(
            &result.outcomes[6].status,
            StatementStatus::Failed { message } if message.contains("auxiliary")
        ));
    }

    #[test]
    fn projection_slides_a_point_along_a_direction() {
        let text = "model rational\n\
                    point P = (2, 3)\n\
                    line d : y = 1 * x + 0\n\
                    line target : y = 0 * x + 0\n\
                    line blocked : y = 1 * x + 5\n\
                    project Q = P via d onto target\n\
                    project R = P via d onto blocked\n";
        let result = run(text, 0);
        let ring = RingDescriptor::rational();
        // P - t*(1,1) hits y = 0 at t = 3: Q = (-1, 0).
        assert_eq!(bound_point(&result, "Q"), Point::new(ring.int(-1), ring.int(0)));
        assert!(matches!(
            &result.outcomes[5].status,
            StatementStatus::Failed { message } if message.contains("parallel")
        ));
    }

    #[test]
    fn the_remaining_predicates_report_truthfully() {
        let text = "model rational\n\
                    point O = (0, 0)\n\
                    point I = (1, 0)\n\
                    point M = (1/2, 0)\n\
                    point UP = (0, 4)\n\
                    line axis = O I\n\
                    line other = M UP\n\
                    line v1 : x = 2\n\
                    line v2 : x = 5\n\
                    frame f = axis O I\n\
                    assert between O M I\n\
                    assert collinear O M UP\n\
                    assert parallel v1 v2\n\
                    assert parallel axis v1\n\
                    assert sign M + in f\n\
                    neg N = - I in f\n\
                    assert sign N - in f\n\
                    assert sign O 0 in f\n\
                    assert between M O UP\n";
        let result = run(text, 0);
        let verdicts: Vec<bool> = result
            .outcomes
            .iter()
            .filter_map(|o| match &o.status {
                StatementStatus::Asserted { passed, .. } => Some(*passed),
                _ => None,
            })
            .collect();
        assert_eq!(
            verdicts,
            vec![true, false, true, false, true, true, true, false],
            "{:?}",
            result.problems()
        );
        // The off-carrier between gives a located detail, not an error.
        assert!(matches!(
            &result.outcomes.last().unwrap().status,
            StatementStatus::Asserted { passed: false, detail } if detail.contains("not on the line")
        ));
    }

    #[test]
    fn inversion_scripts_pick_their_side() {
        for (side, word) in [(InvSide::Left, "left"), (InvSide::Right, "right")] {
            let text = format!(
                "model quaternion\n{XY_HEADER}point A = (1+1i+0j+0k, 0)\ninv X = A ^-1 {word} in f\n"
            );
            let result = run(&text, 0);
            assert!(result.passed(), "{:?}", result.problems());
            let trace = result.last_trace().unwrap();
            let expected_op = match side {
                InvSide::Left => TraceOp::InvLeft,
                InvSide::Right => TraceOp::InvRight,
            };
            assert_eq!(trace.op, expected_op);
            // (1+i) * (1/2 - i/2) = 1 either way; both inverses agree.
            let ring = RingDescriptor::quaternion();
            let half_minus = ring.parse_scalar("1/2-1/2i").unwrap();
            assert_eq!(bound_point(&result, "X"), Point::new(half_minus, ring.int(0)));
        }
    }

    #[test]
    fn outcome_lines_point_back_at_the_source() {
        let text = "model rational\n\n# a comment line\npoint A = (1, 2)\nassert eq A A\n";
        let result = run(text, 0);
        assert_eq!(result.outcomes[0].line, 4);
        assert_eq!(result.outcomes[1].line, 5);
        assert_eq!(result.outcomes[0].rendered, "point A = (1, 2)");
    }
}
