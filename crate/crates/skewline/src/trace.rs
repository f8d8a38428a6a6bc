//! Construction traces: a machine-readable record of every ruler operation.
//!
//! A trace lists the frame, the operand points, the auxiliary off-line point,
//! each intermediate join/parallel/meet with a label, and the result. Scalars
//! appear in their canonical text forms so the JSON stays exact, round-trips,
//! and can be replayed step by step against the plane model.
//!
//! Schema (version 1):
//! ```json
//! {
//!   "schema_version": 1,
//!   "op": "add" | "sub" | "mul" | "neg" | "inv-left" | "inv-right",
//!   "frame": { "model": "rational", "line": LINE, "origin": POINT, "unit": POINT },
//!   "inputs": { "A": POINT, ... },
//!   "auxiliary_B": POINT,
//!   "steps": [ { "label": "...", "kind": "point" | "line", "value": POINT|LINE } ],
//!   "result": POINT
//! }
//! ```
//! where `POINT` is `{"x": SCALAR, "y": SCALAR}`, `LINE` is
//! `{"kind":"vertical","c":SCALAR}` or `{"kind":"sloped","m":SCALAR,"b":SCALAR}`,
//! and `SCALAR` is a canonical scalar string.

use std::fmt;

use serde_json::{json, Map, Value};
use thiserror::Error;

use crate::plane::{Line, Point};
use crate::scalar::RingDescriptor;

pub const TRACE_SCHEMA_VERSION: u64 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TraceOp {
    Add,
    Sub,
    Mul,
    Neg,
    InvLeft,
    InvRight,
}

impl TraceOp {
    pub fn as_str(&self) -> &'static str {
        match self {
            TraceOp::Add => "add",
            TraceOp::Sub => "sub",
            TraceOp::Mul => "mul",
            TraceOp::Neg => "neg",
            TraceOp::InvLeft => "inv-left",
            TraceOp::InvRight => "inv-right",
        }
    }

    pub fn parse(s: &str) -> Option<TraceOp> {
        Some(match s {
            "add" => TraceOp::Add,
            "sub" => TraceOp::Sub,
            "mul" => TraceOp::Mul,
            "neg" => TraceOp::Neg,
            "inv-left" => TraceOp::InvLeft,
            "inv-right" => TraceOp::InvRight,
            _ => return None,
        })
    }
}

impl fmt::Display for TraceOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One recorded object: an intermediate line or point.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceObject {
    Point(Point),
    Line(Line),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TraceStep {
    pub label: String,
    pub object: TraceObject,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionTrace {
    pub op: TraceOp,
    pub ring: RingDescriptor,
    pub frame_line: Line,
    pub origin: Point,
    pub unit: Point,
    /// Operand names with their points, in operand order.
    pub inputs: Vec<(String, Point)>,
    pub auxiliary_b: Point,
    pub steps: Vec<TraceStep>,
    pub result: Point,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("invalid trace JSON: {0}")]
    Json(String),
    #[error("trace does not match the schema: {0}")]
    Schema(String),
}

fn point_value(p: &Point) -> Value {
    json!({ "x": p.x.canonical(), "y": p.y.canonical() })
}

fn line_value(l: &Line) -> Value {
    match l {
        Line::Vertical { c } => json!({ "kind": "vertical", "c": c.canonical() }),
        Line::Sloped { m, b } => {
            json!({ "kind": "sloped", "m": m.canonical(), "b": b.canonical() })
        }
    }
}

impl ConstructionTrace {
    pub fn to_value(&self) -> Value {
        let mut inputs = Map::new();
        for (name, p) in &self.inputs {
            inputs.insert(name.clone(), point_value(p));
        }
        let steps: Vec<Value> = self
            .steps
            .iter()
            .map(|s| match &s.object {
                TraceObject::Point(p) => {
                    json!({ "label": s.label, "kind": "point", "value": point_value(p) })
                }
                TraceObject::Line(l) => {
                    json!({ "label": s.label, "kind": "line", "value": line_value(l) })
                }
            })
            .collect();
        json!({
            "schema_version": TRACE_SCHEMA_VERSION,
            "op": self.op.as_str(),
            "frame": {
                "model": self.ring.label(),
                "line": line_value(&self.frame_line),
                "origin": point_value(&self.origin),
                "unit": point_value(&self.unit),
            },
            "inputs": Value::Object(inputs),
            "auxiliary_B": point_value(&self.auxiliary_b),
            "steps": steps,
            "result": point_value(&self.result),
        })
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("valid JSON value")
    }

    pub fn from_json_str(text: &str) -> Result<ConstructionTrace, TraceError> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| TraceError::Json(e.to_string()))?;
        Self::from_value(&value)
    }

    pub fn from_value(value: &Value) -> Result<ConstructionTrace, TraceError> {
        let obj = as_object(value, "trace")?;
        let version = field(obj, "schema_version")?
            .as_u64()
            .ok_or_else(|| schema("schema_version must be an integer"))?;
        if version != TRACE_SCHEMA_VERSION {
            return Err(schema(&format!(
                "unsupported schema_version {version} (expected {TRACE_SCHEMA_VERSION})"
            )));
        }
        let op_str = str_field(obj, "op")?;
        let op = TraceOp::parse(&op_str)
            .ok_or_else(|| schema(&format!("unknown op `{op_str}`")))?;

        let frame = as_object(field(obj, "frame")?, "frame")?;
        let model_label = str_field(frame, "model")?;
        let ring = RingDescriptor::parse_label(&model_label)
            .map_err(|e| schema(&format!("bad frame.model: {e}")))?;
        let frame_line = decode_line(field(frame, "line")?, ring, "frame.line")?;
        let origin = decode_point(field(frame, "origin")?, ring, "frame.origin")?;
        let unit = decode_point(field(frame, "unit")?, ring, "frame.unit")?;

        let inputs_obj = as_object(field(obj, "inputs")?, "inputs")?;
        let mut inputs = Vec::with_capacity(inputs_obj.len());
        for (name, v) in inputs_obj {
            inputs.push((name.clone(), decode_point(v, ring, &format!("inputs.{name}"))?));
        }

        let auxiliary_b = decode_point(field(obj, "auxiliary_B")?, ring, "auxiliary_B")?;

        let steps_value = field(obj, "steps")?
            .as_array()
            .ok_or_else(|| schema("steps must be an array"))?;
        let mut steps = Vec::with_capacity(steps_value.len());
        for (i, sv) in steps_value.iter().enumerate() {
            let so = as_object(sv, &format!("steps[{i}]"))?;
            let label = str_field(so, "label")?;
            let kind = str_field(so, "kind")?;
            let value_field = field(so, "value")?;
            let object = match kind.as_str() {
                "point" => TraceObject::Point(decode_point(
                    value_field,
                    ring,
                    &format!("steps[{i}].value"),
                )?),
                "line" => TraceObject::Line(decode_line(
                    value_field,
                    ring,
                    &format!("steps[{i}].value"),
                )?),
                other => return Err(schema(&format!("steps[{i}] has unknown kind `{other}`"))),
            };
            steps.push(TraceStep { label, object });
        }

        let result = decode_point(field(obj, "result")?, ring, "result")?;

        Ok(ConstructionTrace {
            op,
            ring,
            frame_line,
            origin,
            unit,
            inputs,
            auxiliary_b,
            steps,
            result,
        })
    }

    /// Looks up a recorded step by label.
    pub fn step(&self, label: &str) -> Option<&TraceObject> {
        self.steps
            .iter()
            .find(|s| s.label == label)
            .map(|s| &s.object)
    }
}

/// Structural validation without constructing the typed trace; the error
/// string names the offending field.
pub fn validate_trace_value(value: &Value) -> Result<(), TraceError> {
    ConstructionTrace::from_value(value).map(|_| ())
}

fn schema(msg: &str) -> TraceError {
    TraceError::Schema(msg.to_string())
}

fn as_object<'v>(v: &'v Value, what: &str) -> Result<&'v Map<String, Value>, TraceError> {
    v.as_object()
        .ok_or_else(|| schema(&format!("{what} must be an object")))
}

fn field<'v>(obj: &'v Map<String, Value>, name: &str) -> Result<&'v Value, TraceError> {
    obj.get(name)
        .ok_or_else(|| schema(&format!("missing field `{name}`")))
}

fn str_field(obj: &Map<String, Value>, name: &str) -> Result<String, TraceError> {
    field(obj, name)?
        .as_str()
        .map(str::to_string)
        .ok_or_else(|| schema(&format!("field `{name}` must be a string")))
}

fn decode_scalar(
    v: &Value,
    ring: RingDescriptor,
    what: &str,
) -> Result<crate::scalar::Scalar, TraceError> {
    let s = v
        .as_str()
        .ok_or_else(|| schema(&format!("{what} must be a scalar string")))?;
    ring.parse_scalar(s)
        .map_err(|e| schema(&format!("{what}: {e}")))
}

fn decode_point(v: &Value, ring: RingDescriptor, what: &str) -> Result<Point, TraceError> {
    let obj = as_object(v, what)?;
    let x = decode_scalar(field(obj, "x")?, ring, &format!("{what}.x"))?;
    let y = decode_scalar(field(obj, "y")?, ring, &format!("{what}.y"))?;
    Ok(Point::new(x, y))
}

fn decode_line(v: &Value, ring: RingDescriptor, what: &str) -> Result<Line, TraceError> {
    let obj = as_object(v, what)?;
    let kind = str_field(obj, "kind")?;
    match kind.as_str() {
        "vertical" => Ok(Line::Vertical {
            c: decode_scalar(field(obj, "c")?, ring, &format!("{what}.c"))?,
        }),
        "sloped" => Ok(Line::Sloped {
            m: decode_scalar(field(obj, "m")?, ring, &format!("{what}.m"))?,
            b: decode_scalar(field(obj, "b")?, ring, &format!("{what}.b"))?,
        }),
        other => Err(schema(&format!("{what} has unknown line kind `{other}`"))),
    }
}
