//! Ruler-only arithmetic on the points of a line.
//!
//! A [`Frame`] fixes a line together with an origin point `O` and a unit point
//! `I` on it. Sums and products of points on the line are then *constructed*
//! with joins, parallels, and intersections through an auxiliary point `B`
//! off the line — never by adding or multiplying operand coordinates:
//!
//! - addition `A + C`: drop `D` at the corner of the parallelogram guide
//!   (`D` is the meet of the parallel to the frame line through `B` with the
//!   parallel to `join(O,B)` through `A`), then pull `D` back to the line
//!   along the class of `join(C,B)`;
//! - multiplication `A * C`: slide `A` onto `join(O,B)` along the class of
//!   `join(I,B)` (giving `E`), then return along the class of `join(B,C)`.
//!
//! The choice of `B` does not affect results (a consequence of the plane
//! being Desarguesian), subtraction and the two inversions run the same
//! diagrams backwards, and `to_parameter` transports the whole structure onto
//! the scalar ring: it maps these constructions to ordinary `+` and `*`, in
//! that factor order, even over the noncommutative quaternions. Everything
//! returns a [`ConstructionTrace`] recording each intermediate object.

use thiserror::Error;

use crate::plane::{Intersection, Line, PlaneError, Point};
use crate::scalar::{RingDescriptor, Scalar, ScalarError};
use crate::trace::{ConstructionTrace, TraceObject, TraceOp, TraceStep};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructError {
    #[error("origin and unit must be distinct")]
    DegenerateFrame,
    #[error("frame point {0} is not on the frame line")]
    FramePointOffLine(String),
    #[error("operand {0} is not on the frame line")]
    NotOnLine(String),
    #[error("auxiliary point {0} lies on the frame line")]
    AuxiliaryOnLine(String),
    #[error("inverting the origin is undefined")]
    InvertOrigin,
    #[error("construction step `{step}` degenerated: {detail}")]
    Degenerate { step: String, detail: String },
    #[error(transparent)]
    Plane(#[from] PlaneError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// Which inverse `point_inv` constructs.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InvSide {
    /// `X` with `X * A = I`.
    Left,
    /// `X` with `A * X = I`.
    Right,
}

/// A line with a chosen origin and unit point: the stage for the arithmetic.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Frame {
    line: Line,
    origin: Point,
    unit: Point,
}

impl Frame {
    pub fn new(line: Line, origin: Point, unit: Point) -> Result<Frame, ConstructError> {
        if !line.contains(&origin) {
            return Err(ConstructError::FramePointOffLine(origin.to_string()));
        }
        if !line.contains(&unit) {
            return Err(ConstructError::FramePointOffLine(unit.to_string()));
        }
        if origin == unit {
            return Err(ConstructError::DegenerateFrame);
        }
        Ok(Frame { line, origin, unit })
    }

    /// The canonical frame `O = (0,0)`, `I = (1,0)` on the x-axis.
    pub fn unit_x_axis(ring: RingDescriptor) -> Frame {
        let line = Line::Sloped {
            m: ring.zero(),
            b: ring.zero(),
        };
        Frame {
            origin: Point::new(ring.zero(), ring.zero()),
            unit: Point::new(ring.one(), ring.zero()),
            line,
        }
    }

    pub fn line(&self) -> &Line {
        &self.line
    }

    pub fn origin(&self) -> &Point {
        &self.origin
    }

    pub fn unit(&self) -> &Point {
        &self.unit
    }

    pub fn ring(&self) -> RingDescriptor {
        self.origin.x.descriptor()
    }

    pub fn contains(&self, p: &Point) -> bool {
        self.line.contains(p)
    }

    /// A deterministic off-line auxiliary point. A fixed candidate ladder is
    /// rotated by the seed and the first candidate off the frame line wins;
    /// the ladder starts with three non-collinear points, so no line survives
    /// it. Seed 0 tries `(0, 1)` first.
    pub fn choose_auxiliary(&self, seed: u64) -> Point {
        let ring = self.ring();
        let candidates: [(i64, i64); 8] = [
            (0, 1),
            (0, 0),
            (1, 0),
            (0, -1),
            (1, 1),
            (-1, 1),
            (2, 1),
            (1, 2),
        ];
        let n = candidates.len() as u64;
        for k in 0..n {
            let (cx, cy) = candidates[((seed + k) % n) as usize];
            let p = Point::new(ring.int(cx), ring.int(cy));
            if !self.line.contains(&p) {
                return p;
            }
        }
        unreachable!("the candidate ladder contains a non-collinear triple")
    }

    fn check_operand(&self, name: &str, p: &Point) -> Result<(), ConstructError> {
        if self.line.contains(p) {
            Ok(())
        } else {
            Err(ConstructError::NotOnLine(format!("{name} = {p}")))
        }
    }

    fn check_auxiliary(&self, b: &Point) -> Result<(), ConstructError> {
        if self.line.contains(b) {
            Err(ConstructError::AuxiliaryOnLine(b.to_string()))
        } else {
            Ok(())
        }
    }

    fn trace(
        &self,
        op: TraceOp,
        inputs: Vec<(String, Point)>,
        b: &Point,
        rec: Recorder,
        result: &Point,
    ) -> ConstructionTrace {
        ConstructionTrace {
            op,
            ring: self.ring(),
            frame_line: self.line.clone(),
            origin: self.origin.clone(),
            unit: self.unit.clone(),
            inputs,
            auxiliary_b: b.clone(),
            steps: rec.steps,
            result: result.clone(),
        }
    }

    /// `A + C` by construction, with the auxiliary pinned by the caller.
    pub fn add_with(
        &self,
        a: &Point,
        c: &Point,
        b: &Point,
    ) -> Result<(Point, ConstructionTrace), ConstructError> {
        self.check_operand("A", a)?;
        self.check_operand("C", c)?;
        self.check_auxiliary(b)?;
        let mut rec = Recorder::default();
        let d = self.drop_guide_point(a, b, &mut rec)?;
        let join_cb = rec.line("join(C,B)", Line::through(c, b)?);
        let back = rec.line("par(join(C,B),D)", join_cb.parallel_through(&d));
        let e = rec.meet("E", &back, &self.line)?;
        let trace = self.trace(
            TraceOp::Add,
            vec![("A".into(), a.clone()), ("C".into(), c.clone())],
            b,
            rec,
            &e,
        );
        Ok((e, trace))
    }

    /// `A + C` with the default auxiliary (`choose_auxiliary(0)`).
    pub fn add(&self, a: &Point, c: &Point) -> Result<(Point, ConstructionTrace), ConstructError> {
        let b = self.choose_auxiliary(0);
        self.add_with(a, c, &b)
    }

    /// The unique `C` with `A + C = E`, i.e. `E - A`, run as the addition
    /// diagram in reverse.
    pub fn sub_with(
        &self,
        e: &Point,
        a: &Point,
        b: &Point,
    ) -> Result<(Point, ConstructionTrace), ConstructError> {
        let (c, mut trace) =
            self.sub_inner(e, a, b, vec![("E".into(), e.clone()), ("A".into(), a.clone())])?;
        trace.op = TraceOp::Sub;
        Ok((c, trace))
    }

    pub fn sub(&self, e: &Point, a: &Point) -> Result<(Point, ConstructionTrace), ConstructError> {
        let b = self.choose_auxiliary(0);
        self.sub_with(e, a, &b)
    }

    /// `-A`, constructed as `O - A`.
    pub fn neg_with(
        &self,
        a: &Point,
        b: &Point,
    ) -> Result<(Point, ConstructionTrace), ConstructError> {
        let origin = self.origin.clone();
        let (c, mut trace) = self.sub_inner(&origin, a, b, vec![("A".into(), a.clone())])?;
        trace.op = TraceOp::Neg;
        Ok((c, trace))
    }

    pub fn neg(&self, a: &Point) -> Result<(Point, ConstructionTrace), ConstructError> {
        let b = self.choose_auxiliary(0);
        self.neg_with(a, &b)
    }

    fn sub_inner(
        &self,
        e: &Point,
        a: &Point,
        b: &Point,
        inputs: Vec<(String, Point)>,
    ) -> Result<(Point, ConstructionTrace), ConstructError> {
        self.check_operand("E", e)?;
        self.check_operand("A", a)?;
        self.check_auxiliary(b)?;
        let mut rec = Recorder::default();
        let d = self.drop_guide_point(a, b, &mut rec)?;
        // d is off the frame line while e is on it, so the join exists
        let join_de = rec.line("join(D,E)", Line::through(&d, e)?);
        let back = rec.line("par(join(D,E),B)", join_de.parallel_through(b));
        let c = rec.meet("C", &back, &self.line)?;
        let trace = self.trace(TraceOp::Sub, inputs, b, rec, &c);
        Ok((c, trace))
    }

    /// Shared first half of addition and subtraction: `D` is the meet of the
    /// frame-parallel through `B` with the `join(O,B)`-parallel through `A`.
    fn drop_guide_point(
        &self,
        a: &Point,
        b: &Point,
        rec: &mut Recorder,
    ) -> Result<Point, ConstructError> {
        let join_ob = rec.line("join(O,B)", Line::through(&self.origin, b)?);
        let lift = rec.line("par(line,B)", self.line.parallel_through(b));
        let slide = rec.line("par(join(O,B),A)", join_ob.parallel_through(a));
        rec.meet("D", &lift, &slide)
    }

    /// `A * C` by construction; the factor order is respected, which is
    /// observable over the quaternions.
    pub fn mul_with(
        &self,
        a: &Point,
        c: &Point,
        b: &Point,
    ) -> Result<(Point, ConstructionTrace), ConstructError> {
        self.check_operand("A", a)?;
        self.check_operand("C", c)?;
        self.check_auxiliary(b)?;
        let mut rec = Recorder::default();
        let join_ib = rec.line("join(I,B)", Line::through(&self.unit, b)?);
        let slide = rec.line("par(join(I,B),A)", join_ib.parallel_through(a));
        let join_ob = rec.line("join(O,B)", Line::through(&self.origin, b)?);
        let e = rec.meet("E", &slide, &join_ob)?;
        let join_bc = rec.line("join(B,C)", Line::through(b, c)?);
        let back = rec.line("par(join(B,C),E)", join_bc.parallel_through(&e));
        let f = rec.meet("F", &back, &self.line)?;
        let trace = self.trace(
            TraceOp::Mul,
            vec![("A".into(), a.clone()), ("C".into(), c.clone())],
            b,
            rec,
            &f,
        );
        Ok((f, trace))
    }

    pub fn mul(&self, a: &Point, c: &Point) -> Result<(Point, ConstructionTrace), ConstructError> {
        let b = self.choose_auxiliary(0);
        self.mul_with(a, c, &b)
    }

    /// The multiplicative inverse on the requested side. Both sides agree in a
    /// division ring, but they are *constructed* differently and both paths
    /// are exposed.
    pub fn inv_with(
        &self,
        a: &Point,
        side: InvSide,
        b: &Point,
    ) -> Result<(Point, ConstructionTrace), ConstructError> {
        self.check_operand("A", a)?;
        self.check_auxiliary(b)?;
        if a == &self.origin {
            return Err(ConstructError::InvertOrigin);
        }
        let mut rec = Recorder::default();
        let (x, op) = match side {
            InvSide::Right => {
                // A * X = I: slide A onto join(O,B) as in multiplication, then
                // return through I's direction.
                let join_ib = rec.line("join(I,B)", Line::through(&self.unit, b)?);
                let slide = rec.line("par(join(I,B),A)", join_ib.parallel_through(a));
                let join_ob = rec.line("join(O,B)", Line::through(&self.origin, b)?);
                let e = rec.meet("E", &slide, &join_ob)?;
                // a != O means E is off the frame line, so join(E,I) exists
                let join_ei = rec.line("join(E,I)", Line::through(&e, &self.unit)?);
                let back = rec.line("par(join(E,I),B)", join_ei.parallel_through(b));
                (rec.meet("X", &back, &self.line)?, TraceOp::InvRight)
            }
            InvSide::Left => {
                // X * A = I: find E' on join(O,B) with E' * A = I, then pull
                // E' back to the line through I's slide direction.
                let join_ba = rec.line("join(B,A)", Line::through(b, a)?);
                let slide = rec.line("par(join(B,A),I)", join_ba.parallel_through(&self.unit));
                let join_ob = rec.line("join(O,B)", Line::through(&self.origin, b)?);
                let e2 = rec.meet("E'", &slide, &join_ob)?;
                let join_ib = rec.line("join(I,B)", Line::through(&self.unit, b)?);
                let back = rec.line("par(join(I,B),E')", join_ib.parallel_through(&e2));
                (rec.meet("X", &back, &self.line)?, TraceOp::InvLeft)
            }
        };
        let trace = self.trace(op, vec![("A".into(), a.clone())], b, rec, &x);
        Ok((x, trace))
    }

    pub fn inv(
        &self,
        a: &Point,
        side: InvSide,
    ) -> Result<(Point, ConstructionTrace), ConstructError> {
        let b = self.choose_auxiliary(0);
        self.inv_with(a, side, &b)
    }

    /// The scalar `t` with `P = O + t*(I - O)`; the coordinate transport used
    /// as the oracle against the constructions. Never called by them.
    pub fn to_parameter(&self, p: &Point) -> Result<Scalar, ConstructError> {
        self.check_operand("P", p)?;
        let (pc, oc, ic) = match &self.line {
            Line::Vertical { .. } => (&p.y, &self.origin.y, &self.unit.y),
            Line::Sloped { .. } => (&p.x, &self.origin.x, &self.unit.x),
        };
        let delta = ic - oc;
        // O != I, so delta is invertible
        Ok(&(pc - oc) * &delta.checked_inv().expect("frame points distinct"))
    }

    /// The point `O + t*(I - O)`.
    pub fn from_parameter(&self, t: &Scalar) -> Point {
        let x = &self.origin.x + &(t * &(&self.unit.x - &self.origin.x));
        let y = &self.origin.y + &(t * &(&self.unit.y - &self.origin.y));
        Point::new(x, y)
    }
}

/// Step recorder building the trace while the construction runs.
#[derive(Default)]
struct Recorder {
    steps: Vec<TraceStep>,
}

impl Recorder {
    fn line(&mut self, label: &str, l: Line) -> Line {
        self.steps.push(TraceStep {
            label: label.to_string(),
            object: TraceObject::Line(l.clone()),
        });
        l
    }

    fn point(&mut self, label: &str, p: Point) -> Point {
        self.steps.push(TraceStep {
            label: label.to_string(),
            object: TraceObject::Point(p.clone()),
        });
        p
    }

    fn meet(&mut self, label: &str, l1: &Line, l2: &Line) -> Result<Point, ConstructError> {
        match Line::intersect(l1, l2) {
            Intersection::At(p) => Ok(self.point(label, p)),
            Intersection::Coincident => Err(ConstructError::Degenerate {
                step: label.to_string(),
                detail: "the lines coincide".to_string(),
            }),
            Intersection::Disjoint => Err(ConstructError::Degenerate {
                step: label.to_string(),
                detail: "the lines are parallel".to_string(),
            }),
        }
    }
}

/// Cayley tables of the constructed field on a finite frame, indexed by
/// parameter order `0..p-1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CayleyTables {
    pub ring: RingDescriptor,
    pub elements: Vec<Scalar>,
    pub add: Vec<Vec<Scalar>>,
    pub mul: Vec<Vec<Scalar>>,
}

impl CayleyTables {
    fn table_csv(title: &str, elements: &[Scalar], rows: &[Vec<Scalar>]) -> String {
        let mut out = String::new();
        let header: Vec<String> = std::iter::once(title.to_string())
            .chain(elements.iter().map(|e| gf_value(e)))
            .collect();
        out.push_str(&header.join(","));
        out.push('\n');
        for (e, row) in elements.iter().zip(rows) {
            let cells: Vec<String> = std::iter::once(gf_value(e))
                .chain(row.iter().map(gf_value))
                .collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        out
    }

    fn table_text(title: &str, elements: &[Scalar], rows: &[Vec<Scalar>]) -> String {
        let width = elements
            .iter()
            .map(|e| gf_value(e).len())
            .max()
            .unwrap_or(1)
            .max(title.len());
        let mut out = String::new();
        let mut header = format!("{:>width$} |", title);
        for e in elements {
            header.push_str(&format!(" {:>width$}", gf_value(e)));
        }
        out.push_str(&header);
        out.push('\n');
        out.push_str(&"-".repeat(header.len()));
        out.push('\n');
        for (e, row) in elements.iter().zip(rows) {
            out.push_str(&format!("{:>width$} |", gf_value(e)));
            for cell in row {
                out.push_str(&format!(" {:>width$}", gf_value(cell)));
            }
            out.push('\n');
        }
        out
    }

    /// CSV with one block per operation, separated by a blank line.
    pub fn to_csv(&self) -> String {
        format!(
            "{}\n{}",
            Self::table_csv("+", &self.elements, &self.add),
            Self::table_csv("*", &self.elements, &self.mul)
        )
    }

    /// Aligned, human-readable tables.
    pub fn to_text(&self) -> String {
        format!(
            "{}\n{}",
            Self::table_text("+", &self.elements, &self.add),
            Self::table_text("*", &self.elements, &self.mul)
        )
    }
}

/// Renders a GF(p) scalar as its bare residue for table cells.
fn gf_value(s: &Scalar) -> String {
    match s {
        Scalar::PrimeField { value, .. } => value.to_string(),
        other => other.canonical(),
    }
}

/// Builds both Cayley tables of the constructed field on `frame` (finite
/// rings only), purely via the ruler constructions; entries are reported as
/// parameters of the constructed points.
pub fn cayley_tables(frame: &Frame) -> Result<CayleyTables, ConstructError> {
    let ring = frame.ring();
    let elements = ring
        .elements()
        .ok_or(PlaneError::NotEnumerable(ring.kind()))?;
    let points: Vec<Point> = elements.iter().map(|t| frame.from_parameter(t)).collect();
    let b = frame.choose_auxiliary(0);
    let mut add = Vec::with_capacity(points.len());
    let mut mul = Vec::with_capacity(points.len());
    for p in &points {
        let mut add_row = Vec::with_capacity(points.len());
        let mut mul_row = Vec::with_capacity(points.len());
        for q in &points {
            let (sum, _) = frame.add_with(p, q, &b)?;
            add_row.push(frame.to_parameter(&sum)?);
            let (prod, _) = frame.mul_with(p, q, &b)?;
            mul_row.push(frame.to_parameter(&prod)?);
        }
        add.push(add_row);
        mul.push(mul_row);
    }
    Ok(CayleyTables {
        ring,
        elements,
        add,
        mul,
    })
}

/// Re-runs a trace's construction from its recorded frame, operands, and
/// auxiliary point, and demands every recorded step and the result match.
pub fn replay_trace(trace: &ConstructionTrace) -> Result<(), ConstructError> {
    let frame = Frame::new(
        trace.frame_line.clone(),
        trace.origin.clone(),
        trace.unit.clone(),
    )?;
    let input = |name: &str| -> Result<&Point, ConstructError> {
        trace
            .inputs
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, p)| p)
            .ok_or_else(|| ConstructError::Degenerate {
                step: format!("inputs.{name}"),
                detail: "missing operand".to_string(),
            })
    };
    let b = &trace.auxiliary_b;
    let (_, recomputed) = match trace.op {
        TraceOp::Add => frame.add_with(input("A")?, input("C")?, b)?,
        TraceOp::Sub => frame.sub_with(input("E")?, input("A")?, b)?,
        TraceOp::Neg => frame.neg_with(input("A")?, b)?,
        TraceOp::Mul => frame.mul_with(input("A")?, input("C")?, b)?,
        TraceOp::InvLeft => frame.inv_with(input("A")?, InvSide::Left, b)?,
        TraceOp::InvRight => frame.inv_with(input("A")?, InvSide::Right, b)?,
    };
    if recomputed.steps != trace.steps {
        return Err(ConstructError::Degenerate {
            step: "steps".to_string(),
            detail: "recorded steps do not match the replay".to_string(),
        });
    }
    if recomputed.result != trace.result {
        return Err(ConstructError::Degenerate {
            step: "result".to_string(),
            detail: format!(
                "recorded {} but replay yields {}",
                trace.result, recomputed.result
            ),
        });
    }
    Ok(())
}
