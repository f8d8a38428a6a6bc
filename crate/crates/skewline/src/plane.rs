//! The coordinate affine plane over an exact scalar ring.
//!
//! Points are coordinate pairs; lines are either `x = c` (vertical) or
//! `y = x*m + b` (sloped), with the parameter multiplying the slope on the
//! left. That convention matters: over the quaternions it is what makes the
//! ruler constructions in `line_algebra` reproduce products in the written
//! factor order. Slope-intercept form is canonical, so line equality is plain
//! field-wise equality, and two lines are parallel exactly when they are both
//! vertical or share a slope.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::scalar::{RingDescriptor, RingKind, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlaneError {
    #[error("cannot join a point with itself")]
    DegenerateJoin,
    #[error("{0} has infinitely many points; enumeration is only defined for gf(p)")]
    NotEnumerable(RingKind),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// A plane point with coordinates in a single ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Point {
    pub x: Scalar,
    pub y: Scalar,
}

impl Point {
    /// Both coordinates must share a ring; violating that is a programming
    /// error, so this panics rather than returning a Result. Boundary code
    /// goes through [`PlaneModel::point`].
    pub fn new(x: Scalar, y: Scalar) -> Point {
        assert_eq!(x.ring(), y.ring(), "point coordinates from different rings");
        Point { x, y }
    }

    pub fn ring(&self) -> RingKind {
        self.x.ring()
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl Serialize for Point {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("Point", 2)?;
        st.serialize_field("x", &self.x)?;
        st.serialize_field("y", &self.y)?;
        st.end()
    }
}

/// A line in canonical form: `x = c` or `y = x*m + b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Line {
    Vertical { c: Scalar },
    Sloped { m: Scalar, b: Scalar },
}

impl Line {
    /// The unique line through two distinct points.
    pub fn through(p: &Point, q: &Point) -> Result<Line, PlaneError> {
        if p == q {
            return Err(PlaneError::DegenerateJoin);
        }
        if p.x == q.x {
            return Ok(Line::Vertical { c: p.x.clone() });
        }
        // y = x*m + b through both points: m = (xp - xq)^-1 * (yp - yq).
        let dx = &p.x - &q.x;
        let dy = &p.y - &q.y;
        let m = &dx.checked_inv().expect("dx nonzero by case split") * &dy;
        let b = &p.y - &(&p.x * &m);
        Ok(Line::Sloped { m, b })
    }

    /// The member of this line's parallel class through `p`. If `p` is already
    /// incident the result equals `self`, by canonicity of the representation.
    pub fn parallel_through(&self, p: &Point) -> Line {
        match self {
            Line::Vertical { .. } => Line::Vertical { c: p.x.clone() },
            Line::Sloped { m, .. } => {
                let b = &p.y - &(&p.x * m);
                Line::Sloped { m: m.clone(), b }
            }
        }
    }

    pub fn contains(&self, p: &Point) -> bool {
        match self {
            Line::Vertical { c } => &p.x == c,
            Line::Sloped { m, b } => p.y == &(&p.x * m) + b,
        }
    }

    /// Same parallel class (bundle of verticals, or equal slopes). A line is
    /// parallel to itself.
    pub fn parallel_to(&self, other: &Line) -> bool {
        match (self, other) {
            (Line::Vertical { .. }, Line::Vertical { .. }) => true,
            (Line::Sloped { m: m1, .. }, Line::Sloped { m: m2, .. }) => m1 == m2,
            _ => false,
        }
    }

    /// Exact intersection classification.
    pub fn intersect(a: &Line, b: &Line) -> Intersection {
        if a == b {
            return Intersection::Coincident;
        }
        match (a, b) {
            (Line::Vertical { .. }, Line::Vertical { .. }) => Intersection::Disjoint,
            (Line::Vertical { c }, Line::Sloped { m, b }) => {
                let y = &(c * m) + b;
                Intersection::At(Point::new(c.clone(), y))
            }
            (Line::Sloped { m, b }, Line::Vertical { c }) => {
                let y = &(c * m) + b;
                Intersection::At(Point::new(c.clone(), y))
            }
            (Line::Sloped { m: m1, b: b1 }, Line::Sloped { m: m2, b: b2 }) => {
                if m1 == m2 {
                    return Intersection::Disjoint;
                }
                // t*m1 + b1 = t*m2 + b2  =>  t = (b2 - b1) * (m1 - m2)^-1
                let t = &(b2 - b1)
                    * &(m1 - m2).checked_inv().expect("slopes differ by case split");
                let y = &(&t * m1) + b1;
                Intersection::At(Point::new(t, y))
            }
        }
    }

    /// The point of this line at canonical parameter `t`: `(c, t)` for
    /// verticals, `(t, t*m + b)` otherwise.
    pub fn point_at(&self, t: &Scalar) -> Point {
        match self {
            Line::Vertical { c } => Point::new(c.clone(), t.clone()),
            Line::Sloped { m, b } => {
                let y = &(t * m) + b;
                Point::new(t.clone(), y)
            }
        }
    }

    /// Canonical parameter of an incident point (y for verticals, x
    /// otherwise). Betweenness is invariant under the choice, since any two
    /// parameterizations differ by an affine bijection.
    pub fn parameter_of(&self, p: &Point) -> Scalar {
        match self {
            Line::Vertical { .. } => p.y.clone(),
            Line::Sloped { .. } => p.x.clone(),
        }
    }

    pub fn ring(&self) -> RingKind {
        match self {
            Line::Vertical { c } => c.ring(),
            Line::Sloped { m, .. } => m.ring(),
        }
    }

    pub fn descriptor(&self) -> RingDescriptor {
        match self {
            Line::Vertical { c } => c.descriptor(),
            Line::Sloped { m, .. } => m.descriptor(),
        }
    }
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Vertical { c } => write!(f, "x = {c}"),
            Line::Sloped { m, b } => write!(f, "y = {m}*x + {b}"),
        }
    }
}

impl Serialize for Line {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            Line::Vertical { c } => {
                let mut st = s.serialize_struct("Line", 2)?;
                st.serialize_field("kind", "vertical")?;
                st.serialize_field("c", c)?;
                st.end()
            }
            Line::Sloped { m, b } => {
                let mut st = s.serialize_struct("Line", 3)?;
                st.serialize_field("kind", "sloped")?;
                st.serialize_field("m", m)?;
                st.serialize_field("b", b)?;
                st.end()
            }
        }
    }
}

/// How two lines meet.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Intersection {
    At(Point),
    Coincident,
    Disjoint,
}

impl Intersection {
    pub fn point(self) -> Option<Point> {
        match self {
            Intersection::At(p) => Some(p),
            _ => None,
        }
    }
}

/// Three points are collinear if some line carries all of them; degenerate
/// triples (a repeated point) count as collinear.
pub fn collinear(p: &Point, q: &Point, r: &Point) -> bool {
    if p == q || p == r || q == r {
        return true;
    }
    match Line::through(p, q) {
        Ok(l) => l.contains(r),
        Err(_) => true,
    }
}

/// An affine plane model: the coordinate plane over one scalar ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct PlaneModel {
    ring: RingDescriptor,
}

impl PlaneModel {
    pub fn new(ring: RingDescriptor) -> Self {
        PlaneModel { ring }
    }

    pub fn rational() -> Self {
        Self::new(RingDescriptor::rational())
    }

    pub fn quaternion() -> Self {
        Self::new(RingDescriptor::quaternion())
    }

    pub fn prime_field(p: u64) -> Result<Self, ScalarError> {
        Ok(Self::new(RingDescriptor::prime_field(p)?))
    }

    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    /// Validating point constructor for boundary code.
    pub fn point(&self, x: Scalar, y: Scalar) -> Result<Point, PlaneError> {
        for coord in [&x, &y] {
            if coord.ring() != self.ring.kind() {
                return Err(ScalarError::RingMismatch {
                    left: self.ring.kind(),
                    right: coord.ring(),
                }
                .into());
            }
        }
        Ok(Point { x, y })
    }

    /// All p^2 points of a finite plane, in row-major (x, then y) order.
    pub fn enumerate_points(&self) -> Result<Vec<Point>, PlaneError> {
        let elems = self
            .ring
            .elements()
            .ok_or(PlaneError::NotEnumerable(self.ring.kind()))?;
        let mut out = Vec::with_capacity(elems.len() * elems.len());
        for x in &elems {
            for y in &elems {
                out.push(Point::new(x.clone(), y.clone()));
            }
        }
        Ok(out)
    }

    /// All p^2 + p lines of a finite plane: verticals first, then sloped lines
    /// in (m, b) order.
    pub fn enumerate_lines(&self) -> Result<Vec<Line>, PlaneError> {
        let elems = self
            .ring
            .elements()
            .ok_or(PlaneError::NotEnumerable(self.ring.kind()))?;
        let mut out = Vec::with_capacity(elems.len() * elems.len() + elems.len());
        for c in &elems {
            out.push(Line::Vertical { c: c.clone() });
        }
        for m in &elems {
            for b in &elems {
                out.push(Line::Sloped {
                    m: m.clone(),
                    b: b.clone(),
                });
            }
        }
        Ok(out)
    }

    /// Points incident with `l`; finite planes only.
    pub fn points_on_line(&self, l: &Line) -> Result<Vec<Point>, PlaneError> {
        let elems = self
            .ring
            .elements()
            .ok_or(PlaneError::NotEnumerable(self.ring.kind()))?;
        Ok(elems.iter().map(|t| l.point_at(t)).collect())
    }
}
