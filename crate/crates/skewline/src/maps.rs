//! Order-compatible maps between lines: parallel projections and translations.
//!
//! A parallel projection carries a source line to a target line along a fixed
//! direction; it is the workhorse bijection behind the ruler arithmetic. A
//! translation moves every point by a fixed displacement; restricted to a line
//! it acts as a parallel projection onto the image line, and a translation
//! *along* its own line factors through an off-line point as a composite of
//! two genuine projections — that decomposition is exposed here because order
//! checks exercise it as an independent computation path.

use serde::Serialize;
use thiserror::Error;

use crate::plane::{Intersection, Line, PlaneModel, Point};
use crate::sampling::Sampler;
use crate::scalar::Scalar;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MapError {
    #[error("projection direction is parallel to the source line")]
    DirectionParallelToSource,
    #[error("projection direction is parallel to the target line")]
    DirectionParallelToTarget,
    #[error("point {0} is not on the source line")]
    NotOnSource(String),
    #[error("translation displacement is not parallel to the line")]
    NotAlongLine,
    #[error("identity translation has no direction")]
    IdentityHasNoDirection,
    #[error("auxiliary point lies on the line")]
    AuxiliaryOnLine,
}

/// A bijection `source -> target` mapping each point along the parallel class
/// of `direction`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParallelProjection {
    source: Line,
    target: Line,
    direction: Line,
}

impl ParallelProjection {
    /// The direction must be transversal to both lines. `source == target` is
    /// permitted; the map is then the identity.
    pub fn new(source: Line, target: Line, direction: Line) -> Result<Self, MapError> {
        if direction.parallel_to(&source) {
            return Err(MapError::DirectionParallelToSource);
        }
        if direction.parallel_to(&target) {
            return Err(MapError::DirectionParallelToTarget);
        }
        Ok(ParallelProjection {
            source,
            target,
            direction,
        })
    }

    pub fn source(&self) -> &Line {
        &self.source
    }

    pub fn target(&self) -> &Line {
        &self.target
    }

    pub fn direction(&self) -> &Line {
        &self.direction
    }

    /// Image of a source point: the intersection of the target with the
    /// direction-parallel through the point. Total on the source line.
    pub fn project(&self, p: &Point) -> Result<Point, MapError> {
        if !self.source.contains(p) {
            return Err(MapError::NotOnSource(p.to_string()));
        }
        let ray = self.direction.parallel_through(p);
        match Line::intersect(&ray, &self.target) {
            Intersection::At(q) => Ok(q),
            // unreachable: direction is transversal to the target
            _ => unreachable!("direction validated transversal to target"),
        }
    }

    /// The inverse projection along the same direction.
    pub fn inverse(&self) -> ParallelProjection {
        ParallelProjection {
            source: self.target.clone(),
            target: self.source.clone(),
            direction: self.direction.clone(),
        }
    }
}

/// Evidence that a projection is a bijection, gathered exhaustively on finite
/// planes and by distinct sampling elsewhere.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BijectionReport {
    pub checked: u64,
    pub distinct_images: u64,
    pub round_trip_failures: u64,
}

impl BijectionReport {
    pub fn is_bijective_evidence(&self) -> bool {
        self.checked == self.distinct_images && self.round_trip_failures == 0
    }
}

/// Checks injectivity and inverse round-trips for `pp`. On a finite plane the
/// whole source line is projected (surjectivity follows from the count);
/// otherwise `samples` distinct points are used.
pub fn projection_is_bijection(
    pp: &ParallelProjection,
    model: &PlaneModel,
    seed: u64,
    samples: u32,
) -> BijectionReport {
    let points: Vec<Point> = match model.points_on_line(pp.source()) {
        Ok(all) => all,
        Err(_) => {
            let mut sampler = Sampler::new(model.ring(), seed);
            let mut pts: Vec<Point> = Vec::with_capacity(samples as usize);
            while pts.len() < samples as usize {
                let p = sampler.point_on_line(pp.source());
                if !pts.contains(&p) {
                    pts.push(p);
                }
            }
            pts
        }
    };
    let inv = pp.inverse();
    let mut images: Vec<Point> = Vec::with_capacity(points.len());
    let mut round_trip_failures = 0u64;
    for p in &points {
        let q = pp.project(p).expect("sampled on source");
        if inv.project(&q).expect("image is on target") != *p {
            round_trip_failures += 1;
        }
        if !images.contains(&q) {
            images.push(q);
        }
    }
    BijectionReport {
        checked: points.len() as u64,
        distinct_images: images.len() as u64,
        round_trip_failures,
    }
}

/// A translation of the whole plane by an exact displacement.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Translation {
    dx: Scalar,
    dy: Scalar,
}

impl Translation {
    pub fn new(dx: Scalar, dy: Scalar) -> Translation {
        assert_eq!(dx.ring(), dy.ring(), "displacement from mixed rings");
        Translation { dx, dy }
    }

    /// The unique translation with `from -> to`.
    pub fn from_points(from: &Point, to: &Point) -> Translation {
        Translation::new(&to.x - &from.x, &to.y - &from.y)
    }

    pub fn displacement(&self) -> (&Scalar, &Scalar) {
        (&self.dx, &self.dy)
    }

    pub fn apply(&self, p: &Point) -> Point {
        Point::new(&p.x + &self.dx, &p.y + &self.dy)
    }

    /// `self` after `first` (translations commute, so the order is moot).
    pub fn compose(&self, first: &Translation) -> Translation {
        Translation::new(&self.dx + &first.dx, &self.dy + &first.dy)
    }

    pub fn inverse(&self) -> Translation {
        Translation::new(-&self.dx, -&self.dy)
    }

    pub fn is_identity(&self) -> bool {
        self.dx.is_zero() && self.dy.is_zero()
    }

    /// A representative line of the displacement's parallel class.
    pub fn direction_line(&self) -> Result<Line, MapError> {
        if self.is_identity() {
            return Err(MapError::IdentityHasNoDirection);
        }
        if self.dx.is_zero() {
            return Ok(Line::Vertical {
                c: self.dx.descriptor().zero(),
            });
        }
        // through the origin and (dx, dy): slope dx^-1 * dy
        let m = &self.dx.checked_inv().expect("dx nonzero") * &self.dy;
        Ok(Line::Sloped {
            m,
            b: self.dx.descriptor().zero(),
        })
    }

    /// Image of a line; always parallel to the original.
    pub fn image_line(&self, l: &Line) -> Line {
        match l {
            Line::Vertical { c } => Line::Vertical { c: c + &self.dx },
            Line::Sloped { m, b } => {
                // y + dy = (x + dx)*m + b'  =>  b' = b + dy - dx*m
                let b2 = &(b + &self.dy) - &(&self.dx * m);
                Line::Sloped {
                    m: m.clone(),
                    b: b2,
                }
            }
        }
    }

    /// Whether this translation maps `l` onto itself.
    pub fn is_along(&self, l: &Line) -> bool {
        self.image_line(l) == *l
    }
}

/// Splits a translation *along* `line` into two parallel projections through
/// an off-line waypoint: `line -> line'` sending a base point to `off`, then
/// `line' -> line` sending `off` onward. The composite agrees with the
/// translation pointwise; callers verify that as an independent path.
pub fn two_stage_along_line(
    t: &Translation,
    line: &Line,
    off: &Point,
) -> Result<(ParallelProjection, ParallelProjection), MapError> {
    if t.is_identity() {
        return Err(MapError::IdentityHasNoDirection);
    }
    if !t.is_along(line) {
        return Err(MapError::NotAlongLine);
    }
    if line.contains(off) {
        return Err(MapError::AuxiliaryOnLine);
    }
    let base = line.point_at(&off.x.descriptor().zero());
    let parallel = line.parallel_through(off);
    let leg1 = Line::through(&base, off).expect("off is not on line, so distinct");
    let moved = t.apply(&base);
    let leg2 = Line::through(off, &moved).expect("off is off the line, moved is on it");
    let first = ParallelProjection::new(line.clone(), parallel.clone(), leg1)?;
    let second = ParallelProjection::new(parallel, line.clone(), leg2)?;
    Ok((first, second))
}
