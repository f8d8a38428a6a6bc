//! Exact synthetic-geometry kernel for affine planes over exact scalar rings.
//!
//! The crate builds arithmetic *geometrically*: addition and multiplication of
//! points on a line are computed by ruler-only constructions (joins, parallels,
//! intersections) relative to a frame (line, zero point, unit point), never by
//! operating on coordinates of the operands directly. Coordinates enter only
//! through the plane primitives themselves and through the `to_parameter`
//! oracle used to cross-check the constructions against ordinary scalar
//! arithmetic.
//!
//! Modules:
//! - [`scalar`]: exact scalar rings — arbitrary-precision rationals, prime
//!   fields GF(p), and rational quaternions (a noncommutative division ring).
//! - [`plane`]: points, lines, joins, parallels, intersections over any of the
//!   scalar rings.
//! - [`maps`]: parallel projections and translations, the order-preserving
//!   maps between lines.
//! - [`line_algebra`]: the ruler-only field structure on a line — point
//!   addition, multiplication, inverses, Cayley tables, construction traces.
//! - [`ordering`]: betweenness, sign classification against a frame, order
//!   axiom and positivity-cone checks (rational plane only).
//! - [`configurations`]: Desargues and Pappus configuration checks and
//!   searches.
//! - [`verification`]: named claim suites with machine-readable reports.
//! - [`dsl`]: a small construction-script language (`.geo`) with spanned
//!   diagnostics, plus script execution.
//! - [`svg`]: deterministic SVG rendering of construction traces.
//! - [`cli`]: the `skewline` command-line interface.

pub mod cli;
pub mod configurations;
pub mod dsl;
pub mod line_algebra;
pub mod maps;
pub mod ordering;
pub mod plane;
pub mod scalar;
pub mod svg;
pub mod trace;
pub mod verification;

pub(crate) mod sampling;

pub use plane::{Intersection, Line, PlaneModel, Point};
pub use scalar::{Quaternion, RingDescriptor, RingKind, Scalar};
