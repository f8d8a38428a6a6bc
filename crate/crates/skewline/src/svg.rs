//! Deterministic SVG 1.1 rendering of construction traces.
//!
//! Rational traces are drawn in the plane: the trace's bounding box is
//! affine-fitted into a fixed canvas with a 10% margin, every intermediate
//! construction line is dashed, every recorded point is labeled with its
//! trace step name, and the constructed result is highlighted. Prime-field
//! traces are drawn as a p×p labeled grid in which each construction line
//! appears as its full point set (lines over gf(p) wrap around, so a stroke
//! would lie). Quaternion traces have four-dimensional coordinates and are
//! rejected as not plottable.
//!
//! All screen arithmetic is exact (`BigRational` in, fixed-precision decimal
//! text out), so a given `(trace, options)` pair renders to identical bytes
//! on every run and platform — golden files are safe to check in.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

use crate::plane::{Line, PlaneModel, Point};
use crate::scalar::{RingKind, Scalar};
use crate::trace::{ConstructionTrace, TraceObject};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SvgError {
    #[error("{0} coordinates are not plottable; only rational and gf(p) traces render")]
    NotPlottable(RingKind),
    #[error("malformed trace: {0}")]
    Malformed(String),
}

/// Rendering knobs. The defaults draw an 800×600 canvas with labels.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderOptions {
    pub width: u32,
    pub height: u32,
    pub show_labels: bool,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            width: 800,
            height: 600,
            show_labels: true,
        }
    }
}

impl RenderOptions {
    /// Degenerate canvases are clamped so the fit stays well-defined.
    fn clamped(&self) -> (i64, i64) {
        (self.width.max(100) as i64, self.height.max(100) as i64)
    }
}

/// Renders a trace to an SVG document. `None` renders a valid empty canvas
/// (a script with no constructions still produces a well-formed file).
pub fn render_svg(
    trace: Option<&ConstructionTrace>,
    options: &RenderOptions,
) -> Result<String, SvgError> {
    let Some(trace) = trace else {
        return Ok(empty_canvas(options));
    };
    match trace.ring.kind() {
        RingKind::Rational => render_rational(trace, options),
        RingKind::PrimeField(p) => render_grid(trace, p, options),
        RingKind::Quaternion => Err(SvgError::NotPlottable(RingKind::Quaternion)),
    }
}

// ---------------------------------------------------------------------------
// document assembly

struct Doc {
    body: String,
    show_labels: bool,
}

impl Doc {
    fn new(width: i64, height: i64, title: &str, show_labels: bool) -> Doc {
        let mut body = String::with_capacity(4096);
        body.push_str(&format!(
            "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" \
             width=\"{width}\" height=\"{height}\" viewBox=\"0 0 {width} {height}\">\n"
        ));
        body.push_str(&format!("  <title>{}</title>\n", esc(title)));
        body.push_str(&format!(
            "  <rect x=\"0\" y=\"0\" width=\"{width}\" height=\"{height}\" fill=\"#ffffff\"/>\n"
        ));
        Doc { body, show_labels }
    }

    fn line(&mut self, a: &Screen, b: &Screen, stroke: &str, width: &str, dashed: bool) {
        let dash = if dashed { " stroke-dasharray=\"6 4\"" } else { "" };
        self.body.push_str(&format!(
            "  <line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{stroke}\" \
             stroke-width=\"{width}\"{dash}/>\n",
            a.x, a.y, b.x, b.y
        ));
    }

    fn circle(&mut self, at: &Screen, r: &str, fill: &str, stroke: Option<&str>) {
        let stroke = match stroke {
            Some(s) => format!(" stroke=\"{s}\" stroke-width=\"1.5\""),
            None => String::new(),
        };
        self.body.push_str(&format!(
            "  <circle cx=\"{}\" cy=\"{}\" r=\"{r}\" fill=\"{fill}\"{stroke}/>\n",
            at.x, at.y
        ));
    }

    fn label(&mut self, at: &Screen, dx: i64, dy: i64, text: &str, fill: &str) {
        if !self.show_labels || text.is_empty() {
            return;
        }
        self.body.push_str(&format!(
            "  <text x=\"{}\" y=\"{}\" dx=\"{dx}\" dy=\"{dy}\" font-family=\"sans-serif\" \
             font-size=\"12\" fill=\"{fill}\">{}</text>\n",
            at.x,
            at.y,
            esc(text)
        ));
    }

    fn finish(mut self) -> String {
        self.body.push_str("</svg>\n");
        self.body
    }
}

fn empty_canvas(options: &RenderOptions) -> String {
    let (w, h) = options.clamped();
    Doc::new(w, h, "empty canvas", options.show_labels).finish()
}

fn esc(text: &str) -> String {
    text.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

/// A screen position, already formatted as decimal text.
struct Screen {
    x: String,
    y: String,
}

/// Exact decimal rendering of a rational, two places, half-up, trimmed.
fn dec(r: &BigRational) -> String {
    let half = BigRational::new(BigInt::one(), BigInt::from(2));
    let hundred = BigRational::from_integer(BigInt::from(100));
    let scaled: BigInt = (r * &hundred + &half).floor().to_integer();
    let sign = if scaled.is_negative() { "-" } else { "" };
    let abs = scaled.abs();
    let int = &abs / BigInt::from(100);
    let frac = &abs % BigInt::from(100);
    if frac.is_zero() {
        format!("{sign}{int}")
    } else {
        let two = format!("{frac:02}");
        let trimmed = two.trim_end_matches('0');
        format!("{sign}{int}.{trimmed}")
    }
}

// ---------------------------------------------------------------------------
// rational traces: affine fit into the canvas

fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn rat(s: &Scalar, what: &str) -> Result<BigRational, SvgError> {
    s.as_rational().cloned().ok_or_else(|| {
        SvgError::Malformed(format!("{what} is not a rational coordinate"))
    })
}

fn rat_point(p: &Point, what: &str) -> Result<(BigRational, BigRational), SvgError> {
    Ok((
        rat(&p.x, &format!("{what}.x"))?,
        rat(&p.y, &format!("{what}.y"))?,
    ))
}

/// The affine map from plane coordinates to the canvas, plus the plane-space
/// rectangle the canvas shows (used to clip infinite lines).
struct Fit {
    scale: BigRational,
    min_x: BigRational,
    min_y: BigRational,
    height: BigRational,
    view: RectR,
}

struct RectR {
    x0: BigRational,
    x1: BigRational,
    y0: BigRational,
    y1: BigRational,
}

impl Fit {
    fn new(points: &[(BigRational, BigRational)], width: i64, height: i64) -> Fit {
        let first = points.first().expect("fit requires at least one point");
        let (mut min_x, mut max_x) = (first.0.clone(), first.0.clone());
        let (mut min_y, mut max_y) = (first.1.clone(), first.1.clone());
        for (x, y) in points.iter().skip(1) {
            if x < &min_x {
                min_x = x.clone();
            }
            if x > &max_x {
                max_x = x.clone();
            }
            if y < &min_y {
                min_y = y.clone();
            }
            if y > &max_y {
                max_y = y.clone();
            }
        }
        // A flat bounding box still needs extent to fit.
        if min_x == max_x {
            min_x -= BigRational::one();
            max_x += BigRational::one();
        }
        if min_y == max_y {
            min_y -= BigRational::one();
            max_y += BigRational::one();
        }
        let bw = &max_x - &min_x;
        let bh = &max_y - &min_y;
        // 10% margin on each side: the content occupies the central 80%.
        let usable_w = big(width) * BigRational::new(BigInt::from(8), BigInt::from(10));
        let usable_h = big(height) * BigRational::new(BigInt::from(8), BigInt::from(10));
        let scale_w = usable_w / &bw;
        let scale_h = usable_h / &bh;
        let scale = if scale_w < scale_h { scale_w } else { scale_h };
        // Center the content: shift the minima so the box sits mid-canvas.
        let extra_x = (big(width) / &scale - &bw) / big(2);
        let extra_y = (big(height) / &scale - &bh) / big(2);
        let min_x = min_x - extra_x;
        let min_y = min_y - extra_y;
        let view = RectR {
            x0: min_x.clone(),
            x1: &min_x + big(width) / &scale,
            y0: min_y.clone(),
            y1: &min_y + big(height) / &scale,
        };
        Fit {
            scale,
            min_x,
            min_y,
            height: big(height),
            view,
        }
    }

    fn map(&self, x: &BigRational, y: &BigRational) -> Screen {
        let sx = (x - &self.min_x) * &self.scale;
        // Screen y grows downward; flip so the plane reads conventionally.
        let sy = &self.height - (y - &self.min_y) * &self.scale;
        Screen {
            x: dec(&sx),
            y: dec(&sy),
        }
    }

    /// Clips a line to the visible plane rectangle, exactly.
    fn clip(&self, line: &Line) -> Result<Option<(Screen, Screen)>, SvgError> {
        let r = &self.view;
        let mut hits: Vec<(BigRational, BigRational)> = Vec::new();
        match line {
            Line::Vertical { c } => {
                let c = rat(c, "line.c")?;
                if c >= r.x0 && c <= r.x1 {
                    hits.push((c.clone(), r.y0.clone()));
                    hits.push((c, r.y1.clone()));
                }
            }
            Line::Sloped { m, b } => {
                let m = rat(m, "line.m")?;
                let b = rat(b, "line.b")?;
                for x in [&r.x0, &r.x1] {
                    let y = x * &m + &b;
                    if y >= r.y0 && y <= r.y1 {
                        hits.push((x.clone(), y));
                    }
                }
                if !m.is_zero() {
                    for y in [&r.y0, &r.y1] {
                        let x = (y - &b) / &m;
                        if x >= r.x0 && x <= r.x1 {
                            hits.push((x, y.clone()));
                        }
                    }
                }
            }
        }
        hits.sort();
        hits.dedup();
        if hits.len() < 2 {
            return Ok(None);
        }
        let first = hits.first().expect("two hits");
        let last = hits.last().expect("two hits");
        Ok(Some((
            self.map(&first.0, &first.1),
            self.map(&last.0, &last.1),
        )))
    }

    /// Midpoint of a clipped segment, for line labels.
    fn midpoint(&self, line: &Line) -> Result<Option<Screen>, SvgError> {
        let r = &self.view;
        match line {
            Line::Vertical { c } => {
                let c = rat(c, "line.c")?;
                let mid = (&r.y0 + &r.y1) / big(2);
                Ok(Some(self.map(&c, &mid)))
            }
            Line::Sloped { m, b } => {
                let m = rat(m, "line.m")?;
                let b = rat(b, "line.b")?;
                let mid_x = (&r.x0 + &r.x1) / big(2);
                let y = &mid_x * &m + &b;
                if y >= r.y0 && y <= r.y1 {
                    Ok(Some(self.map(&mid_x, &y)))
                } else {
                    Ok(None)
                }
            }
        }
    }
}

const INK: &str = "#1f2430";
const AUX: &str = "#7a8494";
const RESULT: &str = "#c0392b";

fn render_rational(
    trace: &ConstructionTrace,
    options: &RenderOptions,
) -> Result<String, SvgError> {
    let (width, height) = options.clamped();

    // Every recorded point participates in the bounding box.
    let mut anchors: Vec<(BigRational, BigRational)> = vec![
        rat_point(&trace.origin, "origin")?,
        rat_point(&trace.unit, "unit")?,
        rat_point(&trace.auxiliary_b, "auxiliary_B")?,
        rat_point(&trace.result, "result")?,
    ];
    for (name, p) in &trace.inputs {
        anchors.push(rat_point(p, name)?);
    }
    for step in &trace.steps {
        if let TraceObject::Point(p) = &step.object {
            anchors.push(rat_point(p, &step.label)?);
        }
    }
    let fit = Fit::new(&anchors, width, height);

    let title = format!("{} construction", trace.op);
    let mut doc = Doc::new(width, height, &title, options.show_labels);

    // The frame line, solid.
    if let Some((a, b)) = fit.clip(&trace.frame_line)? {
        doc.line(&a, &b, INK, "1.5", false);
    }

    // Intermediate lines, dashed, labeled at their visible midpoint.
    for step in &trace.steps {
        if let TraceObject::Line(l) = &step.object {
            if let Some((a, b)) = fit.clip(l)? {
                doc.line(&a, &b, AUX, "1", true);
            }
            if let Some(at) = fit.midpoint(l)? {
                doc.label(&at, 6, -6, &step.label, AUX);
            }
        }
    }

    // Named points: frame anchors, the auxiliary, the operands, then the
    // intermediate points. The result is drawn last, highlighted; a step
    // whose point IS the result donates its label to the highlight.
    let mut result_labels: Vec<&str> = Vec::new();
    let draw_point = |doc: &mut Doc, p: &Point, label: &str| -> Result<(), SvgError> {
        let (x, y) = rat_point(p, label)?;
        let at = fit.map(&x, &y);
        doc.circle(&at, "3.5", INK, None);
        doc.label(&at, 7, -7, label, INK);
        Ok(())
    };

    draw_point(&mut doc, &trace.origin, "O")?;
    draw_point(&mut doc, &trace.unit, "I")?;
    draw_point(&mut doc, &trace.auxiliary_b, "B")?;
    for (name, p) in &trace.inputs {
        if p == &trace.result {
            result_labels.push(name);
            continue;
        }
        draw_point(&mut doc, p, name)?;
    }
    for step in &trace.steps {
        if let TraceObject::Point(p) = &step.object {
            if p == &trace.result {
                result_labels.push(&step.label);
                continue;
            }
            draw_point(&mut doc, p, &step.label)?;
        }
    }

    let (rx, ry) = rat_point(&trace.result, "result")?;
    let at = fit.map(&rx, &ry);
    doc.circle(&at, "5", RESULT, Some("#7f1d1d"));
    let label = if result_labels.is_empty() {
        "result".to_string()
    } else {
        result_labels.join(" = ")
    };
    doc.label(&at, 8, -8, &label, RESULT);

    Ok(doc.finish())
}

// ---------------------------------------------------------------------------
// prime-field traces: a labeled grid, lines as point sets

const SET_COLORS: &[&str] = &[
    "#2563eb", "#d97706", "#059669", "#7c3aed", "#db2777", "#0891b2", "#65a30d", "#b45309",
];

struct Grid {
    step: BigRational,
    off_x: BigRational,
    off_y: BigRational,
    height: BigRational,
}

impl Grid {
    fn new(p: u64, width: i64, height: i64) -> Grid {
        let cells = big((p as i64 - 1).max(1));
        let usable_w = big(width) * BigRational::new(BigInt::from(8), BigInt::from(10));
        let usable_h = big(height) * BigRational::new(BigInt::from(8), BigInt::from(10));
        let step_w = usable_w / &cells;
        let step_h = usable_h / &cells;
        let step = if step_w < step_h { step_w } else { step_h };
        let span = &step * &cells;
        let off_x = (big(width) - &span) / big(2);
        let off_y = (big(height) - &span) / big(2);
        Grid {
            step,
            off_x,
            off_y,
            height: big(height),
        }
    }

    fn map(&self, x: u64, y: u64) -> Screen {
        let sx = &self.off_x + big(x as i64) * &self.step;
        let sy = &self.height - (&self.off_y + big(y as i64) * &self.step);
        Screen {
            x: dec(&sx),
            y: dec(&sy),
        }
    }
}

fn field_coord(s: &Scalar, what: &str) -> Result<u64, SvgError> {
    match s {
        Scalar::PrimeField { value, .. } => Ok(*value),
        _ => Err(SvgError::Malformed(format!(
            "{what} is not a prime-field coordinate"
        ))),
    }
}

fn field_point(p: &Point, what: &str) -> Result<(u64, u64), SvgError> {
    Ok((
        field_coord(&p.x, &format!("{what}.x"))?,
        field_coord(&p.y, &format!("{what}.y"))?,
    ))
}

fn render_grid(
    trace: &ConstructionTrace,
    p: u64,
    options: &RenderOptions,
) -> Result<String, SvgError> {
    let (width, height) = options.clamped();
    let grid = Grid::new(p, width, height);
    let plane = PlaneModel::new(trace.ring);

    let title = format!("{} construction over gf({p})", trace.op);
    let mut doc = Doc::new(width, height, &title, options.show_labels);

    // The lattice.
    for y in 0..p {
        for x in 0..p {
            doc.circle(&grid.map(x, y), "1.5", "#d4d8de", None);
        }
    }

    // A line over gf(p) wraps around, so it is drawn as its point set.
    let point_set = |doc: &mut Doc,
                         line: &Line,
                         color: &str,
                         label: &str|
     -> Result<(), SvgError> {
        let points = plane
            .points_on_line(line)
            .map_err(|e| SvgError::Malformed(e.to_string()))?;
        let mut first: Option<Screen> = None;
        for q in &points {
            let (x, y) = field_point(q, label)?;
            let at = grid.map(x, y);
            if first.is_none() {
                first = Some(Screen {
                    x: at.x.clone(),
                    y: at.y.clone(),
                });
            }
            doc.circle(&at, "4.5", "none", Some(color));
        }
        if let Some(at) = first {
            doc.label(&at, 8, 14, label, color);
        }
        Ok(())
    };

    point_set(&mut doc, &trace.frame_line, INK, "frame line")?;
    let mut color_index = 0usize;
    for step in &trace.steps {
        if let TraceObject::Line(l) = &step.object {
            let color = SET_COLORS[color_index % SET_COLORS.len()];
            color_index += 1;
            point_set(&mut doc, l, color, &step.label)?;
        }
    }

    // Named points over the sets.
    let mut result_labels: Vec<&str> = Vec::new();
    let draw_point = |doc: &mut Doc, q: &Point, label: &str| -> Result<(), SvgError> {
        let (x, y) = field_point(q, label)?;
        let at = grid.map(x, y);
        doc.circle(&at, "3", INK, None);
        doc.label(&at, 7, -7, label, INK);
        Ok(())
    };
    draw_point(&mut doc, &trace.origin, "O")?;
    draw_point(&mut doc, &trace.unit, "I")?;
    draw_point(&mut doc, &trace.auxiliary_b, "B")?;
    for (name, q) in &trace.inputs {
        if q == &trace.result {
            result_labels.push(name);
            continue;
        }
        draw_point(&mut doc, q, name)?;
    }
    for step in &trace.steps {
        if let TraceObject::Point(q) = &step.object {
            if q == &trace.result {
                result_labels.push(&step.label);
                continue;
            }
            draw_point(&mut doc, q, &step.label)?;
        }
    }
    let (rx, ry) = field_point(&trace.result, "result")?;
    let at = grid.map(rx, ry);
    doc.circle(&at, "5", RESULT, Some("#7f1d1d"));
    let label = if result_labels.is_empty() {
        "result".to_string()
    } else {
        result_labels.join(" = ")
    };
    doc.label(&at, 8, -8, &label, RESULT);

    Ok(doc.finish())
}
