//! Configuration checkers: the parallel Desargues axiom, the Pappus hexagon
//! theorem, and its affine axis form, plus budgeted configuration search.
//!
//! Hypothesis violations are *errors*, never `false` — a `false` from a check
//! always means the geometric conclusion failed on a valid configuration.
//! Coordinate planes over division rings satisfy Desargues by construction,
//! so any `desargues_check` failure is a bug; Pappus holds exactly when the
//! scalars commute, which makes the quaternion plane a counterexample
//! factory and the finite planes exhaustively checkable.

use serde::Serialize;
use thiserror::Error;

use crate::plane::{collinear, Intersection, Line, PlaneError, PlaneModel, Point};
use crate::sampling::Sampler;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("invalid configuration: {clause}")]
    InvalidConfiguration { clause: String },
    #[error("hypothesis not met: {clause}")]
    HypothesisNotMet { clause: String },
    #[error("degenerate hexagon: the cross-joins {pair} are parallel")]
    DegenerateHexagon { pair: String },
    #[error(transparent)]
    Plane(#[from] PlaneError),
}

fn invalid(clause: impl Into<String>) -> ConfigError {
    ConfigError::InvalidConfiguration {
        clause: clause.into(),
    }
}

fn unmet(clause: impl Into<String>) -> ConfigError {
    ConfigError::HypothesisNotMet {
        clause: clause.into(),
    }
}

/// The parallel form of a Desargues configuration: two triangles `ABC` and
/// `A'B'C'` suspended on three parallel rails, with the `AB` and `BC` sides
/// pairwise parallel. Validated on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DesarguesConfig {
    rail_a: Line,
    rail_b: Line,
    rail_c: Line,
    a: Point,
    b: Point,
    c: Point,
    a_prime: Point,
    b_prime: Point,
    c_prime: Point,
}

impl DesarguesConfig {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        rail_a: Line,
        rail_b: Line,
        rail_c: Line,
        a: Point,
        b: Point,
        c: Point,
        a_prime: Point,
        b_prime: Point,
        c_prime: Point,
    ) -> Result<DesarguesConfig, ConfigError> {
        if !rail_a.parallel_to(&rail_b) || !rail_b.parallel_to(&rail_c) {
            return Err(invalid("the three rails must be pairwise parallel"));
        }
        if rail_a == rail_b || rail_b == rail_c || rail_a == rail_c {
            return Err(invalid("the three rails must be pairwise distinct"));
        }
        for (name, point, rail) in [
            ("A", &a, &rail_a),
            ("A'", &a_prime, &rail_a),
            ("B", &b, &rail_b),
            ("B'", &b_prime, &rail_b),
            ("C", &c, &rail_c),
            ("C'", &c_prime, &rail_c),
        ] {
            if !rail.contains(point) {
                return Err(invalid(format!("{name} = {point} is not on its rail")));
            }
        }
        if a == c {
            return Err(invalid("A and C must be distinct"));
        }
        if a_prime == c_prime {
            return Err(invalid("A' and C' must be distinct"));
        }
        let side_ab = Line::through(&a, &b)?;
        let side_ab_prime = Line::through(&a_prime, &b_prime)?;
        if !side_ab.parallel_to(&side_ab_prime) {
            return Err(invalid("the side through A',B' is not parallel to the side through A,B"));
        }
        let side_bc = Line::through(&b, &c)?;
        let side_bc_prime = Line::through(&b_prime, &c_prime)?;
        if !side_bc.parallel_to(&side_bc_prime) {
            return Err(invalid("the side through B',C' is not parallel to the side through B,C"));
        }
        if side_ab == rail_b {
            return Err(invalid("the side through A,B must not be the middle rail"));
        }
        if side_bc == rail_b {
            return Err(invalid("the side through B,C must not be the middle rail"));
        }
        Ok(DesarguesConfig {
            rail_a,
            rail_b,
            rail_c,
            a,
            b,
            c,
            a_prime,
            b_prime,
            c_prime,
        })
    }

    pub(crate) fn witness(&self) -> String {
        format!(
            "A={}, B={}, C={}, A'={}, B'={}, C'={} on rails {}; {}; {}",
            self.a,
            self.b,
            self.c,
            self.a_prime,
            self.b_prime,
            self.c_prime,
            self.rail_a,
            self.rail_b,
            self.rail_c
        )
    }
}

/// The Desargues conclusion on a validated configuration: the third pair of
/// sides is parallel too.
pub fn desargues_check(cfg: &DesarguesConfig) -> bool {
    let side_ac = Line::through(&cfg.a, &cfg.c).expect("validated: A != C");
    let side_ac_prime =
        Line::through(&cfg.a_prime, &cfg.c_prime).expect("validated: A' != C'");
    side_ac.parallel_to(&side_ac_prime)
}

/// A Pappus hexagon: `E, C, A` on one line and `B, F, D` on another, all six
/// mutually distinct and none on both lines. Validated on construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PappusConfig {
    line_one: Line,
    line_two: Line,
    e: Point,
    c: Point,
    a: Point,
    b: Point,
    f: Point,
    d: Point,
}

impl PappusConfig {
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        line_one: Line,
        e: Point,
        c: Point,
        a: Point,
        line_two: Line,
        b: Point,
        f: Point,
        d: Point,
    ) -> Result<PappusConfig, ConfigError> {
        let labeled = [
            ("E", &e),
            ("C", &c),
            ("A", &a),
            ("B", &b),
            ("F", &f),
            ("D", &d),
        ];
        for (i, (name, p)) in labeled.iter().enumerate() {
            for (other_name, q) in labeled.iter().skip(i + 1) {
                if p == q {
                    return Err(unmet(format!(
                        "the six points must be mutually distinct ({name} = {other_name} = {p})"
                    )));
                }
            }
        }
        for (name, p) in [("E", &e), ("C", &c), ("A", &a)] {
            if !line_one.contains(p) {
                return Err(unmet(format!("{name} = {p} is not on the first line")));
            }
        }
        for (name, p) in [("B", &b), ("F", &f), ("D", &d)] {
            if !line_two.contains(p) {
                return Err(unmet(format!("{name} = {p} is not on the second line")));
            }
        }
        for (name, p) in labeled {
            if line_one.contains(p) && line_two.contains(p) {
                return Err(unmet(format!("{name} = {p} lies on both lines")));
            }
        }
        Ok(PappusConfig {
            line_one,
            line_two,
            e,
            c,
            a,
            b,
            f,
            d,
        })
    }

    /// The three cross-join meets `N`, `L`, `M`; errors if a cross-join pair
    /// is parallel (or coincident).
    pub fn cross_meets(&self) -> Result<(Point, Point, Point), ConfigError> {
        let meet = |p1: &Point, q1: &Point, p2: &Point, q2: &Point, pair: &str| {
            let l1 = Line::through(p1, q1)?;
            let l2 = Line::through(p2, q2)?;
            match Line::intersect(&l1, &l2) {
                Intersection::At(p) => Ok(p),
                _ => Err(ConfigError::DegenerateHexagon {
                    pair: pair.to_string(),
                }),
            }
        };
        let n = meet(&self.c, &self.b, &self.e, &self.f, "CB and EF")?;
        let l = meet(&self.a, &self.f, &self.c, &self.d, "AF and CD")?;
        let m = meet(&self.a, &self.b, &self.e, &self.d, "AB and ED")?;
        Ok((n, l, m))
    }

    pub(crate) fn witness(&self) -> String {
        format!(
            "E={}, C={}, A={} on {}; B={}, F={}, D={} on {}",
            self.e, self.c, self.a, self.line_one, self.b, self.f, self.d, self.line_two
        )
    }
}

/// The Pappus conclusion: the three cross-join meets are collinear.
pub fn pappus_check(cfg: &PappusConfig) -> Result<bool, ConfigError> {
    let (n, l, m) = cfg.cross_meets()?;
    Ok(collinear(&n, &l, &m))
}

/// The affine axis form: given that the first two cross-join meets lie on
/// `axis`, does the third? Preconditions (meets exist, lie on the axis, and
/// avoid the hexagon points) fail as `HypothesisNotMet`.
pub fn affine_pappus_check(cfg: &PappusConfig, axis: &Line) -> Result<bool, ConfigError> {
    let (n, l, m) = match cfg.cross_meets() {
        Ok(triple) => triple,
        Err(ConfigError::DegenerateHexagon { pair }) => {
            return Err(unmet(format!("the cross-joins {pair} do not meet")))
        }
        Err(other) => return Err(other),
    };
    if !axis.contains(&n) {
        return Err(unmet(format!("the meet of CB and EF ({n}) is not on the axis")));
    }
    if !axis.contains(&l) {
        return Err(unmet(format!("the meet of AF and CD ({l}) is not on the axis")));
    }
    for (name, p) in [
        ("E", &cfg.e),
        ("C", &cfg.c),
        ("A", &cfg.a),
        ("B", &cfg.b),
        ("F", &cfg.f),
        ("D", &cfg.d),
    ] {
        if p == &n || p == &l {
            return Err(unmet(format!("{name} = {p} coincides with a cross-join meet")));
        }
    }
    Ok(axis.contains(&m))
}

/// Which configuration family a search exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ConfigKind {
    Desargues,
    Pappus,
}

impl ConfigKind {
    pub fn as_str(&self) -> &'static str {
        match self {
            ConfigKind::Desargues => "desargues",
            ConfigKind::Pappus => "pappus",
        }
    }
}

/// Outcome of a configuration search: how many candidates were tested, how
/// many were rejected before testing (hypothesis violations or degenerate
/// cross-joins), and full witnesses for every conclusion failure.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub kind: ConfigKind,
    pub model: String,
    pub mode: String,
    pub seed: u64,
    pub tested: u64,
    pub rejected: u64,
    pub failures: Vec<String>,
}

impl SearchReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// How many configurations an exhaustive enumeration over GF(p) would visit.
pub(crate) fn exhaustive_total(p: u64, kind: ConfigKind) -> u128 {
    let p = p as u128;
    let triples = p * p.saturating_sub(1) * p.saturating_sub(2);
    match kind {
        // rails: one of p+1 parallel classes, an ordered triple of its lines;
        // then free choices of A, B, C, and A'
        ConfigKind::Desargues => (p + 1) * triples * p * p * p * p,
        ConfigKind::Pappus => {
            // ordered pairs of distinct parallel lines keep all p points per
            // line; ordered pairs of crossing lines lose the shared point
            let parallel_pairs = (p + 1) * p * (p - 1);
            let lines = p * p + p;
            let crossing_pairs = lines * (lines - 1) - parallel_pairs;
            let crossing_triples =
                (p - 1) * p.saturating_sub(2) * p.saturating_sub(3);
            parallel_pairs * triples * triples
                + crossing_pairs * crossing_triples * crossing_triples
        }
    }
}

fn ordered_triples(points: &[Point]) -> impl Iterator<Item = (&Point, &Point, &Point)> {
    points.iter().enumerate().flat_map(move |(i, p)| {
        points.iter().enumerate().flat_map(move |(j, q)| {
            points
                .iter()
                .enumerate()
                .filter(move |(k, _)| *k != i && *k != j && j != i)
                .map(move |(_, r)| (p, q, r))
        })
    })
}

fn search_desargues_exhaustive(model: &PlaneModel, report: &mut SearchReport) {
    let elems = model.ring().elements().expect("finite model");
    let mut classes: Vec<Vec<Line>> = vec![elems
        .iter()
        .map(|c| Line::Vertical { c: c.clone() })
        .collect()];
    for m in &elems {
        classes.push(
            elems
                .iter()
                .map(|b| Line::Sloped {
                    m: m.clone(),
                    b: b.clone(),
                })
                .collect(),
        );
    }
    for class in &classes {
        for rail_a in class {
            for rail_b in class {
                if rail_b == rail_a {
                    continue;
                }
                for rail_c in class {
                    if rail_c == rail_a || rail_c == rail_b {
                        continue;
                    }
                    let on_a = model.points_on_line(rail_a).expect("finite");
                    let on_b = model.points_on_line(rail_b).expect("finite");
                    let on_c = model.points_on_line(rail_c).expect("finite");
                    for a in &on_a {
                        for b in &on_b {
                            for c in &on_c {
                                for a_prime in &on_a {
                                    run_desargues_candidate(
                                        rail_a.clone(),
                                        rail_b.clone(),
                                        rail_c.clone(),
                                        a.clone(),
                                        b.clone(),
                                        c.clone(),
                                        a_prime.clone(),
                                        report,
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
    }
}

/// Derives B' and C' from A' by the parallel transports, validates, and
/// records the check outcome.
#[allow(clippy::too_many_arguments)]
fn run_desargues_candidate(
    rail_a: Line,
    rail_b: Line,
    rail_c: Line,
    a: Point,
    b: Point,
    c: Point,
    a_prime: Point,
    report: &mut SearchReport,
) {
    let side_ab = match Line::through(&a, &b) {
        Ok(l) => l,
        Err(_) => {
            report.rejected += 1;
            return;
        }
    };
    let b_prime = match Line::intersect(&side_ab.parallel_through(&a_prime), &rail_b) {
        Intersection::At(p) => p,
        _ => {
            report.rejected += 1;
            return;
        }
    };
    let side_bc = match Line::through(&b, &c) {
        Ok(l) => l,
        Err(_) => {
            report.rejected += 1;
            return;
        }
    };
    let c_prime = match Line::intersect(&side_bc.parallel_through(&b_prime), &rail_c) {
        Intersection::At(p) => p,
        _ => {
            report.rejected += 1;
            return;
        }
    };
    match DesarguesConfig::new(rail_a, rail_b, rail_c, a, b, c, a_prime, b_prime, c_prime) {
        Ok(cfg) => {
            report.tested += 1;
            if !desargues_check(&cfg) {
                report.failures.push(cfg.witness());
            }
        }
        Err(_) => report.rejected += 1,
    }
}

fn search_pappus_exhaustive(model: &PlaneModel, report: &mut SearchReport) {
    let lines = model.enumerate_lines().expect("finite model");
    for l1 in &lines {
        for l2 in &lines {
            if l1 == l2 {
                continue;
            }
            let usable = |own: &Line, other: &Line| -> Vec<Point> {
                model
                    .points_on_line(own)
                    .expect("finite")
                    .into_iter()
                    .filter(|p| !other.contains(p))
                    .collect()
            };
            let on_one = usable(l1, l2);
            let on_two = usable(l2, l1);
            if on_one.len() < 3 || on_two.len() < 3 {
                continue;
            }
            for (e, c, a) in ordered_triples(&on_one) {
                for (b, f, d) in ordered_triples(&on_two) {
                    let cfg = PappusConfig::new(
                        l1.clone(),
                        e.clone(),
                        c.clone(),
                        a.clone(),
                        l2.clone(),
                        b.clone(),
                        f.clone(),
                        d.clone(),
                    )
                    .expect("enumerated points satisfy the hexagon hypotheses");
                    match pappus_check(&cfg) {
                        Ok(true) => report.tested += 1,
                        Ok(false) => {
                            report.tested += 1;
                            report.failures.push(cfg.witness());
                        }
                        Err(_) => report.rejected += 1,
                    }
                }
            }
        }
    }
}

/// Samples one valid Desargues configuration: rails from a random parallel
/// class, free points on them, and the primed triangle derived by parallel
/// transport so the hypotheses hold by construction.
pub(crate) fn sample_desargues(sampler: &mut Sampler) -> Option<DesarguesConfig> {
    let rail_a = sampler.line();
    let rail_b = rail_a.parallel_through(&sampler.point_off_line(&rail_a));
    let mut rail_c = rail_a.parallel_through(&sampler.point());
    for _ in 0..64 {
        if rail_c != rail_a && rail_c != rail_b {
            break;
        }
        rail_c = rail_a.parallel_through(&sampler.point());
    }
    if rail_c == rail_a || rail_c == rail_b {
        return None;
    }
    let a = sampler.point_on_line(&rail_a);
    let b = sampler.point_on_line(&rail_b);
    let c = sampler.point_on_line(&rail_c);
    let a_prime = sampler.point_on_line(&rail_a);
    let side_ab = Line::through(&a, &b).ok()?;
    let b_prime = Line::intersect(&side_ab.parallel_through(&a_prime), &rail_b).point()?;
    let side_bc = Line::through(&b, &c).ok()?;
    let c_prime = Line::intersect(&side_bc.parallel_through(&b_prime), &rail_c).point()?;
    DesarguesConfig::new(rail_a, rail_b, rail_c, a, b, c, a_prime, b_prime, c_prime).ok()
}

/// Samples one valid Pappus hexagon on two random distinct lines, avoiding
/// their shared point if they cross.
pub(crate) fn sample_pappus(sampler: &mut Sampler) -> Option<PappusConfig> {
    let line_one = sampler.line();
    let mut line_two = sampler.line();
    for _ in 0..64 {
        if line_two != line_one {
            break;
        }
        line_two = sampler.line();
    }
    if line_two == line_one {
        return None;
    }
    let mut pick = |own: &Line, other: &Line| -> Option<Vec<Point>> {
        let mut out: Vec<Point> = Vec::with_capacity(3);
        for _ in 0..256 {
            let p = sampler.point_on_line(own);
            if !other.contains(&p) && !out.contains(&p) {
                out.push(p);
                if out.len() == 3 {
                    return Some(out);
                }
            }
        }
        None
    };
    let first = pick(&line_one, &line_two)?;
    let second = pick(&line_two, &line_one)?;
    let [e, c, a] = <[Point; 3]>::try_from(first).ok()?;
    let [b, f, d] = <[Point; 3]>::try_from(second).ok()?;
    PappusConfig::new(line_one, e, c, a, line_two, b, f, d).ok()
}

/// Searches `budget` configurations of the given kind over the model:
/// exhaustively when the finite plane fits inside the budget, otherwise by
/// seeded sampling (each attempt counts toward the budget; invalid or
/// degenerate candidates count as rejected).
pub fn configuration_search(
    model: PlaneModel,
    kind: ConfigKind,
    budget: u64,
    seed: u64,
) -> SearchReport {
    let mut report = SearchReport {
        kind,
        model: model.ring().label(),
        mode: "sampled".to_string(),
        seed,
        tested: 0,
        rejected: 0,
        failures: Vec::new(),
    };
    if let crate::scalar::RingKind::PrimeField(p) = model.ring().kind() {
        if exhaustive_total(p, kind) <= budget as u128 {
            report.mode = "exhaustive".to_string();
            match kind {
                ConfigKind::Desargues => search_desargues_exhaustive(&model, &mut report),
                ConfigKind::Pappus => search_pappus_exhaustive(&model, &mut report),
            }
            return report;
        }
    }
    let mut sampler = Sampler::new(model.ring(), seed);
    for _ in 0..budget {
        match kind {
            ConfigKind::Desargues => match sample_desargues(&mut sampler) {
                Some(cfg) => {
                    report.tested += 1;
                    if !desargues_check(&cfg) {
                        report.failures.push(cfg.witness());
                    }
                }
                None => report.rejected += 1,
            },
            ConfigKind::Pappus => match sample_pappus(&mut sampler) {
                Some(cfg) => match pappus_check(&cfg) {
                    Ok(true) => report.tested += 1,
                    Ok(false) => {
                        report.tested += 1;
                        report.failures.push(cfg.witness());
                    }
                    Err(_) => report.rejected += 1,
                },
                None => report.rejected += 1,
            },
        }
    }
    report
}
