//! Betweenness and order on lines of the rational model.
//!
//! `[A,B,C]` means `B` lies strictly between `A` and `C`; it is evaluated by
//! comparing canonical line parameters and is only available over ordered
//! scalars (the rationals here — finite fields and quaternions reject order
//! queries instead of fabricating one). On top of it sit the four line-order
//! axioms with their two companion propositions, the sign partition of a
//! framed line into `K₋ ∪ {O} ∪ K₊`, closure checks for the positive cone
//! under the *constructed* sum and product, and direction reports for
//! parallel projections and translations. All checks return reports with
//! counterexample witnesses rather than panicking, so the verification
//! harness can surface failures verbatim.

use std::cmp::Ordering as CmpOrdering;

use serde::Serialize;
use thiserror::Error;

use crate::line_algebra::{ConstructError, Frame, InvSide};
use crate::maps::{MapError, ParallelProjection, Translation};
use crate::plane::{Line, Point};
use crate::sampling::{subseed, Sampler};
use crate::scalar::{RingKind, Scalar, ScalarError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OrderError {
    #[error("order is not available over {0}")]
    Unordered(RingKind),
    #[error("point {0} is not on the line")]
    NotOnLine(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Map(#[from] MapError),
}

fn require_on_line(line: &Line, p: &Point) -> Result<(), OrderError> {
    if line.contains(p) {
        Ok(())
    } else {
        Err(OrderError::NotOnLine(p.to_string()))
    }
}

fn parameter(line: &Line, p: &Point) -> Result<Scalar, OrderError> {
    let ring = line.descriptor();
    if !ring.is_ordered() {
        return Err(OrderError::Unordered(ring.kind()));
    }
    require_on_line(line, p)?;
    Ok(line.parameter_of(p))
}

/// Strict betweenness `[A,B,C]` on a line: true iff the canonical parameters
/// satisfy `t_A < t_B < t_C` or `t_C < t_B < t_A`. Coincident points never
/// satisfy it.
pub fn between(line: &Line, a: &Point, b: &Point, c: &Point) -> Result<bool, OrderError> {
    let ta = parameter(line, a)?;
    let tb = parameter(line, b)?;
    let tc = parameter(line, c)?;
    let left = ta.cmp_ord(&tb)?;
    let right = tb.cmp_ord(&tc)?;
    Ok(matches!(
        (left, right),
        (CmpOrdering::Less, CmpOrdering::Less)
            | (CmpOrdering::Greater, CmpOrdering::Greater)
    ))
}

/// `B` and `C` lie on the same side of `pivot`: exactly one of
/// `[pivot,B,C]`, `[pivot,C,B]` holds.
pub fn same_side(line: &Line, pivot: &Point, b: &Point, c: &Point) -> Result<bool, OrderError> {
    let one = between(line, pivot, b, c)?;
    let two = between(line, pivot, c, b)?;
    Ok(one ^ two)
}

/// The sign of an on-line point relative to a frame.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum SignClass {
    Negative,
    Zero,
    Positive,
}

/// Partitions the framed line: `Zero` iff `X = O`; `Positive` iff `X = I` or
/// `[O,X,I]` or `[O,I,X]`; `Negative` iff `[X,O,I]`.
pub fn sign_classify(frame: &Frame, x: &Point) -> Result<SignClass, OrderError> {
    let line = frame.line();
    let o = frame.origin();
    let i = frame.unit();
    require_on_line(line, x)?;
    if x == o {
        return Ok(SignClass::Zero);
    }
    if x == i || between(line, o, x, i)? || between(line, o, i, x)? {
        return Ok(SignClass::Positive);
    }
    if between(line, x, o, i)? {
        return Ok(SignClass::Negative);
    }
    unreachable!("the three sign classes partition the line")
}

/// One named check inside a report: how many tuples actually exercised it
/// (satisfied its premise) and the first counterexample, if any.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub id: String,
    pub description: String,
    pub evaluated: u64,
    pub failures: u64,
    pub counterexample: Option<String>,
}

impl CheckReport {
    fn new(id: &str, description: &str) -> CheckReport {
        CheckReport {
            id: id.to_string(),
            description: description.to_string(),
            evaluated: 0,
            failures: 0,
            counterexample: None,
        }
    }

    fn record(&mut self, ok: bool, witness: impl Fn() -> String) {
        self.evaluated += 1;
        if !ok {
            self.failures += 1;
            if self.counterexample.is_none() {
                self.counterexample = Some(witness());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// Result of running the line-order axioms and their companion propositions
/// over sampled tuples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub line: String,
    pub samples: u64,
    pub checks: Vec<CheckReport>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }
}

const PERMS4: [[usize; 4]; 24] = [
    [0, 1, 2, 3],
    [0, 1, 3, 2],
    [0, 2, 1, 3],
    [0, 2, 3, 1],
    [0, 3, 1, 2],
    [0, 3, 2, 1],
    [1, 0, 2, 3],
    [1, 0, 3, 2],
    [1, 2, 0, 3],
    [1, 2, 3, 0],
    [1, 3, 0, 2],
    [1, 3, 2, 0],
    [2, 0, 1, 3],
    [2, 0, 3, 1],
    [2, 1, 0, 3],
    [2, 1, 3, 0],
    [2, 3, 0, 1],
    [2, 3, 1, 0],
    [3, 0, 1, 2],
    [3, 0, 2, 1],
    [3, 1, 0, 2],
    [3, 1, 2, 0],
    [3, 2, 0, 1],
    [3, 2, 1, 0],
];

/// Checks the four line-order axioms, the exclusion and chaining
/// propositions, and same-side transitivity on `samples` random quadruples of
/// distinct points of `line`. Every permutation of each quadruple is tried,
/// so the implication premises are genuinely hit.
pub fn check_order_axioms(line: &Line, seed: u64, samples: u64) -> Result<AxiomReport, OrderError> {
    let ring = line.descriptor();
    if !ring.is_ordered() {
        return Err(OrderError::Unordered(ring.kind()));
    }
    let mut lo1 = CheckReport::new("Lo.1", "[A,B,C] implies [C,B,A]");
    let mut lo2 = CheckReport::new(
        "Lo.2",
        "distinct triples satisfy exactly one of [A,B,C], [B,C,A], [C,A,B]",
    );
    let mut lo3 = CheckReport::new(
        "Lo.3",
        "[A,B,C] and [B,C,D] imply [A,B,D] and [A,C,D]",
    );
    let mut lo4 = CheckReport::new(
        "Lo.4",
        "[A,B,C] and [C,B,D] imply [D,A,B] or [A,D,B]",
    );
    let mut exclusion = CheckReport::new(
        "Prop-exclusion",
        "two of [B,A,C], [C,A,D], [D,A,B] exclude the third",
    );
    let mut chaining = CheckReport::new(
        "Prop-chaining",
        "[A,B,C] and [A,C,D] imply [A,B,D] and [B,C,D]",
    );
    let mut side_trans = CheckReport::new(
        "same-side-transitivity",
        "B,C same side of A and C,D same side of A imply B,D same side of A",
    );

    let mut sampler = Sampler::new(ring, seed);
    let btw = |a: &Point, b: &Point, c: &Point| between(line, a, b, c);
    for _ in 0..samples {
        let pts = sampler.distinct_points_on_line(line, 4);
        let witness = |perm: &[usize; 4]| {
            let named: Vec<String> = ["A", "B", "C", "D"]
                .iter()
                .zip(perm.iter())
                .map(|(n, &i)| format!("{n}={}", pts[i]))
                .collect();
            format!("on {line}: {}", named.join(", "))
        };
        for perm in &PERMS4 {
            let [a, b, c, d] = [&pts[perm[0]], &pts[perm[1]], &pts[perm[2]], &pts[perm[3]]];
            if btw(a, b, c)? {
                lo1.record(btw(c, b, a)?, || witness(perm));
                if btw(b, c, d)? {
                    lo3.record(btw(a, b, d)? && btw(a, c, d)?, || witness(perm));
                }
                if btw(c, b, d)? {
                    lo4.record(btw(d, a, b)? || btw(a, d, b)?, || witness(perm));
                }
                if btw(a, c, d)? {
                    chaining.record(btw(a, b, d)? && btw(b, c, d)?, || witness(perm));
                }
            }
            let hits = [btw(b, a, c)?, btw(c, a, d)?, btw(d, a, b)?]
                .iter()
                .filter(|&&h| h)
                .count();
            exclusion.record(hits <= 2, || witness(perm));
            if same_side(line, a, b, c)? && same_side(line, a, c, d)? {
                side_trans.record(same_side(line, a, b, d)?, || witness(perm));
            }
        }
        // Lo.2 once per unordered triple of the quadruple
        for skip in 0..4 {
            let tri: Vec<&Point> = (0..4).filter(|&i| i != skip).map(|i| &pts[i]).collect();
            let placements = [
                btw(tri[0], tri[1], tri[2])?,
                btw(tri[1], tri[2], tri[0])?,
                btw(tri[2], tri[0], tri[1])?,
            ];
            let count = placements.iter().filter(|&&h| h).count();
            lo2.record(count == 1, || {
                format!("on {line}: A={}, B={}, C={}", tri[0], tri[1], tri[2])
            });
        }
    }

    Ok(AxiomReport {
        line: line.to_string(),
        samples,
        checks: vec![lo1, lo2, lo3, lo4, exclusion, chaining, side_trans],
    })
}

/// Result of the positive-cone closure checks on a framed line.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConeReport {
    pub line: String,
    pub origin: String,
    pub unit: String,
    pub samples: u64,
    pub checks: Vec<CheckReport>,
}

impl ConeReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckReport::passed)
    }
}

/// Checks closure of the sign classes under the ruler constructions: sums and
/// products (both factor orders) of positives stay positive, negation swaps
/// the cone, and sums of negatives stay negative. All arithmetic is the
/// geometric kind; only the classification reads parameters.
pub fn check_positive_cone(frame: &Frame, seed: u64, samples: u64) -> Result<ConeReport, OrderError> {
    let ring = frame.ring();
    if !ring.is_ordered() {
        return Err(OrderError::Unordered(ring.kind()));
    }
    let mut add_closure = CheckReport::new("add-closure", "A, C positive implies A + C positive");
    let mut mul_closure = CheckReport::new(
        "mul-closure",
        "A, C positive implies both A * C and C * A positive",
    );
    let mut inv_positive = CheckReport::new(
        "inv-positive",
        "A positive implies the inverse of A is positive",
    );
    let mut neg_swap = CheckReport::new(
        "neg-to-negative",
        "A positive implies O - A negative, and back",
    );
    let mut neg_add = CheckReport::new(
        "negative-add-closure",
        "A, C negative implies A + C negative",
    );

    let mut sampler = Sampler::new(ring, seed);
    for round in 0..samples {
        let ta = sampler.positive_rational();
        let tc = sampler.positive_rational();
        let a = frame.from_parameter(&ta);
        let c = frame.from_parameter(&tc);
        let b = sampler.point_off_line(frame.line());
        let witness = |what: &str, p: &Point| {
            format!("A={a}, C={c}, B={b}: {what} = {p}")
        };

        let (sum, _) = frame.add_with(&a, &c, &b)?;
        add_closure.record(
            sign_classify(frame, &sum)? == SignClass::Positive,
            || witness("A+C", &sum),
        );

        let (prod, _) = frame.mul_with(&a, &c, &b)?;
        let (prod_rev, _) = frame.mul_with(&c, &a, &b)?;
        mul_closure.record(
            sign_classify(frame, &prod)? == SignClass::Positive
                && sign_classify(frame, &prod_rev)? == SignClass::Positive,
            || witness("A*C", &prod),
        );

        // alternate the constructed side so both inverses see samples
        let side = if round % 2 == 0 {
            InvSide::Left
        } else {
            InvSide::Right
        };
        let (inv, _) = frame.inv_with(&a, side, &b)?;
        inv_positive.record(
            sign_classify(frame, &inv)? == SignClass::Positive,
            || witness("inv(A)", &inv),
        );

        let (neg_a, _) = frame.neg_with(&a, &b)?;
        let (neg_c, _) = frame.neg_with(&c, &b)?;
        let (back, _) = frame.neg_with(&neg_a, &b)?;
        neg_swap.record(
            sign_classify(frame, &neg_a)? == SignClass::Negative
                && sign_classify(frame, &back)? == SignClass::Positive,
            || witness("-A", &neg_a),
        );

        let (neg_sum, _) = frame.add_with(&neg_a, &neg_c, &b)?;
        neg_add.record(
            sign_classify(frame, &neg_sum)? == SignClass::Negative,
            || witness("(-A)+(-C)", &neg_sum),
        );
    }

    Ok(ConeReport {
        line: frame.line().to_string(),
        origin: frame.origin().to_string(),
        unit: frame.unit().to_string(),
        samples,
        checks: vec![add_closure, mul_closure, inv_positive, neg_swap, neg_add],
    })
}

/// How a map acted on the order of a line.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum OrderVerdict {
    Preserving,
    Reversing,
    /// Some pairs kept their order and others flipped: a genuine failure.
    Mixed,
}

/// Result of checking a map's effect on line order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrderReport {
    pub map: String,
    pub source: String,
    pub triples: u64,
    pub preserved_pairs: u64,
    pub reversed_pairs: u64,
    pub verdict: OrderVerdict,
    pub betweenness_failures: u64,
    pub counterexample: Option<String>,
}

impl OrderReport {
    pub fn passed(&self) -> bool {
        self.betweenness_failures == 0 && self.verdict != OrderVerdict::Mixed
    }
}

fn order_report_for(
    map_label: String,
    source: &Line,
    target: &Line,
    mut image_of: impl FnMut(&Point) -> Result<Point, OrderError>,
    seed: u64,
    triples: u64,
) -> Result<OrderReport, OrderError> {
    let ring = source.descriptor();
    if !ring.is_ordered() {
        return Err(OrderError::Unordered(ring.kind()));
    }
    let mut sampler = Sampler::new(ring, seed);
    let mut preserved = 0u64;
    let mut reversed = 0u64;
    let mut betweenness_failures = 0u64;
    let mut counterexample = None;
    for _ in 0..triples {
        let pts = sampler.distinct_points_on_line(source, 3);
        let images: Vec<Point> = pts
            .iter()
            .map(|p| image_of(p))
            .collect::<Result<_, _>>()?;
        // pair direction: does the map keep or flip parameter order?
        for (i, j) in [(0usize, 1usize), (0, 2), (1, 2)] {
            let before = source
                .parameter_of(&pts[i])
                .cmp_ord(&source.parameter_of(&pts[j]))?;
            let after = target
                .parameter_of(&images[i])
                .cmp_ord(&target.parameter_of(&images[j]))?;
            if before == after {
                preserved += 1;
            } else {
                reversed += 1;
            }
        }
        // betweenness must transport regardless of direction
        for perm in [[0usize, 1, 2], [1, 0, 2], [0, 2, 1]] {
            let (a, b, c) = (&pts[perm[0]], &pts[perm[1]], &pts[perm[2]]);
            if between(source, a, b, c)? {
                let mapped = between(
                    target,
                    &images[perm[0]],
                    &images[perm[1]],
                    &images[perm[2]],
                )?;
                if !mapped {
                    betweenness_failures += 1;
                    if counterexample.is_none() {
                        counterexample = Some(format!(
                            "[{a}, {b}, {c}] holds on {source} but its image does not"
                        ));
                    }
                }
            }
        }
    }
    let verdict = match (preserved, reversed) {
        (_, 0) => OrderVerdict::Preserving,
        (0, _) => OrderVerdict::Reversing,
        _ => {
            if counterexample.is_none() {
                counterexample = Some(format!(
                    "{preserved} pairs kept their order, {reversed} flipped"
                ));
            }
            OrderVerdict::Mixed
        }
    };
    Ok(OrderReport {
        map: map_label,
        source: source.to_string(),
        triples,
        preserved_pairs: preserved,
        reversed_pairs: reversed,
        verdict,
        betweenness_failures,
        counterexample,
    })
}

/// Samples betweenness triples on the projection's source and reports whether
/// the projection preserves or reverses line order; a mix is a failure.
pub fn check_projection_order(
    projection: &ParallelProjection,
    seed: u64,
    triples: u64,
) -> Result<OrderReport, OrderError> {
    let label = format!(
        "projection {} -> {} along {}",
        projection.source(),
        projection.target(),
        projection.direction()
    );
    let source = projection.source().clone();
    let target = projection.target().clone();
    order_report_for(
        label,
        &source,
        &target,
        |p| projection.project(p).map_err(OrderError::from),
        seed,
        triples,
    )
}

/// Samples betweenness triples on `line` and reports how the translation
/// moves them onto the image line; translations must preserve.
pub fn check_translation_order(
    translation: &Translation,
    line: &Line,
    seed: u64,
    triples: u64,
) -> Result<OrderReport, OrderError> {
    let (dx, dy) = translation.displacement();
    let label = format!("translation by ({dx}, {dy})");
    let target = translation.image_line(line);
    order_report_for(
        label,
        line,
        &target,
        |p| Ok(translation.apply(p)),
        seed,
        triples,
    )
}

/// Checks the two-stage decomposition of a translation along its own line:
/// both off-line projection stages compose back to the translation, and the
/// composite preserves order.
pub fn check_two_stage_order(
    translation: &Translation,
    line: &Line,
    off: &Point,
    seed: u64,
    triples: u64,
) -> Result<OrderReport, OrderError> {
    let (first, second) = crate::maps::two_stage_along_line(translation, line, off)?;
    let (dx, dy) = translation.displacement();
    let label = format!("two-stage translation by ({dx}, {dy}) via {off}");
    order_report_for(
        label,
        line,
        line,
        |p| {
            let mid = first.project(p)?;
            let out = second.project(&mid)?;
            debug_assert_eq!(out, translation.apply(p));
            Ok(out)
        },
        subseed(seed, 1),
        triples,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::plane::PlaneModel;
    use crate::scalar::RingDescriptor;

    fn x_axis() -> Line {
        let ring = RingDescriptor::rational();
        Line::Sloped {
            m: ring.zero(),
            b: ring.zero(),
        }
    }

    fn at(x: i64) -> Point {
        let ring = RingDescriptor::rational();
        Point::new(ring.int(x), ring.zero())
    }

    fn at_frac(n: i64, d: i64) -> Point {
        let ring = RingDescriptor::rational();
        Point::new(Scalar::rational(n, d), ring.zero())
    }

    #[test]
    fn betweenness_on_the_axis() {
        let l = x_axis();
        assert!(between(&l, &at(0), &at_frac(1, 2), &at(1)).unwrap());
        assert!(between(&l, &at(1), &at_frac(1, 2), &at(0)).unwrap());
        assert!(!between(&l, &at(0), &at(2), &at(1)).unwrap());
        // strictness: coincident points are never between
        assert!(!between(&l, &at(0), &at(0), &at(1)).unwrap());
        assert!(!between(&l, &at(0), &at(1), &at(1)).unwrap());
    }

    #[test]
    fn order_queries_reject_unordered_models() {
        let model = PlaneModel::prime_field(5).unwrap();
        let ring = model.ring();
        let l = Line::Sloped {
            m: ring.zero(),
            b: ring.zero(),
        };
        let p = |x: i64| Point::new(ring.int(x), ring.zero());
        assert!(matches!(
            between(&l, &p(0), &p(1), &p(2)),
            Err(OrderError::Unordered(RingKind::PrimeField(5)))
        ));
        let off = Point::new(RingDescriptor::rational().int(0), RingDescriptor::rational().int(1));
        assert!(matches!(
            between(&x_axis(), &off, &at(1), &at(2)),
            Err(OrderError::NotOnLine(_))
        ));
    }

    #[test]
    fn same_side_of_a_pivot() {
        let l = x_axis();
        assert!(same_side(&l, &at(0), &at(1), &at(2)).unwrap());
        assert!(!same_side(&l, &at(0), &at(-1), &at(2)).unwrap());
        assert!(same_side(&l, &at(0), &at(-1), &at(-3)).unwrap());
    }

    #[test]
    fn sign_partition_on_a_bounded_grid() {
        let frame = Frame::unit_x_axis(RingDescriptor::rational());
        assert_eq!(
            sign_classify(&frame, frame.origin()).unwrap(),
            SignClass::Zero
        );
        assert_eq!(sign_classify(&frame, &at(-3)).unwrap(), SignClass::Negative);
        assert_eq!(
            sign_classify(&frame, frame.unit()).unwrap(),
            SignClass::Positive
        );
        // every grid point lands in exactly one class, matching its parameter sign
        for n in -24..=24 {
            let p = at_frac(n, 8);
            let class = sign_classify(&frame, &p).unwrap();
            let expected = match n.cmp(&0) {
                CmpOrdering::Less => SignClass::Negative,
                CmpOrdering::Equal => SignClass::Zero,
                CmpOrdering::Greater => SignClass::Positive,
            };
            assert_eq!(class, expected, "x = {n}/8");
        }
    }

    #[test]
    fn sign_classes_follow_any_frame() {
        // an oblique frame with a reversed unit direction
        let ring = RingDescriptor::rational();
        let line = Line::Sloped {
            m: Scalar::rational(1, 2),
            b: ring.int(1),
        };
        let o = line.point_at(&ring.int(2));
        let i = line.point_at(&ring.int(-1));
        let frame = Frame::new(line.clone(), o, i).unwrap();
        for t in [-6i64, -3, -1, 0, 1, 2, 5] {
            let p = frame.from_parameter(&ring.int(t));
            let expected = match t.cmp(&0) {
                CmpOrdering::Less => SignClass::Negative,
                CmpOrdering::Equal => SignClass::Zero,
                CmpOrdering::Greater => SignClass::Positive,
            };
            assert_eq!(sign_classify(&frame, &p).unwrap(), expected, "t = {t}");
        }
    }

    #[test]
    fn order_axioms_hold_on_sampled_quadruples() {
        for line in [
            x_axis(),
            Line::Sloped {
                m: Scalar::rational(-3, 7),
                b: Scalar::rational(2, 5),
            },
            Line::Vertical {
                c: Scalar::rational(1, 3),
            },
        ] {
            let report = check_order_axioms(&line, 11, 300).unwrap();
            assert!(report.passed(), "failures on {line}: {report:?}");
            // every check must actually have been exercised
            for check in &report.checks {
                assert!(check.evaluated > 0, "{} was never exercised", check.id);
            }
        }
    }

    #[test]
    fn cone_closure_under_the_constructions() {
        let frame = Frame::unit_x_axis(RingDescriptor::rational());
        let report = check_positive_cone(&frame, 7, 300).unwrap();
        assert!(report.passed(), "{report:?}");
        for check in &report.checks {
            assert_eq!(check.evaluated, 300, "{}", check.id);
        }

        // frozen instances
        let b = frame.choose_auxiliary(0);
        let (sum, _) = frame.add_with(&at(2), &at(3), &b).unwrap();
        assert_eq!(sum, at(5));
        assert_eq!(sign_classify(&frame, &sum).unwrap(), SignClass::Positive);
        let (prod, _) = frame
            .mul_with(&at_frac(1, 2), &at_frac(1, 3), &b)
            .unwrap();
        assert_eq!(prod, at_frac(1, 6));
        assert_eq!(sign_classify(&frame, &prod).unwrap(), SignClass::Positive);
        let (neg, _) = frame.neg_with(&at(2), &b).unwrap();
        assert_eq!(neg, at(-2));
        assert_eq!(sign_classify(&frame, &neg).unwrap(), SignClass::Negative);
    }

    #[test]
    fn cone_report_serializes_with_witnesses() {
        let frame = Frame::unit_x_axis(RingDescriptor::rational());
        let report = check_positive_cone(&frame, 1, 5).unwrap();
        let json = serde_json::to_value(&report).unwrap();
        assert_eq!(json["checks"][0]["id"], "add-closure");
        assert_eq!(json["checks"][0]["failures"], 0);
    }

    #[test]
    fn vertical_projection_preserves_order() {
        let ring = RingDescriptor::rational();
        let source = x_axis();
        let target = Line::Sloped {
            m: ring.zero(),
            b: ring.one(),
        };
        let direction = Line::Vertical { c: ring.zero() };
        let pp = ParallelProjection::new(source, target, direction).unwrap();
        let report = check_projection_order(&pp, 5, 200).unwrap();
        assert!(report.passed());
        assert_eq!(report.verdict, OrderVerdict::Preserving);
        assert_eq!(report.reversed_pairs, 0);
    }

    #[test]
    fn a_projection_can_reverse_order_globally() {
        // project the x-axis onto the y-axis along the diagonal direction:
        // (a, 0) lands on (0, -a), flipping every pair the same way
        let ring = RingDescriptor::rational();
        let source = x_axis();
        let target = Line::Vertical { c: ring.zero() };
        let direction = Line::Sloped {
            m: ring.one(),
            b: ring.zero(),
        };
        let pp = ParallelProjection::new(source, target, direction).unwrap();
        let report = check_projection_order(&pp, 5, 200).unwrap();
        assert!(report.passed());
        assert_eq!(report.verdict, OrderVerdict::Reversing);
        assert_eq!(report.preserved_pairs, 0);
        assert_eq!(report.betweenness_failures, 0);
    }

    #[test]
    fn translations_preserve_order() {
        let ring = RingDescriptor::rational();
        let t = Translation::new(ring.int(1), ring.int(3));
        let report = check_translation_order(&t, &x_axis(), 9, 200).unwrap();
        assert!(report.passed());
        assert_eq!(report.verdict, OrderVerdict::Preserving);
    }

    #[test]
    fn two_stage_translation_preserves_order() {
        let ring = RingDescriptor::rational();
        // a translation along the x-axis itself, decomposed through an
        // off-line point
        let t = Translation::new(ring.int(2), ring.zero());
        let off = Point::new(ring.int(1), ring.int(2));
        let report = check_two_stage_order(&t, &x_axis(), &off, 13, 100).unwrap();
        assert!(report.passed());
        assert_eq!(report.verdict, OrderVerdict::Preserving);
    }

    #[test]
    fn axiom_report_serializes() {
        let report = check_order_axioms(&x_axis(), 3, 5).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        assert!(json.contains("\"Lo.1\""));
        assert!(json.contains("same-side-transitivity"));
    }
}
