//! Suite runners: every axiom, lemma, and theorem the kernel implements is
//! bound to an executable check through a fixed claim registry, and each run
//! produces a uniform, serializable [`SuiteReport`].
//!
//! A claim is owned by exactly one suite. Suites are applicable only to
//! models that can carry them (betweenness needs an ordered coordinate ring,
//! exhaustive enumeration needs a finite one); requesting an inapplicable
//! pairing directly is an error, while the `all` bundle records the skip and
//! runs what remains. Reports with zero failures reproduce bit-identically
//! for the same seed via [`SuiteReport::canonical_json`], which drops the
//! wall-clock field.

use std::collections::BTreeMap;
use std::fmt;
use std::time::Instant;

use serde::Serialize;
use serde_json::Value;
use thiserror::Error;

use crate::configurations::{
    affine_pappus_check, configuration_search, exhaustive_total, sample_pappus, ConfigKind,
    SearchReport,
};
use crate::line_algebra::{ConstructError, Frame, InvSide};
use crate::maps::{MapError, ParallelProjection, Translation};
use crate::ordering::{
    check_order_axioms, check_positive_cone, check_projection_order, check_translation_order,
    check_two_stage_order, CheckReport, OrderError, OrderVerdict,
};
use crate::plane::{collinear, Line, PlaneError, PlaneModel, Point};
use crate::sampling::{subseed, Sampler};
use crate::scalar::{RingDescriptor, RingKind, ScalarError};

/// Version stamp embedded in every report; bump on breaking shape changes.
pub const REPORT_SCHEMA_VERSION: u32 = 1;

/// Upper bound on the candidates an exhaustive suite run may visit. Requests
/// beyond it are rejected as mismatches instead of running for hours.
const EXHAUSTIVE_CAP: u128 = 2_000_000;

/// At most this many failure witnesses are kept per claim.
const WITNESS_CAP: usize = 3;

#[derive(Debug, Error)]
pub enum VerifyError {
    #[error("suite `{suite}` cannot run over {model}: {reason}")]
    SuiteModelMismatch {
        suite: String,
        model: String,
        reason: String,
    },
    #[error("unknown suite `{0}` (expected one of: affine-axioms, desargues, pappus, order-axioms, skew-field, positive-cone, map-order, all)")]
    UnknownSuite(String),
    #[error(transparent)]
    Order(#[from] OrderError),
    #[error(transparent)]
    Construct(#[from] ConstructError),
    #[error(transparent)]
    Plane(#[from] PlaneError),
    #[error(transparent)]
    Map(#[from] MapError),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
}

/// The named verification suites; `All` bundles the other seven, skipping
/// the ones the model cannot carry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SuiteName {
    AffineAxioms,
    Desargues,
    Pappus,
    OrderAxioms,
    SkewField,
    PositiveCone,
    MapOrder,
    All,
}

impl SuiteName {
    /// The seven concrete suites, in the order `All` runs them.
    pub const BUNDLE: [SuiteName; 7] = [
        SuiteName::AffineAxioms,
        SuiteName::Desargues,
        SuiteName::Pappus,
        SuiteName::OrderAxioms,
        SuiteName::SkewField,
        SuiteName::PositiveCone,
        SuiteName::MapOrder,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SuiteName::AffineAxioms => "affine-axioms",
            SuiteName::Desargues => "desargues",
            SuiteName::Pappus => "pappus",
            SuiteName::OrderAxioms => "order-axioms",
            SuiteName::SkewField => "skew-field",
            SuiteName::PositiveCone => "positive-cone",
            SuiteName::MapOrder => "map-order",
            SuiteName::All => "all",
        }
    }

    pub fn parse(text: &str) -> Result<SuiteName, VerifyError> {
        match text {
            "affine-axioms" => Ok(SuiteName::AffineAxioms),
            "desargues" => Ok(SuiteName::Desargues),
            "pappus" => Ok(SuiteName::Pappus),
            "order-axioms" => Ok(SuiteName::OrderAxioms),
            "skew-field" => Ok(SuiteName::SkewField),
            "positive-cone" => Ok(SuiteName::PositiveCone),
            "map-order" => Ok(SuiteName::MapOrder),
            "all" => Ok(SuiteName::All),
            other => Err(VerifyError::UnknownSuite(other.to_string())),
        }
    }
}

impl fmt::Display for SuiteName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// How a suite explores its claim space.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Seeded random sampling; `samples` is interpreted per claim family
    /// (tuples per probe line, configurations, triples, ...).
    Sampled { seed: u64, samples: u64 },
    /// Visit every candidate of the finite model.
    Exhaustive,
}

impl Mode {
    pub fn label(&self) -> String {
        match self {
            Mode::Sampled { seed, samples } => format!("sampled(seed={seed}, n={samples})"),
            Mode::Exhaustive => "exhaustive".to_string(),
        }
    }
}

/// Whether a registered claim can be run at all.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ClaimStatus {
    Testable,
    /// The statement presupposes an object no model here can furnish; it is
    /// registered so coverage accounting stays honest, and never executed.
    NotInstantiable,
}

/// Registry entry tying a stable claim id to its statement and owning suite.
#[derive(Debug, Clone, Copy)]
pub struct ClaimInfo {
    pub id: &'static str,
    pub statement: &'static str,
    pub suite: SuiteName,
    pub status: ClaimStatus,
}

const fn testable(id: &'static str, statement: &'static str, suite: SuiteName) -> ClaimInfo {
    ClaimInfo {
        id,
        statement,
        suite,
        status: ClaimStatus::Testable,
    }
}

/// Every claim the harness knows about. Each testable claim is executed by
/// exactly one suite; the two not-instantiable entries document statements
/// whose hypotheses no available model satisfies.
pub const CLAIM_REGISTRY: &[ClaimInfo] = &[
    testable(
        "affine-1",
        "two distinct points lie on exactly one line",
        SuiteName::AffineAxioms,
    ),
    testable(
        "affine-2",
        "for every line and point off it, exactly one parallel passes through the point",
        SuiteName::AffineAxioms,
    ),
    testable(
        "affine-3",
        "three non-collinear points exist",
        SuiteName::AffineAxioms,
    ),
    testable(
        "desargues",
        "two triangles on three parallel rails with two pairs of corresponding sides parallel have the third pair parallel",
        SuiteName::Desargues,
    ),
    testable(
        "pappus",
        "a hexagon zig-zagging between two lines has its three cross-joins meeting in collinear points",
        SuiteName::Pappus,
    ),
    testable(
        "affine-pappus",
        "the axis form of the hexagon condition agrees with the collinearity form on sampled hexagons",
        SuiteName::Pappus,
    ),
    testable(
        "finite-hexagon-closure",
        "the finite plane closes every hexagon: exhaustive enumeration finds no counterexample",
        SuiteName::Pappus,
    ),
    testable("Lo.1", "[A,B,C] implies [C,B,A]", SuiteName::OrderAxioms),
    testable(
        "Lo.2",
        "distinct collinear triples satisfy exactly one of [A,B,C], [B,C,A], [C,A,B]",
        SuiteName::OrderAxioms,
    ),
    testable(
        "Lo.3",
        "[A,B,C] and [B,C,D] imply [A,B,D] and [A,C,D]",
        SuiteName::OrderAxioms,
    ),
    testable(
        "Lo.4",
        "[A,B,C] and [C,B,D] imply [D,A,B] or [A,D,B]",
        SuiteName::OrderAxioms,
    ),
    testable(
        "Prop-exclusion",
        "two of [B,A,C], [C,A,D], [D,A,B] exclude the third",
        SuiteName::OrderAxioms,
    ),
    testable(
        "Prop-chaining",
        "[A,B,C] and [A,C,D] imply [A,B,D] and [B,C,D]",
        SuiteName::OrderAxioms,
    ),
    testable(
        "same-side-transitivity",
        "B,C same side of A and C,D same side of A imply B,D same side of A",
        SuiteName::OrderAxioms,
    ),
    testable(
        "add-closure",
        "A, C positive implies A + C positive",
        SuiteName::PositiveCone,
    ),
    testable(
        "mul-closure",
        "A, C positive implies both A * C and C * A positive",
        SuiteName::PositiveCone,
    ),
    testable(
        "inv-positive",
        "A positive implies the inverse of A is positive",
        SuiteName::PositiveCone,
    ),
    testable(
        "neg-to-negative",
        "A positive implies O - A negative, and back",
        SuiteName::PositiveCone,
    ),
    testable(
        "negative-add-closure",
        "A, C negative implies A + C negative",
        SuiteName::PositiveCone,
    ),
    testable(
        "projection-order",
        "a parallel projection between lines is globally order-preserving or globally order-reversing, never mixed, and transports betweenness",
        SuiteName::MapOrder,
    ),
    testable(
        "translation-order",
        "a translation preserves betweenness onto the image line",
        SuiteName::MapOrder,
    ),
    testable(
        "two-stage-order",
        "a translation along a line equals its two off-line projection stages composed, and the composite preserves order",
        SuiteName::MapOrder,
    ),
    testable(
        "add-assoc",
        "(A + C) + E = A + (C + E) under the constructed addition",
        SuiteName::SkewField,
    ),
    testable(
        "add-comm",
        "A + C = C + A under the constructed addition",
        SuiteName::SkewField,
    ),
    testable(
        "add-neutral",
        "O is a two-sided neutral for the constructed addition",
        SuiteName::SkewField,
    ),
    testable(
        "add-inverse",
        "every A has an additive inverse, and subtraction inverts addition",
        SuiteName::SkewField,
    ),
    testable(
        "mul-assoc",
        "(A * C) * E = A * (C * E) under the constructed multiplication",
        SuiteName::SkewField,
    ),
    testable(
        "mul-neutral",
        "I is a two-sided neutral for the constructed multiplication",
        SuiteName::SkewField,
    ),
    testable(
        "mul-inverse",
        "every A distinct from O has a two-sided multiplicative inverse, equal on both sides",
        SuiteName::SkewField,
    ),
    testable(
        "distrib-left",
        "A * (C + E) = A * C + A * E",
        SuiteName::SkewField,
    ),
    testable(
        "distrib-right",
        "(A + C) * E = A * E + C * E",
        SuiteName::SkewField,
    ),
    testable(
        "b-independence",
        "the constructed sum and product do not depend on the auxiliary off-line point",
        SuiteName::SkewField,
    ),
    testable(
        "frame-independence",
        "matching parameters between two frames is an isomorphism of the constructed skew fields",
        SuiteName::SkewField,
    ),
    ClaimInfo {
        id: "finite-ordered-plane",
        statement: "a finite plane with an ordered line does not exist here: positives are closed under addition, so an ordered line has infinitely many points; only the separate facts are testable (finite implies hexagon closure, ordered implies cone closure)",
        suite: SuiteName::Pappus,
        status: ClaimStatus::NotInstantiable,
    },
    ClaimInfo {
        id: "finite-ordered-skew-field",
        statement: "a finite ordered skew field contradicts positive-cone closure (repeatedly adding I never returns to O), so no finite model instantiates the order suites",
        suite: SuiteName::PositiveCone,
        status: ClaimStatus::NotInstantiable,
    },
];

/// Looks a claim up by its stable id.
pub fn claim_info(id: &str) -> Option<&'static ClaimInfo> {
    CLAIM_REGISTRY.iter().find(|c| c.id == id)
}

/// One claim's outcome inside a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimCheck {
    pub claim: String,
    pub statement: String,
    pub tested: u64,
    pub failures: u64,
    pub witnesses: Vec<String>,
}

impl ClaimCheck {
    fn for_claim(id: &str) -> ClaimCheck {
        let info = claim_info(id).unwrap_or_else(|| panic!("claim `{id}` is not in the registry"));
        assert!(
            info.status == ClaimStatus::Testable,
            "claim `{id}` is registered as not instantiable and must not be executed"
        );
        ClaimCheck {
            claim: info.id.to_string(),
            statement: info.statement.to_string(),
            tested: 0,
            failures: 0,
            witnesses: Vec::new(),
        }
    }

    fn record(&mut self, ok: bool, witness: impl FnOnce() -> String) {
        self.tested += 1;
        if !ok {
            self.failures += 1;
            if self.witnesses.len() < WITNESS_CAP {
                self.witnesses.push(witness());
            }
        }
    }

    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

/// A suite the `all` bundle could not run on the requested model, and why.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SkippedSuite {
    pub suite: String,
    pub reason: String,
}

/// Uniform result of a suite run. `canonical_json` drops `wall_time_ms` so
/// zero-failure runs with the same seed serialize bit-identically.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub schema_version: u32,
    pub suite: String,
    pub model: String,
    pub mode: String,
    pub checks: Vec<ClaimCheck>,
    pub skipped: Vec<SkippedSuite>,
    pub wall_time_ms: u64,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(ClaimCheck::passed)
    }

    pub fn check(&self, claim: &str) -> Option<&ClaimCheck> {
        self.checks.iter().find(|c| c.claim == claim)
    }

    pub fn to_value(&self) -> Value {
        serde_json::to_value(self).expect("suite reports serialize")
    }

    /// Full pretty JSON, wall time included.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_value()).expect("JSON values print")
    }

    /// Pretty JSON without the wall-clock field: the reproducible form.
    pub fn canonical_json(&self) -> String {
        let mut value = self.to_value();
        if let Some(map) = value.as_object_mut() {
            map.remove("wall_time_ms");
        }
        serde_json::to_string_pretty(&value).expect("JSON values print")
    }
}

/// Validates a JSON value against the report shape, returning a
/// path-qualified message for the first violation.
pub fn validate_report_value(value: &Value) -> Result<(), String> {
    let obj = value
        .as_object()
        .ok_or_else(|| "report: expected a JSON object".to_string())?;
    const ROOT_KEYS: [&str; 7] = [
        "schema_version",
        "suite",
        "model",
        "mode",
        "checks",
        "skipped",
        "wall_time_ms",
    ];
    for key in obj.keys() {
        if !ROOT_KEYS.contains(&key.as_str()) {
            return Err(format!("report: unknown field `{key}`"));
        }
    }
    let version = obj
        .get("schema_version")
        .and_then(Value::as_u64)
        .ok_or_else(|| "schema_version: expected an unsigned integer".to_string())?;
    if version != u64::from(REPORT_SCHEMA_VERSION) {
        return Err(format!(
            "schema_version: expected {REPORT_SCHEMA_VERSION}, found {version}"
        ));
    }
    for field in ["suite", "model", "mode"] {
        let text = obj
            .get(field)
            .and_then(Value::as_str)
            .ok_or_else(|| format!("{field}: expected a string"))?;
        if text.is_empty() {
            return Err(format!("{field}: must not be empty"));
        }
    }
    let checks = obj
        .get("checks")
        .and_then(Value::as_array)
        .ok_or_else(|| "checks: expected an array".to_string())?;
    for (i, check) in checks.iter().enumerate() {
        let check = check
            .as_object()
            .ok_or_else(|| format!("checks[{i}]: expected an object"))?;
        const CHECK_KEYS: [&str; 5] = ["claim", "statement", "tested", "failures", "witnesses"];
        for key in check.keys() {
            if !CHECK_KEYS.contains(&key.as_str()) {
                return Err(format!("checks[{i}]: unknown field `{key}`"));
            }
        }
        let claim = check
            .get("claim")
            .and_then(Value::as_str)
            .ok_or_else(|| format!("checks[{i}].claim: expected a string"))?;
        if claim.is_empty() {
            return Err(format!("checks[{i}].claim: must not be empty"));
        }
        if !check.get("statement").is_some_and(Value::is_string) {
            return Err(format!("checks[{i}].statement: expected a string"));
        }
        for field in ["tested", "failures"] {
            if check.get(field).and_then(Value::as_u64).is_none() {
                return Err(format!(
                    "checks[{i}].{field}: expected an unsigned integer"
                ));
            }
        }
        let witnesses = check
            .get("witnesses")
            .and_then(Value::as_array)
            .ok_or_else(|| format!("checks[{i}].witnesses: expected an array"))?;
        if let Some(j) = witnesses.iter().position(|w| !w.is_string()) {
            return Err(format!("checks[{i}].witnesses[{j}]: expected a string"));
        }
    }
    let skipped = obj
        .get("skipped")
        .and_then(Value::as_array)
        .ok_or_else(|| "skipped: expected an array".to_string())?;
    for (i, entry) in skipped.iter().enumerate() {
        let entry = entry
            .as_object()
            .ok_or_else(|| format!("skipped[{i}]: expected an object"))?;
        for key in entry.keys() {
            if key != "suite" && key != "reason" {
                return Err(format!("skipped[{i}]: unknown field `{key}`"));
            }
        }
        for field in ["suite", "reason"] {
            if !entry.get(field).is_some_and(Value::is_string) {
                return Err(format!("skipped[{i}].{field}: expected a string"));
            }
        }
    }
    if let Some(wall) = obj.get("wall_time_ms") {
        if wall.as_u64().is_none() {
            return Err("wall_time_ms: expected an unsigned integer".to_string());
        }
    }
    Ok(())
}

/// Accumulates claim checks across a run; keyed by claim id so merged
/// reports come out sorted and deterministic.
#[derive(Default)]
struct ClaimTally {
    checks: BTreeMap<String, ClaimCheck>,
}

impl ClaimTally {
    fn check(&mut self, id: &str) -> &mut ClaimCheck {
        self.checks
            .entry(id.to_string())
            .or_insert_with(|| ClaimCheck::for_claim(id))
    }

    fn record(&mut self, id: &str, ok: bool, witness: impl FnOnce() -> String) {
        self.check(id).record(ok, witness);
    }

    fn absorb_ordering(&mut self, reports: &[CheckReport]) {
        for rep in reports {
            let check = self.check(&rep.id);
            check.tested += rep.evaluated;
            check.failures += rep.failures;
            if let Some(witness) = &rep.counterexample {
                if check.witnesses.len() < WITNESS_CAP {
                    check.witnesses.push(witness.clone());
                }
            }
        }
    }

    fn absorb_search(&mut self, id: &str, search: &SearchReport) {
        let check = self.check(id);
        check.tested += search.tested;
        check.failures += search.failures.len() as u64;
        for witness in &search.failures {
            if check.witnesses.len() >= WITNESS_CAP {
                break;
            }
            check.witnesses.push(witness.clone());
        }
    }

    fn merge_check(&mut self, other: ClaimCheck) {
        let check = self.check(&other.claim);
        check.tested += other.tested;
        check.failures += other.failures;
        for witness in other.witnesses {
            if check.witnesses.len() >= WITNESS_CAP {
                break;
            }
            check.witnesses.push(witness);
        }
    }

    fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    fn into_checks(self) -> Vec<ClaimCheck> {
        self.checks.into_values().collect()
    }
}

/// Why `suite` cannot run over `ring` in `mode`, or `None` if it can.
fn applicability_gap(suite: SuiteName, ring: &RingDescriptor, mode: Mode) -> Option<String> {
    match suite {
        SuiteName::OrderAxioms | SuiteName::PositiveCone | SuiteName::MapOrder => {
            if !ring.is_ordered() {
                return Some(format!(
                    "betweenness needs an ordered coordinate ring and {} carries no order",
                    ring.label()
                ));
            }
            if mode == Mode::Exhaustive {
                return Some(
                    "order checks sample an infinite ordered line; there is nothing finite to enumerate"
                        .to_string(),
                );
            }
            None
        }
        SuiteName::AffineAxioms | SuiteName::Desargues | SuiteName::Pappus | SuiteName::SkewField => {
            if mode != Mode::Exhaustive {
                return None;
            }
            match ring.kind() {
                RingKind::PrimeField(p) => {
                    let cost = exhaustive_suite_cost(suite, p);
                    if cost > EXHAUSTIVE_CAP {
                        Some(format!(
                            "exhaustive enumeration over {} would visit about {cost} candidates (cap {EXHAUSTIVE_CAP})",
                            ring.label()
                        ))
                    } else {
                        None
                    }
                }
                _ => Some(format!(
                    "exhaustive enumeration needs a finite coordinate ring and {} is infinite",
                    ring.label()
                )),
            }
        }
        SuiteName::All => None,
    }
}

/// Rough candidate count an exhaustive run of `suite` visits over GF(p).
fn exhaustive_suite_cost(suite: SuiteName, p: u64) -> u128 {
    let p = p as u128;
    let points = p * p;
    let lines = points + p;
    match suite {
        SuiteName::AffineAxioms => {
            points * (points - 1) / 2 * lines + lines * (points - p) * lines
        }
        SuiteName::Desargues => exhaustive_total(p as u64, ConfigKind::Desargues),
        SuiteName::Pappus => exhaustive_total(p as u64, ConfigKind::Pappus),
        SuiteName::SkewField => {
            let triples = points * p;
            let b_independence = (points - p) * points;
            let frames = p * (p - 1);
            let frame_pairs = frames * frames * points;
            5 * triples + 2 * b_independence + frame_pairs
        }
        _ => 0,
    }
}

/// Runs one suite (or the `all` bundle) over the model and returns its
/// report, with checks sorted by claim id.
pub fn run_suite(
    suite: SuiteName,
    model: &RingDescriptor,
    mode: Mode,
) -> Result<SuiteReport, VerifyError> {
    let start = Instant::now();
    let mut tally = ClaimTally::default();
    let mut skipped = Vec::new();
    match suite {
        SuiteName::All => {
            for sub in SuiteName::BUNDLE {
                match applicability_gap(sub, model, mode) {
                    Some(reason) => skipped.push(SkippedSuite {
                        suite: sub.as_str().to_string(),
                        reason,
                    }),
                    None => run_body(sub, model, mode, &mut tally)?,
                }
            }
            if tally.is_empty() {
                return Err(VerifyError::SuiteModelMismatch {
                    suite: SuiteName::All.as_str().to_string(),
                    model: model.label(),
                    reason: "every suite in the bundle is inapplicable to this model and mode"
                        .to_string(),
                });
            }
        }
        sub => {
            if let Some(reason) = applicability_gap(sub, model, mode) {
                return Err(VerifyError::SuiteModelMismatch {
                    suite: sub.as_str().to_string(),
                    model: model.label(),
                    reason,
                });
            }
            run_body(sub, model, mode, &mut tally)?;
        }
    }
    Ok(SuiteReport {
        schema_version: REPORT_SCHEMA_VERSION,
        suite: suite.as_str().to_string(),
        model: model.label(),
        mode: mode.label(),
        checks: tally.into_checks(),
        skipped,
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}

fn run_body(
    suite: SuiteName,
    ring: &RingDescriptor,
    mode: Mode,
    tally: &mut ClaimTally,
) -> Result<(), VerifyError> {
    match suite {
        SuiteName::AffineAxioms => run_affine_axioms(ring, mode, tally),
        SuiteName::Desargues => run_desargues(ring, mode, tally),
        SuiteName::Pappus => run_pappus(ring, mode, tally),
        SuiteName::OrderAxioms => run_order_axioms(ring, mode, tally),
        SuiteName::SkewField => run_skew_field(ring, mode, tally),
        SuiteName::PositiveCone => run_positive_cone(ring, mode, tally),
        SuiteName::MapOrder => run_map_order(ring, mode, tally),
        SuiteName::All => unreachable!("the bundle is expanded by run_suite"),
    }
}

fn run_affine_axioms(
    ring: &RingDescriptor,
    mode: Mode,
    tally: &mut ClaimTally,
) -> Result<(), VerifyError> {
    let o = Point::new(ring.zero(), ring.zero());
    let ex = Point::new(ring.one(), ring.zero());
    let ey = Point::new(ring.zero(), ring.one());
    tally.record("affine-3", !collinear(&o, &ex, &ey), || {
        format!("{o}, {ex}, {ey} came out collinear")
    });

    match mode {
        Mode::Exhaustive => {
            let plane = PlaneModel::new(ring.clone());
            let points = plane.enumerate_points()?;
            let lines = plane.enumerate_lines()?;
            for (i, p) in points.iter().enumerate() {
                for q in &points[i + 1..] {
                    let join = Line::through(p, q)?;
                    let hits = lines
                        .iter()
                        .filter(|l| l.contains(p) && l.contains(q))
                        .count();
                    let ok = join.contains(p) && join.contains(q) && hits == 1;
                    tally.record("affine-1", ok, || {
                        format!("points {p} and {q} lie on {hits} line(s)")
                    });
                }
            }
            for l in &lines {
                for p in points.iter().filter(|p| !l.contains(p)) {
                    let par = l.parallel_through(p);
                    let count = lines
                        .iter()
                        .filter(|m| m.contains(p) && m.parallel_to(l))
                        .count();
                    let ok = par.contains(p) && par.parallel_to(l) && count == 1;
                    tally.record("affine-2", ok, || {
                        format!("{count} parallel(s) to {l} pass through {p}")
                    });
                }
            }
        }
        Mode::Sampled { seed, samples } => {
            let mut sampler = Sampler::new(ring.clone(), seed);
            for _ in 0..samples {
                let p = sampler.point();
                let mut q = sampler.point();
                let mut spins = 0;
                while q == p && spins < 64 {
                    q = sampler.point();
                    spins += 1;
                }
                if q == p {
                    continue;
                }
                let join = Line::through(&p, &q)?;
                let mut ok = join.contains(&p) && join.contains(&q);
                let probe_point = sampler.point();
                if probe_point != p {
                    let probe = Line::through(&p, &probe_point)?;
                    if probe.contains(&q) {
                        ok = ok && probe == join;
                    }
                }
                tally.record("affine-1", ok, || {
                    format!("points {p} and {q} (probe through {probe_point})")
                });

                let l = sampler.line();
                let off = sampler.point_off_line(&l);
                let par = l.parallel_through(&off);
                let mut ok = par.contains(&off) && par.parallel_to(&l);
                let probe_point = sampler.point();
                if probe_point != off {
                    let probe = Line::through(&off, &probe_point)?;
                    if probe.parallel_to(&l) {
                        ok = ok && probe == par;
                    }
                }
                tally.record("affine-2", ok, || {
                    format!("parallels to {l} through {off} (probe through {probe_point})")
                });
            }
        }
    }
    Ok(())
}

fn run_desargues(
    ring: &RingDescriptor,
    mode: Mode,
    tally: &mut ClaimTally,
) -> Result<(), VerifyError> {
    let plane = PlaneModel::new(ring.clone());
    let search = match mode {
        Mode::Exhaustive => {
            let RingKind::PrimeField(p) = ring.kind() else {
                unreachable!("applicability admits only finite rings here");
            };
            let budget = exhaustive_total(p, ConfigKind::Desargues) as u64;
            configuration_search(plane, ConfigKind::Desargues, budget, 0)
        }
        Mode::Sampled { seed, samples } => {
            configuration_search(plane, ConfigKind::Desargues, samples, seed)
        }
    };
    tally.absorb_search("desargues", &search);
    Ok(())
}

fn run_pappus(
    ring: &RingDescriptor,
    mode: Mode,
    tally: &mut ClaimTally,
) -> Result<(), VerifyError> {
    let plane = PlaneModel::new(ring.clone());
    match mode {
        Mode::Exhaustive => {
            let RingKind::PrimeField(p) = ring.kind() else {
                unreachable!("applicability admits only finite rings here");
            };
            let budget = exhaustive_total(p, ConfigKind::Pappus) as u64;
            let search = configuration_search(plane, ConfigKind::Pappus, budget, 0);
            tally.absorb_search("pappus", &search);
            tally.absorb_search("finite-hexagon-closure", &search);
            pappus_agreement(ring, 0, 200, tally)?;
        }
        Mode::Sampled { seed, samples } => {
            let search = configuration_search(plane, ConfigKind::Pappus, samples, seed);
            tally.absorb_search("pappus", &search);
            pappus_agreement(ring, subseed(seed, 11), samples, tally)?;
        }
    }
    Ok(())
}

/// Samples hexagons and checks that the collinearity form and the axis form
/// of the closure condition give the same verdict; hexagons whose axis form
/// is not even well-posed (coincident cross-meets, a vertex on the axis) are
/// skipped rather than counted.
fn pappus_agreement(
    ring: &RingDescriptor,
    seed: u64,
    samples: u64,
    tally: &mut ClaimTally,
) -> Result<(), VerifyError> {
    let mut sampler = Sampler::new(ring.clone(), seed);
    for _ in 0..samples {
        let Some(cfg) = sample_pappus(&mut sampler) else {
            continue;
        };
        let Ok((n, l, m)) = cfg.cross_meets() else {
            continue;
        };
        let closes = collinear(&n, &l, &m);
        if n == l {
            continue;
        }
        let axis = Line::through(&n, &l)?;
        let Ok(axis_form) = affine_pappus_check(&cfg, &axis) else {
            continue;
        };
        tally.record("affine-pappus", axis_form == closes, || cfg.witness());
    }
    Ok(())
}

fn run_order_axioms(
    ring: &RingDescriptor,
    mode: Mode,
    tally: &mut ClaimTally,
) -> Result<(), VerifyError> {
    let Mode::Sampled { seed, samples } = mode else {
        unreachable!("applicability rejects exhaustive order runs");
    };
    // One horizontal, one oblique, one vertical probe line; each draws its
    // own `samples` tuples.
    let lines = [
        Line::through(
            &Point::new(ring.int(0), ring.int(0)),
            &Point::new(ring.int(1), ring.int(0)),
        )?,
        Line::through(
            &Point::new(ring.int(0), ring.fraction(2, 5)?),
            &Point::new(ring.int(7), ring.fraction(-13, 5)?),
        )?,
        Line::through(
            &Point::new(ring.fraction(1, 3)?, ring.int(0)),
            &Point::new(ring.fraction(1, 3)?, ring.int(1)),
        )?,
    ];
    for (lane, line) in lines.iter().enumerate() {
        let report = check_order_axioms(line, subseed(seed, lane as u64), samples)?;
        tally.absorb_ordering(&report.checks);
    }
    Ok(())
}

fn run_positive_cone(
    ring: &RingDescriptor,
    mode: Mode,
    tally: &mut ClaimTally,
) -> Result<(), VerifyError> {
    let Mode::Sampled { seed, samples } = mode else {
        unreachable!("applicability rejects exhaustive order runs");
    };
    let oblique = Line::through(
        &Point::new(ring.int(0), ring.int(1)),
        &Point::new(ring.int(1), ring.int(3)),
    )?;
    let frames = [
        Frame::unit_x_axis(ring.clone()),
        Frame::new(
            oblique,
            Point::new(ring.int(0), ring.int(1)),
            Point::new(ring.int(1), ring.int(3)),
        )?,
    ];
    for (lane, frame) in frames.iter().enumerate() {
        let report = check_positive_cone(frame, subseed(seed, 20 + lane as u64), samples)?;
        tally.absorb_ordering(&report.checks);
    }
    Ok(())
}

fn run_map_order(
    ring: &RingDescriptor,
    mode: Mode,
    tally: &mut ClaimTally,
) -> Result<(), VerifyError> {
    let Mode::Sampled { seed, samples } = mode else {
        unreachable!("applicability rejects exhaustive order runs");
    };
    const TRIPLES_PER_MAP: u64 = 5;
    let mut sampler = Sampler::new(ring.clone(), seed);
    for k in 0..samples {
        let source = sampler.line();
        let target = sampler.line();
        let direction = sampler.line_not_parallel_to(&[&source, &target]);
        let projection = ParallelProjection::new(source, target, direction)?;
        let report = check_projection_order(&projection, subseed(seed, 100 + k), TRIPLES_PER_MAP)?;
        tally.record("projection-order", report.passed(), || {
            report
                .counterexample
                .clone()
                .unwrap_or_else(|| format!("{}: verdict {:?}", report.map, report.verdict))
        });

        let translation = Translation::new(sampler.scalar(), sampler.scalar());
        let line = sampler.line();
        let report = check_translation_order(&translation, &line, subseed(seed, 10_000 + k), TRIPLES_PER_MAP)?;
        let ok = report.passed() && report.verdict == OrderVerdict::Preserving;
        tally.record("translation-order", ok, || {
            report
                .counterexample
                .clone()
                .unwrap_or_else(|| format!("{} on {line}: verdict {:?}", report.map, report.verdict))
        });

        let along = sampler.line();
        let ends = sampler.distinct_points_on_line(&along, 2);
        let slide = Translation::from_points(&ends[0], &ends[1]);
        let off = sampler.point_off_line(&along);
        let report = check_two_stage_order(&slide, &along, &off, subseed(seed, 20_000 + k), TRIPLES_PER_MAP)?;
        let ok = report.passed() && report.verdict == OrderVerdict::Preserving;
        tally.record("two-stage-order", ok, || {
            report
                .counterexample
                .clone()
                .unwrap_or_else(|| format!("{}: verdict {:?}", report.map, report.verdict))
        });
    }
    Ok(())
}

fn run_skew_field(
    ring: &RingDescriptor,
    mode: Mode,
    tally: &mut ClaimTally,
) -> Result<(), VerifyError> {
    let frame = Frame::unit_x_axis(ring.clone());
    let b0 = frame.choose_auxiliary(0);
    match mode {
        Mode::Exhaustive => run_skew_field_exhaustive(ring, &frame, &b0, tally),
        Mode::Sampled { seed, samples } => {
            run_skew_field_sampled(ring, &frame, &b0, seed, samples, tally)
        }
    }
}

fn run_skew_field_exhaustive(
    ring: &RingDescriptor,
    frame: &Frame,
    b0: &Point,
    tally: &mut ClaimTally,
) -> Result<(), VerifyError> {
    let elems = ring
        .elements()
        .expect("applicability admits only finite rings here");
    let n = elems.len();
    let points: Vec<Point> = elems.iter().map(|t| frame.from_parameter(t)).collect();
    let index: BTreeMap<String, usize> = elems
        .iter()
        .enumerate()
        .map(|(i, t)| (t.canonical(), i))
        .collect();
    let idx = |p: &Point| -> Result<usize, VerifyError> {
        let t = frame.to_parameter(p)?;
        Ok(*index
            .get(&t.canonical())
            .expect("constructed results stay on the frame line"))
    };

    // The full constructed operation tables; every later law is checked
    // against these exact construction outputs.
    let mut add = vec![vec![0usize; n]; n];
    let mut mul = vec![vec![0usize; n]; n];
    for i in 0..n {
        for j in 0..n {
            add[i][j] = idx(&frame.add_with(&points[i], &points[j], b0)?.0)?;
            mul[i][j] = idx(&frame.mul_with(&points[i], &points[j], b0)?.0)?;
        }
    }
    let zero = idx(frame.origin())?;
    let one = idx(frame.unit())?;
    let name = |i: usize| elems[i].canonical();

    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                tally.record("add-assoc", add[add[i][j]][k] == add[i][add[j][k]], || {
                    format!("a={}, c={}, e={}", name(i), name(j), name(k))
                });
                tally.record("mul-assoc", mul[mul[i][j]][k] == mul[i][mul[j][k]], || {
                    format!("a={}, c={}, e={}", name(i), name(j), name(k))
                });
                tally.record(
                    "distrib-left",
                    mul[i][add[j][k]] == add[mul[i][j]][mul[i][k]],
                    || format!("a={}, c={}, e={}", name(i), name(j), name(k)),
                );
                tally.record(
                    "distrib-right",
                    mul[add[i][j]][k] == add[mul[i][k]][mul[j][k]],
                    || format!("a={}, c={}, e={}", name(i), name(j), name(k)),
                );
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            tally.record("add-comm", add[i][j] == add[j][i], || {
                format!("a={}, c={}", name(i), name(j))
            });
        }
    }
    for i in 0..n {
        tally.record(
            "add-neutral",
            add[i][zero] == i && add[zero][i] == i,
            || format!("a={}", name(i)),
        );
        tally.record(
            "mul-neutral",
            mul[i][one] == i && mul[one][i] == i,
            || format!("a={}", name(i)),
        );
        let neg = idx(&frame.neg_with(&points[i], b0)?.0)?;
        tally.record(
            "add-inverse",
            add[i][neg] == zero && add[neg][i] == zero,
            || format!("a={}, -a={}", name(i), name(neg)),
        );
        if i != zero {
            let right = idx(&frame.inv_with(&points[i], InvSide::Right, b0)?.0)?;
            let left = idx(&frame.inv_with(&points[i], InvSide::Left, b0)?.0)?;
            let ok = mul[i][right] == one && mul[left][i] == one && left == right;
            tally.record("mul-inverse", ok, || {
                format!(
                    "a={}, right inverse {}, left inverse {}",
                    name(i),
                    name(right),
                    name(left)
                )
            });
        }
    }

    let plane = PlaneModel::new(ring.clone());
    let auxiliaries: Vec<Point> = plane
        .enumerate_points()?
        .into_iter()
        .filter(|p| !frame.line().contains(p))
        .collect();
    for b in &auxiliaries {
        for i in 0..n {
            for j in 0..n {
                let with_b_add = idx(&frame.add_with(&points[i], &points[j], b)?.0)?;
                let with_b_mul = idx(&frame.mul_with(&points[i], &points[j], b)?.0)?;
                let ok = with_b_add == add[i][j] && with_b_mul == mul[i][j];
                tally.record("b-independence", ok, || {
                    format!("A={}, C={}, B={b}", name(i), name(j))
                });
            }
        }
    }

    let check = frame_independence_exhaustive(ring)?;
    tally.merge_check(check);
    Ok(())
}

fn run_skew_field_sampled(
    ring: &RingDescriptor,
    frame: &Frame,
    b0: &Point,
    seed: u64,
    samples: u64,
    tally: &mut ClaimTally,
) -> Result<(), VerifyError> {
    let mut sampler = Sampler::new(ring.clone(), seed);
    let origin = frame.origin().clone();
    let unit = frame.unit().clone();
    let add = |x: &Point, y: &Point| -> Result<Point, VerifyError> {
        Ok(frame.add_with(x, y, b0)?.0)
    };
    let mul = |x: &Point, y: &Point| -> Result<Point, VerifyError> {
        Ok(frame.mul_with(x, y, b0)?.0)
    };
    for _ in 0..samples {
        let a = frame.from_parameter(&sampler.scalar());
        let c = frame.from_parameter(&sampler.scalar());
        let e = frame.from_parameter(&sampler.scalar());
        let witness = || format!("A={a}, C={c}, E={e}");

        let ac = add(&a, &c)?;
        let ce = add(&c, &e)?;
        tally.record("add-assoc", add(&ac, &e)? == add(&a, &ce)?, witness);
        tally.record("add-comm", ac == add(&c, &a)?, witness);
        tally.record(
            "add-neutral",
            add(&a, &origin)? == a && add(&origin, &a)? == a,
            witness,
        );
        let neg = frame.neg_with(&a, b0)?.0;
        let diff = frame.sub_with(&c, &a, b0)?.0;
        tally.record(
            "add-inverse",
            add(&a, &neg)? == origin && add(&neg, &a)? == origin && add(&a, &diff)? == c,
            witness,
        );

        let ac_prod = mul(&a, &c)?;
        let ce_prod = mul(&c, &e)?;
        tally.record("mul-assoc", mul(&ac_prod, &e)? == mul(&a, &ce_prod)?, witness);
        tally.record(
            "mul-neutral",
            mul(&a, &unit)? == a && mul(&unit, &a)? == a,
            witness,
        );
        let nz = frame.from_parameter(&sampler.nonzero_scalar());
        let right = frame.inv_with(&nz, InvSide::Right, b0)?.0;
        let left = frame.inv_with(&nz, InvSide::Left, b0)?.0;
        tally.record(
            "mul-inverse",
            mul(&nz, &right)? == unit && mul(&left, &nz)? == unit && left == right,
            || format!("A={nz}"),
        );
        tally.record(
            "distrib-left",
            mul(&a, &ce)? == add(&mul(&a, &c)?, &mul(&a, &e)?)?,
            witness,
        );
        tally.record(
            "distrib-right",
            mul(&ac, &e)? == add(&mul(&a, &e)?, &mul(&c, &e)?)?,
            witness,
        );

        let b1 = sampler.point_off_line(frame.line());
        let mut b2 = sampler.point_off_line(frame.line());
        let mut spins = 0;
        while b2 == b1 && spins < 64 {
            b2 = sampler.point_off_line(frame.line());
            spins += 1;
        }
        if b2 != b1 {
            let ok = frame.add_with(&a, &c, &b1)?.0 == frame.add_with(&a, &c, &b2)?.0
                && frame.mul_with(&a, &c, &b1)?.0 == frame.mul_with(&a, &c, &b2)?.0;
            tally.record("b-independence", ok, || {
                format!("A={a}, C={c}, B1={b1}, B2={b2}")
            });
        }
    }

    let check = frame_independence_sampled(ring, subseed(seed, 77), samples)?;
    tally.merge_check(check);
    Ok(())
}

/// Does parameter transport from `f1` to `f2` carry the constructed sum and
/// product of `x` and `y` to the constructed sum and product of the images?
fn transport_respects_ops(
    f1: &Frame,
    f2: &Frame,
    x: &Point,
    y: &Point,
) -> Result<bool, VerifyError> {
    let phi = |p: &Point| -> Result<Point, VerifyError> {
        Ok(f2.from_parameter(&f1.to_parameter(p)?))
    };
    let sum = f1.add(x, y)?.0;
    let prod = f1.mul(x, y)?.0;
    let sum_ok = phi(&sum)? == f2.add(&phi(x)?, &phi(y)?)?.0;
    let prod_ok = phi(&prod)? == f2.mul(&phi(x)?, &phi(y)?)?.0;
    Ok(sum_ok && prod_ok)
}

fn frame_witness(f1: &Frame, f2: &Frame, x: &Point, y: &Point) -> String {
    format!(
        "from ({}; O={}, I={}) to ({}; O={}, I={}) with x={x}, y={y}",
        f1.line(),
        f1.origin(),
        f1.unit(),
        f2.line(),
        f2.origin(),
        f2.unit()
    )
}

/// Every ordered frame pair on one line of the finite plane, on every
/// element pair.
fn frame_independence_exhaustive(ring: &RingDescriptor) -> Result<ClaimCheck, VerifyError> {
    let base = Frame::unit_x_axis(ring.clone());
    let line = base.line().clone();
    let plane = PlaneModel::new(ring.clone());
    let points = plane.points_on_line(&line)?;
    let mut frames = Vec::new();
    for o in &points {
        for i in &points {
            if o != i {
                frames.push(Frame::new(line.clone(), o.clone(), i.clone())?);
            }
        }
    }
    let mut check = ClaimCheck::for_claim("frame-independence");
    for f1 in &frames {
        for f2 in &frames {
            for x in &points {
                for y in &points {
                    let ok = transport_respects_ops(f1, f2, x, y)?;
                    check.record(ok, || frame_witness(f1, f2, x, y));
                }
            }
        }
    }
    Ok(check)
}

/// Random frame pairs on random lines, with random element pairs.
fn frame_independence_sampled(
    ring: &RingDescriptor,
    seed: u64,
    samples: u64,
) -> Result<ClaimCheck, VerifyError> {
    let mut sampler = Sampler::new(ring.clone(), seed);
    let mut check = ClaimCheck::for_claim("frame-independence");
    for _ in 0..samples {
        let l1 = sampler.line();
        let ends = sampler.distinct_points_on_line(&l1, 2);
        let f1 = Frame::new(l1, ends[0].clone(), ends[1].clone())?;
        let l2 = sampler.line();
        let ends = sampler.distinct_points_on_line(&l2, 2);
        let f2 = Frame::new(l2, ends[0].clone(), ends[1].clone())?;
        let x = f1.from_parameter(&sampler.scalar());
        let y = f1.from_parameter(&sampler.scalar());
        let ok = transport_respects_ops(&f1, &f2, &x, &y)?;
        check.record(ok, || frame_witness(&f1, &f2, &x, &y));
    }
    Ok(check)
}

/// Standalone frame-independence run: the parameter-transport map between
/// frames must be an isomorphism of the constructed skew fields. Returns a
/// single-claim report under the owning suite's name.
pub fn frame_independence_check(
    model: &RingDescriptor,
    mode: Mode,
) -> Result<SuiteReport, VerifyError> {
    let start = Instant::now();
    let check = match mode {
        Mode::Exhaustive => match model.kind() {
            RingKind::PrimeField(p) => {
                let cost = exhaustive_suite_cost(SuiteName::SkewField, p);
                if cost > EXHAUSTIVE_CAP {
                    return Err(VerifyError::SuiteModelMismatch {
                        suite: SuiteName::SkewField.as_str().to_string(),
                        model: model.label(),
                        reason: format!(
                            "exhaustive enumeration over {} would visit about {cost} candidates (cap {EXHAUSTIVE_CAP})",
                            model.label()
                        ),
                    });
                }
                frame_independence_exhaustive(model)?
            }
            _ => {
                return Err(VerifyError::SuiteModelMismatch {
                    suite: SuiteName::SkewField.as_str().to_string(),
                    model: model.label(),
                    reason: format!(
                        "exhaustive enumeration needs a finite coordinate ring and {} is infinite",
                        model.label()
                    ),
                })
            }
        },
        Mode::Sampled { seed, samples } => frame_independence_sampled(model, seed, samples)?,
    };
    Ok(SuiteReport {
        schema_version: REPORT_SCHEMA_VERSION,
        suite: SuiteName::SkewField.as_str().to_string(),
        model: model.label(),
        mode: mode.label(),
        checks: vec![check],
        skipped: Vec::new(),
        wall_time_ms: start.elapsed().as_millis() as u64,
    })
}
