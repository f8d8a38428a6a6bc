//! Acceptance gate: one test per shipping criterion, each printing a single
//! `acceptance NN PASS/FAIL` line (visible with `--nocapture`). Every check
//! runs exact arithmetic end to end — no tolerances anywhere — and the
//! constructed results are compared against independent oracles (modular
//! arithmetic, hand-derived coordinates, or frozen fixture values), never
//! against the code under test.

use std::process::Command;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use skewline::configurations::{
    configuration_search, desargues_check, pappus_check, ConfigKind, DesarguesConfig,
    PappusConfig,
};
use skewline::line_algebra::Frame;
use skewline::ordering::{
    check_order_axioms, check_positive_cone, check_projection_order, check_translation_order,
    check_two_stage_order, OrderVerdict,
};
use skewline::trace::validate_trace_value;
use skewline::verification::{frame_independence_check, run_suite, Mode, SuiteName};
use skewline::{Line, PlaneModel, Point, Quaternion, RingDescriptor, RingKind, Scalar};

// ---------------------------------------------------------------------------
// reporting scaffold
// ---------------------------------------------------------------------------

/// Prints the one-line verdict for a criterion and fails the test on `Err`.
fn report(number: u8, title: &str, outcome: Result<String, String>) {
    match outcome {
        Ok(detail) => println!("acceptance {number:02} PASS [{title}]: {detail}"),
        Err(why) => {
            println!("acceptance {number:02} FAIL [{title}]: {why}");
            panic!("acceptance criterion {number} failed: {why}");
        }
    }
}

macro_rules! ensure {
    ($cond:expr, $($arg:tt)+) => {
        if !$cond {
            return Err(format!($($arg)+));
        }
    };
}

/// Maps any library error into the criterion's failure message.
fn ctx<T, E: std::fmt::Display>(what: &str, r: Result<T, E>) -> Result<T, String> {
    r.map_err(|e| format!("{what}: {e}"))
}

fn within(start: Instant, cap: Duration, what: &str) -> Result<Duration, String> {
    let took = start.elapsed();
    if took <= cap {
        Ok(took)
    } else {
        Err(format!(
            "{what} took {} ms, over the {} ms budget",
            took.as_millis(),
            cap.as_millis()
        ))
    }
}

// ---------------------------------------------------------------------------
// small random helpers (the library's internal sampler is crate-private,
// so the gate rolls its own from the public constructors)
// ---------------------------------------------------------------------------

fn rat(rng: &mut ChaCha8Rng) -> BigRational {
    let n = rng.gen_range(-12i64..=12);
    let d = rng.gen_range(1i64..=9);
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn rand_scalar(ring: RingDescriptor, rng: &mut ChaCha8Rng) -> Scalar {
    match ring.kind() {
        RingKind::Rational => Scalar::Rational(rat(rng)),
        RingKind::PrimeField(p) => ring.int(rng.gen_range(0..p) as i64),
        RingKind::Quaternion => Scalar::quaternion(Quaternion {
            a: rat(rng),
            b: rat(rng),
            c: rat(rng),
            d: rat(rng),
        }),
    }
}

fn rand_point_off_line(ring: RingDescriptor, rng: &mut ChaCha8Rng, line: &Line) -> Point {
    loop {
        let p = Point::new(rand_scalar(ring, rng), rand_scalar(ring, rng));
        if !line.contains(&p) {
            return p;
        }
    }
}

fn rand_sloped_line(rng: &mut ChaCha8Rng) -> Line {
    Line::Sloped {
        m: Scalar::Rational(rat(rng)),
        b: Scalar::Rational(rat(rng)),
    }
}

// ---------------------------------------------------------------------------
// criteria
// ---------------------------------------------------------------------------

/// Addition and multiplication tables over GF(p) for p in {2,3,5,7,11,13},
/// built purely by ruler constructions, must agree entry-for-entry with
/// modular arithmetic.
#[test]
fn criterion_01_prime_field_tables_match_modular_arithmetic() {
    report(1, "constructed GF(p) tables", (|| {
        let start = Instant::now();
        let mut entries = 0u64;
        for &p in &[2u64, 3, 5, 7, 11, 13] {
            let ring = ctx("ring", RingDescriptor::prime_field(p))?;
            let frame = Frame::unit_x_axis(ring);
            for s in 0..p {
                for t in 0..p {
                    let a = frame.from_parameter(&ring.int(s as i64));
                    let c = frame.from_parameter(&ring.int(t as i64));
                    let (sum, _) = ctx("add", frame.add(&a, &c))?;
                    let (prod, _) = ctx("mul", frame.mul(&a, &c))?;
                    let got_sum = ctx("read sum", frame.to_parameter(&sum))?;
                    let got_prod = ctx("read product", frame.to_parameter(&prod))?;
                    // oracle: plain modular arithmetic, no geometry involved
                    let want_sum = Scalar::gf(p, ((s + t) % p) as i64);
                    let want_prod = Scalar::gf(p, ((s * t) % p) as i64);
                    ensure!(
                        got_sum == want_sum,
                        "GF({p}): constructed {s}+{t} gave {got_sum}, expected {want_sum}"
                    );
                    ensure!(
                        got_prod == want_prod,
                        "GF({p}): constructed {s}*{t} gave {got_prod}, expected {want_prod}"
                    );
                    entries += 2;
                }
            }
        }
        let took = within(start, Duration::from_secs(30), "table construction")?;
        Ok(format!(
            "{entries} table entries across 6 prime fields, 0 mismatches, {} ms",
            took.as_millis()
        ))
    })());
}

/// The constructed sum and product must not depend on which off-line
/// auxiliary point steers the construction: 200 (A, C, B1, B2) cases per
/// model, exact equality.
#[test]
fn criterion_02_auxiliary_point_independence() {
    report(2, "auxiliary-point independence", (|| {
        let start = Instant::now();
        let models = [
            RingDescriptor::rational(),
            ctx("ring", RingDescriptor::prime_field(5))?,
            RingDescriptor::quaternion(),
        ];
        let mut cases = 0u64;
        for (lane, ring) in models.into_iter().enumerate() {
            let mut rng = ChaCha8Rng::seed_from_u64(200 + lane as u64);
            let frame = Frame::unit_x_axis(ring);
            for _ in 0..200 {
                let a = frame.from_parameter(&rand_scalar(ring, &mut rng));
                let c = frame.from_parameter(&rand_scalar(ring, &mut rng));
                let b1 = rand_point_off_line(ring, &mut rng, frame.line());
                let b2 = loop {
                    let candidate = rand_point_off_line(ring, &mut rng, frame.line());
                    if candidate != b1 {
                        break candidate;
                    }
                };
                let (sum1, _) = ctx("add via B1", frame.add_with(&a, &c, &b1))?;
                let (sum2, _) = ctx("add via B2", frame.add_with(&a, &c, &b2))?;
                ensure!(
                    sum1 == sum2,
                    "{}: A={a}, C={c}: sum via B1={b1} is {sum1} but via B2={b2} is {sum2}",
                    ring.label()
                );
                let (prod1, _) = ctx("mul via B1", frame.mul_with(&a, &c, &b1))?;
                let (prod2, _) = ctx("mul via B2", frame.mul_with(&a, &c, &b2))?;
                ensure!(
                    prod1 == prod2,
                    "{}: A={a}, C={c}: product via B1={b1} is {prod1} but via B2={b2} is {prod2}",
                    ring.label()
                );
                cases += 1;
            }
        }
        let took = within(start, Duration::from_secs(10), "independence sweep")?;
        Ok(format!(
            "{cases} quadruples across rational, gf(5), quaternion, {} ms",
            took.as_millis()
        ))
    })());
}

/// The full division-ring axiom suite holds for the constructed operations:
/// exhaustively over GF(2..7), on 1000 sampled rational triples, and on 200
/// quaternion samples.
#[test]
fn criterion_03_division_ring_axioms_via_constructions() {
    report(3, "division-ring axioms", (|| {
        let start = Instant::now();
        let mut parts = Vec::new();
        for &p in &[2u64, 3, 5, 7] {
            let ring = ctx("ring", RingDescriptor::prime_field(p))?;
            let report = ctx(
                "exhaustive suite",
                run_suite(SuiteName::SkewField, &ring, Mode::Exhaustive),
            )?;
            ensure!(report.mode == "exhaustive", "GF({p}) run was not exhaustive");
            ensure!(
                report.passed(),
                "GF({p}) axiom failures: {:?}",
                report.checks.iter().filter(|c| !c.passed()).map(|c| &c.claim).collect::<Vec<_>>()
            );
            parts.push(format!("gf({p}) exhaustive"));
        }
        let rational = run_suite(
            SuiteName::SkewField,
            &RingDescriptor::rational(),
            Mode::Sampled { seed: 11, samples: 1000 },
        );
        let rational = ctx("rational suite", rational)?;
        ensure!(rational.passed(), "rational axiom failures");
        let add_assoc = rational
            .check("add-assoc")
            .ok_or("rational report lost the add-assoc claim")?;
        ensure!(
            add_assoc.tested == 1000,
            "rational associativity tested {} times, wanted 1000",
            add_assoc.tested
        );
        parts.push("1000 rational triples".to_string());
        let quat = run_suite(
            SuiteName::SkewField,
            &RingDescriptor::quaternion(),
            Mode::Sampled { seed: 12, samples: 200 },
        );
        let quat = ctx("quaternion suite", quat)?;
        ensure!(quat.passed(), "quaternion axiom failures");
        parts.push("200 quaternion samples".to_string());
        Ok(format!("{}; {} ms", parts.join(", "), start.elapsed().as_millis()))
    })());
}

/// The geometric product is genuinely order-sensitive over the quaternions:
/// (i,0) * (j,0) lands exactly on (k,0) and (j,0) * (i,0) on (-k,0).
#[test]
fn criterion_04_quaternion_product_order_sensitivity() {
    report(4, "noncommutativity witness", (|| {
        let ring = RingDescriptor::quaternion();
        let frame = Frame::unit_x_axis(ring);
        let at = |s: Scalar| Point::new(s, ring.zero());
        let pi = at(Scalar::quaternion(Quaternion::i()));
        let pj = at(Scalar::quaternion(Quaternion::j()));
        let (ij, _) = ctx("i*j", frame.mul(&pi, &pj))?;
        let (ji, _) = ctx("j*i", frame.mul(&pj, &pi))?;
        let want_ij = at(Scalar::quaternion(Quaternion::k()));
        let neg_k = Quaternion {
            a: BigRational::zero(),
            b: BigRational::zero(),
            c: BigRational::zero(),
            d: -BigRational::one(),
        };
        let want_ji = at(Scalar::quaternion(neg_k));
        ensure!(ij == want_ij, "constructed i*j = {ij}, expected {want_ij}");
        ensure!(ji == want_ji, "constructed j*i = {ji}, expected {want_ji}");
        ensure!(ij != ji, "products in the two orders unexpectedly coincide");
        Ok(format!("i*j = {ij} and j*i = {ji}, exactly"))
    })());
}

/// The four line-order axioms, the triple-exclusion and four-point chaining
/// propositions, and same-side transitivity hold on 1000 seeded rational
/// quadruples.
#[test]
fn criterion_05_order_axioms_on_rational_tuples() {
    report(5, "line-order axioms", (|| {
        let start = Instant::now();
        let line = Line::Sloped {
            m: Scalar::rational(3, 2),
            b: Scalar::rational(-1, 3),
        };
        let report = ctx("order axioms", check_order_axioms(&line, 4242, 1000))?;
        ensure!(report.samples == 1000, "ran {} samples, wanted 1000", report.samples);
        let expected_ids = [
            "Lo.1",
            "Lo.2",
            "Lo.3",
            "Lo.4",
            "Prop-exclusion",
            "Prop-chaining",
            "same-side-transitivity",
        ];
        let ids: Vec<&str> = report.checks.iter().map(|c| c.id.as_str()).collect();
        ensure!(ids == expected_ids, "unexpected check list: {ids:?}");
        for check in &report.checks {
            ensure!(
                check.evaluated >= 1000,
                "{} only hit its premise {} times over 1000 quadruples",
                check.id,
                check.evaluated
            );
            ensure!(
                check.failures == 0,
                "{} failed {} times, e.g. {}",
                check.id,
                check.failures,
                check.counterexample.clone().unwrap_or_default()
            );
        }
        let took = within(start, Duration::from_secs(5), "order sweep")?;
        let evaluated: u64 = report.checks.iter().map(|c| c.evaluated).sum();
        Ok(format!(
            "7 checks, {evaluated} premise hits over 1000 quadruples, 0 failures, {} ms",
            took.as_millis()
        ))
    })());
}

/// Sign classes are closed under the constructions: positive pairs have
/// positive sums and products (both orders), negation flips the class, and
/// negative pairs sum negative — 1000 sampled positive pairs.
#[test]
fn criterion_06_positive_cone_closure() {
    report(6, "positive-cone closure", (|| {
        let ring = RingDescriptor::rational();
        // an oblique frame, so nothing about the x-axis is special-cased
        let line = ctx(
            "frame line",
            Line::through(
                &Point::new(ring.int(0), ring.int(1)),
                &Point::new(ring.int(2), ring.int(2)),
            ),
        )?;
        let frame = ctx(
            "frame",
            Frame::new(
                line,
                Point::new(ring.int(0), ring.int(1)),
                Point::new(ring.int(2), ring.int(2)),
            ),
        )?;
        let report = ctx("cone checks", check_positive_cone(&frame, 77, 1000))?;
        ensure!(report.samples == 1000, "ran {} samples, wanted 1000", report.samples);
        for check in &report.checks {
            ensure!(
                check.evaluated == 1000,
                "{} evaluated {} pairs, wanted 1000",
                check.id,
                check.evaluated
            );
            ensure!(
                check.failures == 0,
                "{} failed {} times, e.g. {}",
                check.id,
                check.failures,
                check.counterexample.clone().unwrap_or_default()
            );
        }
        let ids: Vec<&str> = report.checks.iter().map(|c| c.id.as_str()).collect();
        ensure!(
            ids.contains(&"neg-to-negative") && ids.contains(&"negative-add-closure"),
            "negation checks missing from {ids:?}"
        );
        Ok("1000 positive pairs: sums, both product orders, negations, negative sums all in class".to_string())
    })());
}

/// Translations preserve betweenness (500 translations, 5 triples each,
/// including the two-projection decomposition of a translation along its own
/// line); parallel projections are globally order-preserving or
/// order-reversing, never mixed (200 projections).
#[test]
fn criterion_07_maps_respect_line_order() {
    report(7, "order transport by maps", (|| {
        let ring = RingDescriptor::rational();
        let mut rng = ChaCha8Rng::seed_from_u64(909);
        let mut two_stage_runs = 0u64;
        for round in 0..500u64 {
            let line = rand_sloped_line(&mut rng);
            if round % 2 == 0 {
                // an arbitrary translation carries the line to a parallel line
                let t = loop {
                    let cand = skewline::maps::Translation::new(
                        Scalar::Rational(rat(&mut rng)),
                        Scalar::Rational(rat(&mut rng)),
                    );
                    if !cand.is_identity() {
                        break cand;
                    }
                };
                let report = ctx(
                    "translation order",
                    check_translation_order(&t, &line, 7000 + round, 5),
                )?;
                ensure!(
                    report.passed() && report.verdict == OrderVerdict::Preserving,
                    "translation round {round}: verdict {:?}, counterexample {:?}",
                    report.verdict,
                    report.counterexample
                );
            } else {
                // a translation along the line itself, decomposed into two
                // parallel projections through an off-line point
                let from = line.point_at(&Scalar::Rational(rat(&mut rng)));
                let to = loop {
                    let cand = line.point_at(&Scalar::Rational(rat(&mut rng)));
                    if cand != from {
                        break cand;
                    }
                };
                let t = skewline::maps::Translation::from_points(&from, &to);
                let report = ctx(
                    "translation order",
                    check_translation_order(&t, &line, 7000 + round, 5),
                )?;
                ensure!(
                    report.passed() && report.verdict == OrderVerdict::Preserving,
                    "along-line translation round {round}: verdict {:?}",
                    report.verdict
                );
                let off = rand_point_off_line(ring, &mut rng, &line);
                let two_stage = ctx(
                    "two-stage order",
                    check_two_stage_order(&t, &line, &off, 8000 + round, 5),
                )?;
                ensure!(
                    two_stage.passed() && two_stage.verdict == OrderVerdict::Preserving,
                    "two-stage round {round}: verdict {:?}, counterexample {:?}",
                    two_stage.verdict,
                    two_stage.counterexample
                );
                two_stage_runs += 1;
            }
        }
        ensure!(two_stage_runs >= 200, "only {two_stage_runs} two-stage decompositions ran");

        let mut preserving = 0u64;
        let mut reversing = 0u64;
        let mut attempts = 0u64;
        while preserving + reversing < 200 {
            attempts += 1;
            ensure!(attempts < 20_000, "could not sample 200 valid projections");
            let source = rand_sloped_line(&mut rng);
            let target = rand_sloped_line(&mut rng);
            if source == target {
                continue;
            }
            let direction = rand_sloped_line(&mut rng);
            let Ok(projection) = skewline::maps::ParallelProjection::new(
                source.clone(),
                target.clone(),
                direction,
            ) else {
                continue;
            };
            let report = ctx(
                "projection order",
                check_projection_order(&projection, 9000 + attempts, 5),
            )?;
            ensure!(
                report.passed(),
                "projection attempt {attempts}: verdict {:?}, counterexample {:?}",
                report.verdict,
                report.counterexample
            );
            match report.verdict {
                OrderVerdict::Preserving => preserving += 1,
                OrderVerdict::Reversing => reversing += 1,
                OrderVerdict::Mixed => unreachable!("passed() excludes mixed verdicts"),
            }
        }
        Ok(format!(
            "500 translations (incl. {two_stage_runs} two-stage decompositions) preserving; \
             200 projections globally consistent ({preserving} preserving, {reversing} reversing)"
        ))
    })());
}

/// Triangle-perspective closure holds on the frozen coordinates and on 200
/// sampled rational configurations; hexagon closure holds on the frozen
/// rational hexagon and exhaustively over GF(3), and fails over the
/// quaternions within 500 seeded samples.
#[test]
fn criterion_08_configuration_checks() {
    report(8, "closure configurations", (|| {
        let q = |n: i64, d: i64| Scalar::rational(n, d);
        let pt = |x: Scalar, y: Scalar| Point::new(x, y);

        // frozen triangle-perspective instance on three vertical rails
        let cfg = ctx(
            "triangle config",
            DesarguesConfig::new(
                Line::Vertical { c: q(0, 1) },
                Line::Vertical { c: q(2, 1) },
                Line::Vertical { c: q(4, 1) },
                pt(q(0, 1), q(-1, 1)),
                pt(q(2, 1), q(0, 1)),
                pt(q(4, 1), q(-1, 1)),
                pt(q(0, 1), q(1, 1)),
                pt(q(2, 1), q(2, 1)),
                pt(q(4, 1), q(1, 1)),
            ),
        )?;
        ensure!(desargues_check(&cfg), "frozen triangle instance failed");

        let search = configuration_search(PlaneModel::rational(), ConfigKind::Desargues, 260, 5);
        ensure!(
            search.failures.is_empty(),
            "rational triangle search found failures: {:?}",
            search.failures
        );
        ensure!(
            search.tested >= 200,
            "only {} valid rational triangle configurations in budget",
            search.tested
        );

        // frozen rational hexagon, with its three cross-meets as the oracle
        let top = ctx(
            "top line",
            Line::through(&pt(q(1, 1), q(12, 5)), &pt(q(4, 1), q(18, 5))),
        )?;
        let bottom = ctx(
            "bottom line",
            Line::through(&pt(q(1, 1), q(-2, 5)), &pt(q(4, 1), q(-8, 5))),
        )?;
        let hexagon = ctx(
            "hexagon config",
            PappusConfig::new(
                top,
                pt(q(1, 1), q(12, 5)),
                pt(q(5, 2), q(3, 1)),
                pt(q(4, 1), q(18, 5)),
                bottom,
                pt(q(1, 1), q(-2, 5)),
                pt(q(5, 2), q(-1, 1)),
                pt(q(4, 1), q(-8, 5)),
            ),
        )?;
        ensure!(
            ctx("hexagon check", pappus_check(&hexagon))?,
            "frozen rational hexagon failed"
        );
        let (n, l, m) = ctx("cross meets", hexagon.cross_meets())?;
        ensure!(
            n == pt(q(55, 34), q(1, 1)) && l == pt(q(145, 46), q(1, 1)) && m == pt(q(41, 20), q(1, 1)),
            "cross-meets moved off the frozen oracle coordinates: {n}, {l}, {m}"
        );

        // exhaustive finite sweep
        let start = Instant::now();
        let model3 = ctx("gf(3) plane", PlaneModel::prime_field(3))?;
        let sweep = configuration_search(model3, ConfigKind::Pappus, 1000, 0);
        ensure!(sweep.mode == "exhaustive", "GF(3) sweep fell back to sampling");
        ensure!(
            sweep.tested + sweep.rejected == 864,
            "GF(3) sweep visited {} candidates, expected all 864",
            sweep.tested + sweep.rejected
        );
        ensure!(sweep.tested > 0, "GF(3) sweep rejected every candidate");
        ensure!(sweep.failures.is_empty(), "GF(3) hexagon failures: {:?}", sweep.failures);
        let took = within(start, Duration::from_secs(60), "GF(3) sweep")?;

        // quaternions: hexagon closure must break within the sample budget
        let quat = configuration_search(PlaneModel::quaternion(), ConfigKind::Pappus, 500, 11);
        ensure!(
            !quat.failures.is_empty(),
            "no hexagon counterexample over the quaternions in 500 samples"
        );

        // and the frozen noncommutative hexagon is such a counterexample
        let ring = RingDescriptor::quaternion();
        let qi = Scalar::quaternion(Quaternion::i());
        let qj = Scalar::quaternion(Quaternion::j());
        let qk = Scalar::quaternion(Quaternion::k());
        let line_one = Line::Sloped { m: qi.clone(), b: ring.zero() };
        let line_two = Line::Sloped { m: qj.clone(), b: ring.one() };
        let frozen = ctx(
            "noncommutative hexagon",
            PappusConfig::new(
                line_one.clone(),
                line_one.point_at(&ring.int(1)),
                line_one.point_at(&ring.int(2)),
                line_one.point_at(&ring.int(3)),
                line_two.clone(),
                line_two.point_at(&qi),
                line_two.point_at(&qj),
                line_two.point_at(&qk),
            ),
        )?;
        ensure!(
            !ctx("frozen counterexample", pappus_check(&frozen))?,
            "the frozen noncommutative hexagon unexpectedly closed"
        );

        Ok(format!(
            "triangle: frozen + {} sampled; hexagon: frozen + {}/864 valid exhaustive GF(3) in {} ms + {} quaternion counterexamples in 500 samples",
            search.tested,
            sweep.tested,
            took.as_millis(),
            quat.failures.len()
        ))
    })());
}

/// The installed binary runs the bundled addition and multiplication scripts
/// with exit 0, writes schema-valid trace JSON, renders byte-identical SVG
/// across two runs, and `verify all --model gf(5)` exits 0.
#[test]
fn criterion_09_cli_end_to_end() {
    report(9, "command-line round trip", (|| {
        let bin = env!("CARGO_BIN_EXE_skewline");
        let scripts = concat!(env!("CARGO_MANIFEST_DIR"), "/../../scripts");
        let dir = ctx("tempdir", tempfile::tempdir())?;
        let mut summaries = Vec::new();
        for name in ["addition", "multiplication"] {
            let script = format!("{scripts}/{name}.geo");
            let trace_path = dir.path().join(format!("{name}.trace.json"));
            let svg_one = dir.path().join(format!("{name}.one.svg"));
            let svg_two = dir.path().join(format!("{name}.two.svg"));
            let run = |svg: &std::path::Path| {
                Command::new(bin)
                    .args(["run", &script, "--trace"])
                    .arg(&trace_path)
                    .arg("--svg")
                    .arg(svg)
                    .output()
            };
            let first = ctx("spawn", run(&svg_one))?;
            ensure!(
                first.status.code() == Some(0),
                "`run {name}.geo` exited {:?}: {}",
                first.status.code(),
                String::from_utf8_lossy(&first.stderr)
            );
            let second = ctx("spawn", run(&svg_two))?;
            ensure!(second.status.code() == Some(0), "second run regressed");

            let trace_text = ctx("read trace", std::fs::read_to_string(&trace_path))?;
            let value: serde_json::Value = ctx("trace json", serde_json::from_str(&trace_text))?;
            let items = value
                .as_array()
                .ok_or("trace file is not a JSON array")?;
            ensure!(!items.is_empty(), "{name}.geo produced no construction traces");
            for item in items {
                ctx("trace schema", validate_trace_value(item))?;
            }

            let one = ctx("read svg", std::fs::read(&svg_one))?;
            let two = ctx("read svg", std::fs::read(&svg_two))?;
            ensure!(one == two, "{name}.geo rendered different SVG bytes across two runs");
            ensure!(
                std::str::from_utf8(&one).map(|s| s.starts_with("<svg")).unwrap_or(false),
                "{name}.geo output does not look like SVG"
            );
            summaries.push(format!("{name}.geo ({} traces, {} SVG bytes)", items.len(), one.len()));
        }

        let verify = ctx(
            "spawn verify",
            Command::new(bin).args(["verify", "all", "--model", "gf(5)"]).output(),
        )?;
        ensure!(
            verify.status.code() == Some(0),
            "`verify all --model gf(5)` exited {:?}: {}",
            verify.status.code(),
            String::from_utf8_lossy(&verify.stderr)
        );
        summaries.push("verify all --model gf(5) exit 0".to_string());
        Ok(summaries.join("; "))
    })());
}

/// Transporting parameters between any two frames is an isomorphism of the
/// constructed arithmetic: 200 sampled rational frame pairs and the full
/// GF(5) enumeration.
#[test]
fn criterion_10_frame_independence() {
    report(10, "frame independence", (|| {
        let rational = frame_independence_check(
            &RingDescriptor::rational(),
            Mode::Sampled { seed: 17, samples: 200 },
        );
        let rational = ctx("rational transport", rational)?;
        ensure!(rational.passed(), "rational transport failures");
        let tested: u64 = rational.checks.iter().map(|c| c.tested).sum();
        ensure!(tested == 200, "rational transport tested {tested} pairs, wanted 200");

        let five = ctx("gf(5) ring", RingDescriptor::prime_field(5))?;
        let exhaustive = ctx(
            "gf(5) transport",
            frame_independence_check(&five, Mode::Exhaustive),
        )?;
        ensure!(exhaustive.passed(), "gf(5) transport failures");
        let total: u64 = exhaustive.checks.iter().map(|c| c.tested).sum();
        ensure!(
            total == 10_000,
            "gf(5) enumeration covered {total} frame/element cases, expected 10000"
        );
        Ok(format!(
            "200 sampled rational frame pairs + {total} exhaustive GF(5) cases, 0 failures"
        ))
    })());
}
