//! Seeded, deterministic sampling of scalars, points, and lines.
//!
//! All randomized checks in the crate draw from a ChaCha8 stream seeded with a
//! caller-supplied integer, so every report is reproducible bit-for-bit given
//! the same seed. Rational samples keep numerators and denominators small so
//! exact arithmetic stays fast even after a few construction layers.

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::plane::{Line, Point};
use crate::scalar::{Quaternion, RingDescriptor, RingKind, Scalar};

pub(crate) struct Sampler {
    rng: ChaCha8Rng,
    ring: RingDescriptor,
}

/// Derives an independent stream for a sub-task; keeps per-claim sampling
/// stable regardless of how many claims run before it.
pub(crate) fn subseed(seed: u64, lane: u64) -> u64 {
    seed.wrapping_add(lane.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

impl Sampler {
    pub fn new(ring: RingDescriptor, seed: u64) -> Self {
        Sampler {
            rng: ChaCha8Rng::seed_from_u64(seed),
            ring,
        }
    }

    fn small_rational(&mut self) -> BigRational {
        let n = self.rng.gen_range(-20i64..=20);
        let d = self.rng.gen_range(1i64..=20);
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    pub fn scalar(&mut self) -> Scalar {
        match self.ring.kind() {
            RingKind::Rational => Scalar::Rational(self.small_rational()),
            RingKind::PrimeField(p) => Scalar::PrimeField {
                modulus: p,
                value: self.rng.gen_range(0..p),
            },
            RingKind::Quaternion => {
                let mut comp = || {
                    let n = self.rng.gen_range(-5i64..=5);
                    let d = self.rng.gen_range(1i64..=5);
                    BigRational::new(BigInt::from(n), BigInt::from(d))
                };
                Scalar::Quaternion(Quaternion::new(comp(), comp(), comp(), comp()))
            }
        }
    }

    pub fn nonzero_scalar(&mut self) -> Scalar {
        loop {
            let s = self.scalar();
            if !s.is_zero() {
                return s;
            }
        }
    }

    /// A strictly positive rational (panics if the ring is unordered — callers
    /// gate on `is_ordered`).
    pub fn positive_rational(&mut self) -> Scalar {
        assert!(self.ring.is_ordered());
        let n = self.rng.gen_range(1i64..=20);
        let d = self.rng.gen_range(1i64..=20);
        Scalar::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    pub fn point(&mut self) -> Point {
        Point::new(self.scalar(), self.scalar())
    }

    pub fn point_off_line(&mut self, l: &Line) -> Point {
        loop {
            let p = self.point();
            if !l.contains(&p) {
                return p;
            }
        }
    }

    pub fn point_on_line(&mut self, l: &Line) -> Point {
        let t = self.scalar();
        l.point_at(&t)
    }

    /// A line sampled as `x = c` (1 in 8) or `y = x*m + b`.
    pub fn line(&mut self) -> Line {
        if self.rng.gen_range(0u8..8) == 0 {
            Line::Vertical { c: self.scalar() }
        } else {
            Line::Sloped {
                m: self.scalar(),
                b: self.scalar(),
            }
        }
    }

    /// A line not parallel to any of the given ones.
    pub fn line_not_parallel_to(&mut self, avoid: &[&Line]) -> Line {
        loop {
            let l = self.line();
            if avoid.iter().all(|a| !l.parallel_to(a)) {
                return l;
            }
        }
    }

    /// `n` pairwise distinct points on `l`. Finite rings may make this
    /// impossible; the caller must ensure `n` fits (rational/quaternion always
    /// fit).
    pub fn distinct_points_on_line(&mut self, l: &Line, n: usize) -> Vec<Point> {
        let mut out: Vec<Point> = Vec::with_capacity(n);
        let mut spins = 0usize;
        while out.len() < n {
            let p = self.point_on_line(l);
            if out.contains(&p) {
                spins += 1;
                assert!(spins < 10_000, "line too small for {n} distinct points");
                continue;
            }
            out.push(p);
        }
        out
    }

}
