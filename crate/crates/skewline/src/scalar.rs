//! Exact scalar rings: arbitrary-precision rationals, prime fields GF(p), and
//! rational quaternions.
//!
//! Every value is exact; there is no floating point anywhere. Rationals are
//! kept in lowest terms with positive denominator (maintained by
//! `num_rational::Ratio`), GF(p) residues live in `[0, p-1]`, and quaternions
//! have four rational components. Only the rationals carry a total order;
//! asking for one elsewhere is an error, not a panic.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Serialize, Serializer};
use thiserror::Error;

/// Largest admissible prime-field modulus (exclusive bound `2^32`).
///
/// Keeps eager trial-division primality cheap and lets residue products fit in
/// `u128` without overflow.
pub const MAX_MODULUS: u64 = u32::MAX as u64;

/// Identifies which ring a scalar belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum RingKind {
    Rational,
    PrimeField(u64),
    Quaternion,
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingKind::Rational => write!(f, "rational"),
            RingKind::PrimeField(p) => write!(f, "gf({p})"),
            RingKind::Quaternion => write!(f, "quaternion"),
        }
    }
}

/// Errors raised by scalar construction and arithmetic.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("ring mismatch: {left} vs {right}")]
    RingMismatch { left: RingKind, right: RingKind },
    #[error("division by zero")]
    DivisionByZero,
    #[error("total order unavailable for {0}")]
    OrderUnavailable(RingKind),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} exceeds the supported bound 2^32-1")]
    ModulusTooLarge(u64),
    #[error("unrecognized model label `{0}` (expected rational, gf(p), or quaternion)")]
    BadLabel(String),
}

/// Errors raised when parsing a scalar from its text form.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarParseError {
    #[error("empty scalar literal")]
    Empty,
    #[error("malformed {kind} literal `{text}`: {detail}")]
    Malformed {
        kind: RingKind,
        text: String,
        detail: String,
    },
    #[error("literal `{text}` declares modulus {found} but the ring is gf({expected})")]
    ModulusMismatch {
        text: String,
        found: u64,
        expected: u64,
    },
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Describes a scalar ring and acts as the factory for its elements.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RingDescriptor {
    kind: RingKind,
}

impl RingDescriptor {
    pub fn rational() -> Self {
        RingDescriptor {
            kind: RingKind::Rational,
        }
    }

    pub fn quaternion() -> Self {
        RingDescriptor {
            kind: RingKind::Quaternion,
        }
    }

    /// Builds a GF(p) descriptor. Primality is checked eagerly by trial
    /// division; moduli at or above 2^32 are rejected outright.
    pub fn prime_field(p: u64) -> Result<Self, ScalarError> {
        if p > MAX_MODULUS {
            return Err(ScalarError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(ScalarError::NotPrime(p));
        }
        Ok(RingDescriptor {
            kind: RingKind::PrimeField(p),
        })
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    /// Rationals are the only ordered ring here.
    pub fn is_ordered(&self) -> bool {
        self.kind == RingKind::Rational
    }

    /// Number of elements for finite rings, `None` otherwise.
    pub fn order(&self) -> Option<u64> {
        match self.kind {
            RingKind::PrimeField(p) => Some(p),
            _ => None,
        }
    }

    pub fn zero(&self) -> Scalar {
        self.int(0)
    }

    pub fn one(&self) -> Scalar {
        self.int(1)
    }

    /// Embeds a machine integer into the ring.
    pub fn int(&self, n: i64) -> Scalar {
        match self.kind {
            RingKind::Rational => Scalar::Rational(BigRational::from_integer(BigInt::from(n))),
            RingKind::PrimeField(p) => Scalar::PrimeField {
                modulus: p,
                value: ((n as i128).rem_euclid(p as i128)) as u64,
            },
            RingKind::Quaternion => Scalar::Quaternion(Quaternion::from_rational(
                BigRational::from_integer(BigInt::from(n)),
            )),
        }
    }

    /// Embeds an exact fraction. For GF(p) this is `n * d^-1`; errors if `d`
    /// vanishes mod p.
    pub fn fraction(&self, n: i64, d: i64) -> Result<Scalar, ScalarError> {
        if d == 0 {
            return Err(ScalarError::DivisionByZero);
        }
        match self.kind {
            RingKind::Rational => Ok(Scalar::Rational(BigRational::new(
                BigInt::from(n),
                BigInt::from(d),
            ))),
            RingKind::PrimeField(_) => self.int(n).checked_mul(&self.int(d).checked_inv()?),
            RingKind::Quaternion => Ok(Scalar::Quaternion(Quaternion::from_rational(
                BigRational::new(BigInt::from(n), BigInt::from(d)),
            ))),
        }
    }

    /// Enumerates all ring elements for finite rings.
    pub fn elements(&self) -> Option<Vec<Scalar>> {
        match self.kind {
            RingKind::PrimeField(p) => Some(
                (0..p)
                    .map(|v| Scalar::PrimeField { modulus: p, value: v })
                    .collect(),
            ),
            _ => None,
        }
    }

    /// Canonical label used by the CLI and report schemas: `rational`,
    /// `gf(p)`, `quaternion`.
    pub fn label(&self) -> String {
        self.kind.to_string()
    }

    /// Parses a model label (`rational`, `gf(p)`, `quaternion`).
    pub fn parse_label(text: &str) -> Result<Self, ScalarError> {
        let t = text.trim();
        match t {
            "rational" => return Ok(Self::rational()),
            "quaternion" => return Ok(Self::quaternion()),
            _ => {}
        }
        if let Some(rest) = t.strip_prefix("gf(").and_then(|r| r.strip_suffix(')')) {
            let p: u64 = rest
                .trim()
                .parse()
                .map_err(|_| ScalarError::BadLabel(t.to_string()))?;
            return Self::prime_field(p);
        }
        Err(ScalarError::BadLabel(t.to_string()))
    }

    /// Parses a scalar in this ring's text form.
    ///
    /// - rational: `-3`, `1/2`, `-7/3`
    /// - gf(p): `2`, `2 mod 5` (values reduce mod p; a stated modulus must match)
    /// - quaternion: `1+2i+0j+3k`, `i`, `-1/2j`, `3/4` (terms in any order,
    ///   repeated units accumulate)
    pub fn parse_scalar(&self, text: &str) -> Result<Scalar, ScalarParseError> {
        let t = text.trim();
        if t.is_empty() {
            return Err(ScalarParseError::Empty);
        }
        match self.kind {
            RingKind::Rational => parse_rational(t)
                .map(Scalar::Rational)
                .map_err(|detail| malformed(RingKind::Rational, t, detail)),
            RingKind::PrimeField(p) => parse_prime_field(t, p),
            RingKind::Quaternion => parse_quaternion(t)
                .map(Scalar::Quaternion)
                .map_err(|detail| malformed(RingKind::Quaternion, t, detail)),
        }
    }
}

fn malformed(kind: RingKind, text: &str, detail: String) -> ScalarParseError {
    ScalarParseError::Malformed {
        kind,
        text: text.to_string(),
        detail,
    }
}

fn parse_big_int(text: &str) -> Result<BigInt, String> {
    let t = text.trim();
    if t.is_empty() {
        return Err("missing integer".to_string());
    }
    t.parse::<BigInt>().map_err(|e| e.to_string())
}

fn parse_rational(text: &str) -> Result<BigRational, String> {
    let t = text.trim();
    match t.split_once('/') {
        Some((n, d)) => {
            let n = parse_big_int(n)?;
            let d = parse_big_int(d)?;
            if d.is_zero() {
                return Err("zero denominator".to_string());
            }
            Ok(BigRational::new(n, d))
        }
        None => Ok(BigRational::from_integer(parse_big_int(t)?)),
    }
}

fn parse_prime_field(text: &str, p: u64) -> Result<Scalar, ScalarParseError> {
    let t = text.trim();
    let (value_part, stated_mod) = match t.split_once("mod") {
        Some((v, m)) => {
            let m: u64 = m
                .trim()
                .parse()
                .map_err(|e: std::num::ParseIntError| {
                    malformed(RingKind::PrimeField(p), t, e.to_string())
                })?;
            (v.trim(), Some(m))
        }
        None => (t, None),
    };
    if let Some(m) = stated_mod {
        if m != p {
            return Err(ScalarParseError::ModulusMismatch {
                text: t.to_string(),
                found: m,
                expected: p,
            });
        }
    }
    let n: i128 = value_part
        .parse()
        .map_err(|e: std::num::ParseIntError| malformed(RingKind::PrimeField(p), t, e.to_string()))?;
    Ok(Scalar::PrimeField {
        modulus: p,
        value: n.rem_euclid(p as i128) as u64,
    })
}

/// Parses `a+bi+cj+dk`-style quaternion literals: a signed sequence of terms,
/// each a rational coefficient, a unit `i`/`j`/`k`, or both.
fn parse_quaternion(text: &str) -> Result<Quaternion, String> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err("empty literal".to_string());
    }
    let bytes = compact.as_bytes();
    let mut q = Quaternion::zero();
    let mut pos = 0usize;
    let mut first = true;
    while pos < bytes.len() {
        let mut sign = 1i32;
        if bytes[pos] == b'+' || bytes[pos] == b'-' {
            if bytes[pos] == b'-' {
                sign = -1;
            }
            pos += 1;
        } else if !first {
            return Err(format!("expected `+` or `-` at offset {pos}"));
        }
        first = false;
        let start = pos;
        while pos < bytes.len() && (bytes[pos].is_ascii_digit() || bytes[pos] == b'/') {
            pos += 1;
        }
        let num_part = &compact[start..pos];
        let unit = if pos < bytes.len() && matches!(bytes[pos], b'i' | b'j' | b'k') {
            let u = bytes[pos];
            pos += 1;
            Some(u)
        } else {
            None
        };
        if num_part.is_empty() && unit.is_none() {
            return Err(format!("expected a term at offset {start}"));
        }
        let mut coef = if num_part.is_empty() {
            BigRational::one()
        } else {
            parse_rational(num_part)?
        };
        if sign < 0 {
            coef = -coef;
        }
        match unit {
            None => q.a += coef,
            Some(b'i') => q.b += coef,
            Some(b'j') => q.c += coef,
            Some(b'k') => q.d += coef,
            _ => unreachable!(),
        }
    }
    Ok(q)
}

/// A rational quaternion `a + bi + cj + dk`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quaternion {
    pub a: BigRational,
    pub b: BigRational,
    pub c: BigRational,
    pub d: BigRational,
}

impl Quaternion {
    pub fn new(a: BigRational, b: BigRational, c: BigRational, d: BigRational) -> Self {
        Quaternion { a, b, c, d }
    }

    pub fn zero() -> Self {
        Quaternion::from_rational(BigRational::zero())
    }

    pub fn from_rational(a: BigRational) -> Self {
        Quaternion {
            a,
            b: BigRational::zero(),
            c: BigRational::zero(),
            d: BigRational::zero(),
        }
    }

    /// The unit `i` (and siblings below).
    pub fn i() -> Self {
        let mut q = Quaternion::zero();
        q.b = BigRational::one();
        q
    }

    pub fn j() -> Self {
        let mut q = Quaternion::zero();
        q.c = BigRational::one();
        q
    }

    pub fn k() -> Self {
        let mut q = Quaternion::zero();
        q.d = BigRational::one();
        q
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero() && self.c.is_zero() && self.d.is_zero()
    }

    pub fn add(&self, rhs: &Quaternion) -> Quaternion {
        Quaternion {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            c: &self.c + &rhs.c,
            d: &self.d + &rhs.d,
        }
    }

    pub fn neg(&self) -> Quaternion {
        Quaternion {
            a: -self.a.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: -self.d.clone(),
        }
    }

    pub fn sub(&self, rhs: &Quaternion) -> Quaternion {
        self.add(&rhs.neg())
    }

    /// Hamilton product; `ij = k`, `ji = -k`.
    pub fn mul(&self, r: &Quaternion) -> Quaternion {
        let (a1, b1, c1, d1) = (&self.a, &self.b, &self.c, &self.d);
        let (a2, b2, c2, d2) = (&r.a, &r.b, &r.c, &r.d);
        Quaternion {
            a: a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            b: a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            c: a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            d: a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        }
    }

    pub fn conjugate(&self) -> Quaternion {
        Quaternion {
            a: self.a.clone(),
            b: -self.b.clone(),
            c: -self.c.clone(),
            d: -self.d.clone(),
        }
    }

    /// Reduced norm `a^2 + b^2 + c^2 + d^2`, zero only at zero.
    pub fn norm(&self) -> BigRational {
        &self.a * &self.a + &self.b * &self.b + &self.c * &self.c + &self.d * &self.d
    }

    /// Two-sided inverse `conj(q) / norm(q)`.
    pub fn inv(&self) -> Result<Quaternion, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::DivisionByZero);
        }
        let n = self.norm();
        let c = self.conjugate();
        Ok(Quaternion {
            a: &c.a / &n,
            b: &c.b / &n,
            c: &c.c / &n,
            d: &c.d / &n,
        })
    }
}

impl fmt::Display for Quaternion {
    /// Canonical form `a+bi+cj+dk` with each component's own sign, e.g.
    /// `0+1i+0j+0k`, `1-1/2i+0j+2k`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.a)?;
        for (coef, unit) in [(&self.b, "i"), (&self.c, "j"), (&self.d, "k")] {
            if coef.is_negative() {
                write!(f, "-{}{unit}", -coef.clone())?;
            } else {
                write!(f, "+{coef}{unit}")?;
            }
        }
        Ok(())
    }
}

/// An exact scalar in one of the three rings.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Scalar {
    Rational(BigRational),
    PrimeField { modulus: u64, value: u64 },
    Quaternion(Quaternion),
}

impl Scalar {
    pub fn ring(&self) -> RingKind {
        match self {
            Scalar::Rational(_) => RingKind::Rational,
            Scalar::PrimeField { modulus, .. } => RingKind::PrimeField(*modulus),
            Scalar::Quaternion(_) => RingKind::Quaternion,
        }
    }

    pub fn descriptor(&self) -> RingDescriptor {
        RingDescriptor { kind: self.ring() }
    }

    pub fn from_rational(r: BigRational) -> Self {
        Scalar::Rational(r)
    }

    /// Rational from machine integers; panics on zero denominator (callers
    /// validate, tests use literals).
    pub fn rational(n: i64, d: i64) -> Self {
        Scalar::Rational(BigRational::new(BigInt::from(n), BigInt::from(d)))
    }

    /// GF(p) residue; reduces the value, does not re-check primality.
    pub fn gf(p: u64, value: i64) -> Self {
        Scalar::PrimeField {
            modulus: p,
            value: ((value as i128).rem_euclid(p as i128)) as u64,
        }
    }

    pub fn quaternion(q: Quaternion) -> Self {
        Scalar::Quaternion(q)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::PrimeField { value, .. } => *value == 0,
            Scalar::Quaternion(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_one(),
            Scalar::PrimeField { value, .. } => *value == 1,
            Scalar::Quaternion(q) => {
                q.a.is_one() && q.b.is_zero() && q.c.is_zero() && q.d.is_zero()
            }
        }
    }

    fn require_same_ring(&self, rhs: &Scalar) -> Result<(), ScalarError> {
        let (l, r) = (self.ring(), rhs.ring());
        if l == r {
            Ok(())
        } else {
            Err(ScalarError::RingMismatch { left: l, right: r })
        }
    }

    pub fn checked_add(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        self.require_same_ring(rhs)?;
        Ok(match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (
                Scalar::PrimeField { modulus, value: a },
                Scalar::PrimeField { value: b, .. },
            ) => Scalar::PrimeField {
                modulus: *modulus,
                value: (a + b) % modulus,
            },
            (Scalar::Quaternion(a), Scalar::Quaternion(b)) => Scalar::Quaternion(a.add(b)),
            _ => unreachable!("ring equality checked above"),
        })
    }

    pub fn checked_sub(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        self.checked_add(&rhs.checked_neg())
    }

    pub fn checked_neg(&self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a.clone()),
            Scalar::PrimeField { modulus, value } => Scalar::PrimeField {
                modulus: *modulus,
                value: if *value == 0 { 0 } else { modulus - value },
            },
            Scalar::Quaternion(a) => Scalar::Quaternion(a.neg()),
        }
    }

    pub fn checked_mul(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        self.require_same_ring(rhs)?;
        Ok(match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (
                Scalar::PrimeField { modulus, value: a },
                Scalar::PrimeField { value: b, .. },
            ) => Scalar::PrimeField {
                modulus: *modulus,
                value: ((*a as u128 * *b as u128) % *modulus as u128) as u64,
            },
            (Scalar::Quaternion(a), Scalar::Quaternion(b)) => Scalar::Quaternion(a.mul(b)),
            _ => unreachable!("ring equality checked above"),
        })
    }

    /// Two-sided multiplicative inverse. For GF(p) this runs the extended
    /// Euclidean algorithm; for quaternions it is `conj(q)/norm(q)`.
    pub fn checked_inv(&self) -> Result<Scalar, ScalarError> {
        match self {
            Scalar::Rational(a) => {
                if a.is_zero() {
                    Err(ScalarError::DivisionByZero)
                } else {
                    Ok(Scalar::Rational(a.recip()))
                }
            }
            Scalar::PrimeField { modulus, value } => {
                if *value == 0 {
                    return Err(ScalarError::DivisionByZero);
                }
                Ok(Scalar::PrimeField {
                    modulus: *modulus,
                    value: mod_inverse(*value, *modulus),
                })
            }
            Scalar::Quaternion(q) => Ok(Scalar::Quaternion(q.inv()?)),
        }
    }

    /// `self * rhs^-1`.
    pub fn checked_div(&self, rhs: &Scalar) -> Result<Scalar, ScalarError> {
        self.checked_mul(&rhs.checked_inv()?)
    }

    /// Total-order comparison; defined for rationals only.
    pub fn cmp_ord(&self, rhs: &Scalar) -> Result<Ordering, ScalarError> {
        self.require_same_ring(rhs)?;
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Ok(a.cmp(b)),
            _ => Err(ScalarError::OrderUnavailable(self.ring())),
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rational(r) => Some(r),
            _ => None,
        }
    }

    /// Canonical text form; inverse of `RingDescriptor::parse_scalar`.
    pub fn canonical(&self) -> String {
        self.to_string()
    }
}

/// Extended Euclid on (a, p) with p prime and a != 0 mod p.
fn mod_inverse(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut t0, mut t1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    debug_assert_eq!(r0, 1, "modulus must be prime and a nonzero");
    t0.rem_euclid(p as i128) as u64
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{r}"),
            Scalar::PrimeField { modulus, value } => write!(f, "{value} mod {modulus}"),
            Scalar::Quaternion(q) => write!(f, "{q}"),
        }
    }
}

impl Serialize for Scalar {
    /// Scalars serialize as their canonical text form so JSON stays exact.
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.canonical())
    }
}

// Panicking operator sugar for internal code where operands are known to share
// a ring; the public `checked_*` methods are the fallible API.
macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl std::ops::$trait for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                self.$checked(rhs).expect("scalar ring mismatch")
            }
        }
    };
}

scalar_binop!(Add, add, checked_add);
scalar_binop!(Sub, sub, checked_sub);
scalar_binop!(Mul, mul, checked_mul);

impl std::ops::Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        self.checked_neg()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q5() -> RingDescriptor {
        RingDescriptor::prime_field(5).unwrap()
    }

    fn q7() -> RingDescriptor {
        RingDescriptor::prime_field(7).unwrap()
    }

    #[test]
    fn rational_add_stays_reduced() {
        let r = RingDescriptor::rational();
        let half = r.fraction(1, 2).unwrap();
        let third = r.fraction(1, 3).unwrap();
        let sum = half.checked_add(&third).unwrap();
        assert_eq!(sum, r.fraction(5, 6).unwrap());
        // lowest terms, positive denominator
        match &sum {
            Scalar::Rational(x) => {
                assert_eq!(x.numer(), &BigInt::from(5));
                assert_eq!(x.denom(), &BigInt::from(6));
            }
            _ => unreachable!(),
        }
        let neg = r.fraction(1, -2).unwrap();
        match &neg {
            Scalar::Rational(x) => {
                assert_eq!(x.numer(), &BigInt::from(-1));
                assert_eq!(x.denom(), &BigInt::from(2));
            }
            _ => unreachable!(),
        }
    }

    #[test]
    fn gf5_wraparound_add() {
        let sum = Scalar::gf(5, 2).checked_add(&Scalar::gf(5, 4)).unwrap();
        assert_eq!(sum, Scalar::gf(5, 1));
    }

    #[test]
    fn gf7_inverse_matches_euclid() {
        // extended-Euclid oracle: 3 * 5 = 15 = 2*7 + 1
        let inv = Scalar::gf(7, 3).checked_inv().unwrap();
        assert_eq!(inv, Scalar::gf(7, 5));
        assert_eq!(
            Scalar::gf(7, 3).checked_mul(&inv).unwrap(),
            Scalar::gf(7, 1)
        );
    }

    #[test]
    fn gf_inverses_two_sided_exhaustive() {
        for p in [2u64, 3, 5, 7, 11, 13] {
            let ring = RingDescriptor::prime_field(p).unwrap();
            for a in ring.elements().unwrap() {
                if a.is_zero() {
                    assert_eq!(a.checked_inv(), Err(ScalarError::DivisionByZero));
                    continue;
                }
                let inv = a.checked_inv().unwrap();
                assert!(a.checked_mul(&inv).unwrap().is_one());
                assert!(inv.checked_mul(&a).unwrap().is_one());
            }
        }
    }

    #[test]
    fn quaternion_units_multiply_like_hamilton() {
        let i = Scalar::quaternion(Quaternion::i());
        let j = Scalar::quaternion(Quaternion::j());
        let k = Scalar::quaternion(Quaternion::k());
        assert_eq!(i.checked_mul(&j).unwrap(), k);
        assert_eq!(j.checked_mul(&i).unwrap(), k.checked_neg());
        assert_eq!(
            i.checked_mul(&i).unwrap(),
            RingDescriptor::quaternion().int(-1)
        );
    }

    #[test]
    fn quaternion_inverse_is_conjugate_over_norm() {
        let i = Scalar::quaternion(Quaternion::i());
        let inv = i.checked_inv().unwrap();
        assert_eq!(inv, i.checked_neg());
        assert!(i.checked_mul(&inv).unwrap().is_one());
        assert!(inv.checked_mul(&i).unwrap().is_one());

        let q = Scalar::quaternion(Quaternion::new(
            BigRational::new(BigInt::from(1), BigInt::from(2)),
            BigRational::from_integer(BigInt::from(-3)),
            BigRational::new(BigInt::from(2), BigInt::from(7)),
            BigRational::from_integer(BigInt::from(1)),
        ));
        let qi = q.checked_inv().unwrap();
        assert!(q.checked_mul(&qi).unwrap().is_one());
        assert!(qi.checked_mul(&q).unwrap().is_one());
    }

    #[test]
    fn rational_inverse() {
        let r = RingDescriptor::rational();
        let x = r.fraction(2, 3).unwrap();
        assert_eq!(x.checked_inv().unwrap(), r.fraction(3, 2).unwrap());
        assert_eq!(r.zero().checked_inv(), Err(ScalarError::DivisionByZero));
    }

    #[test]
    fn order_only_on_rationals() {
        let r = RingDescriptor::rational();
        assert_eq!(
            r.fraction(1, 3)
                .unwrap()
                .cmp_ord(&r.fraction(1, 2).unwrap())
                .unwrap(),
            Ordering::Less
        );
        let e = Scalar::gf(5, 1).cmp_ord(&Scalar::gf(5, 2));
        assert_eq!(e, Err(ScalarError::OrderUnavailable(RingKind::PrimeField(5))));
        let i = Scalar::quaternion(Quaternion::i());
        let j = Scalar::quaternion(Quaternion::j());
        assert_eq!(
            i.cmp_ord(&j),
            Err(ScalarError::OrderUnavailable(RingKind::Quaternion))
        );
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let e = Scalar::rational(1, 2).checked_add(&Scalar::gf(5, 1));
        assert_eq!(
            e,
            Err(ScalarError::RingMismatch {
                left: RingKind::Rational,
                right: RingKind::PrimeField(5)
            })
        );
    }

    #[test]
    fn descriptor_validates_modulus() {
        assert_eq!(
            RingDescriptor::prime_field(4),
            Err(ScalarError::NotPrime(4))
        );
        assert_eq!(
            RingDescriptor::prime_field(1),
            Err(ScalarError::NotPrime(1))
        );
        assert!(RingDescriptor::prime_field(2).is_ok());
        assert!(RingDescriptor::prime_field(65537).is_ok());
        assert_eq!(
            RingDescriptor::prime_field(1 << 33),
            Err(ScalarError::ModulusTooLarge(1 << 33))
        );
    }

    #[test]
    fn labels_round_trip() {
        for ring in [
            RingDescriptor::rational(),
            q5(),
            RingDescriptor::quaternion(),
        ] {
            assert_eq!(RingDescriptor::parse_label(&ring.label()).unwrap(), ring);
        }
        assert!(RingDescriptor::parse_label("gf(6)").is_err());
        assert!(RingDescriptor::parse_label("reals").is_err());
    }

    #[test]
    fn canonical_text_forms() {
        assert_eq!(Scalar::rational(-7, 2).canonical(), "-7/2");
        assert_eq!(Scalar::rational(3, 1).canonical(), "3");
        assert_eq!(Scalar::gf(5, 2).canonical(), "2 mod 5");
        assert_eq!(
            Scalar::quaternion(Quaternion::i()).canonical(),
            "0+1i+0j+0k"
        );
        let q = Quaternion::new(
            BigRational::from_integer(BigInt::from(1)),
            BigRational::new(BigInt::from(-1), BigInt::from(2)),
            BigRational::zero(),
            BigRational::from_integer(BigInt::from(3)),
        );
        assert_eq!(Scalar::quaternion(q).canonical(), "1-1/2i+0j+3k");
    }

    #[test]
    fn parse_accepts_canonical_and_loose_forms() {
        let r = RingDescriptor::rational();
        assert_eq!(r.parse_scalar("5/6").unwrap(), r.fraction(5, 6).unwrap());
        assert_eq!(r.parse_scalar(" -3 ").unwrap(), r.int(-3));
        assert!(r.parse_scalar("1/0").is_err());
        assert!(r.parse_scalar("").is_err());

        let g = q7();
        assert_eq!(g.parse_scalar("3").unwrap(), Scalar::gf(7, 3));
        assert_eq!(g.parse_scalar("10 mod 7").unwrap(), Scalar::gf(7, 3));
        assert_eq!(g.parse_scalar("-1").unwrap(), Scalar::gf(7, 6));
        assert!(matches!(
            g.parse_scalar("3 mod 5"),
            Err(ScalarParseError::ModulusMismatch { .. })
        ));

        let h = RingDescriptor::quaternion();
        assert_eq!(
            h.parse_scalar("i").unwrap(),
            Scalar::quaternion(Quaternion::i())
        );
        assert_eq!(
            h.parse_scalar("1+2i+0j+3k").unwrap(),
            h.parse_scalar("3k + 2i + 1").unwrap()
        );
        assert_eq!(
            h.parse_scalar("-1/2j").unwrap(),
            Scalar::quaternion(Quaternion::new(
                BigRational::zero(),
                BigRational::zero(),
                BigRational::new(BigInt::from(-1), BigInt::from(2)),
                BigRational::zero(),
            ))
        );
        assert!(h.parse_scalar("2x").is_err());
        assert!(h.parse_scalar("++i").is_err());
    }

    fn small_rational() -> impl Strategy<Value = Scalar> {
        (-20i64..=20, 1i64..=20).prop_map(|(n, d)| Scalar::rational(n, d))
    }

    fn small_quaternion() -> impl Strategy<Value = Scalar> {
        let comp = (-5i64..=5, 1i64..=5)
            .prop_map(|(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)));
        (comp.clone(), comp.clone(), comp.clone(), comp)
            .prop_map(|(a, b, c, d)| Scalar::quaternion(Quaternion::new(a, b, c, d)))
    }

    proptest! {
        #[test]
        fn rational_field_axioms(a in small_rational(), b in small_rational(), c in small_rational()) {
            let ab_c = a.checked_add(&b).unwrap().checked_add(&c).unwrap();
            let a_bc = a.checked_add(&b.checked_add(&c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            prop_assert_eq!(
                a.checked_mul(&b).unwrap(),
                b.checked_mul(&a).unwrap()
            );
            let left = a.checked_mul(&b.checked_add(&c).unwrap()).unwrap();
            let right = a.checked_mul(&b).unwrap().checked_add(&a.checked_mul(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn quaternion_division_ring_axioms(a in small_quaternion(), b in small_quaternion(), c in small_quaternion()) {
            let ab_c = a.checked_mul(&b).unwrap().checked_mul(&c).unwrap();
            let a_bc = a.checked_mul(&b.checked_mul(&c).unwrap()).unwrap();
            prop_assert_eq!(ab_c, a_bc);
            // left and right distributivity both hold even though * is noncommutative
            let l = a.checked_mul(&b.checked_add(&c).unwrap()).unwrap();
            let r = a.checked_mul(&b).unwrap().checked_add(&a.checked_mul(&c).unwrap()).unwrap();
            prop_assert_eq!(l, r);
            let l2 = b.checked_add(&c).unwrap().checked_mul(&a).unwrap();
            let r2 = b.checked_mul(&a).unwrap().checked_add(&c.checked_mul(&a).unwrap()).unwrap();
            prop_assert_eq!(l2, r2);
            if !a.is_zero() {
                let inv = a.checked_inv().unwrap();
                prop_assert!(a.checked_mul(&inv).unwrap().is_one());
                prop_assert!(inv.checked_mul(&a).unwrap().is_one());
            }
        }

        #[test]
        fn display_parse_round_trip(a in small_rational()) {
            let r = RingDescriptor::rational();
            prop_assert_eq!(r.parse_scalar(&a.canonical()).unwrap(), a);
        }

        #[test]
        fn quaternion_display_parse_round_trip(a in small_quaternion()) {
            let h = RingDescriptor::quaternion();
            prop_assert_eq!(h.parse_scalar(&a.canonical()).unwrap(), a);
        }

        #[test]
        fn gf_display_parse_round_trip(v in 0u64..13) {
            let g = RingDescriptor::prime_field(13).unwrap();
            let a = Scalar::PrimeField { modulus: 13, value: v };
            prop_assert_eq!(g.parse_scalar(&a.canonical()).unwrap(), a);
        }
    }
}
