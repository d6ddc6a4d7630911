//! Exact rational scalars and points.
//!
//! Every coordinate in the crate is a [`Rational`]: an arbitrary-precision
//! fraction kept in lowest terms with a positive denominator. The textual form
//! used by scenario files is `"p/q"` (or `"p"` when the denominator is one).

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use thiserror::Error;

pub use num_rational::BigRational as Rational;

/// A point of some `R^m`, one rational per axis.
pub type Point = Vec<Rational>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RationalParseError {
    #[error("zero denominator in rational {0:?}")]
    ZeroDenominator(String),
    #[error("malformed rational {0:?}")]
    Malformed(String),
}

/// Parses `"p/q"` or `"p"`. Whitespace is not accepted.
pub fn parse_rational(text: &str) -> Result<Rational, RationalParseError> {
    let malformed = || RationalParseError::Malformed(text.to_owned());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, d),
        None => (text, "1"),
    };
    let valid = |s: &str| {
        let digits = s.strip_prefix('-').unwrap_or(s);
        !digits.is_empty() && digits.bytes().all(|b| b.is_ascii_digit())
    };
    if !valid(num) || !valid(den) || den.starts_with('-') {
        return Err(malformed());
    }
    let n: BigInt = num.parse().map_err(|_| malformed())?;
    let d: BigInt = den.parse().map_err(|_| malformed())?;
    if d.is_zero() {
        return Err(RationalParseError::ZeroDenominator(text.to_owned()));
    }
    Ok(Rational::new(n, d))
}

/// Canonical text form, the inverse of [`parse_rational`] on reduced values.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Builds a point from `(numerator, denominator)` pairs.
pub fn point(coords: &[(i64, i64)]) -> Point {
    coords.iter().map(|&(n, d)| rat(n, d)).collect()
}

/// Builds a point with integer coordinates.
pub fn ipoint(coords: &[i64]) -> Point {
    coords.iter().map(|&n| int(n)).collect()
}

pub fn sign(value: &Rational) -> i32 {
    if value.is_positive() {
        1
    } else if value.is_negative() {
        -1
    } else {
        0
    }
}

pub fn to_f64(value: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    value.to_f64().unwrap_or(f64::NAN)
}

/// Nearest rational with denominator `2^bits`; used to seed exact probes.
pub fn from_f64_dyadic(value: f64, bits: u32) -> Rational {
    let scale = (1u64 << bits) as f64;
    let n = (value * scale).round() as i64;
    Rational::new(BigInt::from(n), BigInt::from(1u64 << bits))
}

pub fn sub(a: &[Rational], b: &[Rational]) -> Point {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[Rational], b: &[Rational]) -> Point {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[Rational], s: &Rational) -> Point {
    a.iter().map(|x| x * s).collect()
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter().zip(b).fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

/// Convex combination `sum_i w_i p_i`; weights are not required to sum to one.
pub fn combine(weights: &[Rational], points: &[&[Rational]]) -> Point {
    let dim = points.first().map_or(0, |p| p.len());
    let mut out = vec![Rational::zero(); dim];
    for (w, p) in weights.iter().zip(points) {
        if w.is_zero() {
            continue;
        }
        for (o, x) in out.iter_mut().zip(p.iter()) {
            *o += w * x;
        }
    }
    out
}

pub fn centroid(points: &[&[Rational]]) -> Point {
    let w = Rational::new(BigInt::one(), BigInt::from(points.len()));
    let weights = vec![w; points.len()];
    combine(&weights, points)
}

/// Max-norm of a difference, used for exact residuals.
pub fn max_abs_diff(a: &[Rational], b: &[Rational]) -> Rational {
    a.iter()
        .zip(b)
        .map(|(x, y)| (x - y).abs())
        .max()
        .unwrap_or_else(Rational::zero)
}

/// Lexicographic comparison of points, the canonical order for output.
pub fn cmp_points(a: &[Rational], b: &[Rational]) -> Ordering {
    a.iter().cmp(b.iter())
}
