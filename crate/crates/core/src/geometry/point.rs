use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};

use super::GeometryError;

/// A point in the plane with exact rational coordinates.
///
/// Stored in homogeneous form `(x / den, y / den)` with a shared positive
/// denominator, reduced so that `gcd(x, y, den) = 1`. The reduced form is
/// unique, which makes the derived `Eq` and `Hash` value-based.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Point {
    x: i64,
    y: i64,
    den: i64,
}

impl Point {
    /// Integer-coordinate point.
    pub const fn new(x: i64, y: i64) -> Point {
        Point { x, y, den: 1 }
    }

    /// Point `(x / den, y / den)`. Fails if `den` is zero or the reduced
    /// representation does not fit.
    pub fn with_denominator(x: i64, y: i64, den: i64) -> Result<Point, GeometryError> {
        if den == 0 {
            return Err(GeometryError::CoordinateOverflow);
        }
        let (mut x, mut y, mut den) = (x as i128, y as i128, den as i128);
        if den < 0 {
            x = -x;
            y = -y;
            den = -den;
        }
        let g = x.gcd(&y).gcd(&den);
        let (x, y, den) = (x / g, y / g, den / g);
        match (i64::try_from(x), i64::try_from(y), i64::try_from(den)) {
            (Ok(x), Ok(y), Ok(den)) => Ok(Point { x, y, den }),
            _ => Err(GeometryError::CoordinateOverflow),
        }
    }

    /// Point from two independent rationals `xn/xd`, `yn/yd`.
    pub fn from_ratios(x: Rational64, y: Rational64) -> Result<Point, GeometryError> {
        let xd = *x.denom() as i128;
        let yd = *y.denom() as i128;
        let den = xd.lcm(&yd);
        let xn = (*x.numer() as i128)
            .checked_mul(den / xd)
            .ok_or(GeometryError::CoordinateOverflow)?;
        let yn = (*y.numer() as i128)
            .checked_mul(den / yd)
            .ok_or(GeometryError::CoordinateOverflow)?;
        match (i64::try_from(xn), i64::try_from(yn), i64::try_from(den)) {
            (Ok(xn), Ok(yn), Ok(den)) => Point::with_denominator(xn, yn, den),
            _ => Err(GeometryError::CoordinateOverflow),
        }
    }

    pub fn x(&self) -> Rational64 {
        Rational64::new(self.x, self.den)
    }

    pub fn y(&self) -> Rational64 {
        Rational64::new(self.y, self.den)
    }

    /// Homogeneous representation `(x, y, den)`.
    pub fn homogeneous(&self) -> (i64, i64, i64) {
        (self.x, self.y, self.den)
    }

    /// Lossy conversion, for rendering only.
    pub fn to_f64(&self) -> (f64, f64) {
        (
            self.x as f64 / self.den as f64,
            self.y as f64 / self.den as f64,
        )
    }

    pub fn cmp_x(&self, other: &Point) -> Ordering {
        (self.x as i128 * other.den as i128).cmp(&(other.x as i128 * self.den as i128))
    }

    pub fn cmp_y(&self, other: &Point) -> Ordering {
        (self.y as i128 * other.den as i128).cmp(&(other.y as i128 * self.den as i128))
    }

    /// Exact squared Euclidean distance.
    pub fn squared_distance(&self, other: &Point) -> BigRational {
        let (dx, dy) = self.delta(other);
        let num = BigInt::from(dx) * BigInt::from(dx) + BigInt::from(dy) * BigInt::from(dy);
        let d = BigInt::from(self.den) * BigInt::from(other.den);
        BigRational::new(num, &d * &d)
    }

    /// `(other - self)` scaled by `self.den * other.den`. The scale is
    /// positive so signs are preserved.
    pub(crate) fn delta(&self, other: &Point) -> (i128, i128) {
        let (sd, od) = (self.den as i128, other.den as i128);
        (
            other.x as i128 * sd - self.x as i128 * od,
            other.y as i128 * sd - self.y as i128 * od,
        )
    }
}

impl Ord for Point {
    /// Lexicographic by x, then y.
    fn cmp(&self, other: &Point) -> Ordering {
        self.cmp_x(other).then_with(|| self.cmp_y(other))
    }
}

impl PartialOrd for Point {
    fn partial_cmp(&self, other: &Point) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x(), self.y())
    }
}

impl fmt::Display for Point {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x(), self.y())
    }
}

/// A closed segment between two distinct points.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Segment {
    pub a: Point,
    pub b: Point,
}

impl Segment {
    pub fn new(a: Point, b: Point) -> Result<Segment, GeometryError> {
        if a == b {
            return Err(GeometryError::DegenerateSegment(a));
        }
        Ok(Segment { a, b })
    }

    /// Caller guarantees `a != b`.
    pub(crate) fn between(a: Point, b: Point) -> Segment {
        debug_assert!(a != b, "degenerate segment at {a}");
        Segment { a, b }
    }

    pub fn has_endpoint(&self, p: &Point) -> bool {
        self.a == *p || self.b == *p
    }

    pub fn squared_length(&self) -> BigRational {
        self.a.squared_distance(&self.b)
    }
}
